"""Fixed-step driver for the explicit 14-step recurrence.

A run is: bootstrap the first 14 solution values with a high-order one-step
integrator (the recurrence needs a full history window), then advance with
the recurrence, switching b-weights at frequency-schedule breakpoints.  The
hot loop lives in a compiled kernel when the extension built, with a
bit-identical pure-Python fallback; `kernel_backend()` reports which one is
active and OSCINT_FORCE_PYTHON=1 forces the fallback.
"""

from __future__ import annotations

import bisect
import os
from dataclasses import dataclass, field
from typing import Callable, Sequence, Union

import numpy as np
from scipy.integrate import solve_ivp

from .coefficients import CoefficientSet, MethodId, coefficients
from .errors import InvalidFrequency

if os.environ.get("OSCINT_FORCE_PYTHON"):
    from . import _kernel_py as _kernel

    _BACKEND = "python"
else:
    try:
        from . import _kernel  # type: ignore[attr-defined]

        _BACKEND = "compiled"
    except ImportError:
        from . import _kernel_py as _kernel

        _BACKEND = "python"


def kernel_backend() -> str:
    """'compiled' when the C extension is active, else 'python'."""
    return _BACKEND


@dataclass(frozen=True)
class SecondOrderIVP:
    """y'' = rhs(t, y) with y(t0) = y0.

    The second piece of initial data comes from ``y1_provider``: either the
    value y(t0 + h) (a float; the bootstrap then recovers y'(t0) by shooting)
    or a callable local solution y(t) valid near t0, which the bootstrap
    samples directly.
    """

    rhs: Callable[[float, float], float]
    t0: float
    y0: float
    y1_provider: Union[float, Callable[[float], float]]


@dataclass(frozen=True)
class FrequencySchedule:
    """Piecewise-constant fitted frequency over the integration interval."""

    breakpoints: tuple
    omegas: tuple

    def __post_init__(self):
        if len(self.omegas) != len(self.breakpoints) + 1:
            raise ValueError("need one omega per segment (len(breakpoints)+1)")
        if any(b2 <= b1 for b1, b2 in zip(self.breakpoints, self.breakpoints[1:])):
            raise ValueError("breakpoints must be strictly ascending")
        if any(w <= 0 for w in self.omegas):
            raise ValueError("fitted frequencies must be positive")

    @classmethod
    def constant(cls, omega: float) -> "FrequencySchedule":
        return cls(breakpoints=(), omegas=(omega,))

    def segment_index(self, t: float, h: float) -> int:
        # a node landing exactly on (or a hair before) a breakpoint switches
        return bisect.bisect_right(self.breakpoints, t + 1e-9 * h)


@dataclass(frozen=True)
class Trajectory:
    """Uniform-step samples of one run, with the rhs values cached."""

    t: np.ndarray
    y: np.ndarray
    f: np.ndarray
    method: MethodId
    h: float
    rhs_evals: int = 0
    backend: str = _BACKEND

    def __post_init__(self):
        if not (len(self.t) == len(self.y) == len(self.f)):
            raise ValueError("t, y, f must have matching lengths")

    def rows(self):
        for k in range(len(self.t)):
            yield self.t[k], self.y[k]


class _CountingRHS:
    def __init__(self, rhs):
        self.rhs = rhs
        self.calls = 0

    def __call__(self, t, y):
        self.calls += 1
        return self.rhs(t, y)


def _shoot_initial_slope(rhs, t0, y0, y1, h, rtol, atol, max_step):
    """y'(t0) such that the one-step solve over [t0, t0+h] hits y1 (secant)."""

    def endpoint(c):
        sol = solve_ivp(
            lambda t, u: (u[1], rhs(t, u[0])),
            (t0, t0 + h),
            (y0, c),
            method="DOP853",
            rtol=rtol,
            atol=atol,
            max_step=max_step,
        )
        if not sol.success:
            raise RuntimeError(f"bootstrap shooting solve failed: {sol.message}")
        return sol.y[0, -1]

    scale = max(abs(y0), abs(y1), 1e-30)
    c0 = (y1 - y0) / h
    c1 = c0 + max(abs(c0), 1.0) * 1e-2
    g0 = endpoint(c0) - y1
    g1 = endpoint(c1) - y1
    for _ in range(10):
        if abs(g1) <= 1e-13 * scale or g1 == g0:
            return c1
        c0, c1, g0, g1 = c1, c1 - g1 * (c1 - c0) / (g1 - g0), g1, None
        g1 = endpoint(c1) - y1
    return c1


def bootstrap(problem: SecondOrderIVP, h: float, count: int = 13):
    """First count+1 solution values y(t0), ..., y(t0 + count*h).

    A callable ``y1_provider`` is treated as a trusted local solution and
    sampled directly.  A scalar value triggers shooting for y'(t0) followed
    by a DOP853 solve capped at 100 substeps per h, which keeps the starting
    error at the roundoff floor (~1e-14 relative), far below the recurrence's
    own local error at any step size used in practice.
    """
    if h <= 0:
        raise ValueError("step must be positive")
    rhs = _CountingRHS(problem.rhs)
    nodes = problem.t0 + h * np.arange(count + 1)
    if callable(problem.y1_provider):
        y = np.array([problem.y0] + [problem.y1_provider(t) for t in nodes[1:]])
        return y, rhs.calls
    y1 = float(problem.y1_provider)
    scale = max(abs(problem.y0), abs(y1), 1e-30)
    rtol, atol, max_step = 1e-13, 1e-16 * scale, h / 100
    slope = _shoot_initial_slope(rhs, problem.t0, problem.y0, y1, h, rtol, atol, max_step)
    sol = solve_ivp(
        lambda t, u: (u[1], rhs(t, u[0])),
        (problem.t0, float(nodes[-1])),
        (problem.y0, slope),
        method="DOP853",
        t_eval=nodes,
        rtol=rtol,
        atol=atol,
        max_step=max_step,
    )
    if not sol.success:
        raise RuntimeError(f"bootstrap solve failed: {sol.message}")
    return sol.y[0].copy(), rhs.calls


def step(y_history: Sequence[float], f_history: Sequence[float], coeffs: CoefficientSet, h: float) -> float:
    """One recurrence step: y_{n+14} from y_n..y_{n+13} and f_{n+1}..f_{n+13}."""
    if len(y_history) != 14:
        raise ValueError("need exactly 14 y-history values")
    if len(f_history) != 13:
        raise ValueError("need exactly 13 rhs-history values (b_0 = 0)")
    if coeffs.b[14] != 0:
        raise ValueError("explicit recurrence requires b_14 = 0")
    y = y_history
    f = f_history
    b = [float(x) for x in coeffs.b]
    acc = b[1] * (f[0] + f[12])
    acc += b[2] * (f[1] + f[11])
    acc += b[3] * (f[2] + f[10])
    acc += b[4] * (f[3] + f[9])
    acc += b[5] * (f[4] + f[8])
    acc += b[6] * (f[5] + f[7])
    acc += b[7] * f[6]
    return (-y[0] + 2.0 * y[1] - 2.0 * y[2] + y[3]
            + y[11] - 2.0 * y[12] + 2.0 * y[13]) + h * h * acc


def _segment_coefficients(method: MethodId, omega: float, h: float) -> CoefficientSet:
    v = omega * h
    try:
        return coefficients(method, v)
    except InvalidFrequency:
        raise InvalidFrequency(
            f"schedule frequency {omega:g} gives v = {v:g} outside the usable range"
        )


def integrate(
    problem: SecondOrderIVP,
    method: MethodId,
    h: float,
    t_end: float,
    schedule: FrequencySchedule | None = None,
) -> Trajectory:
    """Drive the recurrence from t0 to t_end with fixed step h.

    For fitted variants a schedule is required; its b-weights are recomputed
    at the first grid node at or beyond each breakpoint.  The classical
    method ignores the schedule.  Deterministic for identical inputs.
    """
    span = t_end - problem.t0
    n = int(round(span / h))
    if n < 14:
        raise ValueError("need at least 14 steps between t0 and t_end")
    if abs(problem.t0 + n * h - t_end) > 1e-9 * max(1.0, abs(t_end)):
        raise ValueError("t_end must be an integer number of steps from t0")
    if method.is_fitted and schedule is None:
        raise ValueError(f"{method.label} needs a frequency schedule")

    y = np.empty(n + 1)
    f = np.empty(n + 1)
    start, boot_evals = bootstrap(problem, h)
    y[: 14] = start
    for k in range(14):
        f[k] = problem.rhs(problem.t0 + k * h, y[k])
    boot_evals += 14

    # group produced nodes 14..n into runs of constant segment
    if method.is_fitted:
        seg_of = lambda m: schedule.segment_index(problem.t0 + m * h, h)
        seg_cache: dict[int, tuple] = {}

        def b_half_for(seg):
            if seg not in seg_cache:
                cs = _segment_coefficients(method, schedule.omegas[seg], h)
                seg_cache[seg] = tuple(float(x) for x in cs.b[1:8])
            return seg_cache[seg]
    else:
        seg_of = lambda m: 0
        cs = coefficients(method)
        classical_half = tuple(float(x) for x in cs.b[1:8])
        b_half_for = lambda seg: classical_half

    radial = getattr(problem.rhs, "radial_params", None)
    m = 13
    while m < n:
        seg = seg_of(m + 1)
        stop = m + 1
        while stop < n and seg_of(stop + 1) == seg:
            stop += 1
        n_steps = stop - m
        b_half = b_half_for(seg)
        if radial is not None:
            m = _kernel.advance_radial(y, f, m, n_steps, h, b_half, problem.t0, *radial)
        else:
            m = _kernel.advance(y, f, m, n_steps, h, b_half, problem.rhs, problem.t0)

    t = problem.t0 + h * np.arange(n + 1)
    return Trajectory(
        t=t, y=y, f=f, method=method, h=h,
        rhs_evals=boot_evals + (n - 13), backend=_BACKEND,
    )
