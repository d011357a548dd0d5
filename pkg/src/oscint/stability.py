"""Stability classification via the roots of the characteristic polynomial.

At frequency argument s the recurrence's characteristic equation, multiplied
through by z^7, is the degree-14 palindromic polynomial with coefficients
c_k = A_{|k-7|}(s^2, v).  A point (s, v) counts as stable when all roots lie
in the closed unit disc (within tolerance); for a palindromic polynomial the
root set is closed under z -> 1/z, so this forces every root onto the unit
circle, which is the periodicity condition for symmetric methods.

Region scans classify a uniform (s, v) grid; rows are dispatched to a thread
pool and each row's companion eigenvalue problems run as one batched LAPACK
call, so the work parallelizes despite the GIL.
"""

from __future__ import annotations

import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .coefficients import (
    DEFAULT_V_SWITCH,
    CoefficientSet,
    MethodId,
    coefficients,
    taylor_b,
    classical_coefficients,
    A_WEIGHTS,
    _mirror,
)
from .errors import ConvergenceFailure, LeadingCoefficientZero, OscintError

logger = logging.getLogger(__name__)

#: tolerance on root moduli; companion-matrix accuracy at degree 14 is far better
ROOT_MODULUS_TOL = 1e-8


@dataclass(frozen=True)
class CharacteristicPolynomial:
    """c_0..c_14 of the z^7-normalized characteristic polynomial."""

    c: tuple

    def __post_init__(self):
        if len(self.c) != 15:
            raise ValueError("degree-14 polynomial needs 15 coefficients")

    @property
    def is_palindromic(self) -> bool:
        return all(
            math.isclose(self.c[k], self.c[14 - k], rel_tol=0, abs_tol=1e-12 * max(map(abs, self.c)))
            for k in range(15)
        )


@dataclass(frozen=True)
class StabilityGrid:
    """Boolean stability classification over a uniform (s, v) rectangle."""

    s_min: float
    s_max: float
    v_min: float
    v_max: float
    n_s: int
    n_v: int
    flags: np.ndarray  # shape (n_s, n_v), True = stable

    def __post_init__(self):
        if self.flags.shape != (self.n_s, self.n_v):
            raise ValueError("flags shape must match the grid sizes")

    @property
    def s_values(self) -> np.ndarray:
        return np.linspace(self.s_min, self.s_max, self.n_s)

    @property
    def v_values(self) -> np.ndarray:
        return np.linspace(self.v_min, self.v_max, self.n_v)

    def rows(self):
        """Yield (s, v, stable) tuples in row-major order."""
        sv = self.s_values
        vv = self.v_values
        for i in range(self.n_s):
            for j in range(self.n_v):
                yield sv[i], vv[j], bool(self.flags[i, j])


def characteristic_polynomial(coeffs: CoefficientSet, s: float) -> CharacteristicPolynomial:
    """Multiply the stencil equation through by z^7: c_k = A_{|k-7|}(s^2, v)."""
    s2 = float(s) * float(s)
    A = [float(coeffs.a[7 - j]) + s2 * float(coeffs.b[7 - j]) for j in range(8)]
    if abs(A[7]) < 1e-14:
        raise LeadingCoefficientZero(f"|A_7| < 1e-14 at s={s:g}")
    return CharacteristicPolynomial(c=tuple(A[abs(k - 7)] for k in range(15)))


def polynomial_roots(poly: CharacteristicPolynomial) -> np.ndarray:
    """All 14 roots, by eigenvalues of the companion matrix (np.roots)."""
    c = np.asarray(poly.c, dtype=float)
    try:
        roots = np.roots(c[::-1])  # np.roots expects highest degree first
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    if roots.size != 14:
        raise ConvergenceFailure("leading coefficient vanished during deflation")
    return roots


def is_stable(coeffs: CoefficientSet, s: float, tol_mod: float = ROOT_MODULUS_TOL) -> bool:
    """True iff all characteristic roots satisfy |z| <= 1 + tol_mod."""
    try:
        roots = polynomial_roots(characteristic_polynomial(coeffs, s))
    except (LeadingCoefficientZero, ConvergenceFailure):
        return False
    return bool(np.all(np.abs(roots) <= 1.0 + tol_mod))


def _scan_coefficients(method: MethodId, v: float) -> CoefficientSet:
    """Grid-point weight set; v = 0 and the sub-switch range use the series
    route, which degrades gracefully to the classical limit at v = 0."""
    if not method.is_fitted:
        return classical_coefficients()
    if v < DEFAULT_V_SWITCH:
        return CoefficientSet(
            method=method, v=float(v), a=A_WEIGHTS,
            b=_mirror(taylor_b(method, v)), precision_bits_used=0,
        )
    return coefficients(method, v)


def _row_flags(b_rows: np.ndarray, s_values: np.ndarray, tol_mod: float) -> np.ndarray:
    """Batched stability flags for all s at fixed v.

    b_rows: (n_v_ok, 15) float weights; builds (n_s*n_rows, 14, 14) companion
    matrices and solves one batched eigenvalue problem per v-row.
    """
    n_s = s_values.size
    a = np.asarray(A_WEIGHTS, dtype=float)
    flags = np.empty((b_rows.shape[0], n_s), dtype=bool)
    for r, b in enumerate(b_rows):
        s2 = s_values ** 2  # (n_s,)
        A = a[None, 7 - np.arange(8)] + s2[:, None] * b[None, 7 - np.arange(8)]  # (n_s, 8)
        c = A[:, np.abs(np.arange(15) - 7)]  # (n_s, 15), c_k = A_|k-7|
        lead = np.abs(c[:, 14]) >= 1e-14
        comp = np.zeros((n_s, 14, 14))
        comp[:, 1:, :-1] = np.eye(13)[None, :, :]
        with np.errstate(divide="ignore", invalid="ignore"):
            comp[:, 0, :] = -c[:, 13::-1] / c[:, 14:15]
        comp[~lead] = 0.0
        eig = np.linalg.eigvals(comp)
        flags[r] = lead & np.all(np.abs(eig) <= 1.0 + tol_mod, axis=1)
    return flags


def scan_region(
    method: MethodId,
    s_min: float = 0.0,
    s_max: float = 10.0,
    v_min: float = 0.0,
    v_max: float = 10.0,
    n_s: int = 400,
    n_v: int = 400,
    tol_mod: float = ROOT_MODULUS_TOL,
    workers: int | None = None,
) -> StabilityGrid:
    """Classify stability over a uniform (s, v) grid.

    For the classical method the weights do not depend on v, so one s-row is
    computed and broadcast.  Grid points whose weight sets fail to evaluate
    (pole proximity at large v) are marked unstable and logged.
    """
    if n_s < 2 or n_v < 2:
        raise ValueError("grid sizes must be >= 2")
    s_values = np.linspace(s_min, s_max, n_s)
    v_values = np.linspace(v_min, v_max, n_v)

    if not method.is_fitted:
        row = _row_flags(
            np.asarray([[float(x) for x in classical_coefficients().b]]), s_values, tol_mod
        )[0]
        flags = np.tile(row[:, None], (1, n_v))
        return StabilityGrid(s_min, s_max, v_min, v_max, n_s, n_v, flags)

    b_rows = np.zeros((n_v, 15))
    ok = np.zeros(n_v, dtype=bool)
    for j, v in enumerate(v_values):
        try:
            b_rows[j] = [float(x) for x in _scan_coefficients(method, float(v)).b]
            ok[j] = True
        except OscintError as exc:
            logger.warning("marking v=%g unstable: %s", v, exc)

    flags = np.zeros((n_s, n_v), dtype=bool)
    idx = np.flatnonzero(ok)
    workers = workers or min(8, os.cpu_count() or 1)
    chunk = max(1, len(idx) // (4 * workers) or 1)
    chunks = [idx[i:i + chunk] for i in range(0, len(idx), chunk)]

    def work(cols):
        return cols, _row_flags(b_rows[cols], s_values, tol_mod)

    if workers > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for cols, res in pool.map(work, chunks):
                flags[:, cols] = res.T
    else:
        for cols in chunks:
            cols, res = work(cols)
            flags[:, cols] = res.T
    return StabilityGrid(s_min, s_max, v_min, v_max, n_s, n_v, flags)


def periodicity_endpoint(
    method: MethodId = MethodId.CLASSICAL,
    v: float | None = None,
    s_hi: float = 2.0,
    resolution: float = 1e-4,
) -> float:
    """Largest s0 such that the method is stable for all scanned s <= s0.

    Coarse forward scan at `resolution`-comparable spacing to find the first
    unstable point, then bisection refinement of the boundary to `resolution`.
    """
    coeffs = classical_coefficients() if not method.is_fitted else coefficients(method, v)
    lo = 0.0
    step = max(resolution * 10, s_hi / 2000)
    s = step
    first_bad = None
    while s <= s_hi:
        if not is_stable(coeffs, s):
            first_bad = s
            break
        lo = s
        s += step
    if first_bad is None:
        return lo
    hi = first_bad
    while hi - lo > resolution:
        mid = 0.5 * (lo + hi)
        if is_stable(coeffs, mid):
            lo = mid
        else:
            hi = mid
    return lo
