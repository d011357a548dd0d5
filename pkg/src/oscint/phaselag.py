"""Phase-lag functional, its derivatives at the fitted frequency, and the
algebraic accuracy conditions of the 14-step family.

On the oscillatory test problem the recurrence collapses to an 8-term stencil
A_j(s^2) = a_{7-j} + s^2 b_{7-j}; the phase lag is the quotient

    PL(s) = [2 sum_{j=1..7} A_j cos(j s) + A_0] / [2 sum_{j=1..7} j^2 A_j]

implemented literally.  Its numerator has an order-(i+1) root at s = v for
the PF-D<i> weights, which is what the fitting construction imposes.

Derivatives of PL at s = v are computed by central finite differences on an
extended-precision evaluation; differentiating the enormous closed forms
symbolically is neither needed nor attempted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .coefficients import (
    CoefficientSet,
    MethodId,
    coefficients_mp,
    precision_budget,
)
from .errors import DegenerateDenominator

#: the common error constant shared by the whole family (coefficient of
#: y^(16) h^16 in the classical principal truncation term)
ERROR_CONSTANT = Fraction(152802083671, 2853107712000)


@dataclass(frozen=True)
class StencilWeights:
    """A_0..A_7 of the oscillatory-test stencil at frequency argument s."""

    A: tuple
    s: float
    v: float


@dataclass(frozen=True)
class OrderConditionVector:
    """C_0..C_qmax; exact Fractions when built from the exact classical set."""

    C: tuple
    qmax: int

    @property
    def order(self) -> int:
        """Largest p with C_0..C_{p+1} all zero (capped by qmax-1)."""
        p = -1
        for q, cq in enumerate(self.C):
            if cq != 0:
                return q - 2
            p = q - 1
        return p


def stencil_weights(coeffs: CoefficientSet, s) -> StencilWeights:
    s2 = s * s
    A = tuple(coeffs.a[7 - j] + s2 * coeffs.b[7 - j] for j in range(8))
    return StencilWeights(A=A, s=s, v=coeffs.v)


def phase_lag(coeffs: CoefficientSet, s):
    """The literal phase-lag quotient at frequency argument s.

    Works with float or mpmath operands; the result type follows the inputs.
    Raises DegenerateDenominator when 2*sum j^2 A_j vanishes to working
    precision.
    """
    w = stencil_weights(coeffs, s)
    A = w.A
    if isinstance(s, mp.mpf) or isinstance(A[1], mp.mpf):
        cos = mp.cos
    else:
        cos = math.cos
    num = A[0]
    den = 0 * A[0]
    for j in range(1, 8):
        num = num + 2 * A[j] * cos(j * s)
        den = den + j * j * A[j]
    den = 2 * den
    scale = 2 * sum(j * j * abs(A[j]) for j in range(1, 8))
    if abs(den) <= 1e-14 * max(1.0, float(scale)):
        raise DegenerateDenominator(f"stencil denominator ~0 at s={float(s):g}")
    return num / den


def _fd_derivative(f, x, k, step):
    """k-th central difference of f at x with O(step^2) truncation."""
    acc = mp.mpf(0)
    for r in range(k + 1):
        node = x + (mp.mpf(k) / 2 - r) * step
        acc += (-1) ** r * mp.binomial(k, r) * f(node)
    return acc / step ** k


def phase_lag_derivative_with_error(method: MethodId, v: float, k: int, prec: int | None = None):
    """(estimate, error_bound) of the k-th phase-lag derivative at s = v.

    The evaluation runs at `prec` bits (default scales with the coefficient
    cancellation budget); the step follows the eps^(1/(k+2)) balance rule and
    the error bound is the difference between the full-step and half-step
    estimates.
    """
    if k < 1:
        raise ValueError("derivative order must be >= 1")
    prec = prec or max(320, precision_budget(method, v) + 120)
    coeffs = coefficients_mp(method, v, prec)
    with mp.workprec(prec):
        x = mp.mpf(v)
        f = lambda s: phase_lag(coeffs, s)
        step = mp.mpf(2) ** (-mp.mpf(prec) / (k + 2))
        d_full = _fd_derivative(f, x, k, step)
        d_half = _fd_derivative(f, x, k, step / 2)
        err = abs(d_half - d_full)
        # one Richardson sweep: both estimates are O(step^2) accurate
        value = d_half + (d_half - d_full) / 3
    return float(value), float(err)


def phase_lag_derivative(method: MethodId, v: float, k: int, prec: int | None = None) -> float:
    """k-th derivative of s -> PL(s) at s = v for the given fitted variant."""
    value, _ = phase_lag_derivative_with_error(method, v, k, prec)
    return value


_FACTORIALS = [math.factorial(q) for q in range(25)]


def order_conditions(coeffs: CoefficientSet, qmax: int) -> OrderConditionVector:
    """C_0..C_qmax of the accuracy functional.

    C_0 = sum a_j, C_1 = sum j a_j, and for q >= 2
    C_q = (1/q!) sum j^q a_j - (1/(q-2)!) sum j^{q-2} b_j.
    Exact rational arithmetic whenever the weight set is exact.
    """
    if qmax < 2:
        raise ValueError("qmax must be >= 2")
    exact = coeffs.is_exact
    conv = (lambda x: x) if exact else float
    a = [conv(x) for x in coeffs.a]
    b = [conv(x) for x in coeffs.b]
    C = [sum(a), sum(j * aj for j, aj in enumerate(a))]
    pw = Fraction if exact else float
    for q in range(2, qmax + 1):
        sa = sum(pw(j) ** q * aj for j, aj in enumerate(a))
        # b_0 = 0 by invariant, so the j=0 term (0^0 = 1 at q=2) drops out
        sb = sum(pw(j) ** (q - 2) * bj for j, bj in enumerate(b) if j > 0)
        C.append(sa / _FACTORIALS[q] - sb / _FACTORIALS[q - 2])
    return OrderConditionVector(C=tuple(C), qmax=qmax)


def plte_polynomial(method: MethodId):
    """Leading-error operator terms as (derivative_order, omega_power, coefficient).

    For PF-D<i> the operator is the common error constant times
    sum_{k=0..i+1} binom(i+1, k) omega^{2k} y^{(16-2k)}, i.e. the constant
    times (d^2/dt^2 + omega^2)^{i+1} applied to y^{(14-2i)}; the classical
    method keeps only the omega-free term.
    """
    if not method.is_fitted:
        return [(16, 0, ERROR_CONSTANT)]
    i = method.derivative_count
    return [
        (16 - 2 * k, 2 * k, math.comb(i + 1, k) * ERROR_CONSTANT)
        for k in range(i + 2)
    ]
