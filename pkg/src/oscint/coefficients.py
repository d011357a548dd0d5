"""Weight sets for the 14-step symmetric family.

The a-weights are the same for every family member and never depend on the
fitted frequency; only the seven free b-weights vary.  Three evaluation routes
exist for the fitted variants:

* ``taylor_b`` -- truncated small-v series with exact rational terms,
  immune to cancellation, valid for small |v|;
* ``closed_form_b`` -- the exact trigonometric quotients, evaluated in
  extended precision (they cancel to v^m near 0, so the working precision
  grows like m*log2(1/v));
* the defining linear conditions (`_fitting`), used internally for the two
  untabulated PF-D5 components and as a cross-check in the test suite.

``coefficients`` dispatches between the first two at ``v_switch``.
"""

from __future__ import annotations

import enum
import functools
import json
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import mpmath as mp

from ._closed_forms import CLOSED_FORMS, DENOMINATOR_ZERO_ORDER, RESIDUAL_ZERO_ORDER
from ._fitting import solve_fitted_weights
from ._taylor_tables import TAYLOR_B
from .errors import (
    InvalidFrequency,
    OutOfValidityRange,
    PoleProximity,
    PrecisionInsufficient,
)

Real = Union[int, float, Fraction, mp.mpf]

#: number of steps J; weights are indexed 0..J
STEP_COUNT = 14

#: the invariant a-weights a_0..a_14
A_WEIGHTS = (1, -2, 2, -1, 0, 0, 0, 0, 0, 0, 0, -1, 2, -2, 1)

#: exact classical b_1..b_7 (b_0 = 0, mirror for b_8..b_14)
CLASSICAL_B_HALF = (
    Fraction(433489274083, 237758976000),
    Fraction(-28417333297, 4953312000),
    Fraction(930518896733, 39626496000),
    Fraction(-176930551859, 2971987200),
    Fraction(7854755921, 65228800),
    Fraction(-146031020287, 825552000),
    Fraction(577045151693, 2830464000),
)

#: default switch point between the series and closed-form routes
DEFAULT_V_SWITCH = 0.05
#: truncated series validity radius (truncation grows like the v^12 tail)
TAYLOR_VALIDITY_RADIUS = 0.75
#: largest fitted frequency accepted by `coefficients`
DEFAULT_V_MAX = 6.0
#: exclusion radius around denominator zeros other than v = 0
POLE_EXCLUSION_RADIUS = 1e-3

_ENV_PRECISION_FLOOR = "OSCINT_PRECISION_BITS"


class MethodId(enum.Enum):
    """Selector over the classical method and its phase-fitted variants.

    The enum value is the number of flattened phase-lag derivatives
    (``derivative_count``); -1 encodes the classical, non-fitted method.
    """

    CLASSICAL = -1
    PFD0 = 0
    PFD1 = 1
    PFD2 = 2
    PFD3 = 3
    PFD4 = 4
    PFD5 = 5
    PFD6 = 6

    @property
    def derivative_count(self) -> int:
        return self.value

    @property
    def is_fitted(self) -> bool:
        return self.value >= 0

    @property
    def label(self) -> str:
        return self.name.lower()

    @classmethod
    def from_name(cls, name: str) -> "MethodId":
        try:
            return cls[name.strip().upper().replace("-", "")]
        except KeyError:
            raise ValueError(f"unknown method {name!r}; expected classical or pfd0..pfd6")


FITTED_METHODS = tuple(m for m in MethodId if m.is_fitted)
ALL_METHODS = (MethodId.CLASSICAL,) + FITTED_METHODS


def _mirror(half: Sequence[Real]) -> tuple:
    """Full symmetric b_0..b_14 from b_1..b_7 (b_0 = 0)."""
    b1__7 = tuple(half)
    zero = 0 * b1__7[0]
    return (zero,) + b1__7 + b1__7[-2::-1] + (zero,)


@dataclass(frozen=True)
class CoefficientSet:
    """One method's full weight set at one fitted frequency.

    ``a`` is always the invariant integer pattern; ``b`` holds Fractions for
    the exact classical set and floats (or mpmath floats, for the internal
    extended-precision variants) otherwise.
    """

    method: MethodId
    v: float
    a: tuple
    b: tuple
    precision_bits_used: int

    def __post_init__(self):
        if len(self.a) != STEP_COUNT + 1 or len(self.b) != STEP_COUNT + 1:
            raise ValueError("weight tuples must have 15 entries")
        if tuple(self.a) != A_WEIGHTS:
            raise ValueError("a-weights must be the invariant symmetric pattern")
        for j in range(STEP_COUNT + 1):
            if self.b[j] != self.b[STEP_COUNT - j]:
                raise ValueError(f"b-weights must be symmetric (index {j})")
        if self.b[0] != 0:
            raise ValueError("b_0 must vanish (explicit method)")

    @property
    def is_exact(self) -> bool:
        return all(isinstance(x, (int, Fraction)) for x in self.b)

    @property
    def b_half(self) -> tuple:
        """The seven free weights b_1..b_7."""
        return self.b[1:8]

    def to_json(self) -> str:
        def enc(x):
            if isinstance(x, Fraction):
                return f"{x.numerator}/{x.denominator}"
            return float(x)

        return json.dumps(
            {
                "method": self.method.label,
                "v": self.v,
                "a": list(self.a),
                "b": [enc(x) for x in self.b],
                "precision_bits_used": self.precision_bits_used,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "CoefficientSet":
        raw = json.loads(text)

        def dec(x):
            if isinstance(x, str) and "/" in x:
                num, den = x.split("/")
                return Fraction(int(num), int(den))
            return x

        return cls(
            method=MethodId.from_name(raw["method"]),
            v=raw["v"],
            a=tuple(raw["a"]),
            b=tuple(dec(x) for x in raw["b"]),
            precision_bits_used=raw["precision_bits_used"],
        )


@dataclass(frozen=True)
class CancellationProfile:
    """How badly a family's closed forms cancel, and where their poles sit."""

    method: MethodId
    denominator_zero_order: int
    pole_locations: tuple

    @property
    def residual_zero_order(self) -> int:
        return RESIDUAL_ZERO_ORDER[self.method.derivative_count]


def _pole_grid(i: int, up_to: float) -> tuple:
    """Denominator zeros (other than 0) of family i inside (0, up_to]."""
    den = CLOSED_FORMS[i][0]
    poles = set()
    k = 1
    while k * math.pi <= up_to + 1e-9:
        x = k * math.pi
        if i == 6:  # sin(v) factor: every multiple of pi
            poles.add(x)
        else:
            if den.cosh_pow > 0 and k % 2 == 1:
                poles.add(x)
            if den.sinh_pow > 0 and k % 2 == 0:
                poles.add(x)
        k += 1
    return tuple(sorted(poles))


def cancellation_profile(method: MethodId, up_to: float = 4 * math.pi) -> CancellationProfile:
    if not method.is_fitted:
        return CancellationProfile(method, 0, ())
    i = method.derivative_count
    return CancellationProfile(method, DENOMINATOR_ZERO_ORDER[i], _pole_grid(i, up_to))


def _nearest_pole(i: int, v: float) -> float:
    """Distance from v to the nearest denominator zero other than 0."""
    poles = _pole_grid(i, v + 2 * math.pi)
    return min(abs(v - p) for p in poles)


def classical_coefficients() -> CoefficientSet:
    """The exact rational weight set of the classical 14-step method."""
    return CoefficientSet(
        method=MethodId.CLASSICAL,
        v=0.0,
        a=A_WEIGHTS,
        b=_mirror(CLASSICAL_B_HALF),
        precision_bits_used=0,
    )


def taylor_b(method: MethodId, v: float, radius: float = TAYLOR_VALIDITY_RADIUS):
    """b_1..b_7 from the truncated small-v series (terms through v^10).

    The rational series coefficients are converted once to floats; the
    evaluation itself is well-conditioned.  Raises OutOfValidityRange beyond
    ``radius`` where the discarded v^12 tail is no longer negligible.
    """
    if abs(v) > radius:
        raise OutOfValidityRange(f"|v|={abs(v):g} exceeds series validity radius {radius:g}")
    if not method.is_fitted:
        return tuple(float(x) for x in CLASSICAL_B_HALF)
    rows = TAYLOR_B[method.derivative_count]
    v2 = float(v) * float(v)
    out = []
    for row in rows:
        acc = 0.0
        for coef in reversed(row):
            acc = acc * v2 + float(coef)
        out.append(acc)
    return tuple(out)


def precision_budget(method: MethodId, v: float, working_bits: int = 53) -> int:
    """Bits needed to evaluate the closed forms through their v->0 cancellation.

    The numerator cancels to the same order m the (prefactor-reduced)
    denominator vanishes, so relative error amplifies like v^-m; the budget is
    working precision + m*log2(1/v) + 20 guard bits, floored at 64 (or at the
    OSCINT_PRECISION_BITS environment override).
    """
    if not method.is_fitted:
        return 0
    m = RESIDUAL_ZERO_ORDER[method.derivative_count]
    amplification = m * max(0.0, math.log2(1.0 / v)) if v > 0 else 0.0
    bits = working_bits + int(math.ceil(amplification)) + 20
    floor = int(os.environ.get(_ENV_PRECISION_FLOOR, "0") or 0)
    return max(64, floor, bits)


def _trig_cache(v):
    cc, cch, cs, csh = {}, {}, {}, {}
    c = lambda k: cc.setdefault(k, mp.cos(k * v))
    ch = lambda k: cch.setdefault(k, mp.cos(k * v / 2))
    s = lambda k: cs.setdefault(k, mp.sin(k * v))
    sh = lambda k: csh.setdefault(k, mp.sin(k * v / 2))
    return c, ch, s, sh


def _closed_form_eval(i: int, v, prec: int):
    """All seven b's of family i at `prec` bits (mpf), untabulated ones via
    the defining conditions."""
    den, nums = CLOSED_FORMS[i]
    missing = [j for j, item in enumerate(nums) if item is None]
    fallback = {}
    if missing:
        solved = solve_fitted_weights(i, v, prec=prec + 40)
        fallback = {j: solved[j] for j in missing}
    with mp.workprec(prec):
        vv = mp.mpf(v)
        c, ch, s, sh = _trig_cache(vv)
        out = []
        for j, item in enumerate(nums):
            if item is None:
                out.append(+fallback[j])
                continue
            pref, core = item
            ratio = pref.const / den.const
            val = (
                mp.mpf(ratio.numerator) / ratio.denominator
                * vv ** (pref.v_pow - den.v_pow)
                * sh(1) ** (pref.sinh_pow - den.sinh_pow)
                * ch(1) ** (pref.cosh_pow - den.cosh_pow)
                * core(vv, c, ch, s, sh)
            )
            out.append(val)
    return out


def _closed_form_b_mp(method: MethodId, v: float, precision_bits: int):
    """(values, error_estimates) at precision_bits, certified by re-evaluation
    with 50 extra bits."""
    i = method.derivative_count
    lo = _closed_form_eval(i, v, precision_bits)
    hi = _closed_form_eval(i, v, precision_bits + 50)
    est = [abs(a - b) for a, b in zip(lo, hi)]
    return hi, est


def closed_form_b(method: MethodId, v: float, precision_bits: int):
    """b_1..b_7 from the exact trigonometric quotients, rounded to float.

    Raises PoleProximity near a denominator zero and PrecisionInsufficient
    when the two-precision error estimate certifies fewer than 12 digits.
    """
    if not method.is_fitted:
        raise InvalidFrequency("closed forms exist only for the fitted variants")
    if v <= 0:
        raise InvalidFrequency(f"fitted frequency must be positive, got {v!r}")
    if precision_bits < 64:
        raise ValueError("precision_bits must be at least 64")
    if _nearest_pole(method.derivative_count, v) < POLE_EXCLUSION_RADIUS:
        raise PoleProximity(
            f"v={v:g} is within {POLE_EXCLUSION_RADIUS:g} of a denominator zero"
        )
    vals, est = _closed_form_b_mp(method, v, precision_bits)
    for b, e in zip(vals, est):
        if e > abs(b) * mp.mpf("1e-12"):
            raise PrecisionInsufficient(
                f"only ~{-mp.log10(e / abs(b)):.1f} digits certified at "
                f"{precision_bits} bits; raise precision_bits"
            )
    return tuple(float(x) for x in vals)


def coefficients(
    method: MethodId,
    v: float = 0.0,
    v_switch: float = DEFAULT_V_SWITCH,
    v_max: float = DEFAULT_V_MAX,
    precision_bits: int | None = None,
) -> CoefficientSet:
    """Weight set for `method` at fitted frequency v (ignored when classical).

    Fitted variants use the series route for v < v_switch and the
    extended-precision closed forms (with an automatic precision budget)
    otherwise.  Deterministic: identical inputs give bit-identical floats.
    """
    if not method.is_fitted:
        return classical_coefficients()
    if not 0.0 < v <= v_max:
        raise InvalidFrequency(f"need 0 < v <= {v_max:g} for {method.label}, got {v!r}")
    if v < v_switch:
        half = taylor_b(method, v)
        bits = 0
    else:
        bits = precision_bits or precision_budget(method, v)
        half = closed_form_b(method, v, bits)
    return CoefficientSet(
        method=method, v=float(v), a=A_WEIGHTS, b=_mirror(half), precision_bits_used=bits
    )


@functools.lru_cache(maxsize=128)
def coefficients_mp(method: MethodId, v, precision_bits: int) -> CoefficientSet:
    """Extended-precision variant of `coefficients` (mpf weights throughout).

    Used by the phase-lag differentiation machinery, which needs weights far
    more accurate than float64 so the cancellation in the numerator of the
    phase-lag quotient at s = v is resolved.
    """
    if not method.is_fitted:
        raise InvalidFrequency("extended-precision sets exist only for fitted variants")
    if v <= 0:
        raise InvalidFrequency(f"fitted frequency must be positive, got {v!r}")
    vals, _ = _closed_form_b_mp(method, float(v), precision_bits)
    return CoefficientSet(
        method=method,
        v=float(v),
        a=A_WEIGHTS,
        b=_mirror(vals),
        precision_bits_used=precision_bits,
    )
