"""Phase-lag machinery: fitting identities, derivatives, accuracy conditions,
and the frequency-tolerance ordering that motivates the whole family."""

import math
from fractions import Fraction

import mpmath as mp
import pytest

from oscint.coefficients import (
    A_WEIGHTS,
    FITTED_METHODS,
    CoefficientSet,
    MethodId,
    classical_coefficients,
    coefficients,
    coefficients_mp,
)
from oscint.errors import DegenerateDenominator
from oscint.phaselag import (
    ERROR_CONSTANT,
    order_conditions,
    phase_lag,
    phase_lag_derivative,
    phase_lag_derivative_with_error,
    plte_polynomial,
    stencil_weights,
)

V_GRID = (0.1, 0.5, 1.0, 2.0)


# ----------------------------------------------------------------- stencil ---

def test_stencil_at_zero_strips_b():
    w = stencil_weights(classical_coefficients(), 0)
    assert [float(x) for x in w.A] == [0.0, 0.0, 0.0, 0.0, -1.0, 2.0, -2.0, 1.0]


def test_stencil_at_one():
    w = stencil_weights(classical_coefficients(), 1)
    assert w.A[7] == 1  # a_0 + b_0 = 1
    assert w.A[6] == -2 + Fraction(433489274083, 237758976000)


# ------------------------------------------------------- fitting identities ---

def test_phase_lag_vanishes_at_fitted_frequency():
    for m in FITTED_METHODS:
        for v in V_GRID:
            cs = coefficients(m, v)
            assert abs(phase_lag(cs, v)) <= 1e-12


def test_phase_lag_derivatives_vanish_through_order():
    for m in FITTED_METHODS:
        i = m.derivative_count
        for v in V_GRID:
            for k in range(1, i + 1):
                tol = 1e-6 if k <= 2 else 1e-4
                assert abs(phase_lag_derivative(m, v, k)) <= tol


def test_next_phase_lag_derivative_is_nonzero():
    for m in FITTED_METHODS:
        i = m.derivative_count
        val, err = phase_lag_derivative_with_error(m, 0.8, i + 1)
        assert abs(val) > 10 * err
        assert abs(val) > 0


def test_first_derivative_nonzero_for_pfd0():
    val, err = phase_lag_derivative_with_error(MethodId.PFD0, 0.8, 1)
    assert abs(val) > 10 * err


def test_degenerate_denominator_raises():
    # engineered stencil: b chosen so sum j^2 A_j = 0 at s = 1
    a = A_WEIGHTS
    # with b_half = (c, 0, 0, 0, 0, 0, 0): den = 2[36(a_1+c) + rest(a-only)]
    rest = sum(j * j * a[7 - j] for j in (1, 2, 3, 4, 5, 7))
    c = -(rest / 36.0 + a[1])
    b = (0.0, c, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, c, 0.0)
    cs = CoefficientSet(method=MethodId.PFD0, v=1.0, a=a, b=b, precision_bits_used=0)
    with pytest.raises(DegenerateDenominator):
        phase_lag(cs, 1.0)


def test_small_s_regression_of_classical_quotient(classical_mp):
    """The literal quotient behaves like c*s^16 at small s; the measured
    value at s = 0.1 and the log-log slope are frozen as regression
    constants."""
    with mp.workprec(320):
        p01 = phase_lag(classical_mp, mp.mpf("0.1"))
        p001 = phase_lag(classical_mp, mp.mpf("0.01"))
        slope = mp.log(abs(p01 / p001)) / mp.log(10)
    assert float(p01) == pytest.approx(2.2818695e-19, rel=1e-6)
    assert 15.5 < float(slope) < 16.5


def test_frequency_tolerance_ordering(classical_mp):
    """Each flattened derivative shrinks the phase error at a mismatched
    frequency by roughly an order of magnitude: the family's reason to
    exist, measured at a 5% frequency error."""
    v, s = 0.1, mp.mpf("0.095")
    with mp.workprec(340):
        vals = [abs(phase_lag(classical_mp, s))]
        for m in FITTED_METHODS:
            vals.append(abs(phase_lag(coefficients_mp(m, v, 360), s)))
    for lo, hi in zip(vals[1:], vals[:-1]):
        assert lo < hi / 5


# -------------------------------------------------------- order conditions ---

def test_order_conditions_exact_classical():
    oc = order_conditions(classical_coefficients(), 16)
    assert all(c == 0 for c in oc.C[:16])
    assert oc.C[16] == ERROR_CONSTANT
    assert oc.order == 14


def test_odd_conditions_vanish_while_even_prefix_holds():
    # symmetry kills odd C_q only through the held even prefix: exactly,
    # C_17 = 7 * C_16 for the classical set (shift of the first error term)
    oc = order_conditions(classical_coefficients(), 17)
    assert oc.C[15] == 0
    assert oc.C[17] == 7 * ERROR_CONSTANT


@pytest.mark.parametrize("i", [0, 2, 4, 6])
def test_fitted_condition_prefix(i):
    """PF-D<i> keeps C_2..C_{2(6-i)} (and the following odd one) at zero and
    gives up the rest to the root conditions."""
    m = MethodId(i)
    cs = coefficients(m, 0.5)
    oc = order_conditions(cs, 16)
    kept = 2 * (6 - i)
    for q in range(kept + 2):
        assert abs(float(oc.C[q])) < 1e-10, f"C_{q} should vanish"
    assert abs(float(oc.C[kept + 2])) > 1e-8  # the first sacrificed one


# ------------------------------------------------------------- error terms ---

def test_plte_binomial_structure():
    for m in FITTED_METHODS:
        i = m.derivative_count
        terms = plte_polynomial(m)
        assert len(terms) == i + 2
        for k, (dord, wpow, coef) in enumerate(terms):
            assert dord == 16 - 2 * k
            assert wpow == 2 * k
            assert coef == math.comb(i + 1, k) * ERROR_CONSTANT


def test_plte_classical():
    assert plte_polynomial(MethodId.CLASSICAL) == [(16, 0, ERROR_CONSTANT)]
