"""Weight-set tests: exact classical values, the three evaluation routes and
their cross-checks, dispatch behavior, and serialization.

The closed forms and series tables are enormous transcriptions; the tests
here hold them against an independent third route (the defining linear
conditions in oscint._fitting) hard enough that any wrong term, sign, or
grouping shows up as a ~1e-2..1e-12 mismatch against a ~1e-40 baseline.
"""

import json
import math
import random
from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

from oscint import errors
from oscint.coefficients import (
    A_WEIGHTS,
    CLASSICAL_B_HALF,
    DEFAULT_V_SWITCH,
    FITTED_METHODS,
    CoefficientSet,
    MethodId,
    cancellation_profile,
    classical_coefficients,
    closed_form_b,
    coefficients,
    precision_budget,
    taylor_b,
    _closed_form_eval,
)
from oscint._fitting import solve_fitted_weights
from oscint._taylor_tables import TAYLOR_B
from oscint.phaselag import ERROR_CONSTANT


# ------------------------------------------------------------- classical ---

def test_classical_exact_values():
    cs = classical_coefficients()
    assert cs.b[1] == Fraction(433489274083, 237758976000)
    assert cs.b[4] == Fraction(-176930551859, 2971987200)
    assert cs.a == A_WEIGHTS
    assert cs.is_exact


def test_classical_consistency_sums():
    cs = classical_coefficients()
    assert sum(cs.a) == 0
    assert sum(j * aj for j, aj in enumerate(cs.a)) == 0


def test_classical_symmetry_and_b0():
    cs = classical_coefficients()
    for j in range(15):
        assert cs.b[j] == cs.b[14 - j]
    assert cs.b[0] == 0 and cs.b[14] == 0


# ------------------------------------------------------------ the tables ---

def test_series_constant_terms_are_classical():
    for i in range(7):
        for j in range(7):
            assert TAYLOR_B[i][j][0] == CLASSICAL_B_HALF[j]


def test_series_b1_slope_binomial_identity():
    # the b_1 v^2 coefficient is -(i+1) times the family error constant
    for i in range(7):
        assert TAYLOR_B[i][0][1] == -(i + 1) * ERROR_CONSTANT


@pytest.mark.parametrize("i", range(7))
def test_series_matches_defining_conditions(i):
    """Series evaluation vs the defining-system solve at small v; the residual
    is the truncated v^12 tail, orders of magnitude below the tolerance any
    single-term transcription error would produce."""
    with mp.workprec(350):
        for vs in ("0.02", "0.04"):
            v = mp.mpf(vs)
            oracle = solve_fitted_weights(i, v, prec=350)
            for j in range(7):
                series = sum(
                    mp.mpf(c.numerator) / c.denominator * v ** (2 * p)
                    for p, c in enumerate(TAYLOR_B[i][j])
                )
                rel = abs(series - oracle[j]) / abs(oracle[j])
                assert rel < 1e-18, f"PF-D{i} b_{j+1} at v={vs}: rel={rel}"


@pytest.mark.parametrize("i", range(7))
def test_closed_forms_match_defining_conditions(i):
    """Release gate for the transcribed quotients: exact algebraic agreement
    (to working precision) with the defining conditions at random v."""
    rng = random.Random(20240 + i)
    prec = 380
    vs = [rng.uniform(0.06, 2.9) for _ in range(10)]
    with mp.workprec(prec):
        for v in vs:
            oracle = solve_fitted_weights(i, mp.mpf(v), prec=prec)
            got = _closed_form_eval(i, v, prec)
            for j in range(7):
                rel = abs(got[j] - oracle[j]) / abs(oracle[j])
                assert rel < mp.mpf("1e-40"), f"PF-D{i} b_{j+1} at v={v}: rel={rel}"


def test_series_term_by_term_example():
    # PF-D2 b_1 at v = 0.05: leading three printed terms, evaluated directly
    v = 0.05
    expect = (float(Fraction(433489274083, 237758976000))
              - float(Fraction(152802083671, 951035904000)) * v ** 2
              + float(Fraction(1404086671901, 194011324416000)) * v ** 4)
    got = taylor_b(MethodId.PFD2, v)[0]
    assert abs(got - expect) < 1e-12


def test_taylor_validity_radius():
    with pytest.raises(errors.OutOfValidityRange):
        taylor_b(MethodId.PFD0, 0.9)
    taylor_b(MethodId.PFD0, 0.5)  # inside the default radius


# ----------------------------------------------------------- closed forms ---

def test_closed_form_small_v_against_leading_terms():
    # PF-D0 at v=1e-3 and 256 bits agrees with the two-term series to >=12 digits
    v = 1e-3
    got = closed_form_b(MethodId.PFD0, v, 256)
    lead = [float(TAYLOR_B[0][j][0]) + float(TAYLOR_B[0][j][1]) * v * v for j in range(7)]
    for g, e in zip(got, lead):
        assert abs(g - e) / abs(e) < 1e-12


def test_closed_form_classical_limit():
    prev = None
    for v in (1e-2, 1e-3, 1e-4):
        got = closed_form_b(MethodId.PFD0, v, 400)
        dist = max(abs(g - float(c)) for g, c in zip(got, CLASSICAL_B_HALF))
        if prev is not None:
            assert dist < prev
        prev = dist
    assert prev < 1e-6


def test_closed_form_branch_agreement():
    # dual-route cross-check; the binding tolerances with big margin, plus the
    # measured (weaker) agreement at v=0.5 where the series tail bites
    for m in FITTED_METHODS:
        for v, tol in ((0.05, 1e-8), (0.2, 1e-6), (0.5, 2e-5)):
            t = taylor_b(m, v)
            c = closed_form_b(m, v, precision_budget(m, v))
            rel = max(abs(a - b) / abs(b) for a, b in zip(t, c))
            assert rel < tol, f"{m.label} v={v}: {rel}"
    # the low-order variants stay at 8+ digits even at v=0.5
    for m in (MethodId.PFD0, MethodId.PFD1, MethodId.PFD2):
        t = taylor_b(m, 0.5)
        c = closed_form_b(m, 0.5, precision_budget(m, 0.5))
        assert max(abs(a - b) / abs(b) for a, b in zip(t, c)) < 1e-8


def test_closed_form_precision_errors():
    with pytest.raises(errors.PrecisionInsufficient):
        closed_form_b(MethodId.PFD6, 1e-3, 64)  # needs ~220 bits there
    with pytest.raises(errors.PoleProximity):
        closed_form_b(MethodId.PFD1, math.pi + 5e-4, 256)
    with pytest.raises(errors.InvalidFrequency):
        closed_form_b(MethodId.PFD0, -0.5, 128)


def test_closed_form_monotone_refinement():
    # doubling the precision moves the result by less than the certified
    # error bound of the coarser evaluation
    from oscint.coefficients import _closed_form_b_mp

    v = 0.07
    for m in (MethodId.PFD3, MethodId.PFD6):
        bits = precision_budget(m, v)
        lo, est = _closed_form_b_mp(m, v, bits)
        hi, _ = _closed_form_b_mp(m, v, 2 * bits)
        for a, b, e in zip(lo, hi, est):
            assert abs(a - b) <= max(float(e) * 4, 1e-30)


def test_pfd5_untabulated_components_complete():
    # b_4 and b_5 of PF-D5 come from the defining conditions; the printed
    # series (complete for this family) is the independent check
    v = 0.2
    got = closed_form_b(MethodId.PFD5, v, precision_budget(MethodId.PFD5, v))
    ser = taylor_b(MethodId.PFD5, v)
    for j in (3, 4):
        assert abs(got[j] - ser[j]) / abs(ser[j]) < 1e-9


# ----------------------------------------------------------- dispatching ---

def test_dispatch_switch_continuity():
    for m in FITTED_METHODS:
        t = taylor_b(m, DEFAULT_V_SWITCH)
        c = closed_form_b(m, DEFAULT_V_SWITCH, precision_budget(m, DEFAULT_V_SWITCH))
        rel = max(abs(a - b) / abs(b) for a, b in zip(t, c))
        assert rel <= 1e-8


def test_dispatch_small_v_matches_classical():
    cs = coefficients(MethodId.PFD3, 1e-4)
    for j in range(1, 8):
        assert abs(cs.b[j] - float(CLASSICAL_B_HALF[j - 1])) / abs(float(CLASSICAL_B_HALF[j - 1])) < 1e-8


def test_dispatch_validation():
    with pytest.raises(errors.InvalidFrequency):
        coefficients(MethodId.PFD0, 0.0)
    with pytest.raises(errors.InvalidFrequency):
        coefficients(MethodId.PFD0, 7.5)
    assert coefficients(MethodId.CLASSICAL).is_exact


def test_dispatch_deterministic():
    a = coefficients(MethodId.PFD4, 0.37)
    b = coefficients(MethodId.PFD4, 0.37)
    assert a.b == b.b and a.precision_bits_used == b.precision_bits_used


def test_small_v_quadratic_approach():
    # |b_j(v) - classical| <= K v^2 on (0, 0.05], K from the printed v^2 term
    for m in (MethodId.PFD0, MethodId.PFD4, MethodId.PFD6):
        i = m.derivative_count
        for v in (0.01, 0.03, 0.05):
            cs = coefficients(m, v)
            for j in range(7):
                K = abs(float(TAYLOR_B[i][j][1])) * 1.05 + 1e-12
                assert abs(cs.b[j + 1] - float(CLASSICAL_B_HALF[j])) <= K * v * v


# ------------------------------------------------- cancellation metadata ---

def test_cancellation_profile_orders():
    expected = {0: 14, 1: 25, 2: 33, 3: 38, 4: 40, 5: 39, 6: 35}
    for m in FITTED_METHODS:
        prof = cancellation_profile(m)
        assert prof.denominator_zero_order == expected[m.derivative_count]


def test_cancellation_profile_poles():
    prof = cancellation_profile(MethodId.PFD6)
    # full-angle sine factor: every multiple of pi is a pole
    assert all(abs(p / math.pi - round(p / math.pi)) < 1e-12 for p in prof.pole_locations)
    assert math.pi == pytest.approx(prof.pole_locations[0])
    prof1 = cancellation_profile(MethodId.PFD1)
    assert math.pi == pytest.approx(prof1.pole_locations[0])  # cos(v/2) factor
    assert 2 * math.pi == pytest.approx(prof1.pole_locations[1])  # sin(v/2) factor


# ----------------------------------------------------------- data carrier ---

def test_coefficient_set_validation():
    with pytest.raises(ValueError):
        CoefficientSet(method=MethodId.CLASSICAL, v=0.0, a=A_WEIGHTS,
                       b=(0.0,) * 14 + (1.0,), precision_bits_used=0)
    bad_a = (2,) + A_WEIGHTS[1:]
    with pytest.raises(ValueError):
        CoefficientSet(method=MethodId.CLASSICAL, v=0.0, a=bad_a,
                       b=(0.0,) * 15, precision_bits_used=0)


def test_json_roundtrip_exact():
    cs = classical_coefficients()
    text = cs.to_json()
    assert "433489274083/237758976000" in text
    back = CoefficientSet.from_json(text)
    assert back.b == cs.b and back.method is cs.method


def test_json_roundtrip_float():
    cs = coefficients(MethodId.PFD2, 0.31)
    back = CoefficientSet.from_json(cs.to_json())
    assert back.b == cs.b


@given(
    i=st.integers(min_value=0, max_value=6),
    v=st.floats(min_value=1e-4, max_value=2.8, allow_nan=False),
)
@settings(max_examples=25, deadline=None)
def test_invariants_property(i, v):
    m = MethodId(i)
    if min(abs(v - k * math.pi) for k in (1, 2)) < 2e-3:
        return  # pole exclusion zone
    cs = coefficients(m, v)
    assert cs.a == A_WEIGHTS
    assert cs.b[0] == 0.0 and cs.b[14] == 0.0
    for j in range(15):
        assert cs.b[j] == cs.b[14 - j]
    assert CoefficientSet.from_json(cs.to_json()).b == cs.b


def test_method_id_parsing():
    assert MethodId.from_name("pf-d3") is MethodId.PFD3
    assert MethodId.from_name("CLASSICAL") is MethodId.CLASSICAL
    with pytest.raises(ValueError):
        MethodId.from_name("pfd7")
    assert MethodId.PFD5.derivative_count == 5
    assert MethodId.CLASSICAL.derivative_count == -1
