"""Characteristic-polynomial and stability-scan tests.

The structurally interesting fact (verified here): on its own fitted
frequency the characteristic polynomial has e^{±iv} as an exact root pair,
but the other twelve roots leave the unit circle at s ~ 0.11 just as the
classical method's do, so the usable band of the whole family is bounded by
the spurious-root instability, not by accuracy.
"""

import cmath
import math

import numpy as np
import pytest

from oscint.coefficients import MethodId, classical_coefficients, coefficients
from oscint.errors import LeadingCoefficientZero
from oscint.stability import (
    characteristic_polynomial,
    is_stable,
    periodicity_endpoint,
    polynomial_roots,
    scan_region,
)

#: classical interval-of-periodicity endpoint, frozen after first measurement
FROZEN_CLASSICAL_S0 = 0.1106


def test_charpoly_at_zero_is_rho():
    p = characteristic_polynomial(classical_coefficients(), 0.0)
    assert p.c == (1.0, -2.0, 2.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
                   -1.0, 2.0, -2.0, 1.0)
    assert p.is_palindromic


def test_charpoly_center_value():
    s = 0.1
    p = characteristic_polynomial(classical_coefficients(), s)
    assert p.c[7] == pytest.approx(0.01 * 577045151693 / 2830464000, rel=1e-14)


def test_charpoly_palindromic_everywhere():
    for m, v in ((MethodId.CLASSICAL, None), (MethodId.PFD3, 0.4)):
        cs = classical_coefficients() if v is None else coefficients(m, v)
        for s in (0.05, 0.3, 1.7):
            p = characteristic_polynomial(cs, s)
            for k in range(15):
                assert p.c[k] == p.c[14 - k]


def test_roots_structure_at_zero():
    p = characteristic_polynomial(classical_coefficients(), 0.0)
    r = polynomial_roots(p)
    assert r.size == 14
    # consistency forces a double root at z = 1 (numerically a tight cluster)
    near_one = sorted(abs(z - 1) for z in r)[:2]
    assert all(d < 1e-6 for d in near_one)
    # zero-stability: everything on the closed unit disc
    assert np.all(np.abs(r) <= 1 + 1e-8)


def test_roots_closed_under_inversion_and_conjugation():
    cs = coefficients(MethodId.PFD2, 0.7)
    r = polynomial_roots(characteristic_polynomial(cs, 0.35))
    for z in r:
        assert min(abs(1 / z - w) for w in r) < 1e-8
        assert min(abs(z.conjugate() - w) for w in r) < 1e-10


def test_fitted_frequency_is_exact_root_on_diagonal():
    # the defining property: z = e^{iv} solves the characteristic equation at
    # s = v, for every variant and frequency (the principal pair is exact)
    for m in (MethodId.PFD0, MethodId.PFD3, MethodId.PFD6):
        for v in (0.1, 0.5, 1.0):
            cs = coefficients(m, v)
            p = characteristic_polynomial(cs, v)
            z = cmath.exp(1j * v)
            val = sum(c * z ** k for k, c in enumerate(p.c))
            scale = sum(abs(c) for c in p.c)
            assert abs(val) <= 1e-12 * scale


def test_is_stable_basics():
    cl = classical_coefficients()
    assert is_stable(cl, 0.01)
    assert is_stable(cl, 0.0)
    assert not is_stable(cl, 100.0)
    assert not is_stable(cl, 0.2)


def test_leading_coefficient_always_one():
    # b_0 = 0 and a_0 = 1 pin the leading coefficient A_7 = 1 for every valid
    # set, so the degree never collapses (the guard covers doctored inputs)
    for s in (0.0, 0.5, 5.0, 50.0):
        p = characteristic_polynomial(classical_coefficients(), s)
        assert p.c[14] == 1.0


def test_classical_periodicity_endpoint_regression():
    s0 = periodicity_endpoint(MethodId.CLASSICAL, resolution=1e-4)
    assert s0 > 0.1
    assert s0 == pytest.approx(FROZEN_CLASSICAL_S0, abs=5e-4)


def test_scan_classical_constant_in_v():
    g = scan_region(MethodId.CLASSICAL, 0, 2, 0, 2, 50, 50)
    assert g.flags.shape == (50, 50)
    assert np.all(g.flags == g.flags[:, :1])
    # the s = 0 row is stable, far rows are not
    assert np.all(g.flags[0, :])
    assert not np.any(g.flags[-1, :])


def test_scan_zero_s_row_stable_for_fitted():
    g = scan_region(MethodId.PFD4, 0, 1, 0, 1, 12, 12)
    assert np.all(g.flags[0, :])


def test_scan_marks_pole_columns_unstable():
    # v near pi is inside the pole exclusion for PF-D1; those columns must be
    # classified (as unstable), not raise
    g = scan_region(MethodId.PFD1, 0, 0.2, 3.10, 3.18, 4, 9)
    assert g.flags.shape == (4, 9)


def test_scan_rows_iterator():
    g = scan_region(MethodId.CLASSICAL, 0, 1, 0, 1, 3, 4)
    rows = list(g.rows())
    assert len(rows) == 12
    s, v, flag = rows[0]
    assert (s, v) == (0.0, 0.0) and isinstance(flag, bool)
