"""Fitted b-weights from their defining linear conditions.

A phase-fitted variant that flattens the phase-lag through its first i
derivatives at s = v keeps the low-order accuracy conditions C_2 = C_4 = ...
= C_{2(6-i)} = 0 and replaces the top i+1 of them by root conditions on the
trigonometric numerator

    N(s) = A_0(s^2) + 2 * sum_{j=1..7} A_j(s^2) cos(j s),
    A_j(s^2) = a_{7-j} + s^2 * b_{7-j},

namely N(v) = N'(v) = ... = N^(i)(v) = 0.  (The phase-lag is N/D with
D(v) != 0, so an order-(i+1) root of N at v is equivalent to the phase-lag
and its first i derivatives vanishing there.)  Both families of conditions
are linear in b_1..b_7, so the weights solve a 7x7 system.

This module evaluates that system in arbitrary precision.  It serves as an
independent cross-check for the closed-form and series representations, and
as the evaluation route for the two PF-D5 components whose closed forms are
not tabulated (see _closed_forms).
"""

from __future__ import annotations

from fractions import Fraction

import mpmath as mp

#: the invariant a-weights: only indices 0..3 (and mirrors 11..14) are nonzero
A_PATTERN = (1, -2, 2, -1, 0, 0, 0, 0, 0, 0, 0, -1, 2, -2, 1)

# N(s) splits into a pure-a part P(s) = 2[-cos 4s + 2cos 5s - 2cos 6s + cos 7s]
# and b-weighted parts g_m(s): g_7 = s^2, g_m = 2 s^2 cos((7-m)s) for m=1..6.
_P_TERMS = ((-1, 4), (2, 5), (-2, 6), (1, 7))


def _p_deriv(s, k):
    """k-th derivative of the a-part of N at s."""
    tot = mp.mpf(0)
    half_pi = mp.pi / 2
    for coef, j in _P_TERMS:
        tot += 2 * coef * mp.mpf(j) ** k * mp.cos(j * s + k * half_pi)
    return tot


def _g_deriv(m, s, k):
    """k-th derivative of the b_m coefficient function of N at s."""
    if m == 7:
        if k == 0:
            return s * s
        if k == 1:
            return 2 * s
        return mp.mpf(2) if k == 2 else mp.mpf(0)
    c = mp.mpf(7 - m)
    half_pi = mp.pi / 2
    tot = s * s * c ** k * mp.cos(c * s + k * half_pi)
    if k >= 1:
        tot += 2 * k * s * c ** (k - 1) * mp.cos(c * s + (k - 1) * half_pi)
    if k >= 2:
        tot += k * (k - 1) * c ** (k - 2) * mp.cos(c * s + (k - 2) * half_pi)
    return 2 * tot


def order_condition_row(m):
    """Weights and target of the accuracy condition C_{2m} = 0, as Fractions.

    C_q = (1/q!) sum j^q a_j - (1/(q-2)!) sum j^{q-2} b_j with q = 2m, so the
    b-moment sum_{j} j^{2m-2} b_j must equal sum_j j^{2m} a_j / (2m (2m-1)).
    """
    q = 2 * m
    s_a = sum(Fraction(j) ** q * a for j, a in enumerate(A_PATTERN))
    target = s_a / (q * (q - 1))
    weights = [Fraction(j) ** (q - 2) + Fraction(14 - j) ** (q - 2) for j in range(1, 7)]
    weights.append(Fraction(7) ** (q - 2))
    return weights, target


def solve_fitted_weights(derivative_count, v, prec=None):
    """b_1..b_7 of the PF-D<i> variant at fitted frequency v (mpf values).

    derivative_count i in 0..6; evaluation runs at ``prec`` bits (defaults to
    the ambient mpmath precision plus guard bits).  Small v makes the system
    increasingly ill-conditioned (the root conditions degenerate toward the
    accuracy conditions they replace), which extra precision absorbs.
    """
    i = derivative_count
    if not 0 <= i <= 6:
        raise ValueError(f"derivative_count must be in 0..6, got {i}")
    with mp.workprec(prec or mp.mp.prec + 60):
        v = mp.mpf(v)
        rows, rhs = [], []
        for m in range(1, 6 - i + 1):
            weights, target = order_condition_row(m)
            rows.append([mp.mpf(w.numerator) / w.denominator for w in weights])
            rhs.append(mp.mpf(target.numerator) / target.denominator)
        for k in range(i + 1):
            rows.append([_g_deriv(m, v, k) for m in range(1, 8)])
            rhs.append(-_p_deriv(v, k))
        sol = mp.lu_solve(mp.matrix(rows), mp.matrix(rhs))
    return [+sol[j] for j in range(7)]
