# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled recurrence kernel.

Mirrors oscint._kernel_py expression-for-expression; compiled with
-ffp-contract=off so no FMA contraction changes the rounding, keeping the
two backends bit-identical.
"""

from libc.math cimport exp


def advance(double[::1] y, double[::1] f, Py_ssize_t m, Py_ssize_t n_steps,
            double h, b_half, rhs, double t0):
    """Generic path: rhs is a Python callable, invoked once per step."""
    cdef double h2 = h * h
    cdef double b1 = b_half[0], b2 = b_half[1], b3 = b_half[2], b4 = b_half[3]
    cdef double b5 = b_half[4], b6 = b_half[5], b7 = b_half[6]
    cdef double acc, ynext
    cdef Py_ssize_t i
    for i in range(n_steps):
        acc = b1 * (f[m - 12] + f[m])
        acc += b2 * (f[m - 11] + f[m - 1])
        acc += b3 * (f[m - 10] + f[m - 2])
        acc += b4 * (f[m - 9] + f[m - 3])
        acc += b5 * (f[m - 8] + f[m - 4])
        acc += b6 * (f[m - 7] + f[m - 5])
        acc += b7 * f[m - 6]
        ynext = (-y[m - 13] + 2.0 * y[m - 12] - 2.0 * y[m - 11] + y[m - 10]
                 + y[m - 2] - 2.0 * y[m - 1] + 2.0 * y[m]) + h2 * acc
        m += 1
        y[m] = ynext
        f[m] = rhs(t0 + m * h, ynext)
    return m


def advance_radial(double[::1] y, double[::1] f, Py_ssize_t m, Py_ssize_t n_steps,
                   double h, b_half, double t0, double ll1, double E,
                   double u0, double a, double x0, double u1):
    """Schrödinger fast path: Woods-Saxon rhs evaluated in C."""
    cdef double h2 = h * h
    cdef double b1 = b_half[0], b2 = b_half[1], b3 = b_half[2], b4 = b_half[3]
    cdef double b5 = b_half[4], b6 = b_half[5], b7 = b_half[6]
    cdef double acc, ynext, x, d, q, r, V, w
    cdef Py_ssize_t i
    for i in range(n_steps):
        acc = b1 * (f[m - 12] + f[m])
        acc += b2 * (f[m - 11] + f[m - 1])
        acc += b3 * (f[m - 10] + f[m - 2])
        acc += b4 * (f[m - 9] + f[m - 3])
        acc += b5 * (f[m - 8] + f[m - 4])
        acc += b6 * (f[m - 7] + f[m - 5])
        acc += b7 * f[m - 6]
        ynext = (-y[m - 13] + 2.0 * y[m - 12] - 2.0 * y[m - 11] + y[m - 10]
                 + y[m - 2] - 2.0 * y[m - 1] + 2.0 * y[m]) + h2 * acc
        m += 1
        x = t0 + m * h
        d = (x - x0) / a
        if d <= 0.0:
            q = exp(d)
            V = u0 / (1.0 + q) + u1 * q / ((1.0 + q) * (1.0 + q))
        else:
            r = exp(-d)
            V = u0 * r / (r + 1.0) + u1 * r / ((1.0 + r) * (1.0 + r))
        if ll1 != 0.0:
            w = ll1 / (x * x) + V - E
        else:
            w = V - E
        y[m] = ynext
        f[m] = w * ynext
    return m
