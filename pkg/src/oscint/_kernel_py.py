"""Pure-Python recurrence kernel (fallback when the C extension is absent).

Both kernels advance the explicit 14-step recurrence

    y[m+1] = -y[m-13] + 2 y[m-12] - 2 y[m-11] + y[m-10]
             + y[m-2] - 2 y[m-1] + 2 y[m]
             + h^2 (b1 (f[m-12]+f[m]) + b2 (f[m-11]+f[m-1]) + b3 (f[m-10]+f[m-2])
                    + b4 (f[m-9]+f[m-3]) + b5 (f[m-8]+f[m-4]) + b6 (f[m-7]+f[m-5])
                    + b7 f[m-6])

in place over preallocated arrays.  The floating-point expression order here
is the contract: the compiled kernel replicates it exactly (and is built with
FP contraction off), so the two backends produce bit-identical trajectories.
"""

from __future__ import annotations


def advance(y, f, m, n_steps, h, b_half, rhs, t0):
    """Advance n_steps from filled index m; returns the new filled index.

    y, f: indexable/writable over [0, m + n_steps]; b_half: (b1..b7).
    """
    h2 = h * h
    b1, b2, b3, b4, b5, b6, b7 = (float(x) for x in b_half)
    for _ in range(n_steps):
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


def advance_radial(y, f, m, n_steps, h, b_half, t0, ll1, E, u0, a, x0, u1):
    """Schrödinger fast path: same recurrence with the Woods-Saxon rhs inlined."""
    from math import exp

    h2 = h * h
    b1, b2, b3, b4, b5, b6, b7 = (float(x) for x in b_half)
    for _ in range(n_steps):
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
