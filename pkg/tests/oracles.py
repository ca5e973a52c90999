"""Independent brute-force oracles.

Nothing here imports diolab: every routine is the dumbest correct scan, so
agreement with the library is evidence rather than a tautology.
"""

from __future__ import annotations

import math
from fractions import Fraction


def square_root(n):
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def naive_factor(n):
    n = abs(n)
    out = {}
    d = 2
    while n > 1:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    return out


def squarefree_by_scan(a):
    """Largest f with f^2 | a, by trying every f."""
    best = 1
    for f in range(1, math.isqrt(abs(a)) + 1):
        if a % (f * f) == 0:
            best = f
    return a // (best * best), best


def expand_roots(lead, roots):
    """Coefficients (c3, c2, c1, c0) of lead * prod(X - r), by Vieta."""
    r1, r2, r3 = roots
    return (lead, -lead * (r1 + r2 + r3), lead * (r1 * r2 + r1 * r3 + r2 * r3), -lead * r1 * r2 * r3)


def eval_cubic(coeffs, x):
    c3, c2, c1, c0 = coeffs
    x = Fraction(x)
    return c3 * x**3 + c2 * x**2 + c1 * x + c0


def primitive_legs_by_scan(p_max):
    """Primitive (W even, T odd, V) with generator p <= p_max, found by scanning legs."""
    v_max = p_max * p_max + (p_max - 1) ** 2
    found = []
    for w in range(2, v_max + 1, 2):
        for t in range(1, v_max + 1, 2):
            v = square_root(w * w + t * t)
            if v is None or v > v_max or math.gcd(w, t) != 1:
                continue
            p = square_root((v + t) // 2)
            if p is not None and p <= p_max:
                found.append((w, t, v))
    return found


def system_hits(a, b, c, which, p_max):
    """(U1, U2, W, T, V) solving system 9 or 10 over both leg orientations."""
    out = []
    for w0, t0, v in primitive_legs_by_scan(p_max):
        for w, t in ((w0, t0), (t0, w0)):
            if which == 9:
                f1, f2 = a * v * v + b * t * t, a * w * w + c * t * t
            else:
                f1, f2 = c * v * v - b * t * t, c * w * w + a * t * t
            r1, r2 = square_root(f1), square_root(f2)
            if r1 is not None and r2 is not None:
                out.append((r1, r2, w, t, v))
    return sorted(out, key=lambda h: (h[4], h[2], h[3]))


def pairs_with_square_forms(m, n, bound):
    out = []
    for x in range(1, bound + 1):
        for y in range(1, bound + 1):
            z, t = square_root(x * x + m * y * y), square_root(x * x + n * y * y)
            if z is not None and t is not None:
                out.append((x, y, z, t))
    return sorted(out)


def quartic_sum_hits(bound):
    return [(x, y) for x in range(1, bound + 1) for y in range(x, bound + 1)
            if square_root(x**4 + y**4) is not None]
