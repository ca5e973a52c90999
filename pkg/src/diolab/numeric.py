"""Exact integer and rational helpers used by every other module.

Everything here works on Python ``int`` and :class:`fractions.Fraction`;
nothing ever touches floating point.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction
from functools import reduce
from itertools import combinations
from typing import Iterable, Optional, Union

from diolab.errors import FactorizationLimitExceeded

Rational = Fraction
Exact = Union[int, Fraction]

DEFAULT_FACTOR_BOUND = 10**6
FACTOR_BOUND_ENV = "DIOLAB_FACTOR_BOUND"


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def gcd_many(values: Iterable[int]) -> int:
    return reduce(math.gcd, values, 0)


def pairwise_coprime(values: Iterable[int]) -> bool:
    values = list(values)
    if not values:
        raise ValueError("pairwise_coprime needs at least one value")
    return all(math.gcd(x, y) == 1 for x, y in combinations(values, 2))


def is_perfect_square(a: int) -> Optional[int]:
    """Return the nonnegative root of ``a`` if it is a square, else None.

    Negative input always yields None; callers that want ``|a|`` semantics
    must take the absolute value themselves.
    """
    if a < 0:
        return None
    r = math.isqrt(a)
    return r if r * r == a else None


def is_square_fraction(x: Exact) -> Optional[Fraction]:
    """Nonnegative rational square root of ``x`` if it exists."""
    x = Fraction(x)
    rn = is_perfect_square(x.numerator)
    rd = is_perfect_square(x.denominator)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd)


def integer_nth_root(a: int, n: int) -> int:
    """Floor of the real nth root of a nonnegative integer."""
    if a < 0:
        raise ValueError("integer_nth_root needs a >= 0")
    if n < 1:
        raise ValueError("n must be >= 1")
    if a < 2 or n == 1:
        return a
    if n == 2:
        return math.isqrt(a)
    # Newton iteration from an overestimate; decreases monotonically.
    x = 1 << -(-a.bit_length() // n)
    while True:
        y = ((n - 1) * x + a // x ** (n - 1)) // n
        if y >= x:
            return x
        x = y


def power_certificate(a: int, n: int) -> Optional[int]:
    """Return x with x**n == a, allowing negative x when n is odd.

    >>> power_certificate(-64, 3)
    -4
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if a < 0:
        if n % 2 == 0:
            return None
        r = integer_nth_root(-a, n)
        return -r if r**n == -a else None
    r = integer_nth_root(a, n)
    return r if r**n == a else None


def factor_bound() -> int:
    raw = os.environ.get(FACTOR_BOUND_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_FACTOR_BOUND
    bound = int(raw)
    if bound < 2:
        raise ValueError(f"{FACTOR_BOUND_ENV} must be >= 2, got {bound}")
    return bound


def factorize(a: int, bound: Optional[int] = None) -> dict[int, int]:
    """Prime factorization of ``|a|`` by deterministic trial division.

    Trial divisors never exceed ``bound``.  When the unfactored cofactor is
    still too large to be certified prime at that point, the factorization
    is incomplete and :class:`FactorizationLimitExceeded` is raised.
    """
    if a == 0:
        raise ValueError("cannot factorize 0")
    if bound is None:
        bound = factor_bound()
    n = abs(a)
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        if d > bound:
            raise FactorizationLimitExceeded(
                f"|{a}| has a cofactor {n} with no prime factor <= {bound}"
            )
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def squarefree_part(a: int, bound: Optional[int] = None) -> tuple[int, int]:
    """Split ``a`` as ``s * f**2`` with ``s`` squarefree, same sign as ``a``, f > 0."""
    if a == 0:
        raise ValueError("squarefree_part is undefined for 0")
    s, f = 1, 1
    for prime, exp in factorize(a, bound).items():
        f *= prime ** (exp // 2)
        if exp % 2:
            s *= prime
    return (s if a > 0 else -s), f


def divisors_from_factors(factors: dict[int, int]) -> list[int]:
    divs = [1]
    for prime, exp in factors.items():
        divs = [d * prime**e for d in divs for e in range(exp + 1)]
    return sorted(divs)


def fmt_exact(x: Exact) -> Union[int, str]:
    """JSON-friendly exact rendering: ints stay ints, fractions become 'num/den'."""
    if isinstance(x, bool):
        raise TypeError("booleans are not exact numbers")
    if isinstance(x, int):
        return x
    x = Fraction(x)
    if x.denominator == 1:
        return x.numerator
    return f"{x.numerator}/{x.denominator}"


def parse_exact(text: str) -> Fraction:
    """Parse '7', '-3/4' into a Fraction; rejects decimal points."""
    text = text.strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"not an exact number: {text!r}")
    return Fraction(text)
