"""Exact integer and rational primitives.

Python integers never wrap, so "checked" arithmetic here means range
checking: every value that leaves a formula is confirmed to fit in a signed
64-bit word, and :class:`ArithmeticOverflow` is raised otherwise. This keeps
results portable to fixed-width consumers (numpy kernels, CSV readers) while
the arithmetic itself stays exact.
"""

from __future__ import annotations

import math
from fractions import Fraction

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

Rational = Fraction


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class ParameterError(DomainError):
    """Construction parameters violate a stated clause; ``clause`` names it."""

    def __init__(self, clause: str, detail: str = ""):
        self.clause = clause
        super().__init__(f"{clause} violated" + (f" ({detail})" if detail else ""))


class CapacityError(RuntimeError):
    """A search bound implies more work than the configured limit."""


class ArithmeticOverflow(OverflowError):
    """A result does not fit in a signed 64-bit integer."""

    def __init__(self, what: str, value: int):
        self.what = what
        self.value = value
        super().__init__(f"overflow in {what}: {value.bit_length()}-bit value exceeds int64")


def checked(value: int, what: str = "value") -> int:
    """Return ``value`` unchanged, or raise if it falls outside int64."""
    if not INT64_MIN <= value <= INT64_MAX:
        raise ArithmeticOverflow(what, value)
    return value


def checked_product(*factors: int, what: str = "product") -> int:
    result = 1
    for f in factors:
        result = checked(result * f, what)
    return result


def gcd(u: int, v: int) -> int:
    if u < 0 or v < 0:
        raise DomainError(f"gcd expects nonnegative arguments, got ({u}, {v})")
    if u == 0 and v == 0:
        raise DomainError("gcd(0, 0) is undefined")
    return math.gcd(u, v)


def integer_sqrt(n: int) -> tuple[int, bool]:
    """Return ``(floor(sqrt(n)), n is a perfect square)``."""
    if n < 0:
        raise DomainError(f"integer_sqrt of negative number {n}")
    root = math.isqrt(n)
    return root, root * root == n


def is_square(n: int) -> bool:
    return n >= 0 and integer_sqrt(n)[1]


def rational_make(num: int, den: int) -> Fraction:
    """Build ``num/den`` in lowest terms with a positive denominator.

    >>> rational_make(-3, -6)
    Fraction(1, 2)
    """
    if den == 0:
        raise DomainError("zero denominator")
    r = Fraction(num, den)
    checked(r.numerator, "rational numerator")
    checked(r.denominator, "rational denominator")
    return r


def is_integral(r: Fraction) -> bool:
    return r.denominator == 1


def format_rational(r: Fraction) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n`` in increasing order."""
    if n <= 0:
        raise DomainError(f"divisors of nonpositive number {n}")
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]
