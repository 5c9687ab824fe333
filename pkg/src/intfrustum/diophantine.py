"""Sums of three squares and the form X^2 + 2Y^2.

Two equations matter for frusta:

* ``t^2 = x^2 + y^2 + z^2``. Every positive solution arises as
  ``y = 2l, z = 2m, x = (l^2+m^2)/n - n, t = (l^2+m^2)/n + n`` for some
  divisor ``n`` of ``l^2 + m^2`` with ``n^2 < l^2 + m^2``, after permuting
  coordinates. The choice ``n = 1`` gives a two-parameter subfamily.
* ``Z^2 = X^2 + 2Y^2``, solved by ``X = delta*|m^2 - 2n^2|, Y = 2*delta*m*n,
  Z = delta*(m^2 + 2n^2)`` with ``gcd(m, n) = 1``.

Parametric constructors keep the coordinate roles of their formulas.
Enumerators return canonical solutions (``x <= y <= z``) and serve as
brute-force oracles for the parametrizations.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from intfrustum._parallel import map_partitioned
from intfrustum.exactmath import (
    DomainError,
    ParameterError,
    checked,
    divisors,
    gcd,
    integer_sqrt,
)


class CompletenessViolation(DomainError):
    """A solution that no parameter choice reproduces."""


@dataclass(frozen=True)
class ThreeSquaresSolution:
    x: int
    y: int
    z: int
    t: int

    def __post_init__(self):
        if min(self.x, self.y, self.z, self.t) < 1:
            raise DomainError(f"{self.as_tuple()} has a nonpositive entry")
        if self.t**2 != self.x**2 + self.y**2 + self.z**2:
            raise DomainError(f"{self.as_tuple()} does not satisfy t^2 = x^2 + y^2 + z^2")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.x, self.y, self.z, self.t)

    def legs(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)

    def canonical(self) -> "ThreeSquaresSolution":
        x, y, z = sorted(self.legs())
        return ThreeSquaresSolution(x, y, z, self.t)


@dataclass(frozen=True)
class ThreeSquaresParams:
    l: int  # noqa: E741
    m: int
    n: int

    def __post_init__(self):
        if min(self.l, self.m, self.n) < 1:
            raise ParameterError("l, m, n positive", f"got l={self.l}, m={self.m}, n={self.n}")
        s = self.l**2 + self.m**2
        if s % self.n:
            raise ParameterError("n divides l^2 + m^2", f"n={self.n}, l^2+m^2={s}")
        if self.n**2 >= s:
            raise ParameterError("n^2 < l^2 + m^2", f"n^2={self.n**2}, l^2+m^2={s}")


@dataclass(frozen=True)
class TwoSquareSolution:
    X: int
    Y: int
    Z: int

    def __post_init__(self):
        if min(self.X, self.Y, self.Z) < 1:
            raise DomainError(f"{self.as_tuple()} has a nonpositive entry")
        if self.Z**2 != self.X**2 + 2 * self.Y**2:
            raise DomainError(f"{self.as_tuple()} does not satisfy Z^2 = X^2 + 2Y^2")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.X, self.Y, self.Z)


@dataclass(frozen=True)
class TwoSquareParams:
    delta: int
    m: int
    n: int

    def __post_init__(self):
        if min(self.delta, self.m, self.n) < 1:
            raise ParameterError("delta, m, n positive", f"got delta={self.delta}, m={self.m}, n={self.n}")
        if gcd(self.m, self.n) != 1:
            raise ParameterError("gcd(m, n) = 1", f"gcd({self.m}, {self.n}) = {gcd(self.m, self.n)}")
        # m^2 = 2n^2 has no positive solution, so X below is never zero.
        assert self.m * self.m != 2 * self.n * self.n


@dataclass(frozen=True)
class Witness:
    """Parameters reproducing a solution, plus the coordinate placement.

    ``perm[i]`` is the index into ``(s.x, s.y, s.z)`` of the i-th coordinate
    produced by :func:`three_squares_from_params`.
    """

    params: ThreeSquaresParams
    perm: tuple[int, int, int]


def three_squares_from_params(p: ThreeSquaresParams) -> ThreeSquaresSolution:
    s = checked(p.l * p.l + p.m * p.m, "three_squares_from_params")
    q = s // p.n
    return ThreeSquaresSolution(x=q - p.n, y=2 * p.l, z=2 * p.m, t=q + p.n)


def three_squares_subfamily(l: int, m: int) -> ThreeSquaresSolution:  # noqa: E741
    if l < 1 or m < 1:
        raise ParameterError("l, m positive", f"got l={l}, m={m}")
    s = checked(l * l + m * m, "three_squares_subfamily")
    return ThreeSquaresSolution(x=s - 1, y=2 * l, z=2 * m, t=s + 1)


def _three_squares_for_z(zs: list[int], t_max: int) -> list[tuple[int, int, int, int]]:
    limit = t_max * t_max
    found = []
    for z in zs:
        zz = z * z
        for y in range(1, z + 1):
            yz = zz + y * y
            if yz + 1 > limit:
                break
            for x in range(1, y + 1):
                s = yz + x * x
                if s > limit:
                    break
                t, exact = integer_sqrt(s)
                if exact:
                    found.append((x, y, z, t))
    return found


def enumerate_three_squares(t_max: int, workers: int = 1) -> list[ThreeSquaresSolution]:
    """All canonical ``x <= y <= z`` solutions with ``t <= t_max``.

    Sorted by ``(t, z, y, x)``. Direct search over the cube.
    """
    if t_max < 1:
        raise DomainError(f"t_max must be positive, got {t_max}")
    checked(3 * t_max * t_max, "enumerate_three_squares")
    raw = map_partitioned(_three_squares_for_z, range(1, t_max), workers, t_max)
    raw.sort(key=lambda s: (s[3], s[2], s[1], s[0]))
    return [ThreeSquaresSolution(*s) for s in raw]


def find_params_for(s: ThreeSquaresSolution) -> Witness:
    """Lexicographically least ``(l, m, n)`` reproducing ``s`` up to permutation."""
    legs = s.legs()
    best = None
    for ix, iy, iz in itertools.permutations(range(3)):
        if legs[iy] % 2 or legs[iz] % 2:
            continue
        l, m = legs[iy] // 2, legs[iz] // 2  # noqa: E741
        total = l * l + m * m
        for n in divisors(total):
            if n * n >= total:
                break
            q = total // n
            if q - n == legs[ix] and q + n == s.t:
                key = (l, m, n, (ix, iy, iz))
                if best is None or key < best:
                    best = key
    if best is None:
        raise CompletenessViolation(f"no (l, m, n) reproduces {s.as_tuple()}")
    l, m, n, perm = best  # noqa: E741
    return Witness(ThreeSquaresParams(l, m, n), perm)


def two_square_from_params(p: TwoSquareParams) -> TwoSquareSolution:
    mm, nn = p.m * p.m, p.n * p.n
    return TwoSquareSolution(
        X=checked(p.delta * abs(mm - 2 * nn), "two_square_from_params"),
        Y=checked(2 * p.delta * p.m * p.n, "two_square_from_params"),
        Z=checked(p.delta * (mm + 2 * nn), "two_square_from_params"),
    )


def _two_square_for_z(zs: list[int]) -> list[tuple[int, int, int]]:
    found = []
    for z in zs:
        zz = z * z
        y = 1
        while 2 * y * y < zz:
            x, exact = integer_sqrt(zz - 2 * y * y)
            if exact:
                found.append((x, y, z))
            y += 1
    return found


def enumerate_two_square(z_max: int, workers: int = 1) -> list[TwoSquareSolution]:
    """All positive solutions of ``Z^2 = X^2 + 2Y^2`` with ``Z <= z_max``, sorted by ``(Z, Y, X)``."""
    if z_max < 1:
        raise DomainError(f"z_max must be positive, got {z_max}")
    checked(z_max * z_max, "enumerate_two_square")
    raw = map_partitioned(_two_square_for_z, range(1, z_max + 1), workers)
    raw.sort(key=lambda s: (s[2], s[1], s[0]))
    return [TwoSquareSolution(*s) for s in raw]


def find_two_square_params(s: TwoSquareSolution) -> TwoSquareParams:
    """Lexicographically least ``(delta, m, n)`` reproducing ``s`` exactly."""
    g = math.gcd(s.X, s.Y, s.Z)
    for delta in divisors(g):
        X, Y, Z = s.X // delta, s.Y // delta, s.Z // delta
        if Y % 2:
            continue
        half = Y // 2
        for m in divisors(half):
            n = half // m
            if gcd(m, n) == 1 and m * m + 2 * n * n == Z and abs(m * m - 2 * n * n) == X:
                return TwoSquareParams(delta, m, n)
    raise CompletenessViolation(f"no (delta, m, n) reproduces {s.as_tuple()}")
