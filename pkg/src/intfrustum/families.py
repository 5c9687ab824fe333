"""Parametric families of integral frusta.

``build_general`` assembles a frustum from a Pythagorean quadruple
``(x, y, H, t)`` and a top short side ``d``; the volume is an integer exactly
when ``3 | H*y*x``. ``build_prop2`` is the three-parameter non-square family
built on the ``n = 1`` three-squares subfamily, and ``build_prop3`` the
square-base family built on ``Z^2 = X^2 + 2Y^2``.

Not every square-base member has an integer volume: ``(c, D, m, n) =
(1, 1, 1, 1)`` gives 31/3. Integrality is computed for every member, never
assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from intfrustum.exactmath import ParameterError, checked, gcd
from intfrustum.frustum import Frustum, FrustumRecord

PROP2_MOD3_CLAUSE = "l(m+v) ≡ 0 (mod 3)"


@dataclass(frozen=True)
class GeneralSeed:
    x: int
    y: int
    H: int
    t: int
    d: int

    def __post_init__(self):
        if min(self.x, self.y, self.H, self.t, self.d) < 1:
            raise ParameterError("x, y, H, t, d positive")
        if self.t**2 != self.H**2 + self.y**2 + self.x**2:
            raise ParameterError("t^2 = H^2 + y^2 + x^2", f"{self.t**2} != {self.H**2 + self.y**2 + self.x**2}")
        if self.y < self.x:
            raise ParameterError("y >= x", f"y={self.y} < x={self.x}")
        if (self.y * self.d) % self.x:
            raise ParameterError("x divides y*d", f"x={self.x}, y*d={self.y * self.d}")


def build_general(seed: GeneralSeed) -> FrustumRecord:
    c = checked(seed.y * seed.d // seed.x, "build_general")
    a = checked(c + 2 * seed.y, "build_general")
    b = checked(seed.d + 2 * seed.x, "build_general")
    frustum = Frustum(a, b, c, seed.d, seed.H, seed.t)
    # integral volume <=> 3 | H*y*x, cross-checked against the exact volume
    assert frustum.is_integral == ((seed.H * seed.y * seed.x) % 3 == 0)
    return FrustumRecord.of(frustum)


@dataclass(frozen=True)
class Prop2Admissibility:
    admissible: bool
    v: Optional[int]
    branch: Optional[str]
    violations: tuple[str, ...]


def prop2_admissible(l: int, m: int) -> Prop2Admissibility:  # noqa: E741
    """Decide whether ``(l, m)`` seeds the three-parameter family.

    ``branch`` records which mod-3 case holds for an admissible pair:
    ``"3 divides l"`` (then ``3 | m + v`` while ``3`` divides neither ``m``
    nor ``v``) or ``"3 does not divide l"`` (then ``3 | m`` and ``3 | v``).
    """
    violations = []
    if l < 2:
        violations.append("l >= 2")
    if m < 1:
        violations.append("m >= 1")
    if violations:
        return Prop2Admissibility(False, None, None, tuple(violations))

    v = None
    if not m < l:
        violations.append("1 <= m < l")
    if (l * l - 1) % m:
        violations.append("m divides l^2 - 1")
    else:
        v = (l * l - 1) // m
    if v is not None and (l * (m + v)) % 3:
        violations.append(PROP2_MOD3_CLAUSE)

    admissible = not violations
    branch = None
    if admissible:
        branch = "3 divides l" if l % 3 == 0 else "3 does not divide l"
    return Prop2Admissibility(admissible, v, branch, tuple(violations))


@dataclass(frozen=True)
class Prop2Seed:
    l: int  # noqa: E741
    m: int
    D: int
    v: int = field(init=False)

    def __post_init__(self):
        if self.D < 1:
            raise ParameterError("D >= 1", f"got D={self.D}")
        check = prop2_admissible(self.l, self.m)
        if not check.admissible:
            raise ParameterError(check.violations[0], f"l={self.l}, m={self.m}")
        object.__setattr__(self, "v", check.v)


def build_prop2(seed: Prop2Seed) -> FrustumRecord:
    l, m, D = seed.l, seed.m, seed.D  # noqa: E741
    H = checked(l * l + m * m - 1, "build_prop2")
    t = checked(l * l + m * m + 1, "build_prop2")
    frustum = Frustum(
        a=checked(2 * l * (D + 2), "build_prop2"),
        b=checked(2 * m * (D + 2), "build_prop2"),
        c=checked(2 * l * D, "build_prop2"),
        d=checked(2 * m * D, "build_prop2"),
        H=H,
        t=t,
    )
    return FrustumRecord.of(frustum)


@dataclass(frozen=True)
class Prop3Seed:
    c: int
    D: int
    m: int
    n: int

    def __post_init__(self):
        if min(self.c, self.D, self.m, self.n) < 1:
            raise ParameterError("c, D, m, n positive")
        if gcd(self.m, self.n) != 1:
            raise ParameterError("gcd(m, n) = 1", f"gcd({self.m}, {self.n}) = {gcd(self.m, self.n)}")


def build_prop3(seed: Prop3Seed) -> FrustumRecord:
    """Square-base member; check ``record.derived.is_integral`` before use."""
    c, D, m, n = seed.c, seed.D, seed.m, seed.n
    offset = checked(2 * D * m * n, "build_prop3")
    a = checked(c + 2 * offset, "build_prop3")
    H = checked(D * abs(m * m - 2 * n * n), "build_prop3")
    t = checked(D * (m * m + 2 * n * n), "build_prop3")
    frustum = Frustum(a, a, c, c, H, t)
    return FrustumRecord.of(frustum)


def prop2_family(l_max: int, D_max: int) -> Iterator[FrustumRecord]:
    """Every member with ``l <= l_max`` and ``D <= D_max``, ordered by ``(l, m, D)``."""
    for l in range(2, l_max + 1):  # noqa: E741
        for m in range(1, l):
            if prop2_admissible(l, m).admissible:
                for D in range(1, D_max + 1):
                    yield build_prop2(Prop2Seed(l, m, D))


def prop3_family(c_max: int, D_max: int, mn_max: int, integral_only: bool = False) -> Iterator[FrustumRecord]:
    """Members with each parameter bounded, ordered by ``(c, D, m, n)``."""
    for c in range(1, c_max + 1):
        for D in range(1, D_max + 1):
            for m in range(1, mn_max + 1):
                for n in range(1, mn_max + 1):
                    if gcd(m, n) != 1:
                        continue
                    rec = build_prop3(Prop3Seed(c, D, m, n))
                    if rec.derived.is_integral or not integral_only:
                        yield rec
