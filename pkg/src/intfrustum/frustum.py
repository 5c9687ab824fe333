"""Regular truncated pyramids with rectangular bases.

A frustum is described by six integer lengths: the bottom base ``a x b``,
the top base ``c x d``, the height ``H`` and the common lateral edge ``t``.
Orientation is canonical: ``a >= b`` and ``c >= d``.

The offsets ``x = (b - d) / 2`` and ``y = (a - c) / 2`` are the legs of the
right triangles that join a top corner to the bottom base; together with
``H`` they form a Pythagorean quadruple with hypotenuse ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from intfrustum.exactmath import (
    DomainError,
    checked,
    checked_product,
    gcd,
    is_integral,
    rational_make,
)

# (flag, description) in the order diagnostics are reported.
CONDITIONS = (
    ("positive", "all six lengths are positive"),
    ("ordered", "canonical orientation a >= b and c >= d"),
    ("shrinks", "top base strictly inside bottom: a > c and b > d"),
    ("key_ratio", "key ratio a/b = c/d, i.e. a*d = b*c"),
    ("even_offsets", "a - c and b - d are both even"),
    ("key_equation", "key equation 4t^2 = 4H^2 + (a-c)^2 + (b-d)^2"),
    ("offset_divisor", "x divides y*d, with x = (b-d)/2 and y = (a-c)/2"),
    ("integral_volume", "volume d*H*(a^2 + a*c + c^2) / (3c) is an integer"),
)

GEOMETRIC_FLAGS = tuple(name for name, _ in CONDITIONS if name != "integral_volume")


class InvalidFrustum(DomainError):
    def __init__(self, dims, failures):
        self.dims = tuple(dims)
        self.failures = tuple(failures)
        super().__init__(f"{self.dims} is not a regular truncated pyramid: fails {', '.join(failures)}")


def volume(a: int, c: int, d: int, H: int) -> Fraction:
    """Exact volume ``d*H*(a^2 + a*c + c^2) / (3c)``.

    Only the long sides ``a, c`` and the short top side ``d`` are needed; the
    short bottom side follows from the key ratio.
    """
    if not (a > c >= 1 and d >= 1 and H >= 1):
        raise DomainError(f"volume needs a > c >= 1, d >= 1, H >= 1; got a={a}, c={c}, d={d}, H={H}")
    quad = checked(a * a + a * c + c * c, "volume")
    num = checked_product(d, H, quad, what="volume")
    return rational_make(num, checked(3 * c, "volume"))


def volume_via_offsets(x: int, y: int, d: int, H: int) -> Fraction:
    """Volume from the offsets: ``H*y*[(2x+d)^2 + d(2x+d) + d^2] / (3x)``."""
    if not (y >= x >= 1 and d >= 1 and H >= 1):
        raise DomainError(f"volume_via_offsets needs y >= x >= 1, d >= 1, H >= 1; got x={x}, y={y}, d={d}, H={H}")
    if (y * d) % x:
        raise DomainError(f"x={x} does not divide y*d={y * d}")
    s = 2 * x + d
    bracket = checked(s * s + d * s + d * d, "volume_via_offsets")
    num = checked_product(H, y, bracket, what="volume_via_offsets")
    return rational_make(num, checked(3 * x, "volume_via_offsets"))


def apex_heights(a: int, c: int, H: int) -> tuple[Fraction, Fraction]:
    """Heights of the full pyramid and of the cut-off top pyramid.

    Returns ``(H1, H2)`` with ``H1 - H2 == H``.
    """
    if not (a > c >= 1 and H >= 1):
        raise DomainError(f"apex_heights needs a > c >= 1, H >= 1; got a={a}, c={c}, H={H}")
    gap = a - c
    h1 = rational_make(checked(H * a, "apex height"), gap)
    h2 = rational_make(checked(H * c, "apex height"), gap)
    return h1, h2


def volume_via_apex(a: int, b: int, c: int, d: int, H: int) -> Fraction:
    """Volume as the difference of the two pyramids sharing the apex."""
    if a * d != b * c:
        raise DomainError(f"key ratio violated: a*d={a * d} != b*c={b * c}")
    if not (b > d >= 1):
        raise DomainError(f"volume_via_apex needs b > d >= 1; got b={b}, d={d}")
    h1, h2 = apex_heights(a, c, H)
    big = h1 * checked(a * b, "volume_via_apex")
    small = h2 * checked(c * d, "volume_via_apex")
    return (big - small) / 3


@dataclass(frozen=True)
class RatioDecomposition:
    N: int
    M: int
    k1: int
    k2: int


def decompose(a: int, b: int, c: int, d: int) -> RatioDecomposition:
    """Write ``a, b, c, d`` as ``N*k1, N*k2, M*k1, M*k2`` with ``gcd(k1, k2) = 1``."""
    if min(a, b, c, d) < 1:
        raise DomainError(f"decompose needs positive sides; got {(a, b, c, d)}")
    if a * d != b * c:
        raise DomainError(f"key ratio violated: a*d={a * d} != b*c={b * c}")
    N, M = gcd(a, b), gcd(c, d)
    k1, k2 = a // N, b // N
    if c != M * k1 or d != M * k2:
        raise DomainError(f"lowest-terms decomposition failed for {(a, b, c, d)}")
    return RatioDecomposition(N, M, k1, k2)


@dataclass(frozen=True)
class DerivedQuantities:
    x: int
    y: int
    volume: Fraction
    is_integral: bool
    is_square: bool


@dataclass(frozen=True)
class ValidationReport:
    """Per-condition diagnostics for a candidate ``(a, b, c, d, H, t)``."""

    candidate: tuple[int, int, int, int, int, int]
    positive: bool
    ordered: bool
    shrinks: bool
    key_ratio: bool
    even_offsets: bool
    key_equation: bool
    offset_divisor: bool
    integral_volume: bool
    x: Optional[int] = None
    y: Optional[int] = None
    volume: Optional[Fraction] = None
    derived: Optional[DerivedQuantities] = None

    @property
    def overall_valid(self) -> bool:
        return all(getattr(self, name) for name in GEOMETRIC_FLAGS)

    @property
    def overall_integral(self) -> bool:
        return self.overall_valid and self.integral_volume

    @property
    def valid_up_to_orientation(self) -> bool:
        return all(getattr(self, name) for name in GEOMETRIC_FLAGS if name != "ordered")

    @property
    def canonicalizable(self) -> bool:
        """True when only the orientation is wrong and the width/depth swap is valid."""
        if self.ordered:
            return False
        a, b, c, d, H, t = self.candidate
        return validate((b, a, d, c, H, t)).overall_valid

    def flags(self) -> dict[str, bool]:
        return {name: getattr(self, name) for name, _ in CONDITIONS}

    def failures(self) -> list[str]:
        return [name for name, ok in self.flags().items() if not ok]

    @property
    def frustum(self) -> "Frustum":
        return Frustum(*self.candidate)


def validate(candidate) -> ValidationReport:
    """Check every defining condition of an integral frustum.

    Any six integers are accepted; each condition is evaluated on its own so
    the report says exactly which ones fail. Overflow in a condition raises
    :class:`~intfrustum.exactmath.ArithmeticOverflow` naming that condition.
    """
    a, b, c, d, H, t = (int(v) for v in candidate)
    for v in (a, b, c, d, H, t):
        checked(v, "positive")

    positive = min(a, b, c, d, H, t) >= 1
    ordered = a >= b and c >= d
    shrinks = a > c and b > d
    key_ratio = checked(a * d, "key_ratio") == checked(b * c, "key_ratio")
    p, q = a - c, b - d
    even_offsets = p % 2 == 0 and q % 2 == 0
    lhs = checked(4 * checked(t * t, "key_equation"), "key_equation")
    rhs = checked(4 * H * H + checked(p * p, "key_equation") + checked(q * q, "key_equation"), "key_equation")
    key_equation = lhs == rhs

    x = y = None
    offset_divisor = False
    if shrinks and even_offsets:
        x, y = q // 2, p // 2
        offset_divisor = checked(y * d, "offset_divisor") % x == 0

    vol = None
    if a > c >= 1 and d >= 1 and H >= 1:
        vol = volume(a, c, d, H)
    integral_volume = vol is not None and is_integral(vol)

    geometric = positive and ordered and shrinks and key_ratio and even_offsets and key_equation and offset_divisor
    derived = None
    if geometric:
        derived = DerivedQuantities(
            x=x,
            y=y,
            volume=vol,
            is_integral=integral_volume,
            is_square=(a == b and c == d),
        )
    return ValidationReport(
        candidate=(a, b, c, d, H, t),
        positive=positive,
        ordered=ordered,
        shrinks=shrinks,
        key_ratio=key_ratio,
        even_offsets=even_offsets,
        key_equation=key_equation,
        offset_divisor=offset_divisor,
        integral_volume=integral_volume,
        x=x,
        y=y,
        volume=vol,
        derived=derived,
    )


@dataclass(frozen=True)
class Frustum:
    """A geometrically valid frustum; construction fails otherwise.

    Volume integrality is *not* required here, see :attr:`is_integral`.
    """

    a: int
    b: int
    c: int
    d: int
    H: int
    t: int
    _report: ValidationReport = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        report = validate(self.dims)
        if not report.overall_valid:
            raise InvalidFrustum(self.dims, [f for f in report.failures() if f != "integral_volume"])
        object.__setattr__(self, "_report", report)

    @property
    def dims(self) -> tuple[int, int, int, int, int, int]:
        return (self.a, self.b, self.c, self.d, self.H, self.t)

    @property
    def derived(self) -> DerivedQuantities:
        return self._report.derived

    @property
    def x(self) -> int:
        return (self.b - self.d) // 2

    @property
    def y(self) -> int:
        return (self.a - self.c) // 2

    @property
    def volume(self) -> Fraction:
        return self._report.volume

    @property
    def is_integral(self) -> bool:
        return self._report.integral_volume

    @property
    def is_square(self) -> bool:
        return self.a == self.b and self.c == self.d

    def sort_key(self) -> tuple[int, ...]:
        return (self.t, self.a, self.b, self.c, self.d, self.H)

    def decomposition(self) -> RatioDecomposition:
        return decompose(self.a, self.b, self.c, self.d)

    def apex_heights(self) -> tuple[Fraction, Fraction]:
        return apex_heights(self.a, self.c, self.H)


@dataclass(frozen=True)
class FrustumRecord:
    """A frustum bundled with its derived quantities."""

    frustum: Frustum
    derived: DerivedQuantities

    @classmethod
    def of(cls, frustum: Frustum) -> "FrustumRecord":
        return cls(frustum, frustum.derived)

    def sort_key(self) -> tuple[int, ...]:
        return self.frustum.sort_key()
