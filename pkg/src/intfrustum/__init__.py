"""Integral regular truncated pyramids with rectangular bases.

Construction, validation and bounded enumeration of frusta whose edges,
height and volume are all integers.
"""

from intfrustum.exactmath import (
    ArithmeticOverflow,
    DomainError,
    Rational,
    gcd,
    integer_sqrt,
    rational_make,
)
from intfrustum.frustum import (
    DerivedQuantities,
    Frustum,
    FrustumRecord,
    RatioDecomposition,
    ValidationReport,
    apex_heights,
    decompose,
    validate,
    volume,
    volume_via_apex,
    volume_via_offsets,
)

__all__ = [
    "ArithmeticOverflow",
    "DerivedQuantities",
    "DomainError",
    "Frustum",
    "FrustumRecord",
    "RatioDecomposition",
    "Rational",
    "ValidationReport",
    "apex_heights",
    "decompose",
    "gcd",
    "integer_sqrt",
    "rational_make",
    "validate",
    "volume",
    "volume_via_apex",
    "volume_via_offsets",
]

__version__ = "0.1.0"
