"""Null ideals of square integer matrices over residue class rings.

All matrix arguments are square nested sequences of Python integers; results
use plain Python integers throughout, so every value is exact.
"""

from nullideal._core import (
    composite_null_ideal_generators,
    critical_primes,
    decompose,
    image_ring_generators,
    intval_membership,
    intval_presentation,
    is_polynomially_closed,
    ladder,
    minimal_polynomial,
    null_ideal_generators,
    null_membership,
    p_ordering,
    stabilization_exponent,
    verify,
)

__all__ = [
    "composite_null_ideal_generators",
    "critical_primes",
    "decompose",
    "image_ring_generators",
    "intval_membership",
    "intval_presentation",
    "is_polynomially_closed",
    "ladder",
    "minimal_polynomial",
    "null_ideal_generators",
    "null_membership",
    "p_ordering",
    "stabilization_exponent",
    "verify",
]

__version__ = "0.1.0"
