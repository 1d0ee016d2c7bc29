"""Automorphism-aware structure of binary linear codes.

Vectors of GF(2)^n are plain Python ints: coordinate ``i`` (1-indexed, as
printed) lives in bit ``i - 1``.  Codes are stored in canonical reduced
row-echelon form, so two codes are equal iff their dataclasses compare equal.
"""

from autcodes.errors import (
    CapacityError,
    CycleTypeError,
    DomainError,
    HypothesisNotMetError,
    InputError,
    ParseError,
)
from autcodes.gf2linalg import BinaryCode, dual, min_distance, rref, weight_enumerator
from autcodes.permaction import CycleType, Permutation, cycle_type, is_automorphism

__all__ = [
    "BinaryCode",
    "CapacityError",
    "CycleType",
    "CycleTypeError",
    "DomainError",
    "HypothesisNotMetError",
    "InputError",
    "ParseError",
    "Permutation",
    "cycle_type",
    "dual",
    "is_automorphism",
    "min_distance",
    "rref",
    "weight_enumerator",
]

__version__ = "0.1.0"
