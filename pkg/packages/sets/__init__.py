from .descriptors import (
    ArithmeticProgression,
    Factorials,
    FiniteSet,
    Geometric,
    Naturals,
    NotDivisible,
    SelfPowers,
    SetDescriptor,
    UnionSet,
)
from .operations import (
    contains,
    counting_function,
    enumerate_up_to,
    gcd_of,
    gcd_without,
    is_finite,
)
from .parsing import canonical_key, descriptor_from_json, descriptor_to_json, parse_descriptor
from .progressions import Decomposition, decompose

__all__ = [
    "ArithmeticProgression",
    "Factorials",
    "FiniteSet",
    "Geometric",
    "Naturals",
    "NotDivisible",
    "SelfPowers",
    "SetDescriptor",
    "UnionSet",
    "contains",
    "counting_function",
    "enumerate_up_to",
    "gcd_of",
    "gcd_without",
    "is_finite",
    "canonical_key",
    "descriptor_from_json",
    "descriptor_to_json",
    "parse_descriptor",
    "Decomposition",
    "decompose",
]
