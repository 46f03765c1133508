"""Bounded queries on set descriptors: enumeration, counting, membership, gcds."""

from __future__ import annotations

import math
from typing import List

from packages.core.errors import EmptyTruncationError

from .descriptors import SetDescriptor


def enumerate_up_to(s: SetDescriptor, x: int) -> List[int]:
    """Elements of ``s`` that are <= x, strictly increasing."""
    if x < 1:
        return []
    return s.enumerate_up_to(x)


def counting_function(s: SetDescriptor, x: int) -> int:
    """The counting function s(x) = |{e in s : e <= x}|."""
    if x < 1:
        return 0
    return s.count_up_to(x)


def contains(s: SetDescriptor, n: int) -> bool:
    return n >= 1 and s.contains(n)


def is_finite(s: SetDescriptor) -> bool:
    return s.is_finite()


def gcd_of(s: SetDescriptor, bound: int) -> int:
    """gcd of the truncation {e in s : e <= bound}."""
    elements = enumerate_up_to(s, bound)
    if not elements:
        raise EmptyTruncationError(f"{s.label()} has no elements <= {bound}")
    return math.gcd(*elements)


def gcd_without(s: SetDescriptor, excluded: int, bound: int) -> int:
    """gcd of {e in s : e <= bound, e != excluded}.

    This is an upper-truncation approximation: the gcd over the whole
    (possibly infinite) set divides the returned value, and the two agree
    once ``bound`` passes the point where the prefix gcds stabilize.
    """
    elements = [e for e in enumerate_up_to(s, bound) if e != excluded]
    if not elements:
        raise EmptyTruncationError(
            f"{s.label()} has no elements <= {bound} other than {excluded}"
        )
    return math.gcd(*elements)
