"""Set pairs satisfying the hypotheses of the powers/non-multiples theorem."""

from __future__ import annotations

from typing import Tuple

from packages.sets import Geometric, NotDivisible


def thm_am_pair(base: int) -> Tuple[Geometric, NotDivisible]:
    """A = {base^i : i >= 0}, M = {m >= 1 : base does not divide m}.

    M contains 1..base-1 and no multiple of base, so every n >= 1 has at
    least one partition (its base-adic digits) and every power of base has
    exactly one.
    """
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    return Geometric(base=base), NotDivisible(modulus=base)
