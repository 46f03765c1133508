"""Verification suites built on the engine and the analysis functions."""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from logger import logger
from packages.constructions import thm_am_pair
from packages.core.models import AMVerification, CountTable
from packages.sets import SetDescriptor, enumerate_up_to

from .bounds import TableBuilder, resolve_builder
from .growth import superpoly_witnesses


def verify_theorem_pair(
    base: int,
    limit: int,
    budget: Optional[int] = None,
    builder: Optional[TableBuilder] = None,
) -> Tuple[AMVerification, CountTable]:
    """A = powers of ``base``, M = integers not divisible by ``base``.

    Checks p(n) >= 1 on [1, limit] and p(base^r) == 1 for every power
    base^r <= limit. Assertions are exact.
    """
    parts, mults = thm_am_pair(base)
    table = resolve_builder(builder, budget)(parts, mults, limit)
    powers = tuple(enumerate_up_to(parts, limit))
    result = AMVerification(
        base=base,
        limit=limit,
        powers=powers,
        nonpositive=tuple(n for n in range(1, limit + 1) if table[n] < 1),
        nonunique_powers=tuple(q for q in powers if table[q] != 1),
    )
    logger.info(
        "Theorem pair base=%d up to %d: %s (%d powers)",
        base, limit, "passed" if result.passed else "FAILED", len(powers),
    )
    return result, table


def find_superpoly_witnesses(
    parts: SetDescriptor,
    mults: SetDescriptor,
    k: int,
    limits: Sequence[int] = (10**5, 10**6),
    budget: Optional[int] = None,
    builder: Optional[TableBuilder] = None,
) -> Tuple[CountTable, List[int]]:
    """superpoly_witnesses at the first limit, escalating while none appear."""
    build = resolve_builder(builder, budget)
    table: Optional[CountTable] = None
    found: List[int] = []
    for limit in limits:
        table = build(parts, mults, limit)
        found = superpoly_witnesses(table, k)
        if found:
            break
        logger.info("No n <= %d with p(n) > n^%d; escalating", limit, k)
    if table is None:
        raise ValueError("at least one limit is required")
    return table, found
