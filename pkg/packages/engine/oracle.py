"""Brute-force enumeration of partitions, used as the reference for the engine."""

from __future__ import annotations

from typing import Dict, Iterator, List, Optional

from logger import logger
from packages.core.models import CountTable, EnginePath, PartitionWitness, WitnessList
from packages.sets import SetDescriptor, contains, enumerate_up_to


def iter_partitions(
    parts: SetDescriptor, mults: SetDescriptor, n: int
) -> Iterator[PartitionWitness]:
    """Every partition of n, parts taken in decreasing order.

    At each part the multiplicity runs 0 (part unused) first and then
    through M in increasing order, which fixes the output order.
    """
    if n < 0:
        return
    if n == 0:
        yield PartitionWitness({})
        return

    part_list = enumerate_up_to(parts, n)[::-1]
    mult_list = enumerate_up_to(mults, n)
    chosen: Dict[int, int] = {}

    def walk(i: int, remaining: int) -> Iterator[PartitionWitness]:
        if remaining == 0:
            yield PartitionWitness(dict(sorted(chosen.items())))
            return
        if i == len(part_list):
            return
        a = part_list[i]
        yield from walk(i + 1, remaining)
        for m in mult_list:
            if m * a > remaining:
                break
            chosen[a] = m
            yield from walk(i + 1, remaining - m * a)
            del chosen[a]

    yield from walk(0, n)


def enumerate_partitions(
    parts: SetDescriptor, mults: SetDescriptor, n: int, cap: int
) -> WitnessList:
    """Up to ``cap`` partitions of n; ``truncated`` is set when the cap was hit."""
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    witnesses: List[PartitionWitness] = []
    truncated = False
    for witness in iter_partitions(parts, mults, n):
        if len(witnesses) == cap:
            truncated = True
            break
        witnesses.append(witness)
    return WitnessList(tuple(witnesses), truncated)


def verify_witness(
    witness: PartitionWitness, parts: SetDescriptor, mults: SetDescriptor, n: int
) -> bool:
    """True iff every part is in A, every multiplicity in M, and the sum is n."""
    for a, m in witness.terms.items():
        if not contains(parts, a) or not contains(mults, m):
            return False
    return witness.total == n


def count_oracle(
    parts: SetDescriptor,
    mults: SetDescriptor,
    limit: int,
    cap: Optional[int] = None,
) -> CountTable:
    """A count table built purely by enumeration (small limits only)."""
    if cap is None:
        from apps.cli.settings import settings

        cap = settings.oracle_cap
    values = []
    for n in range(limit + 1):
        found = enumerate_partitions(parts, mults, n, cap)
        if found.truncated:
            raise ValueError(f"oracle cap {cap} reached at n={n}; raise the cap or lower N")
        values.append(len(found))
    logger.debug("count_oracle %s x %s up to %d", parts.label(), mults.label(), limit)
    return CountTable(tuple(values), parts, mults, limit, EnginePath.ORACLE)
