"""Exact p_{A,M}(0..N) as truncated products of per-part generating functions.

For each part a <= N the factor is

    F_a(q) = 1 + sum_{m in M, m*a <= N} q^(m*a)

and p_{A,M}(n) is the coefficient of q^n in the product of all F_a, taken
mod q^(N+1). Parts above N and multiplicities with m*a > N never occur in a
partition of n <= N, so the truncation is exact.
"""

from __future__ import annotations

import time
from itertools import accumulate
from typing import List, Optional

from logger import logger
from packages.core.errors import BudgetExceededError, UnsupportedDecompositionError
from packages.core.models import CountTable, EnginePath
from packages.sets import SetDescriptor, counting_function, enumerate_up_to
from packages.sets.progressions import Decomposition, decompose


def _ceiling(budget: Optional[int]) -> int:
    if budget is not None:
        return budget
    from apps.cli.settings import settings

    return settings.budget


def _shift_add(target: List[int], source: List[int], shift: int) -> None:
    """target[n] += source[n - shift] for shift <= n <= N."""
    if shift >= len(target):
        return
    target[shift:] = [u + v for u, v in zip(target[shift:], source)]


def _divide_by_one_minus(series: List[int], step: int) -> None:
    """In place: series <- series / (1 - q^step), i.e. c[n] += c[n - step]."""
    if step >= len(series):
        return
    for r in range(step):
        series[r::step] = list(accumulate(series[r::step]))


def projected_work(
    parts: SetDescriptor, mults: SetDescriptor, limit: int, path: EnginePath
) -> int:
    """Elementary big-integer additions a build is expected to need."""
    part_list = enumerate_up_to(parts, limit)
    if path is EnginePath.AP_OPTIMIZED:
        dec = decompose(mults)
        per_part = 1 + len(dec.points) + (len(dec.starts) + 1 if dec.starts else 0)
        return (limit + 1) * per_part * len(part_list)
    return sum((limit + 1) * counting_function(mults, limit // a) for a in part_list)


def _check_budget(projected: int, budget: Optional[int], path: EnginePath) -> None:
    ceiling = _ceiling(budget)
    if projected > ceiling:
        logger.info("Refusing %s build: projected %d > ceiling %d", path.value, projected, ceiling)
        raise BudgetExceededError(projected, ceiling, path.value)


def _validate_limit(limit: int) -> None:
    if limit < 1:
        raise ValueError(f"table limit must be >= 1, got {limit}")


def count_generic(
    parts: SetDescriptor,
    mults: SetDescriptor,
    limit: int,
    budget: Optional[int] = None,
) -> CountTable:
    """p_{A,M}(0..limit) by direct multiplication with each truncated F_a."""
    _validate_limit(limit)
    _check_budget(projected_work(parts, mults, limit, EnginePath.GENERIC), budget, EnginePath.GENERIC)

    start = time.time()
    coeffs = [1] + [0] * limit
    for a in enumerate_up_to(parts, limit):
        current = coeffs[:]
        for m in enumerate_up_to(mults, limit // a):
            _shift_add(coeffs, current, m * a)
    logger.debug(
        "count_generic %s x %s up to %d in %.1f ms",
        parts.label(), mults.label(), limit, (time.time() - start) * 1000,
    )
    return CountTable(tuple(coeffs), parts, mults, limit, EnginePath.GENERIC)


def _apply_progression_factor(
    coeffs: List[int], a: int, dec: Decomposition
) -> List[int]:
    """coeffs * (1 + sum_p q^(p*a) + (sum_c q^(c*a)) / (1 - q^(L*a)))."""
    limit = len(coeffs) - 1
    result = coeffs[:]
    for point in dec.points:
        _shift_add(result, coeffs, point * a)

    if dec.starts and dec.starts[0] * a <= limit:
        numerator = [0] * (limit + 1)
        for c in dec.starts:
            _shift_add(numerator, coeffs, c * a)
        _divide_by_one_minus(numerator, dec.modulus * a)
        result = [u + v for u, v in zip(result, numerator)]
    return result


def count_ap_optimized(
    parts: SetDescriptor,
    mults: SetDescriptor,
    limit: int,
    budget: Optional[int] = None,
) -> CountTable:
    """Same values as count_generic, O(N) per (part, progression group).

    Raises UnsupportedDecompositionError when M is not a finite union of
    arithmetic progressions and points.
    """
    _validate_limit(limit)
    dec = decompose(mults)
    _check_budget(
        projected_work(parts, mults, limit, EnginePath.AP_OPTIMIZED),
        budget,
        EnginePath.AP_OPTIMIZED,
    )

    start = time.time()
    coeffs = [1] + [0] * limit
    for a in enumerate_up_to(parts, limit):
        coeffs = _apply_progression_factor(coeffs, a, dec)
    logger.debug(
        "count_ap_optimized %s x %s up to %d (modulus %d, %d starts, %d points) in %.1f ms",
        parts.label(), mults.label(), limit, dec.modulus, len(dec.starts), len(dec.points),
        (time.time() - start) * 1000,
    )
    return CountTable(tuple(coeffs), parts, mults, limit, EnginePath.AP_OPTIMIZED)


def count_table(
    parts: SetDescriptor,
    mults: SetDescriptor,
    limit: int,
    budget: Optional[int] = None,
) -> CountTable:
    """AP path when M decomposes, generic path otherwise."""
    try:
        return count_ap_optimized(parts, mults, limit, budget=budget)
    except UnsupportedDecompositionError as exc:
        logger.debug("AP path unavailable (%s); falling back to generic", exc)
        return count_generic(parts, mults, limit, budget=budget)
