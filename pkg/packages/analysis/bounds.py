"""Counting inequalities for p_{A,M} and the iterated witness construction.

For x >= 1 with A(x), M(x) the counting functions of A and M:

    max_{n<=x} p(n) <= sum_{n<=x} p(n) <= (M(x)+1)^A(x)
    sum_{n<=x^2 A(x)} p(n) >= (M(x)+1)^A(x)

and n_x, the least maximizer of p on [0, x^2 A(x)], satisfies
(x^2 A(x) + 1) p(n_x) >= sum_{n<=x^2 A(x)} p(n).
"""

from __future__ import annotations

import math
from typing import Callable, List, Literal, Optional, Sequence, Tuple

from logger import logger
from packages.core.errors import BudgetExceededError
from packages.core.models import BoundsReport, CountTable, WitnessRound, WitnessSearch
from packages.engine import count_table
from packages.sets import SetDescriptor, counting_function

TableBuilder = Callable[[SetDescriptor, SetDescriptor, int], CountTable]


def resolve_builder(builder: Optional[TableBuilder], budget: Optional[int]) -> TableBuilder:
    if builder is not None:
        return builder

    def build(parts: SetDescriptor, mults: SetDescriptor, limit: int) -> CountTable:
        return count_table(parts, mults, limit, budget=budget)

    return build


def lower_range(parts: SetDescriptor, x: int) -> int:
    return x * x * counting_function(parts, x)


def required_limit(parts: SetDescriptor, x: int) -> int:
    """Table size needed to evaluate both inequalities at x."""
    return max(x, lower_range(parts, x))


def log_density(parts: SetDescriptor, x: int) -> float:
    """A(x) / log x, the constant c of the hypothesis A(x) >= c log x at x."""
    if x < 2:
        raise ValueError(f"log density needs x >= 2, got {x}")
    return counting_function(parts, x) / math.log(x)


def _argmax(values: Sequence[int], upto: int) -> Tuple[int, int]:
    best_n, best = 0, values[0]
    for n in range(1, upto + 1):
        if values[n] > best:
            best_n, best = n, values[n]
    return best_n, best


def bounds_from_table(table: CountTable, x: int) -> BoundsReport:
    """Evaluate the inequalities at x on an already computed table."""
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    a_x = counting_function(table.parts, x)
    m_x = counting_function(table.mults, x)
    span = x * x * a_x
    if table.limit < max(x, span):
        raise ValueError(f"table limit {table.limit} is below x^2 A(x) = {span}")

    values = table.values
    upper_lhs = sum(values[: x + 1])
    upper_rhs = (m_x + 1) ** a_x
    lower_lhs = sum(values[: span + 1])
    argmax_n, argmax_value = _argmax(values, span)
    return BoundsReport(
        x=x,
        A_of_x=a_x,
        M_of_x=m_x,
        upper_lhs=upper_lhs,
        upper_rhs=upper_rhs,
        lower_range=span,
        lower_lhs=lower_lhs,
        argmax_n=argmax_n,
        argmax_value=argmax_value,
        max_up_to_x=max(values[: x + 1]),
        averaging_holds=argmax_value * (span + 1) >= lower_lhs,
        floor_holds=2 * x**3 * argmax_value > m_x**a_x,
    )


def bounds_report(
    parts: SetDescriptor,
    mults: SetDescriptor,
    x: int,
    budget: Optional[int] = None,
    builder: Optional[TableBuilder] = None,
) -> BoundsReport:
    table = resolve_builder(builder, budget)(parts, mults, required_limit(parts, x))
    return bounds_from_table(table, x)


def bounds_reports(
    parts: SetDescriptor,
    mults: SetDescriptor,
    xs: Sequence[int],
    budget: Optional[int] = None,
    builder: Optional[TableBuilder] = None,
) -> List[BoundsReport]:
    """Reports for every x in ascending order, all read off one table."""
    ordered = sorted(set(xs))
    limit = max(required_limit(parts, x) for x in ordered)
    table = resolve_builder(builder, budget)(parts, mults, limit)
    return [bounds_from_table(table, x) for x in ordered]


def least_base_above(bound: int, exponent: int) -> int:
    """Least x >= 1 with x**exponent > bound (doubling, then bisection)."""
    hi = 1
    while hi**exponent <= bound:
        hi *= 2
    lo = hi // 2
    # invariant: lo**exponent <= bound < hi**exponent (lo may be 0)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid**exponent > bound:
            hi = mid
        else:
            lo = mid
    return hi


class _PrefixMaxima:
    """Least argmax of p on every prefix [0, n] of a table."""

    def __init__(self, table: CountTable) -> None:
        self.table = table
        self.best_n: List[int] = []
        best_n, best = 0, -1
        for n, p in enumerate(table.values):
            if p > best:
                best_n, best = n, p
            self.best_n.append(best_n)

    def at(self, upto: int) -> Tuple[int, int]:
        n = self.best_n[upto]
        return n, self.table[n]


def iterated_witness_search(
    parts: SetDescriptor,
    mults: SetDescriptor,
    k: int,
    rounds: int,
    budget: Optional[int] = None,
    max_limit: Optional[int] = None,
    bound: Literal["exact", "proof"] = "exact",
    builder: Optional[TableBuilder] = None,
) -> WitnessSearch:
    """Finite run of the inductive witness construction.

    Round r+1 starts at the least x whose x^(3k) exceeds the bound carried
    from earlier rounds and scans upward to the first x whose maximizer n_x on
    [0, x^2 A(x)] has n_x >= 2, p(n_x) > n_x^k and p(n_x) above every earlier
    witness value. With ``bound="exact"`` the carried bound is the largest
    witness value found so far; with ``bound="proof"`` it is
    (M(X_i)+1)^A(X_i), X_i = x_i^2 A(x_i), which bounds the same quantity
    from above and grows far faster.

    Tables grow by doubling up to ``max_limit``; when that or the engine
    budget runs out the partial result is returned flagged as truncated.
    """
    if k < 1 or rounds < 1:
        raise ValueError("k and rounds must be >= 1")
    if max_limit is None:
        from apps.cli.settings import settings

        max_limit = settings.search_max_limit
    build = resolve_builder(builder, budget)

    found: List[WitnessRound] = []
    prefix: Optional[_PrefixMaxima] = None
    carried = 0
    x = 2

    def stop(reason: str) -> WitnessSearch:
        if not found:
            message = f"no witness within budget ({reason})"
        else:
            message = f"stopped after {len(found)} of {rounds} rounds ({reason})"
        logger.info("Witness search k=%d: %s", k, message)
        return WitnessSearch(k=k, rounds=tuple(found), truncated=True, message=message)

    for _ in range(rounds):
        x = max(x, least_base_above(carried, 3 * k))
        while True:
            limit = required_limit(parts, x)
            if limit > max_limit:
                return stop(f"x={x} needs a table to {limit} > {max_limit}")
            if prefix is None or prefix.table.limit < limit:
                size = min(max(limit, 2 * prefix.table.limit if prefix else limit), max_limit)
                try:
                    prefix = _PrefixMaxima(build(parts, mults, size))
                except BudgetExceededError as exc:
                    return stop(str(exc))
            n_x, p_x = prefix.at(limit)
            previous = found[-1].p if found else 0
            if n_x >= 2 and p_x > n_x**k and p_x > previous:
                break
            x += 1

        found.append(WitnessRound(x=x, n=n_x, p=p_x))
        logger.info("Witness round %d: x=%d n_x=%d", len(found), x, n_x)
        if bound == "exact":
            carried = p_x
        else:
            span = lower_range(parts, x)
            carried = max(
                carried,
                (counting_function(mults, span) + 1) ** counting_function(parts, span),
            )
        x += 1

    return WitnessSearch(
        k=k,
        rounds=tuple(found),
        truncated=False,
        message=f"{len(found)} witnesses with p(n) > n^{k}",
    )
