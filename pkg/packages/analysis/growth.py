"""Growth exponents log p(n) / log n and superpolynomial witnesses."""

from __future__ import annotations

from typing import List, Optional

import mpmath

from packages.core.models import CountTable, GrowthReport


def _precision(precision: Optional[int]) -> int:
    if precision is not None:
        return precision
    from apps.cli.settings import settings

    return settings.decimal_precision


def log_ratio(value: int, n: int, precision: Optional[int] = None) -> float:
    """log(value) / log(n) for value >= 1, n >= 2, natural logarithms."""
    if value == 1:
        return 0.0
    with mpmath.workdps(_precision(precision)):
        return float(mpmath.log(value) / mpmath.log(n))


def growth_exponents(table: CountTable, precision: Optional[int] = None) -> GrowthReport:
    """r(n) = log p(n) / log n for 2 <= n <= N with p(n) >= 1.

    Indices with p(n) = 0 are left out of the sequence and listed in
    ``zero_count_indices`` instead.
    """
    if table.limit < 2:
        raise ValueError(f"growth exponents need N >= 2, got {table.limit}")

    exponents = []
    running_sup: List[float] = []
    running_inf: List[float] = []
    zeros = [1] if table[1] == 0 else []
    with mpmath.workdps(_precision(precision)):
        for n in range(2, table.limit + 1):
            p = table[n]
            if p == 0:
                zeros.append(n)
                continue
            r = 0.0 if p == 1 else float(mpmath.log(p) / mpmath.log(n))
            exponents.append((n, r))
            running_sup.append(max(running_sup[-1], r) if running_sup else r)
            running_inf.append(min(running_inf[-1], r) if running_inf else r)

    return GrowthReport(
        exponents=tuple(exponents),
        running_sup=tuple(running_sup),
        running_inf=tuple(running_inf),
        zero_count_indices=tuple(zeros),
    )


def superpoly_witnesses(table: CountTable, k: int) -> List[int]:
    """All n in 2..N with p(n) > n^k, ascending."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return [n for n in range(2, table.limit + 1) if table[n] > n**k]
