"""Schur's asymptotic p_A(n) ~ n^(k-1) / ((k-1)! a_1 ... a_k) for finite A."""

from __future__ import annotations

import math
import sys
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import mpmath

from packages.core.errors import SchurHypothesisError
from packages.core.models import CountTable
from packages.sets import Naturals, enumerate_up_to, is_finite


def _hypotheses(table: CountTable, parts: Sequence[int]) -> List[int]:
    elements = sorted(set(parts))
    if len(elements) < 2:
        raise SchurHypothesisError(f"Schur's asymptotic needs k >= 2 parts, got {elements}")
    if elements[0] < 1:
        raise SchurHypothesisError(f"parts must be positive, got {elements}")
    if math.gcd(*elements) != 1:
        raise SchurHypothesisError(f"parts {elements} are not relatively prime")
    if not is_finite(table.parts) or enumerate_up_to(table.parts, sys.maxsize) != elements:
        raise SchurHypothesisError(
            f"table parts {table.parts.label()} differ from {elements}"
        )
    if not isinstance(table.mults, Naturals):
        raise SchurHypothesisError(
            f"table multiplicities {table.mults.label()} are restricted; need M = N"
        )
    return elements


def schur_main_term(parts: Sequence[int], n: int) -> Fraction:
    """n^(k-1) / ((k-1)! a_1 ... a_k) as an exact rational."""
    k = len(parts)
    return Fraction(n ** (k - 1), math.factorial(k - 1) * math.prod(parts))


def schur_ratio_exact(table: CountTable, parts: Sequence[int]) -> List[Tuple[int, Fraction]]:
    """p_A(n) divided by the main term, exactly, for 1 <= n <= N."""
    elements = _hypotheses(table, parts)
    k = len(elements)
    scale = math.factorial(k - 1) * math.prod(elements)
    return [
        (n, Fraction(table[n] * scale, n ** (k - 1)))
        for n in range(1, table.limit + 1)
    ]


def schur_ratio(
    table: CountTable, parts: Sequence[int], precision: Optional[int] = None
) -> List[Tuple[int, mpmath.mpf]]:
    """The exact ratios evaluated as mpmath decimals."""
    if precision is None:
        from apps.cli.settings import settings

        precision = settings.decimal_precision
    exact = schur_ratio_exact(table, parts)
    with mpmath.workdps(precision):
        return [
            (n, mpmath.mpf(r.numerator) / r.denominator)
            for n, r in exact
        ]
