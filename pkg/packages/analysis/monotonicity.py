"""Bateman-Erdos gcd condition and monotonicity scans of count tables."""

from __future__ import annotations

import math
import sys
from itertools import accumulate
from typing import Optional

from packages.core.errors import EmptyTruncationError
from packages.core.models import BECertificate, CountTable
from packages.sets import SetDescriptor, counting_function, enumerate_up_to, is_finite


def be_condition(parts: SetDescriptor, bound: int) -> BECertificate:
    """gcd(A minus {a}) for every a <= bound, on the truncation at ``bound``.

    Truncation can only make these gcds larger, so ``holds=True`` is final.
    ``holds=False`` is final only when A is finite and entirely <= bound;
    otherwise the certificate is marked provisional.
    """
    elements = enumerate_up_to(parts, bound)
    if len(elements) == 1:
        raise EmptyTruncationError(
            f"{parts.label()} has no elements <= {bound} other than {elements[0]}"
        )
    # prefix[i] = gcd(elements[:i]), suffix[i] = gcd(elements[i:]); gcd(0, g) == g
    prefix = list(accumulate(elements, math.gcd, initial=0))
    suffix = list(accumulate(reversed(elements), math.gcd, initial=0))[::-1]
    gcds = {a: math.gcd(prefix[i], suffix[i + 1]) for i, a in enumerate(elements)}
    holds = bool(gcds) and all(g == 1 for g in gcds.values())
    complete = is_finite(parts) and counting_function(parts, sys.maxsize) == len(elements)
    return BECertificate(holds=holds, gcds=gcds, bound=bound, definitive=holds or complete)


def monotonicity_scan(table: CountTable, start: int, strict: bool) -> Optional[int]:
    """Least n in [start, N-1] where p fails to increase, or None.

    Strict mode flags p(n+1) <= p(n); weak mode flags p(n+1) < p(n).
    """
    if not 0 <= start < table.limit:
        raise ValueError(f"start must lie in [0, {table.limit - 1}], got {start}")
    values = table.values
    for n in range(start, table.limit):
        if values[n + 1] < values[n] or (strict and values[n + 1] == values[n]):
            return n
    return None
