"""A strictly increasing arithmetic function with unbounded limsup and
liminf 1 of log f(n) / log n.

Given n_1 = 1 and n_{k+1} > 2 n_k^k,

    f(n) = n_k^k + (n - n_k)    for n_k <= n < n_{k+1}.
"""

from __future__ import annotations

import bisect
from typing import List, Literal, Optional, Sequence, Tuple, Union

import mpmath

from packages.core.errors import InvalidSequenceError, OutOfRangeError
from packages.core.models import BreakpointRow, StaircaseSequence

LOG_DIGITS = 30


def validate_terms(terms: Sequence[int]) -> None:
    if not terms:
        raise InvalidSequenceError(1, "sequence is empty")
    if terms[0] != 1:
        raise InvalidSequenceError(1, f"n_1 must be 1, got {terms[0]}")
    for k in range(1, len(terms)):
        n_k, n_next = terms[k - 1], terms[k]
        if n_next <= 2 * n_k**k:
            raise InvalidSequenceError(
                k + 1, f"n_{k + 1} = {n_next} is not > 2 * n_{k}^{k} = {2 * n_k**k}"
            )


def build_sequence(
    K: int, rule: Union[Literal["minimal"], Sequence[int]] = "minimal"
) -> StaircaseSequence:
    """n_1..n_K, either minimal (n_{k+1} = 2 n_k^k + 1) or a checked custom list."""
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    if isinstance(rule, str):
        if rule != "minimal":
            raise ValueError(f"unknown sequence rule {rule!r}")
        terms = [1]
        for k in range(1, K):
            terms.append(2 * terms[-1] ** k + 1)
        return StaircaseSequence(tuple(terms))

    custom = list(rule)
    if len(custom) != K:
        raise InvalidSequenceError(len(custom), f"expected {K} terms, got {len(custom)}")
    validate_terms(custom)
    return StaircaseSequence(tuple(custom))


def f_eval(n: int, seq: StaircaseSequence) -> int:
    """f(n) on the half-open domain [n_1, n_K)."""
    if n < 1 or n >= seq.last:
        raise OutOfRangeError(
            f"f({n}) needs 1 <= n < {seq.last}; extend the sequence first"
        )
    k = bisect.bisect_right(seq.terms, n)
    n_k = seq.terms[k - 1]
    return n_k**k + (n - n_k)


def f_table(seq: StaircaseSequence, start: int = 1, stop: Optional[int] = None) -> List[Tuple[int, int]]:
    """(n, f(n)) for start <= n < stop (default: the whole domain)."""
    stop = seq.last if stop is None else min(stop, seq.last)
    return [(n, f_eval(n, seq)) for n in range(max(start, 1), stop)]


def _ratio(value: int, n: int) -> Optional[float]:
    if n < 2:
        return None
    with mpmath.workdps(LOG_DIGITS):
        return float(mpmath.log(value) / mpmath.log(n))


def breakpoint_profile(seq: StaircaseSequence) -> List[BreakpointRow]:
    """log f / log n at each n_k and just below n_{k+1}.

    At n_k the exponent is k; just below the next breakpoint it stays under
    1 + log 3 / log(n_{k+1} / 2), which is how the liminf comes out as 1.
    """
    rows = []
    with mpmath.workdps(LOG_DIGITS):
        for k in range(1, len(seq.terms)):
            n_k, n_next = seq.terms[k - 1], seq.terms[k]
            below = n_next - 1
            rows.append(
                BreakpointRow(
                    k=k,
                    n_k=n_k,
                    exponent_at_break=_ratio(f_eval(n_k, seq), n_k),
                    below_next=below,
                    exponent_below_next=_ratio(f_eval(below, seq), below),
                    below_next_bound=float(1 + mpmath.log(3) / mpmath.log(mpmath.mpf(n_next) / 2)),
                )
            )
    return rows
