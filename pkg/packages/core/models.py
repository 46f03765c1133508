from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

from packages.sets.descriptors import SetDescriptor


class EnginePath(str, Enum):
    GENERIC = "generic"
    AP_OPTIMIZED = "ap_optimized"
    ORACLE = "oracle"


@dataclass(frozen=True)
class CountTable:
    """Exact values p_{A,M}(0..limit) with their provenance."""

    values: Tuple[int, ...]
    parts: SetDescriptor
    mults: SetDescriptor
    limit: int
    engine_path: EnginePath

    def __post_init__(self) -> None:
        if len(self.values) != self.limit + 1:
            raise ValueError(f"expected {self.limit + 1} values, got {len(self.values)}")

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def truncated(self, limit: int) -> CountTable:
        """The same table restricted to 0..limit."""
        if limit > self.limit:
            raise ValueError(f"cannot extend a table of limit {self.limit} to {limit}")
        return CountTable(
            values=self.values[: limit + 1],
            parts=self.parts,
            mults=self.mults,
            limit=limit,
            engine_path=self.engine_path,
        )


@dataclass(frozen=True)
class PartitionWitness:
    """One partition: part a -> multiplicity m_a (only nonzero entries)."""

    terms: Dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(a * m for a, m in self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{m}*{a}" for a, m in sorted(self.terms.items(), reverse=True))


@dataclass(frozen=True)
class WitnessList:
    witnesses: Tuple[PartitionWitness, ...]
    truncated: bool

    def __len__(self) -> int:
        return len(self.witnesses)

    def __getitem__(self, i: int) -> PartitionWitness:
        return self.witnesses[i]


@dataclass(frozen=True)
class GrowthReport:
    """r(n) = log p(n) / log n with running extrema."""

    exponents: Tuple[Tuple[int, float], ...]
    running_sup: Tuple[float, ...]
    running_inf: Tuple[float, ...]
    zero_count_indices: Tuple[int, ...]

    def exponent_at(self, n: int) -> Optional[float]:
        for m, r in self.exponents:
            if m == n:
                return r
        return None

    @property
    def sup(self) -> float:
        return self.running_sup[-1] if self.running_sup else 0.0

    @property
    def inf(self) -> float:
        return self.running_inf[-1] if self.running_inf else 0.0


@dataclass(frozen=True)
class BoundsReport:
    x: int
    A_of_x: int
    M_of_x: int
    upper_lhs: int
    upper_rhs: int
    lower_range: int
    lower_lhs: int
    argmax_n: int
    argmax_value: int
    max_up_to_x: int
    averaging_holds: bool
    floor_holds: bool

    @property
    def upper_holds(self) -> bool:
        return self.max_up_to_x <= self.upper_lhs <= self.upper_rhs

    @property
    def lower_holds(self) -> bool:
        return self.lower_lhs >= self.upper_rhs

    @property
    def all_hold(self) -> bool:
        return self.upper_holds and self.lower_holds and self.averaging_holds


@dataclass(frozen=True)
class WitnessRound:
    x: int
    n: int
    p: int


@dataclass(frozen=True)
class WitnessSearch:
    k: int
    rounds: Tuple[WitnessRound, ...]
    truncated: bool
    message: str


@dataclass(frozen=True)
class BECertificate:
    """Truncated Bateman-Erdos check: gcd(A minus {a}) for each a <= bound."""

    holds: bool
    gcds: Dict[int, int]
    bound: int
    definitive: bool


@dataclass(frozen=True)
class AMVerification:
    base: int
    limit: int
    powers: Tuple[int, ...]
    nonpositive: Tuple[int, ...]
    nonunique_powers: Tuple[int, ...]

    @property
    def passed(self) -> bool:
        return not self.nonpositive and not self.nonunique_powers


@dataclass(frozen=True)
class StaircaseSequence:
    terms: Tuple[int, ...]

    @property
    def last(self) -> int:
        return self.terms[-1]

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class BreakpointRow:
    """Exponents of the staircase function around one breakpoint n_k."""

    k: int
    n_k: int
    exponent_at_break: Optional[float]
    below_next: int
    exponent_below_next: Optional[float]
    below_next_bound: float
