"""Decomposition of multiplicity sets into disjoint arithmetic progressions.

The AP engine path needs M as a disjoint union

    M = {p_1, ..., p_s}  U  {c + j*L : j >= 0, c in starts}

with one common modulus L, so that every per-part factor of the generating
function is a sparse polynomial plus a sparse numerator over (1 - q^(L*a)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Tuple

from packages.core.errors import UnsupportedDecompositionError

from .descriptors import (
    ArithmeticProgression,
    FiniteSet,
    Naturals,
    NotDivisible,
    SetDescriptor,
    UnionSet,
)

MAX_MODULUS = 4096


@dataclass(frozen=True)
class Decomposition:
    modulus: int
    starts: Tuple[int, ...]
    points: Tuple[int, ...]

    def contains(self, n: int) -> bool:
        if n in self.points:
            return True
        return any(n >= c and (n - c) % self.modulus == 0 for c in self.starts)


def _collect(s: SetDescriptor) -> Tuple[List[Tuple[int, int]], List[int]]:
    if isinstance(s, Naturals):
        return [(1, 1)], []
    if isinstance(s, ArithmeticProgression):
        return [(s.first, s.step)], []
    if isinstance(s, NotDivisible):
        return [(r, s.modulus) for r in range(1, s.modulus)], []
    if isinstance(s, FiniteSet):
        return [], list(s.elements)
    if isinstance(s, UnionSet):
        left_progs, left_points = _collect(s.left)
        right_progs, right_points = _collect(s.right)
        return left_progs + right_progs, left_points + right_points
    raise UnsupportedDecompositionError(
        f"{s.label()} is not a finite union of arithmetic progressions"
    )


def decompose(s: SetDescriptor) -> Decomposition:
    """Rewrite ``s`` as disjoint progressions over a common modulus plus points.

    Raises UnsupportedDecompositionError for Geometric, Factorials, SelfPowers
    (or unions containing them) and when the common modulus exceeds
    MAX_MODULUS.
    """
    progressions, points = _collect(s)
    if not progressions:
        return Decomposition(modulus=1, starts=(), points=tuple(sorted(set(points))))

    modulus = math.lcm(*(step for _, step in progressions))
    if modulus > MAX_MODULUS:
        raise UnsupportedDecompositionError(
            f"common modulus {modulus} of {s.label()} exceeds {MAX_MODULUS}"
        )

    # residue class -> least element of M in that class covered by a progression
    starts: Dict[int, int] = {}
    for first, step in progressions:
        for j in range(modulus // step):
            c = first + j * step
            r = c % modulus
            if r not in starts or c < starts[r]:
                starts[r] = c

    leftovers = sorted(
        {p for p in points if not (p % modulus in starts and p >= starts[p % modulus])}
    )
    return Decomposition(
        modulus=modulus,
        starts=tuple(sorted(starts.values())),
        points=tuple(leftovers),
    )
