"""Symbolic descriptions of part sets A and multiplicity sets M.

Every descriptor stands for a strictly increasing set of positive integers,
possibly infinite. Nothing is materialized: enumeration always takes an
explicit upper bound.
"""

from __future__ import annotations

import bisect
import heapq
from abc import ABC, abstractmethod
from typing import Annotated, Iterator, List, Literal, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, field_validator

PositiveInt = Annotated[int, Field(strict=True, ge=1)]
BaseInt = Annotated[int, Field(strict=True, ge=2)]


class SetBase(BaseModel, ABC):
    """Common behaviour of all descriptor kinds."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    @abstractmethod
    def iter_up_to(self, x: int) -> Iterator[int]:
        """Yield the elements <= x in increasing order."""

    @abstractmethod
    def contains(self, n: int) -> bool:
        pass

    @abstractmethod
    def label(self) -> str:
        """Short human-readable name used in logs and CSV headers."""

    def enumerate_up_to(self, x: int) -> List[int]:
        return list(self.iter_up_to(x))

    def count_up_to(self, x: int) -> int:
        return sum(1 for _ in self.iter_up_to(x))

    def is_finite(self) -> bool:
        return False


class FiniteSet(SetBase):
    kind: Literal["finite"] = "finite"
    elements: Tuple[PositiveInt, ...] = Field(min_length=1)

    @field_validator("elements")
    @classmethod
    def _sorted_unique(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(sorted(set(value)))

    def iter_up_to(self, x: int) -> Iterator[int]:
        for element in self.elements:
            if element > x:
                return
            yield element

    def contains(self, n: int) -> bool:
        i = bisect.bisect_left(self.elements, n)
        return i < len(self.elements) and self.elements[i] == n

    def count_up_to(self, x: int) -> int:
        return bisect.bisect_right(self.elements, x)

    def is_finite(self) -> bool:
        return True

    def label(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements) + "}"


class Naturals(SetBase):
    kind: Literal["naturals"] = "naturals"

    def iter_up_to(self, x: int) -> Iterator[int]:
        yield from range(1, x + 1)

    def contains(self, n: int) -> bool:
        return n >= 1

    def count_up_to(self, x: int) -> int:
        return max(x, 0)

    def label(self) -> str:
        return "N"


class Geometric(SetBase):
    """Powers base**i for i >= 0, so 1 is always an element."""

    kind: Literal["geometric"] = "geometric"
    base: BaseInt

    def iter_up_to(self, x: int) -> Iterator[int]:
        value = 1
        while value <= x:
            yield value
            value *= self.base

    def contains(self, n: int) -> bool:
        if n < 1:
            return False
        while n % self.base == 0:
            n //= self.base
        return n == 1

    def label(self) -> str:
        return f"pow{self.base}"


class Factorials(SetBase):
    """k! for k >= 1."""

    kind: Literal["factorials"] = "factorials"

    def iter_up_to(self, x: int) -> Iterator[int]:
        value, k = 1, 1
        while value <= x:
            yield value
            k += 1
            value *= k

    def contains(self, n: int) -> bool:
        if n < 1:
            return False
        k = 2
        while n > 1 and n % k == 0:
            n //= k
            k += 1
        return n == 1

    def label(self) -> str:
        return "factorials"


class SelfPowers(SetBase):
    """k**k for k >= 1."""

    kind: Literal["selfpowers"] = "selfpowers"

    def iter_up_to(self, x: int) -> Iterator[int]:
        k = 1
        while k**k <= x:
            yield k**k
            k += 1

    def contains(self, n: int) -> bool:
        if n < 1:
            return False
        k = 1
        while k**k < n:
            k += 1
        return k**k == n

    def label(self) -> str:
        return "selfpowers"


class ArithmeticProgression(SetBase):
    kind: Literal["ap"] = "ap"
    first: PositiveInt
    step: PositiveInt

    def iter_up_to(self, x: int) -> Iterator[int]:
        yield from range(self.first, x + 1, self.step)

    def contains(self, n: int) -> bool:
        return n >= self.first and (n - self.first) % self.step == 0

    def count_up_to(self, x: int) -> int:
        if x < self.first:
            return 0
        return (x - self.first) // self.step + 1

    def label(self) -> str:
        return f"ap{self.first}:{self.step}"


class NotDivisible(SetBase):
    """All m >= 1 with modulus not dividing m."""

    kind: Literal["notdiv"] = "notdiv"
    modulus: BaseInt

    def iter_up_to(self, x: int) -> Iterator[int]:
        a = self.modulus
        for start in range(1, x + 1, a):
            yield from range(start, min(start + a - 1, x + 1))

    def contains(self, n: int) -> bool:
        return n >= 1 and n % self.modulus != 0

    def count_up_to(self, x: int) -> int:
        if x < 1:
            return 0
        return x - x // self.modulus

    def label(self) -> str:
        return f"notdiv{self.modulus}"


class UnionSet(SetBase):
    kind: Literal["union"] = "union"
    left: SetDescriptor
    right: SetDescriptor

    def iter_up_to(self, x: int) -> Iterator[int]:
        last = 0
        for value in heapq.merge(self.left.iter_up_to(x), self.right.iter_up_to(x)):
            if value != last:
                yield value
                last = value

    def contains(self, n: int) -> bool:
        return self.left.contains(n) or self.right.contains(n)

    def is_finite(self) -> bool:
        return self.left.is_finite() and self.right.is_finite()

    def label(self) -> str:
        return f"({self.left.label()}|{self.right.label()})"


SetDescriptor = Annotated[
    Union[
        FiniteSet,
        Naturals,
        Geometric,
        Factorials,
        SelfPowers,
        ArithmeticProgression,
        NotDivisible,
        UnionSet,
    ],
    Field(discriminator="kind"),
]

UnionSet.model_rebuild()

descriptor_adapter: TypeAdapter[SetDescriptor] = TypeAdapter(SetDescriptor)
