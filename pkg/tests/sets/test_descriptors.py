import math

import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError

from packages.core.errors import EmptyTruncationError, UnsupportedDecompositionError
from packages.sets import (
    ArithmeticProgression,
    Factorials,
    FiniteSet,
    Geometric,
    Naturals,
    NotDivisible,
    SelfPowers,
    UnionSet,
    contains,
    counting_function,
    decompose,
    enumerate_up_to,
    gcd_of,
    gcd_without,
    is_finite,
)


@pytest.mark.parametrize(
    "s, x, expected",
    [
        (Geometric(base=2), 10, [1, 2, 4, 8]),
        (NotDivisible(modulus=3), 7, [1, 2, 4, 5, 7]),
        (Factorials(), 30, [1, 2, 6, 24]),
        (SelfPowers(), 300, [1, 4, 27, 256]),
        (ArithmeticProgression(first=3, step=4), 20, [3, 7, 11, 15, 19]),
        (FiniteSet(elements=(5, 1, 3, 3)), 4, [1, 3]),
        (UnionSet(left=FiniteSet(elements=(5,)), right=Geometric(base=3)), 10, [1, 3, 5, 9]),
        (Naturals(), 0, []),
    ],
)
def test_enumerate_up_to(s, x, expected) -> None:
    assert enumerate_up_to(s, x) == expected


@pytest.mark.parametrize(
    "s, x, expected",
    [
        (Geometric(base=2), 10, 4),
        (Naturals(), 100, 100),
        (NotDivisible(modulus=2), 9, 5),
        (ArithmeticProgression(first=3, step=4), 2, 0),
        (Factorials(), 0, 0),
    ],
)
def test_counting_function(s, x, expected) -> None:
    assert counting_function(s, x) == expected


def test_contains() -> None:
    assert contains(SelfPowers(), 27)
    assert not contains(SelfPowers(), 28)
    assert contains(UnionSet(left=FiniteSet(elements=(5,)), right=Geometric(base=3)), 5)
    assert contains(Factorials(), 720)
    assert not contains(Factorials(), 12)
    assert not contains(Naturals(), 0)
    assert not contains(Geometric(base=2), 12)


def test_is_finite() -> None:
    assert is_finite(FiniteSet(elements=(2, 3)))
    assert is_finite(UnionSet(left=FiniteSet(elements=(2,)), right=FiniteSet(elements=(7,))))
    assert not is_finite(UnionSet(left=FiniteSet(elements=(2,)), right=Factorials()))
    assert not is_finite(Naturals())


def test_gcd_without_examples() -> None:
    assert gcd_without(FiniteSet(elements=(2, 3)), 2, 10) == 3
    assert gcd_without(FiniteSet(elements=(1, 2, 3)), 1, 10) == 1
    assert gcd_without(Geometric(base=2), 1, 100) == 2


def test_gcd_of_empty_truncation() -> None:
    assert gcd_of(ArithmeticProgression(first=4, step=6), 30) == 2
    with pytest.raises(EmptyTruncationError):
        gcd_of(FiniteSet(elements=(50,)), 10)
    with pytest.raises(EmptyTruncationError):
        gcd_without(FiniteSet(elements=(2,)), 2, 10)


@pytest.mark.parametrize(
    "payload",
    [
        {"kind": "geometric", "base": 1},
        {"kind": "notdiv", "modulus": 1},
        {"kind": "finite", "elements": []},
        {"kind": "finite", "elements": [0, 2]},
        {"kind": "ap", "first": 1, "step": 0},
        {"kind": "naturals", "extra": 1},
    ],
)
def test_invalid_descriptors_rejected(payload) -> None:
    from packages.sets import descriptor_from_json

    with pytest.raises(ValidationError):
        descriptor_from_json(payload)


def test_decompose_notdiv() -> None:
    dec = decompose(NotDivisible(modulus=3))
    assert dec.modulus == 3
    assert dec.starts == (1, 2)
    assert dec.points == ()


def test_decompose_union_keeps_uncovered_points() -> None:
    s = UnionSet(left=FiniteSet(elements=(2, 7)), right=ArithmeticProgression(first=1, step=2))
    dec = decompose(s)
    assert dec.modulus == 2
    assert dec.starts == (1,)
    assert dec.points == (2,)


def test_decompose_rejects_sparse_sets() -> None:
    with pytest.raises(UnsupportedDecompositionError):
        decompose(Geometric(base=2))
    with pytest.raises(UnsupportedDecompositionError):
        decompose(UnionSet(left=Naturals(), right=Factorials()))


DECOMPOSABLE = st.one_of(
    st.builds(Naturals),
    st.builds(ArithmeticProgression, first=st.integers(1, 12), step=st.integers(1, 12)),
    st.builds(NotDivisible, modulus=st.integers(2, 9)),
    st.builds(
        FiniteSet,
        elements=st.lists(st.integers(1, 60), min_size=1, max_size=6).map(tuple),
    ),
)


@given(left=DECOMPOSABLE, right=DECOMPOSABLE)
def test_decomposition_matches_membership(left, right) -> None:
    s = UnionSet(left=left, right=right)
    dec = decompose(s)
    for n in range(1, 150):
        assert dec.contains(n) == contains(s, n)


DESCRIPTORS = st.one_of(
    DECOMPOSABLE,
    st.builds(Geometric, base=st.integers(2, 7)),
    st.builds(Factorials),
    st.builds(SelfPowers),
)


@given(s=DESCRIPTORS, x=st.integers(0, 2000))
def test_enumeration_is_strictly_increasing_and_bounded(s, x) -> None:
    elements = enumerate_up_to(s, x)
    assert all(a < b for a, b in zip(elements, elements[1:]))
    assert all(1 <= e <= x for e in elements)
    assert counting_function(s, x) == len(elements)
    assert all(contains(s, e) for e in elements)


@given(s=DESCRIPTORS, x=st.integers(1, 300))
def test_membership_agrees_with_enumeration(s, x) -> None:
    elements = set(enumerate_up_to(s, x))
    assert {n for n in range(1, x + 1) if contains(s, n)} == elements


@given(base=st.integers(2, 12), x=st.integers(1, 10**9))
def test_geometric_counting_is_logarithmic(base: int, x: int) -> None:
    count = counting_function(Geometric(base=base), x)
    assert base ** (count - 1) <= x < base**count
    assert count > math.log(x) / math.log(base)
