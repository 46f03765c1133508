from fractions import Fraction

import pytest

from packages.analysis import schur_main_term, schur_ratio, schur_ratio_exact
from packages.core.errors import SchurHypothesisError
from packages.engine import count_table
from packages.sets import FiniteSet, Naturals, NotDivisible


def test_two_parts_closed_form() -> None:
    table = count_table(FiniteSet(elements=(1, 2)), Naturals(), 10**4)
    for n, ratio in schur_ratio_exact(table, [1, 2]):
        assert table[n] == n // 2 + 1
        if n >= 2:
            assert abs(ratio - 1) <= Fraction(3, n)
    assert dict(schur_ratio_exact(table, [1, 2]))[1000] == Fraction(1002, 1000)


def test_three_parts_small_n_is_far_from_one() -> None:
    table = count_table(FiniteSet(elements=(1, 2, 3)), Naturals(), 6)
    assert dict(schur_ratio_exact(table, [1, 2, 3]))[6] == Fraction(7 * 12, 36)


def test_three_parts_ratio_settles() -> None:
    table = count_table(FiniteSet(elements=(1, 2, 3)), Naturals(), 5000)
    for n, ratio in schur_ratio(table, [1, 2, 3]):
        if n >= 1200:
            assert 0.98 <= ratio <= 1.02


def test_main_term() -> None:
    assert schur_main_term([1, 2, 3], 6) == Fraction(3)
    assert schur_main_term([2, 3], 12) == Fraction(2)


def test_decimal_ratios_follow_exact_values() -> None:
    table = count_table(FiniteSet(elements=(2, 3)), Naturals(), 50)
    exact = schur_ratio_exact(table, [2, 3])
    approx = schur_ratio(table, [2, 3], precision=40)
    for (n, r), (m, value) in zip(exact, approx):
        assert n == m
        assert float(value) == pytest.approx(r.numerator / r.denominator)


@pytest.mark.parametrize(
    "parts, elements, mults",
    [
        (FiniteSet(elements=(2, 4)), [2, 4], Naturals()),
        (FiniteSet(elements=(3,)), [3], Naturals()),
        (FiniteSet(elements=(1, 2)), [1, 2, 3], Naturals()),
        (FiniteSet(elements=(1, 2)), [1, 2], NotDivisible(modulus=2)),
    ],
)
def test_hypotheses_are_enforced(parts, elements, mults) -> None:
    table = count_table(parts, mults, 20)
    with pytest.raises(SchurHypothesisError):
        schur_ratio_exact(table, elements)
