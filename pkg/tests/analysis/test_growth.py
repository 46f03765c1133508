import math

import pytest

from packages.analysis import (
    find_superpoly_witnesses,
    growth_exponents,
    log_ratio,
    superpoly_witnesses,
)
from packages.engine import count_table
from packages.sets import FiniteSet, Geometric, Naturals, NotDivisible
from tests.corpus import CORPUS, CORPUS_IDS


def test_constant_table_has_zero_exponents() -> None:
    report = growth_exponents(count_table(FiniteSet(elements=(1,)), Naturals(), 50))
    assert all(r == 0.0 for _, r in report.exponents)
    assert report.sup == 0.0
    assert report.zero_count_indices == ()


def test_exponent_vanishes_at_powers() -> None:
    table = count_table(Geometric(base=2), NotDivisible(modulus=2), 4096)
    report = growth_exponents(table)
    for r in range(1, 13):
        assert report.exponent_at(2**r) == 0.0
    assert report.inf == 0.0


def test_quadratic_growth_exponent() -> None:
    table = count_table(FiniteSet(elements=(1, 2, 3)), Naturals(), 1000)
    assert table[1000] == 83834
    report = growth_exponents(table)
    assert report.exponent_at(1000) == pytest.approx(math.log(83834) / math.log(1000), rel=1e-12)


def test_zero_counts_are_listed_not_logged() -> None:
    report = growth_exponents(count_table(FiniteSet(elements=(2,)), Naturals(), 10))
    assert report.zero_count_indices == (1, 3, 5, 7, 9)
    assert [n for n, _ in report.exponents] == [2, 4, 6, 8, 10]


def test_running_extrema_are_monotone() -> None:
    report = growth_exponents(count_table(Naturals(), Naturals(), 200))
    assert list(report.running_sup) == sorted(report.running_sup)
    assert list(report.running_inf) == sorted(report.running_inf, reverse=True)


def test_growth_needs_two_entries() -> None:
    with pytest.raises(ValueError):
        growth_exponents(count_table(Naturals(), Naturals(), 1))


def test_log_ratio_handles_huge_values() -> None:
    assert log_ratio(10**400, 10) == pytest.approx(400.0)
    assert log_ratio(1, 7) == 0.0


def test_superpoly_witnesses() -> None:
    assert superpoly_witnesses(count_table(FiniteSet(elements=(1,)), Naturals(), 100), 1) == []
    found = superpoly_witnesses(count_table(Naturals(), Naturals(), 100), 1)
    assert 13 in found
    assert found[0] == 4
    with pytest.raises(ValueError):
        superpoly_witnesses(count_table(Naturals(), Naturals(), 10), 0)


def test_escalation_stops_at_first_hit() -> None:
    calls = []

    def builder(parts, mults, limit):
        calls.append(limit)
        return count_table(parts, mults, limit)

    table, found = find_superpoly_witnesses(
        Naturals(), Naturals(), 1, limits=(3, 20, 40), builder=builder
    )
    assert calls == [3, 20]
    assert table.limit == 20
    assert found[0] == 4


@pytest.mark.slow
def test_binary_powers_pair_is_superpolynomial() -> None:
    table, found = find_superpoly_witnesses(
        Geometric(base=2), NotDivisible(modulus=2), 1, limits=(10**5, 10**6)
    )
    assert found
    assert all(table[n] > n for n in found)
    report = growth_exponents(table)
    assert report.sup > 1
    power = 1
    while power <= table.limit:
        if power >= 2:
            assert report.exponent_at(power) == 0.0
        power *= 2


@pytest.mark.parametrize("name, parts, mults", CORPUS, ids=CORPUS_IDS)
def test_witnesses_shrink_as_k_grows(name, parts, mults) -> None:
    table = count_table(parts, mults, 300)
    previous = superpoly_witnesses(table, 1)
    for k in (2, 3, 4):
        found = superpoly_witnesses(table, k)
        assert set(found) <= set(previous)
        assert found == sorted(found)
        previous = found
