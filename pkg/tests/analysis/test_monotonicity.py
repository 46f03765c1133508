import pytest
from hypothesis import given
from hypothesis import strategies as st

from packages.analysis import be_condition, monotonicity_scan, verify_theorem_pair
from packages.core.errors import EmptyTruncationError
from packages.engine import count_table
from packages.sets import FiniteSet, Geometric, Naturals, gcd_without


def test_be_condition_examples() -> None:
    assert be_condition(FiniteSet(elements=(1, 2, 3)), 10).holds
    cert = be_condition(FiniteSet(elements=(2, 3)), 10)
    assert not cert.holds
    assert cert.gcds == {2: 3, 3: 2}
    assert cert.definitive


def test_be_condition_on_infinite_set_is_provisional() -> None:
    cert = be_condition(Geometric(base=2), 100)
    assert not cert.holds
    assert cert.gcds[1] == 2
    assert not cert.definitive
    assert be_condition(Naturals(), 10).definitive


@given(elements=st.lists(st.integers(1, 500), min_size=2, max_size=12, unique=True), bound=st.integers(1, 600))
def test_be_condition_matches_gcd_without(elements, bound) -> None:
    parts = FiniteSet(elements=tuple(elements))
    below = sorted(e for e in elements if e <= bound)
    if len(below) == 1:
        with pytest.raises(EmptyTruncationError):
            be_condition(parts, bound)
        return
    cert = be_condition(parts, bound)
    assert cert.gcds == {a: gcd_without(parts, a, bound) for a in below}


def test_be_condition_on_long_prefix() -> None:
    cert = be_condition(Naturals(), 50000)
    assert len(cert.gcds) == 50000
    assert cert.holds and cert.definitive


def test_constant_table_monotonicity() -> None:
    table = count_table(FiniteSet(elements=(1,)), Naturals(), 10)
    assert monotonicity_scan(table, 3, strict=True) == 3
    assert monotonicity_scan(table, 0, strict=False) is None


def test_ordinary_partitions_increase_strictly() -> None:
    table = count_table(Naturals(), Naturals(), 200)
    assert monotonicity_scan(table, 1, strict=True) is None
    assert monotonicity_scan(table, 0, strict=True) == 0


def test_gcd_one_set_is_eventually_increasing() -> None:
    parts = FiniteSet(elements=(1, 2, 3))
    assert be_condition(parts, 10).holds
    assert monotonicity_scan(count_table(parts, Naturals(), 500), 0, strict=False) is None


def test_gcd_two_parts_are_not_monotone() -> None:
    table = count_table(FiniteSet(elements=(2, 3)), Naturals(), 20)
    assert monotonicity_scan(table, 0, strict=False) == 0


def test_scan_start_range() -> None:
    table = count_table(Naturals(), Naturals(), 10)
    with pytest.raises(ValueError):
        monotonicity_scan(table, 10, strict=False)


@pytest.mark.parametrize("base", [2, 3, 5])
def test_powers_and_non_multiples(base: int) -> None:
    result, table = verify_theorem_pair(base, 10**4)
    assert result.passed
    assert result.nonpositive == ()
    assert all(table[q] == 1 for q in result.powers)
    assert result.powers[0] == 1
    assert result.powers[-1] <= 10**4 < result.powers[-1] * base
    assert all(table[n] >= 1 for n in range(1, 10**4 + 1))


def test_verify_theorem_pair_rejects_small_base() -> None:
    with pytest.raises(ValueError):
        verify_theorem_pair(1, 100)
