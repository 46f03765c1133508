import math

import pytest

from packages.constructions import breakpoint_profile, build_sequence, f_eval, f_table, thm_am_pair
from packages.core.errors import InvalidSequenceError, OutOfRangeError
from packages.sets import Geometric, NotDivisible

MINIMAL_4 = (1, 3, 19, 13719)


@pytest.mark.parametrize("K, expected", [(1, (1,)), (3, (1, 3, 19)), (4, MINIMAL_4)])
def test_minimal_sequence(K: int, expected) -> None:
    assert build_sequence(K).terms == expected


def test_custom_sequence_is_checked() -> None:
    assert build_sequence(3, [1, 4, 40]).terms == (1, 4, 40)
    with pytest.raises(InvalidSequenceError) as excinfo:
        build_sequence(3, [1, 3, 18])
    assert excinfo.value.index == 3
    with pytest.raises(InvalidSequenceError):
        build_sequence(2, [2, 10])
    with pytest.raises(InvalidSequenceError):
        build_sequence(3, [1, 3])
    with pytest.raises(ValueError):
        build_sequence(0)


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 2), (3, 9), (18, 24), (19, 6859)])
def test_f_values(n: int, expected: int) -> None:
    assert f_eval(n, build_sequence(4)) == expected


def test_f_outside_domain() -> None:
    seq = build_sequence(3)
    with pytest.raises(OutOfRangeError):
        f_eval(19, seq)
    with pytest.raises(OutOfRangeError):
        f_eval(0, seq)


def test_minimal_staircase_shape() -> None:
    seq = build_sequence(4)
    rows = f_table(seq)
    assert rows[0] == (1, 1)
    assert rows[-1] == (13718, 20558)
    assert 20558 < 1.5 * 13719
    values = [v for _, v in rows]
    assert all(b > a for a, b in zip(values, values[1:]))
    assert all(v >= n for n, v in rows)


def test_f_table_window() -> None:
    assert f_table(build_sequence(3), 2, 5) == [(2, 2), (3, 9), (4, 10)]


def test_breakpoint_profile() -> None:
    rows = breakpoint_profile(build_sequence(4))
    assert [row.k for row in rows] == [1, 2, 3]
    assert rows[0].exponent_at_break is None
    assert rows[1].exponent_at_break == pytest.approx(2.0)
    assert rows[2].exponent_at_break == pytest.approx(3.0)
    for row in rows:
        assert row.exponent_below_next is not None
        assert row.exponent_below_next <= row.below_next_bound
    assert rows[2].below_next_bound == pytest.approx(1 + math.log(3) / math.log(13719 / 2))


def test_theorem_pair() -> None:
    assert thm_am_pair(2) == (Geometric(base=2), NotDivisible(modulus=2))
    assert thm_am_pair(3) == (Geometric(base=3), NotDivisible(modulus=3))
    with pytest.raises(ValueError):
        thm_am_pair(1)
