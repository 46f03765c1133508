from pathlib import Path

import pytest

from packages.sets import (
    ArithmeticProgression,
    Factorials,
    FiniteSet,
    Geometric,
    Naturals,
    NotDivisible,
    SelfPowers,
    UnionSet,
    canonical_key,
    descriptor_from_json,
    descriptor_to_json,
    parse_descriptor,
)
from packages.sets.parsing import load_aliases


@pytest.mark.parametrize(
    "text, expected",
    [
        ("pow2", Geometric(base=2)),
        ("pow7", Geometric(base=7)),
        ("odds", NotDivisible(modulus=2)),
        ("notdiv5", NotDivisible(modulus=5)),
        ("factorials", Factorials()),
        ("selfpowers", SelfPowers()),
        ("naturals", Naturals()),
        ("evens", ArithmeticProgression(first=2, step=2)),
        ("ap1:3", ArithmeticProgression(first=1, step=3)),
        ("1,2,3", FiniteSet(elements=(1, 2, 3))),
        ("3, 1", FiniteSet(elements=(1, 3))),
        ("5|pow3", UnionSet(left=FiniteSet(elements=(5,)), right=Geometric(base=3))),
    ],
)
def test_shorthand_matches_json_form(text: str, expected) -> None:
    parsed = parse_descriptor(text)
    assert parsed == expected
    assert parse_descriptor(canonical_key(expected)) == parsed


def test_json_descriptor_parses() -> None:
    assert parse_descriptor('{"kind":"finite","elements":[1]}') == FiniteSet(elements=(1,))
    assert parse_descriptor(' {"kind": "notdiv", "modulus": 2} ') == NotDivisible(modulus=2)


@pytest.mark.parametrize("text", ["pow1", "0,2", "primes", '{"kind":"geometric","base":1}', "{not json"])
def test_bad_descriptor_text_raises_value_error(text: str) -> None:
    with pytest.raises(ValueError):
        parse_descriptor(text)


def test_json_round_trip_is_stable() -> None:
    s = UnionSet(left=Factorials(), right=FiniteSet(elements=(3, 7)))
    payload = descriptor_to_json(s)
    assert payload["kind"] == "union"
    assert descriptor_from_json(payload) == s
    assert canonical_key(descriptor_from_json(payload)) == canonical_key(s)


def test_missing_alias_file_falls_back(tmp_path: Path) -> None:
    aliases = load_aliases(str(tmp_path / "missing.yaml"))
    assert aliases["odds"] == {"kind": "notdiv", "modulus": 2}


def test_alias_file_is_read(tmp_path: Path) -> None:
    path = tmp_path / "aliases.yaml"
    path.write_text("aliases:\n  squarefree_seed: {kind: finite, elements: [1, 2, 3, 5]}\n", encoding="utf-8")
    aliases = load_aliases(str(path))
    assert descriptor_from_json(aliases["squarefree_seed"]) == FiniteSet(elements=(1, 2, 3, 5))
