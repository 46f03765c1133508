"""Descriptor parsing from JSON and from command-line shorthand."""

from __future__ import annotations

import json
import re
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict

import yaml
from pydantic import ValidationError

from logger import logger

from .descriptors import SetDescriptor, descriptor_adapter

SHORTHANDS_PATH = Path(__file__).resolve().parent.parent / "core" / "shorthands.yaml"

_PARAMETRIC = [
    (re.compile(r"^pow(\d+)$"), lambda m: {"kind": "geometric", "base": int(m[1])}),
    (re.compile(r"^notdiv(\d+)$"), lambda m: {"kind": "notdiv", "modulus": int(m[1])}),
    (
        re.compile(r"^ap(\d+):(\d+)$"),
        lambda m: {"kind": "ap", "first": int(m[1]), "step": int(m[2])},
    ),
    (
        re.compile(r"^-?\d+(\s*,\s*-?\d+)*$"),
        lambda m: {"kind": "finite", "elements": [int(t) for t in m[0].split(",")]},
    ),
]


@lru_cache(maxsize=None)
def load_aliases(path: str = str(SHORTHANDS_PATH)) -> Dict[str, Dict[str, Any]]:
    """Load alias -> descriptor JSON from the YAML registry."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except FileNotFoundError:
        logger.warning("Shorthand file %s not found, using built-in aliases", path)
        data = {
            "aliases": {
                "naturals": {"kind": "naturals"},
                "odds": {"kind": "notdiv", "modulus": 2},
                "factorials": {"kind": "factorials"},
                "selfpowers": {"kind": "selfpowers"},
            }
        }
    return dict(data.get("aliases", {}))


def descriptor_from_json(payload: Any) -> SetDescriptor:
    """Validate a decoded JSON value (dict) or a JSON string."""
    if isinstance(payload, str):
        return descriptor_adapter.validate_json(payload)
    return descriptor_adapter.validate_python(payload)


def descriptor_to_json(s: SetDescriptor) -> Dict[str, Any]:
    return s.model_dump(mode="json")


def canonical_key(s: SetDescriptor) -> str:
    """Stable string form, used as a cache key and for provenance."""
    return json.dumps(descriptor_to_json(s), sort_keys=True, separators=(",", ":"))


def _shorthand_payload(text: str) -> Any:
    aliases = load_aliases()
    if text in aliases:
        return aliases[text]
    if "|" in text:
        left, right = text.split("|", 1)
        return {
            "kind": "union",
            "left": _shorthand_payload(left.strip()),
            "right": _shorthand_payload(right.strip()),
        }
    for pattern, build in _PARAMETRIC:
        match = pattern.match(text)
        if match:
            return build(match)
    raise ValueError(f"unrecognised set shorthand: {text!r}")


def parse_descriptor(text: str) -> SetDescriptor:
    """Parse JSON ('{"kind": ...}') or shorthand ('pow2', 'odds', '1,2,3')."""
    text = text.strip()
    try:
        if text.startswith("{"):
            return descriptor_from_json(text)
        return descriptor_from_json(_shorthand_payload(text))
    except ValidationError as exc:
        raise ValueError(f"invalid set descriptor {text!r}: {exc.errors()[0]['msg']}") from exc
