"""Text and JSON emission shared by the CLI, plus the JSON schemas it follows."""

from __future__ import annotations

from .characters import Decomposition

DECOMPOSITION_SCHEMA = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["lambda", "mult"],
        "additionalProperties": False,
        "properties": {
            "lambda": {
                "type": "array",
                "items": {"type": "array", "items": {"type": "integer", "minimum": 1}},
            },
            "mult": {"type": "integer", "minimum": 1},
        },
    },
}

_INT_LIST = {"type": "array", "items": {"type": "integer"}}

BETTI_ENTRY_SCHEMA = {
    "type": "object",
    "required": ["p", "q", "d", "b", "entries"],
    "additionalProperties": False,
    "properties": {
        "p": {"type": "integer", "minimum": 0},
        "q": {"type": "integer", "minimum": 0},
        "d": _INT_LIST,
        "b": _INT_LIST,
        "entries": DECOMPOSITION_SCHEMA,
    },
}

BETTI_TABLE_SCHEMA = {
    "type": "object",
    "required": ["pmax", "qmax", "d", "b", "entries"],
    "additionalProperties": False,
    "properties": {
        "pmax": {"type": "integer", "minimum": 0},
        "qmax": {"type": "integer", "minimum": 0},
        "d": _INT_LIST,
        "b": _INT_LIST,
        "entries": {"type": "array", "items": BETTI_ENTRY_SCHEMA},
    },
}

HOMOLOGY_SCHEMA = {
    "type": "object",
    "required": ["N", "d", "empty", "degrees"],
    "additionalProperties": False,
    "properties": {
        "N": _INT_LIST,
        "d": _INT_LIST,
        "empty": {"type": "boolean"},
        "degrees": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["k", "dim", "entries"],
                "additionalProperties": False,
                "properties": {
                    "k": {"type": "integer", "minimum": -1},
                    "dim": {"type": "integer", "minimum": 0},
                    "entries": DECOMPOSITION_SCHEMA,
                },
            },
        },
    },
}


def homology_json(N, d, degrees: dict, empty: bool) -> dict:
    return {
        "N": list(N),
        "d": list(d),
        "empty": empty,
        "degrees": [
            {"k": k, "dim": dec.dimension(), "entries": dec.to_json()} for k, dec in sorted(degrees.items())
        ],
    }


def homology_text(N, d, degrees: dict, empty: bool) -> str:
    lines = [f"C_N^d with N={','.join(map(str, N))} d={','.join(map(str, d))}"]
    if empty:
        lines.append("empty complex; H~_-1 = trivial")
    for k, dec in sorted(degrees.items()):
        lines.append(f"H~_{k}: {dec.bracket(empty='0')}")
    return "\n".join(lines) + "\n"


def decomposition_text(dec: Decomposition) -> str:
    return dec.bracket(empty="0") + "\n"
