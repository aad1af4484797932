"""JSON report for ``solve``; the schema is part of the command-line contract."""

from __future__ import annotations

from .bits import members
from .solution import SolveOutcome

_COVER = {
    "type": ["object", "null"],
    "required": ["kind", "size", "members"],
    "properties": {
        "kind": {"enum": ["vertex-cover", "twin-cover"]},
        "size": {"type": "integer", "minimum": 0},
        "members": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    },
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["status", "r", "k_star", "units", "k_bound", "decision", "algorithm",
                 "cover", "states", "seconds", "components"],
    "properties": {
        "status": {"enum": ["feasible", "infeasible", "exceeds-bound"]},
        "r": {"type": "integer", "minimum": 1},
        "k_star": {"type": ["integer", "null"], "minimum": 0},
        "units": {"type": "array",
                  "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}},
        "k_bound": {"type": ["integer", "null"], "minimum": 0},
        "decision": {"enum": ["YES", "NO", None]},
        "algorithm": {"type": "string"},
        "cover": _COVER,
        "states": {"type": "integer", "minimum": 0},
        "seconds": {"type": "number", "minimum": 0},
        "components": {"type": "array", "items": {"type": "object"}},
    },
    "additionalProperties": False,
}

ERROR_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["status", "error"],
    "properties": {
        "status": {"const": "error"},
        "error": {
            "type": "object",
            "required": ["kind", "message"],
            "properties": {
                "kind": {"enum": ["usage", "parse", "budget", "time"]},
                "message": {"type": "string"},
            },
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
}


def build_report(out: SolveOutcome, r: int) -> dict:
    cover = None
    if out.cover is not None:
        cover = {"kind": out.cover.kind, "size": out.cover.size,
                 "members": members(out.cover.members)}
    decision = None
    if out.k_bound is not None:
        decision = "YES" if out.decision else "NO"
    return {
        "status": out.status,
        "r": r,
        "k_star": out.min_units,
        "units": out.solution.sorted_units() if out.solution else [],
        "k_bound": out.k_bound,
        "decision": decision,
        "algorithm": out.algorithm,
        "cover": cover,
        "states": int(out.stats.get("states", 0)),
        "seconds": float(out.stats.get("seconds", 0.0)),
        "components": out.stats.get("components", []),
    }


def error_report(kind: str, message: str) -> dict:
    return {"status": "error", "error": {"kind": kind, "message": message}}
