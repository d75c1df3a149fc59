"""Structural validation for the JSON documents emitted by the CLI."""

from __future__ import annotations

SCHEMA_ID = "mvkit/1"

_INT = ("int", lambda v: isinstance(v, int) and not isinstance(v, bool))
_STR = ("str", lambda v: isinstance(v, str))
_BOOL = ("bool", lambda v: isinstance(v, bool))
_NUM = ("number", lambda v: isinstance(v, (int, float)) and not isinstance(v, bool))
_LIST = ("list", lambda v: isinstance(v, list))
_DICT = ("dict", lambda v: isinstance(v, dict))
_OPT_INT = ("int-or-null", lambda v: v is None or _INT[1](v))

#: Required payload fields per command.
_COMMANDS = {
    "dim.toric": {"n": _INT, "variety": _STR, "dim": _INT, "dim_rank_check": _INT},
    "dim.secant": {
        "n": _INT,
        "r": _INT,
        "variety": _STR,
        "dim": _INT,
        "trial_dims": _LIST,
        "trials_agree": _BOOL,
    },
    "bound": {"n": _INT, "d": _INT, "r": _INT, "bounds": _DICT},
    "ideal": {"variety": _STR, "max_degree": _INT, "counts": _DICT, "generators": _LIST},
    "degree.hypersimplex": {"n": _INT, "d": _INT, "degree": _INT},
    "equations": {"name": _STR, "polynomials": _LIST},
    "moments": {"n": _INT, "T": _INT, "moments": _DICT},
    "sweep": {"kind": _STR, "rows": _LIST},
}

_SWEEP_ROW = {
    "n": _INT,
    "d": _INT,
    "r": _INT,
    "dim_numeric": _INT,
    "ilp_bound": _OPT_INT,
    "expected_bound": _INT,
    "match": _BOOL,
}


def validate(doc) -> list[str]:
    """Return a list of problems; an empty list means the document is valid."""
    errors = []
    if not isinstance(doc, dict):
        return ["document is not a JSON object"]
    if doc.get("schema") != SCHEMA_ID:
        errors.append(f"schema must be {SCHEMA_ID!r}, got {doc.get('schema')!r}")
    command = doc.get("command")
    if command not in _COMMANDS:
        errors.append(f"unknown command {command!r}")
        return errors
    for key, (tname, check) in _COMMANDS[command].items():
        if key not in doc:
            errors.append(f"missing field {key!r}")
        elif not check(doc[key]):
            errors.append(f"field {key!r} is not of type {tname}")
    if command == "sweep" and not errors:
        for i, row in enumerate(doc["rows"]):
            if not isinstance(row, dict):
                errors.append(f"rows[{i}] is not an object")
                continue
            for key, (tname, check) in _SWEEP_ROW.items():
                if key not in row or not check(row[key]):
                    errors.append(f"rows[{i}].{key} missing or not {tname}")
    if command == "ideal" and not errors:
        for i, gen in enumerate(doc["generators"]):
            if (
                not isinstance(gen, dict)
                or not isinstance(gen.get("plus"), list)
                or not isinstance(gen.get("minus"), list)
            ):
                errors.append(f"generators[{i}] needs 'plus' and 'minus' lists")
    return errors
