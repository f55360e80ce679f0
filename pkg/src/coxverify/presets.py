"""Built-in group catalog and group-definition file handling.

The catalog spans all three classifications and every arithmetic
flavour the library supports: simply-laced, even/odd labels, an
irrational field, and infinite bonds.  A group file is a single JSON
document::

    {"name": "optional", "n": 3, "m": [[1,3,2],[3,1,4],[2,4,1]]}

where the integer 0 encodes an infinite label.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

from .context import CoxeterMatrix, GroupContext, build_context
from .errors import CoxeterInputError


@dataclass(frozen=True)
class Preset:
    name: str
    rows: tuple  # file-convention integer rows (0 = infinity)
    note: str

    def matrix(self) -> CoxeterMatrix:
        return CoxeterMatrix.decode(self.rows)


def _sym(n: int, entries: dict) -> tuple:
    rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for (i, j), m in entries.items():
        rows[i - 1][j - 1] = m
        rows[j - 1][i - 1] = m
    return tuple(tuple(r) for r in rows)


PRESETS: tuple = (
    Preset("A1", _sym(1, {}), "single generator"),
    Preset("A2", _sym(2, {(1, 2): 3}), "finite, simply laced"),
    Preset("A3", _sym(3, {(1, 2): 3, (2, 3): 3}), "finite path"),
    Preset("B2", _sym(2, {(1, 2): 4}), "finite, label 4 (field of sqrt 2)"),
    Preset("G2", _sym(2, {(1, 2): 6}), "finite, label 6 (field of sqrt 3)"),
    Preset("H3", _sym(3, {(1, 2): 5, (2, 3): 3}), "finite, label 5 (golden field)"),
    Preset("affA1", _sym(2, {(1, 2): 0}), "affine, infinite bond"),
    Preset("affA2", _sym(3, {(1, 2): 3, (1, 3): 3, (2, 3): 3}), "affine triangle"),
    Preset("affC2", _sym(3, {(1, 2): 4, (2, 3): 4}), "affine path with labels 4"),
    Preset("affG2", _sym(3, {(1, 2): 6, (2, 3): 3}), "affine path with label 6"),
    Preset("tri334", _sym(3, {(1, 2): 3, (1, 3): 3, (2, 3): 4}), "hyperbolic (3,3,4) triangle"),
    Preset("infpath", _sym(3, {(1, 2): 0, (2, 3): 3}), "indefinite path with an infinite bond"),
)

_BY_KEY = {p.name.lower(): p for p in PRESETS}


def preset_names() -> list[str]:
    return [p.name for p in PRESETS]


def get_preset(name: str) -> Preset:
    try:
        return _BY_KEY[name.lower()]
    except KeyError:
        raise CoxeterInputError(
            f"unknown preset {name!r}; available: {', '.join(preset_names())}"
        ) from None


def preset_context(name: str) -> GroupContext:
    return build_context(get_preset(name).matrix())


def parse_group_spec(doc) -> tuple[str, CoxeterMatrix]:
    """Validate a decoded group-file document; returns (name, matrix)."""
    if not isinstance(doc, dict):
        raise CoxeterInputError("group file must contain a JSON object")
    if "n" not in doc or "m" not in doc:
        raise CoxeterInputError("group file needs fields 'n' and 'm'")
    n = doc["n"]
    rows = doc["m"]
    if not isinstance(n, int) or n < 1:
        raise CoxeterInputError(f"'n' must be a positive integer, got {n!r}")
    if not isinstance(rows, list) or len(rows) != n:
        raise CoxeterInputError(f"'m' must be a list of {n} rows")
    for row in rows:
        if not isinstance(row, list) or len(row) != n:
            raise CoxeterInputError(f"every row of 'm' must have length {n}")
        for entry in row:
            if not isinstance(entry, int) or entry < 0:
                raise CoxeterInputError(f"matrix entries must be integers >= 0, got {entry!r}")
    name = doc.get("name", "unnamed")
    if not isinstance(name, str):
        raise CoxeterInputError("'name' must be a string")
    return name, CoxeterMatrix.decode(rows)


def load_group_file(path: str) -> tuple[str, CoxeterMatrix]:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise CoxeterInputError(f"cannot read group file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CoxeterInputError(f"invalid JSON in {path}: {exc}") from exc
    return parse_group_spec(doc)


def resolve_group(spec: str) -> tuple[str, GroupContext]:
    """Resolve a --group argument: preset name first, then file path."""
    if spec.lower() in _BY_KEY:
        return _BY_KEY[spec.lower()].name, preset_context(spec)
    if os.path.exists(spec):
        name, matrix = load_group_file(spec)
        return name, build_context(matrix)
    raise CoxeterInputError(
        f"{spec!r} is neither a preset ({', '.join(preset_names())}) nor an existing group file"
    )
