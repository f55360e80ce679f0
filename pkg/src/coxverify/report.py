"""Verification reports: stable JSON documents, tables, and CSV export.

A report is one suite run: its parameters, a list of checks with
pass/fail/error status and optional witnesses, and the wall time.
Everything except wall_time is byte-stable for fixed inputs and
budgets; checks are sorted by id before serialization.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from fractions import Fraction

PASS = "pass"
FAIL = "fail"
ERROR = "error"


def jsonable(value):
    """Recursively convert witnesses to JSON-friendly values.

    Exact scalars are rendered as strings (with a float shadow appended
    for readability) so that no precision is lost in the report.
    """
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = list(value)
        if isinstance(value, (set, frozenset)):
            items = sorted(items, key=repr)
        return [jsonable(v) for v in items]
    if hasattr(value, "coeffs") and hasattr(value, "ctx"):  # AlgReal
        return f"{value!r} (~{float(value):.6g})"
    return repr(value)


@dataclass
class CheckResult:
    id: str
    status: str
    witness: dict | None = None

    def to_dict(self) -> dict:
        return {"id": self.id, "status": self.status, "witness": jsonable(self.witness)}


@dataclass
class VerificationReport:
    suite: str
    group: str
    parameters: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.status == PASS for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def counts(self) -> dict:
        out = {PASS: 0, FAIL: 0, ERROR: 0}
        for c in self.checks:
            out[c.status] = out.get(c.status, 0) + 1
        return out

    def sorted_checks(self) -> list:
        return sorted(self.checks, key=lambda c: c.id)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "group": self.group,
            "parameters": jsonable(self.parameters),
            "checks": [c.to_dict() for c in self.sorted_checks()],
            "wall_time": self.wall_time,
        }

    def to_json(self, include_timing: bool = True) -> str:
        doc = self.to_dict()
        if not include_timing:
            doc.pop("wall_time")
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"

    def write_json(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_json())

    def write_csv(self, path: str) -> None:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["id", "status", "witness"])
            for c in self.sorted_checks():
                witness = "" if c.witness is None else json.dumps(jsonable(c.witness), sort_keys=True)
                writer.writerow([c.id, c.status, witness])

    def render_table(self) -> str:
        lines = []
        lines.append(f"suite: {self.suite}    group: {self.group}")
        if self.parameters:
            params = ", ".join(f"{k}={_short(v)}" for k, v in self.parameters.items())
            lines.append(f"parameters: {params}")
        checks = self.sorted_checks()
        if checks:
            width = max(len(c.id) for c in checks)
            for c in checks:
                mark = {PASS: "ok", FAIL: "FAIL", ERROR: "ERROR"}[c.status]
                line = f"  {c.id.ljust(width)}  {mark}"
                if c.witness and c.status != PASS:
                    line += f"  {json.dumps(jsonable(c.witness), sort_keys=True)[:160]}"
                elif c.witness and c.witness.get("warning"):
                    line += f"  [{c.witness['warning']}]"
                lines.append(line)
        counts = self.counts()
        lines.append(
            f"result: {'PASS' if self.passed else 'FAIL'} "
            f"({counts[PASS]} pass, {counts[FAIL]} fail, {counts[ERROR]} error; "
            f"{self.wall_time:.2f}s)"
        )
        return "\n".join(lines)


def _short(value) -> str:
    text = json.dumps(jsonable(value)) if not isinstance(value, str) else value
    return text if len(text) <= 40 else text[:37] + "..."
