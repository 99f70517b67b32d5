"""Output records and their JSON, CSV and text renderings.

Every command produces one :class:`OutputRecord`::

    {"schema_version": 1, "lie_type": "A3", "kind": "table", "rows": [...]}

Roots are written as simple-root coefficient lists under keys named ``root``
or ``gammas``; weights as Dynkin-label lists under keys named ``weight``,
``labels`` or ``special_weight``. Field names per kind are listed in
``schema/output.schema.json``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Any

from .lie import CartanData, LieType, RootVector, WeightVector, fundamental_weight, to_labels
from .rootsys import RootSystem
from .weyl import WeylWord
from .special import Conjecture1Report, Conjecture2Report, GammaSet, SpecialRootTable

__all__ = [
    "SCHEMA_VERSION",
    "KINDS",
    "OutputRecord",
    "load_schema",
    "roots_record",
    "orbit_record",
    "gamma_record",
    "table_record",
    "verify_record",
    "atable_record",
]

SCHEMA_VERSION = 1
KINDS = ("roots", "orbit", "gamma", "table", "verify", "atable")


@dataclass
class OutputRecord:
    lie_type: str
    kind: str
    rows: list[dict[str, Any]] = field(default_factory=list)
    schema_version: int = SCHEMA_VERSION

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown record kind {self.kind!r}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema_version": self.schema_version,
            "lie_type": self.lie_type,
            "kind": self.kind,
            "rows": self.rows,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> OutputRecord:
        return cls(
            lie_type=data["lie_type"],
            kind=data["kind"],
            rows=list(data["rows"]),
            schema_version=data["schema_version"],
        )

    @classmethod
    def from_json(cls, text: str) -> OutputRecord:
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        columns = _columns(self)
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in self.rows:
            writer.writerow([_cell(row.get(c), c) for c in columns])
        return buf.getvalue()

    def to_text(self) -> str:
        columns = _columns(self)
        cells = [[_cell(row.get(c), c) for c in columns] for row in self.rows]
        widths = [max([len(c)] + [len(r[n]) for r in cells]) for n, c in enumerate(columns)]
        lines = [f"# {self.lie_type} {self.kind} ({len(self.rows)} rows)"]
        lines.append("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip())
        for r in cells:
            lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"unknown format {fmt!r}")


def _columns(record: OutputRecord) -> list[str]:
    if record.rows:
        return list(record.rows[0].keys())
    return list(_EMPTY_COLUMNS[record.kind])


_EMPTY_COLUMNS = {
    "roots": ("n", "height", "root", "labels"),
    "orbit": ("index", "n", "weight"),
    "gamma": ("index", "n", "root", "labels", "special_weight"),
    "table": ("A", "word", "gammas"),
    "verify": ("conjecture", "check", "index", "expected", "observed", "passed", "witnesses"),
    "atable": ("k", "count", "closed_form_distinct", "closed_equals_diophantine",
               "diophantine_equals_search", "counting_lhs", "counting_rhs", "duality", "passed"),
}


def _vec(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _cell(value, key: str = "") -> str:
    if key == "word":
        return str(WeylWord(tuple(value)))
    if value is None or value == []:
        return ""
    if isinstance(value, bool):
        return "PASS" if value else "FAIL"
    if isinstance(value, list):
        if value and all(isinstance(x, list) for x in value):
            return "(" + ",".join(_vec(x) for x in value) + ")"
        if value and all(isinstance(x, str) for x in value):
            return "; ".join(value)
        return _vec(value)
    return str(value)


def load_schema() -> dict[str, Any]:
    text = resources.files("liespecial").joinpath("schema/output.schema.json").read_text()
    return json.loads(text)


# -- builders --------------------------------------------------------------


def roots_record(rs: RootSystem) -> OutputRecord:
    cd = rs.cartan_data
    rows = [
        {"n": n, "height": v.height, "root": list(v.coeffs), "labels": list(to_labels(v, cd).labels)}
        for n, v in enumerate(rs.positive_roots, start=1)
    ]
    return OutputRecord(rs.lie_type.name, "roots", rows)


def orbit_record(t: LieType, orbits: dict[int, tuple[WeightVector, ...]]) -> OutputRecord:
    rows = [
        {"index": i, "n": n, "weight": list(v.labels)}
        for i in sorted(orbits)
        for n, v in enumerate(orbits[i], start=1)
    ]
    return OutputRecord(t.name, "orbit", rows)


def gamma_record(t: LieType, sets: list[GammaSet], cd: CartanData) -> OutputRecord:
    rows = []
    for gs in sets:
        lam = fundamental_weight(gs.index, cd)
        for n, g in enumerate(gs.members, start=1):
            lab = to_labels(g, cd)
            rows.append({
                "index": gs.index,
                "n": n,
                "root": list(g.coeffs),
                "labels": list(lab.labels),
                "special_weight": list((lam - lab).labels),
            })
    return OutputRecord(t.name, "gamma", rows)


def table_record(table: SpecialRootTable) -> OutputRecord:
    rows = [
        {"A": a, "word": list(w.letters), "gammas": [list(g.coeffs) for g in gammas]}
        for a, (w, gammas) in enumerate(table.rows, start=1)
    ]
    return OutputRecord(table.lie_type.name, "table", rows)


def _check_row(conjecture: int, check: str, index, expected, observed, passed: bool, witnesses) -> dict:
    return {
        "conjecture": conjecture,
        "check": check,
        "index": index,
        "expected": expected,
        "observed": observed,
        "passed": passed,
        "witnesses": [str(w) for w in witnesses],
    }


def _tuple_str(tup: tuple[RootVector, ...]) -> str:
    return "(" + ",".join(str(g) for g in tup) + ")"


def verify_record(
    t: LieType,
    c1: Conjecture1Report | None = None,
    c2: Conjecture2Report | None = None,
) -> OutputRecord:
    rows = []
    if c1 is not None:
        for e in c1.entries:
            rows.append(_check_row(1, "gamma_size_equals_orbit_size", e.index, e.orbit_size, e.gamma_size,
                                   e.gamma_size == e.orbit_size, e.unmatched))
            rows.append(_check_row(1, "gamma_disjoint_from_orbit", e.index, 0, len(e.overlap),
                                   not e.overlap, e.overlap))
    if c2 is not None:
        rows.append(_check_row(2, "special_roots_in_gamma_sets", None, 0, len(c2.membership_failures),
                               not c2.membership_failures,
                               [f"{w}: gamma({i})={g}" for w, i, g in c2.membership_failures]))
        rows.append(_check_row(2, "element_to_tuple_injective", None, 0, len(c2.collisions), c2.injective,
                               [f"{a} ~ {b}" for a, b in c2.collisions]))
        rows.append(_check_row(2, "gram_solutions_from_group", None, 0, len(c2.extra_in_solver), c2.surjective,
                               [_tuple_str(tup) for tup in c2.extra_in_solver]))
        rows.append(_check_row(2, "group_tuples_solve_gram", None, 0, len(c2.missing_from_solver),
                               not c2.missing_from_solver,
                               [_tuple_str(tup) for tup in c2.missing_from_solver]))
        rows.append(_check_row(2, "tuple_count_equals_group_order", None, c2.group_order, c2.solver_count,
                               c2.solver_count == c2.group_order, []))
    return OutputRecord(t.name, "verify", rows)


def atable_record(r: int, rows_in) -> OutputRecord:
    rows = [
        {
            "k": row.k,
            "count": row.count,
            "closed_form_distinct": row.closed_form_distinct,
            "closed_equals_diophantine": row.closed_equals_diophantine,
            "diophantine_equals_search": row.diophantine_equals_search,
            "counting_lhs": row.counting[0],
            "counting_rhs": row.counting[1],
            "duality": row.duality,
            "passed": row.passed,
        }
        for row in rows_in
    ]
    return OutputRecord(f"A{r}", "atable", rows)
