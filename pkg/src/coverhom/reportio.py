"""Report serialization: JSON with exact values on the wire, and ASCII tables.

Rationals serialize as "p/q" strings. Integers serialize as JSON numbers
while they fit in 53 bits and as decimal strings beyond that, so exactness
survives any reader. Key order is fixed, so identical runs produce
byte-identical JSON.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .cover import CoverReport, Verdict
from .errors import DimensionError, DomainError
from .intlinalg import IntMatrix
from .plumbing import PlumbingGraph

__all__ = [
    "encode_int",
    "encode_fraction",
    "encode_value",
    "matrix_to_json",
    "matrix_from_json",
    "report_to_dict",
    "render_json",
    "render_report_table",
    "verdicts_to_json",
]

_SAFE = 2**53


def encode_int(n: int) -> int | str:
    return n if -_SAFE < n < _SAFE else str(n)


def decode_int(value) -> int:
    if isinstance(value, bool):
        raise DomainError(f"integer entry required, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return int(value, 10)
    raise DomainError(f"integer entry required, got {value!r}")


def encode_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def encode_value(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, Fraction):
        return encode_fraction(value)
    if isinstance(value, int):
        return encode_int(value)
    return value


def matrix_to_json(m: IntMatrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [encode_int(e) for e in m.entries],
    }


def matrix_from_json(obj) -> IntMatrix:
    if not isinstance(obj, dict):
        raise DomainError("matrix JSON must be an object with rows, cols, entries")
    try:
        rows = obj["rows"]
        cols = obj["cols"]
        entries = obj["entries"]
    except KeyError as missing:
        raise DomainError(f"matrix JSON lacks key {missing}") from None
    if not isinstance(rows, int) or not isinstance(cols, int) or isinstance(rows, bool) or isinstance(cols, bool):
        raise DomainError("rows and cols must be integers")
    if not isinstance(entries, list):
        raise DomainError("entries must be an array")
    try:
        decoded = tuple(decode_int(e) for e in entries)
    except ValueError as exc:
        raise DomainError(f"bad matrix entry: {exc}") from None
    if len(decoded) != rows * cols:
        raise DimensionError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(decoded)}")
    return IntMatrix(rows, cols, decoded)


def _graph_to_json(g: PlumbingGraph | None):
    if g is None:
        return None
    return {
        "vertices": [
            {"euler_number": v.euler_number, "genus": v.genus, "label": v.label}
            for v in g.vertices
        ],
        "edges": [[i, j] for i, j in g.edges],
    }


def verdicts_to_json(verdicts) -> list[dict]:
    return [{"name": v.name, "pass": v.passed, "evidence": v.evidence} for v in verdicts]


def report_to_dict(r: CoverReport) -> dict:
    return {
        "family": r.family,
        "parameters": {k: encode_value(v) for k, v in r.parameters},
        "invariants": {
            "euler_characteristic": encode_int(r.cover_euler),
            "b1": None if r.cover_b1 is None else encode_int(r.cover_b1),
            "pi_lower_bound": encode_int(r.pi_lower_bound),
        },
        "findings": {
            "omega_on_spherical_classes": "zero" if r.omega_vanishes_on_pi else "nonzero",
            "c1_on_spherical_classes": "zero" if r.c1_vanishes_on_pi else "nonzero",
        },
        "pairings": [
            {"generator": label, "omega": encode_fraction(om), "c1": encode_int(c1)}
            for (label, om), (_, c1) in zip(r.omega_pairings, r.chern_pairings)
        ],
        "spherical_lattice": _graph_to_json(r.spherical_graph),
        "verdicts": verdicts_to_json(r.all_verdicts),
        "assumptions": list(r.assumptions),
        "kaehler": r.kaehler,
        "trace": {k: v for k, v in r.trace},
    }


def render_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _fmt(value) -> str:
    if value is None:
        return "(not determined)"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _table_rows(columns, rows) -> list[str]:
    widths = [max(len(c), *(len(r[i]) for r in rows)) if rows else len(c) for i, c in enumerate(columns)]
    out = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    out.append("  ".join("-" * w for w in widths))
    for r in rows:
        out.append("  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip())
    return out


def render_report_table(r: CoverReport) -> str:
    d = report_to_dict(r)
    lines = [f"family: {d['family']}"]
    lines.append("parameters: " + " ".join(f"{k}={_fmt(v)}" for k, v in d["parameters"].items()))
    lines.append("")
    lines.append("invariants:")
    for k, v in d["invariants"].items():
        lines.append(f"  {k:<22} {_fmt(v)}")
    for k, v in d["findings"].items():
        lines.append(f"  {k:<30} {v}")
    lines.append("")
    pair_rows = [[p["generator"], p["omega"], _fmt(p["c1"])] for p in d["pairings"]]
    lines.extend(_table_rows(("generator", "omega", "c1"), pair_rows))
    lines.append("")
    lines.append("verdicts:")
    for v in d["verdicts"]:
        lines.append(f"  {'PASS' if v['pass'] else 'FAIL'}  {v['name']} | {v['evidence']}")
    lines.append("")
    lines.append("assumptions:")
    for a in d["assumptions"]:
        lines.append(f"  - {a}")
    lines.append("")
    lines.append(f"result: {'PASS' if r.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"
