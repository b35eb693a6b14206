"""Machine-readable reports shared by the identity suite and the command line.

JSON layout::

    {"command": str,
     "config": {"precision": int, "grid": [str, ...]},
     "cases": [{"id", "inputs", "lhs", "rhs", "residual", "verdict", ...}]}

Reals are decimal strings so no digits are lost.  CSV has the header
``id,input,residual,verdict``.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .precision import PrecisionContext, format_real

CSV_HEADER = ("id", "input", "residual", "verdict")


def _plain(x, ctx: PrecisionContext):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if hasattr(x, "_mpf_"):
        return format_real(x, ctx)
    if isinstance(x, dict):
        return {str(k): _plain(v, ctx) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v, ctx) for v in x]
    return str(x)


def case_record(case, ctx: PrecisionContext) -> dict:
    """Dictionary form of an IdentityCase."""
    rec = {
        "id": case.id,
        "inputs": _plain(case.inputs, ctx),
        "lhs": _plain(case.lhs, ctx),
        "rhs": _plain(case.rhs, ctx),
        "residual": format_real(case.residual, ctx, 6),
        "verdict": case.verdict,
        "category": case.category,
        "equation": case.equation,
    }
    if case.notes:
        rec["notes"] = _plain(case.notes, ctx)
    return rec


def build_report(command: str, ctx: PrecisionContext, grid, records: list[dict]) -> dict:
    return {
        "command": command,
        "config": {"precision": ctx.decimal_digits, "grid": [str(g) for g in grid]},
        "cases": records,
    }


def _input_text(inputs) -> str:
    if isinstance(inputs, dict):
        return ";".join(f"{k}={v}" for k, v in inputs.items())
    return str(inputs)


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for c in report["cases"]:
            w.writerow([c.get("id", ""), _input_text(c.get("inputs", "")), c.get("residual", ""), c.get("verdict", "")])
        return buf.getvalue()
    if fmt == "text":
        lines = [f"# {report['command']}  precision={report['config']['precision']}"]
        for c in report["cases"]:
            extra = "".join(f"  {k}={v}" for k, v in c.items()
                            if k not in ("id", "inputs", "verdict", "notes", "equation", "category"))
            lines.append(f"{c.get('id', ''):8s} {_input_text(c.get('inputs', '')):18s} {c.get('verdict', ''):6s}{extra}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
