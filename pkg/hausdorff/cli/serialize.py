"""
JSON and text rendering of a :class:`~hausdorff.cli.classify.Report`.
Rationals are written as "p/q" strings; floats use Python's shortest round-trip repr.
"""
from __future__ import annotations
import dataclasses
import json
from enum import Enum
from fractions import Fraction
from typing import Any, List

from hausdorff.exact import rat_to_string

REPORT_KEYS = ("request", "partial_fractions", "criteria", "weight", "oracle", "verdicts")


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, Fraction):
        return rat_to_string(obj)
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, (int, float, str)):
        return obj
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(to_jsonable(k)): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return sorted(to_jsonable(v) for v in obj)
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError("cannot serialize " + type(obj).__name__)


def dumps(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False)


def report_to_json(report) -> str:
    return dumps({key: to_jsonable(getattr(report, key)) for key in REPORT_KEYS})


def _witness_text(witness) -> str:
    return "orders " + str(witness.orders) + " shift " + str(witness.shift) + " value " + str(witness.value)


def report_to_text(report) -> str:
    lines: List[str] = []
    pf = report.partial_fractions
    if pf is not None:
        lines.append("partial fractions: a0 = " + str(pf.a0) + ", a1 = " + str(pf.a1))
        for term in pf.terms:
            power = "" if term.order == 1 else "^" + str(term.order)
            lines.append("  " + str(term.coefficient) + " / (n+" + str(term.pole) + ")" + power)
    for criterion in report.criteria:
        lines.append(criterion.criterion.value + ": " + criterion.status.value)
        lines.extend("  " + str(item) for item in criterion.detail)
        if criterion.certificate is not None:
            lines.append("  certificate " + str(criterion.certificate))
        lines.extend("  note: " + note for note in criterion.notes)
    if report.weight is not None:
        sign = report.weight.sign
        lines.append("weight: w(t) = " + report.weight.expression)
        lines.append("  status " + sign.status.value + " via " + sign.proof_route.value)
        if sign.min_sampled is not None:
            lines.append("  sampled range [" + repr(sign.min_sampled) + ", " + repr(sign.max_sampled) + "]")
        for t, w in sign.witnesses:
            lines.append("  w(" + repr(t) + ") = " + repr(w))
    for name, scan in sorted(report.oracle.items()):
        line = "oracle " + name + ": " + scan.verdict.value
        if scan.witness is not None:
            line += " at " + _witness_text(scan.witness)
        lines.append(line)
    for name, verdict in sorted(report.verdicts.items()):
        lines.append("verdict " + name + ": " + verdict.conclusion.value + " (" + verdict.rule + ")")
        lines.extend("  note: " + note for note in verdict.notes)
    return "\n".join(lines)
