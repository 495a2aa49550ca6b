"""
Exact characterizations (if and only if) for small rational sequences.
A Fails status here certifies that the property does not hold.
"""
from __future__ import annotations
from typing import Sequence, Tuple

from hausdorff.criteria.report import (
    ConditionReport,
    Criterion,
    InequalityTrail,
    Status,
    all_positive,
    not_applicable,
)
from hausdorff.exact import to_rational, to_rationals
from hausdorff.exceptions import InputError
from hausdorff.oracle import Property
from hausdorff.poly import RationalSeq
from hausdorff.typing import RationalLike

_DEGREE2 = (Criterion.CARoot1, Criterion.CARoot2, Criterion.CARoot2b)


def _degree2_shape(r: RationalSeq):
    factored = r.factored_numerator()
    if factored is None:
        return None, "numerator has no exact rational factorization"
    scale, a = factored
    if scale <= 0:
        return None, "numerator leading coefficient must be positive"
    b = r.pole_shifts
    shapes = {(1, 1): Criterion.CARoot1, (2, 2): Criterion.CARoot2, (2, 1): Criterion.CARoot2b}
    criterion = shapes.get((len(a), len(b)))
    if criterion is None:
        return None, "not of the shape (x+a1)/(x+b1), (x+a1)(x+a2)/((x+b1)(x+b2)) or (x+a1)(x+a2)/(x+b1)"
    return (criterion, a, b), ""


def degree2_iff(r: RationalSeq, prop: Property = Property.CA) -> ConditionReport:
    """
    Complete alternation of (x+a1)/(x+b1), (x+a1)(x+a2)/((x+b1)(x+b2)) and
    (x+a1)(x+a2)/(x+b1), with a1 <= a2 and b1 <= b2 (a repeated pole is allowed).
    A positive scale factor on the numerator does not change the answer.
    """
    if prop is not Property.CA:
        return not_applicable(Criterion.CARoot1, "degree-2 characterization is for complete alternation")
    shape, reason = _degree2_shape(r)
    if shape is None:
        return not_applicable(Criterion.CARoot1, reason)
    criterion, a, b = shape
    trail = InequalityTrail()
    notes = []
    if criterion is Criterion.CARoot1:
        trail.le("a1 <= b1", a[0], b[0])
    elif criterion is Criterion.CARoot2b:
        trail.le("a1 <= b1", a[0], b[0])
        trail.le("b1 <= a2", b[0], a[1])
    else:
        trail.le("a1 <= b1", a[0], b[0])
        trail.le("b1 <= a2", b[0], a[1])
        trail.le("a1 + a2 <= b1 + b2", a[0] + a[1], b[0] + b[1])
        if b[0] == b[1]:
            c1 = a[0] + a[1] - 2 * b[0]
            c2 = (a[0] - b[0]) * (a[1] - b[0])
            notes.append(
                "repeated pole: weight (c1 - c2 ln t) t^(b1-1) with c1 = "
                + str(c1)
                + ", c2 = "
                + str(c2)
                + "; nonpositive iff c1 <= 0 and c2 <= 0"
            )
    return trail.report(criterion, notes=notes)


def degree2_reports(r: RationalSeq) -> Tuple[ConditionReport, ...]:
    """One report per degree-2 case; the cases that do not match are NotApplicable."""
    report = degree2_iff(r)
    if report.status is Status.NotApplicable:
        return tuple(not_applicable(criterion, report.notes[0]) for criterion in _DEGREE2)
    return tuple(
        report
        if criterion is report.criterion
        else not_applicable(criterion, "shape matches " + report.criterion.value)
        for criterion in _DEGREE2
    )


def special_case_iff(a1: RationalLike, b: Sequence[RationalLike]) -> ConditionReport:
    """(n+a1) / prod (n+b_i) is completely monotone iff b1 <= a1."""
    a1, b = to_rational(a1), sorted(to_rationals(b))
    if not b:
        return not_applicable(Criterion.SpecialCase, "needs at least one pole")
    if not all_positive([a1], b):
        return not_applicable(Criterion.SpecialCase, "shifts must be positive")
    trail = InequalityTrail()
    trail.le("b1 <= a1", b[0], a1)
    return trail.report(Criterion.SpecialCase)


def bicase_iff(a: Sequence[RationalLike], b: Sequence[RationalLike]) -> ConditionReport:
    """(n+a1)(n+a2) / ((n+b1)(n+b2)) is completely monotone iff b1 <= a1 and b1+b2 <= a1+a2."""
    a, b = to_rationals(a), to_rationals(b)
    if len(a) != 2 or len(b) != 2:
        raise InputError("bicase_iff needs two zero shifts and two poles")
    if a[0] > a[1] or b[0] > b[1]:
        raise InputError("bicase_iff needs a1 <= a2 and b1 <= b2")
    if not all_positive(a, b):
        return not_applicable(Criterion.BiCase, "shifts must be positive")
    trail = InequalityTrail()
    trail.le("b1 <= a1", b[0], a[0])
    trail.le("b1 + b2 <= a1 + a2", b[0] + b[1], a[0] + a[1])
    return trail.report(Criterion.BiCase)
