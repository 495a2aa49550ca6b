"""
Sufficient conditions. Holds certifies the property; Fails says nothing about it.
"""
from __future__ import annotations
from fractions import Fraction
from typing import List, Sequence

from hausdorff.criteria.characterization import degree2_iff
from hausdorff.criteria.report import (
    ConditionReport,
    Criterion,
    InequalityTrail,
    all_positive,
    not_applicable,
    sorted_with_positions,
)
from hausdorff.exact import to_rationals
from hausdorff.exceptions import InputError
from hausdorff.poly import RationalSeq, partial_fractions
from hausdorff.typing import RationalLike


def ball_conditions(a: Sequence[RationalLike], b: Sequence[RationalLike]) -> ConditionReport:
    """
    prod (n+a_i)/(n+b_i) is completely monotone when, after sorting both lists,
    b_1 + ... + b_l <= a_1 + ... + a_l for every l.
    """
    a, b = to_rationals(a), to_rationals(b)
    if len(a) != len(b):
        raise InputError(
            "Ball's conditions need as many zero shifts as poles, got "
            + str(len(a))
            + " and "
            + str(len(b))
        )
    if not a:
        return not_applicable(Criterion.Ball, "needs at least one factor")
    if not all_positive(a, b):
        return not_applicable(Criterion.Ball, "shifts must be positive")
    sa, pos_a = sorted_with_positions(a)
    sb, pos_b = sorted_with_positions(b)
    trail = InequalityTrail()
    for l in range(1, len(a) + 1):
        trail.le("l=" + str(l) + ": sum b <= sum a", sum(sb[:l], Fraction(0)), sum(sa[:l], Fraction(0)))
    notes = ["sorted a from input positions " + str(pos_a), "sorted b from input positions " + str(pos_b)]
    return trail.report(Criterion.Ball, notes=notes)


def _factor_signs(a: Sequence[Fraction], b: Sequence[Fraction], i: int) -> str:
    up = sum(1 for x in a if x - b[i] < 0)
    down = sum(1 for j, x in enumerate(b) if j != i and x - b[i] < 0)
    sign = "-" if (up + down) % 2 else "+"
    return (
        "c"
        + str(i + 1)
        + " sign "
        + sign
        + " from prod(a_l - b_"
        + str(i + 1)
        + ") with "
        + str(up)
        + " negative factors over prod(b_l - b_"
        + str(i + 1)
        + ") with "
        + str(down)
    )


def main3_partial_sums(r: RationalSeq) -> ConditionReport:
    """
    p(x) / prod (x+b_i) with simple poles b_1 < ... < b_k and deg p <= k+1 is completely
    alternating when the partial fraction coefficients have nonpositive prefix sums.
    """
    if r.k == 0:
        return not_applicable(Criterion.Main3PartialSums, "needs at least one pole")
    if not r.is_simple:
        return not_applicable(Criterion.Main3PartialSums, "repeated poles")
    if r.numerator.coefficient(r.k + 1) < 0:
        return not_applicable(
            Criterion.Main3PartialSums, "coefficient of x^(k+1) is negative, so the sequence is not CA"
        )
    coefficients = partial_fractions(r).coefficients()
    trail = InequalityTrail()
    prefix = Fraction(0)
    for l, c in enumerate(coefficients, start=1):
        prefix += c
        trail.le("l=" + str(l) + ": c_1 + ... + c_l <= 0", prefix, Fraction(0))
    notes = []
    factored = r.factored_numerator()
    if factored is not None and factored[0] > 0:
        notes = [_factor_signs(factored[1], r.pole_shifts, i) for i in range(r.k)]
    return trail.report(Criterion.Main3PartialSums, notes=notes)


def _bridging(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[str]:
    if not all_positive(b):
        return []
    pairs = [((a[i], a[i + 1]), (b[i],)) for i in range(min(len(b), len(a) - 1))]
    if len(a) == len(b):
        pairs.append(((a[-1],), (b[-1],)))
    notes = []
    for zeros, poles in pairs:
        status = degree2_iff(RationalSeq.from_shifts(zeros, poles)).status.value
        text = "".join("(n+" + str(z) + ")" for z in zeros) + "/(n+" + str(poles[0]) + ")"
        notes.append("bridging " + text + ": degree-2 CA check " + status)
    return notes


def interlacing_check(a: Sequence[RationalLike], b: Sequence[RationalLike]) -> ConditionReport:
    """
    Strict interlacing 0 < a1 < b1 < a2 < ... < a_k < b_k (or with a trailing a_(k+1))
    makes prod (n+a_i) / prod (n+b_i) completely alternating. The report lists the bridging
    sequences whose complete alternation would make the condition necessary as well.
    """
    a, b = sorted(to_rationals(a)), sorted(to_rationals(b))
    if len(a) not in (len(b), len(b) + 1):
        raise InputError(
            "interlacing needs |a| = |b| or |a| = |b| + 1, got " + str((len(a), len(b)))
        )
    values, names = [Fraction(0)], ["0"]
    for i, x in enumerate(a):
        values.append(x)
        names.append("a" + str(i + 1))
        if i < len(b):
            values.append(b[i])
            names.append("b" + str(i + 1))
    trail = InequalityTrail()
    trail.chain("interlacing", values, names)
    return trail.report(Criterion.CAExInterlace, notes=_bridging(a, b))


def cnpos_check(a: Sequence[RationalLike], b: Sequence[RationalLike]) -> ConditionReport:
    """
    0 < a1 < b1 < ... < a_(k-1) < b_(k-1) < b_k < a_k together with
    a_k <= b_k + sum_{i<k} (b_i - a_i) makes prod (n+a_i)/(n+b_i) completely alternating.
    """
    a, b = sorted(to_rationals(a)), sorted(to_rationals(b))
    k = len(a)
    if k < 2 or len(b) != k:
        return not_applicable(Criterion.CnPos, "needs k >= 2 zero shifts and k poles")
    values, names = [Fraction(0)], ["0"]
    for i in range(k - 1):
        values += [a[i], b[i]]
        names += ["a" + str(i + 1), "b" + str(i + 1)]
    values += [b[-1], a[-1]]
    names += ["b" + str(k), "a" + str(k)]
    trail = InequalityTrail()
    trail.chain("ordering", values, names)
    slack = sum((b[i] - a[i] for i in range(k - 1)), Fraction(0))
    trail.le("a_k <= b_k + sum_{i<k} (b_i - a_i)", a[-1], b[-1] + slack)
    return trail.report(Criterion.CnPos)
