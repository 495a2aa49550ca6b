from __future__ import annotations
from typing import Tuple

from hausdorff.criteria.characterization import (
    bicase_iff,
    degree2_reports,
    special_case_iff,
)
from hausdorff.criteria.necessary import PERM_MAX_K, nec_sum_check, perm_necessary
from hausdorff.criteria.report import ConditionReport, Criterion, all_positive, not_applicable
from hausdorff.criteria.sufficient import (
    ball_conditions,
    cnpos_check,
    interlacing_check,
    main3_partial_sums,
)
from hausdorff.oracle import Property
from hausdorff.poly import RationalSeq

# Each criterion that speaks about a rational sequence, in report order.
RATIO_CRITERIA = (
    Criterion.Ball,
    Criterion.Main3PartialSums,
    Criterion.Main1PermCM,
    Criterion.Main1PermCA,
    Criterion.CARoot1,
    Criterion.CARoot2,
    Criterion.CARoot2b,
    Criterion.SpecialCase,
    Criterion.BiCase,
    Criterion.CAExInterlace,
    Criterion.CnPos,
    Criterion.NecCondSumCM,
    Criterion.NecCondSumCA,
)

IFF_CRITERIA = {
    Property.CM: (Criterion.SpecialCase, Criterion.BiCase),
    Property.CA: (Criterion.CARoot1, Criterion.CARoot2, Criterion.CARoot2b),
}

NECESSARY_CRITERIA = {
    Property.CM: (Criterion.NecCondSumCM, Criterion.Main1PermCM),
    Property.CA: (Criterion.NecCondSumCA, Criterion.Main1PermCA),
}


def ratio_criteria(r: RationalSeq) -> Tuple[ConditionReport, ...]:
    """
    Runs every criterion against r exactly once. Criteria stated in terms of zero shifts
    need a numerator with a recoverable factorization and a positive scale.
    """
    factored = r.factored_numerator()
    b = r.pole_shifts
    a = None
    reason = "numerator has no exact rational factorization"
    if factored is not None:
        if factored[0] <= 0:
            reason = "numerator leading coefficient must be positive"
        elif not all_positive(factored[1]):
            reason = "zero shifts must be positive"
        else:
            a = factored[1]
    paired = a is not None and len(a) == len(b) and len(b) >= 1
    if a is not None and not paired:
        reason = "needs as many zero shifts as poles"

    def when(condition, criterion, run, why=None):
        return run() if condition else not_applicable(criterion, why or reason)

    too_many = "permutation search is limited to k <= " + str(PERM_MAX_K)
    reports = [
        when(paired, Criterion.Ball, lambda: ball_conditions(a, b)),
        main3_partial_sums(r),
        when(
            paired and len(b) <= PERM_MAX_K,
            Criterion.Main1PermCM,
            lambda: perm_necessary(a, b, Property.CM),
            None if not paired else too_many,
        ),
        when(
            paired and len(b) <= PERM_MAX_K,
            Criterion.Main1PermCA,
            lambda: perm_necessary(a, b, Property.CA),
            None if not paired else too_many,
        ),
    ]
    reports.extend(degree2_reports(r))
    reports += [
        when(
            a is not None and len(a) == 1 and len(b) >= 1,
            Criterion.SpecialCase,
            lambda: special_case_iff(a[0], b),
            "needs a single zero shift over at least one pole",
        ),
        when(
            paired and len(b) == 2,
            Criterion.BiCase,
            lambda: bicase_iff(a, b),
            "needs exactly two zero shifts and two poles",
        ),
        when(
            a is not None and len(a) in (len(b), len(b) + 1),
            Criterion.CAExInterlace,
            lambda: interlacing_check(a, b),
            "needs |a| = |b| or |a| = |b| + 1",
        ),
        when(paired and len(b) >= 2, Criterion.CnPos, lambda: cnpos_check(a, b), "needs k >= 2 paired factors"),
        when(paired, Criterion.NecCondSumCM, lambda: nec_sum_check(a, b, Property.CM)),
        when(paired, Criterion.NecCondSumCA, lambda: nec_sum_check(a, b, Property.CA)),
    ]
    return tuple(reports)
