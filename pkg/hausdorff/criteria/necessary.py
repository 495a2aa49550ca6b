"""
Necessary conditions. Fails certifies that the property does not hold.
"""
from __future__ import annotations
import itertools
import logging
from fractions import Fraction
from typing import Optional, Sequence

from hausdorff.criteria.report import (
    ConditionReport,
    Criterion,
    InequalityTrail,
    all_positive,
    not_applicable,
    sorted_with_positions,
)
from hausdorff.exact import to_rationals
from hausdorff.exceptions import BudgetError, InputError
from hausdorff.oracle import Property
from hausdorff.typing import RationalLike

logger = logging.getLogger(__name__)

PERM_MAX_K = 10


def _first_failure(
    a: Sequence[Fraction], b: Sequence[Fraction], sigma: Sequence[int], direction: Property
) -> Optional[int]:
    """Index l (1-based) of the first prefix inequality sigma violates, or None."""
    sum_a = sum_b = Fraction(0)
    for l, i in enumerate(sigma, start=1):
        sum_a += a[i]
        sum_b += b[i]
        small, large = (sum_b, sum_a) if direction is Property.CM else (sum_a, sum_b)
        if small > large:
            return l
    return None


def _prefix_trail(
    a: Sequence[Fraction], b: Sequence[Fraction], sigma: Sequence[int], direction: Property, upto: int
) -> InequalityTrail:
    trail = InequalityTrail()
    one_line = tuple(i + 1 for i in sigma)
    for l in range(1, upto + 1):
        sum_a = sum((a[i] for i in sigma[:l]), Fraction(0))
        sum_b = sum((b[i] for i in sigma[:l]), Fraction(0))
        label = "sigma=" + str(one_line) + " l=" + str(l)
        if direction is Property.CM:
            trail.le(label + ": sum b <= sum a", sum_b, sum_a)
        else:
            trail.le(label + ": sum a <= sum b", sum_a, sum_b)
    return trail


def perm_necessary(
    a: Sequence[RationalLike], b: Sequence[RationalLike], direction: Property
) -> ConditionReport:
    """
    A completely monotone prod (n+a_i)/(n+b_i) admits a permutation sigma with sigma(1) = 1 and
    b_sigma(1) + ... + b_sigma(l) <= a_sigma(1) + ... + a_sigma(l) for all l; complete
    alternation reverses the inequalities. The search is exhaustive over the (k-1)!
    permutations in lexicographic order, and the first one found is the certificate.
    """
    a, b = to_rationals(a), to_rationals(b)
    criterion = Criterion.Main1PermCM if direction is Property.CM else Criterion.Main1PermCA
    if len(a) != len(b):
        raise InputError("permutation condition needs |a| = |b|, got " + str((len(a), len(b))))
    k = len(a)
    if k == 0:
        return not_applicable(criterion, "needs at least one factor")
    if k > PERM_MAX_K:
        raise BudgetError(
            "permutation search is limited to k <= " + str(PERM_MAX_K) + ", got k=" + str(k)
        )
    if not all_positive(a, b):
        return not_applicable(criterion, "shifts must be positive")
    sa, pos_a = sorted_with_positions(a)
    sb, pos_b = sorted_with_positions(b)
    notes = ["sorted a from input positions " + str(pos_a), "sorted b from input positions " + str(pos_b)]
    searched = 0
    for tail in itertools.permutations(range(1, k)):
        sigma = (0,) + tail
        searched += 1
        if _first_failure(sa, sb, sigma, direction) is None:
            logger.debug("permutation certificate %s after %d candidates", sigma, searched)
            trail = _prefix_trail(sa, sb, sigma, direction, k)
            return trail.report(criterion, tuple(i + 1 for i in sigma), notes)
    identity = tuple(range(k))
    trail = _prefix_trail(sa, sb, identity, direction, _first_failure(sa, sb, identity, direction))
    notes.append("no admissible permutation among " + str(searched) + " candidates")
    return trail.report(criterion, notes=notes)


def nec_sum_check(
    a: Sequence[RationalLike], b: Sequence[RationalLike], direction: Property
) -> ConditionReport:
    """Complete monotonicity needs sum b <= sum a; complete alternation needs sum a <= sum b."""
    a, b = to_rationals(a), to_rationals(b)
    if len(a) != len(b):
        raise InputError("sum condition needs |a| = |b|, got " + str((len(a), len(b))))
    sum_a, sum_b = sum(a, Fraction(0)), sum(b, Fraction(0))
    trail = InequalityTrail()
    if direction is Property.CM:
        trail.le("sum b <= sum a", sum_b, sum_a)
        return trail.report(Criterion.NecCondSumCM)
    trail.le("sum a <= sum b", sum_a, sum_b)
    return trail.report(Criterion.NecCondSumCA)
