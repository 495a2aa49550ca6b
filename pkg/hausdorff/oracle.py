"""
Finite-difference oracle for complete monotonicity (CM) and complete alternation (CA)
on the semigroups Z_+ and Z_+^2, following the definition through the backward
differences nabla_a = I - E_a.

Exact arithmetic is the default. The float mode sums terms with :func:`math.fsum`
and treats ``|value| <= tol_rel * max|term|`` as zero.
"""
from __future__ import annotations
import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from hausdorff.exact import binomial
from hausdorff.exceptions import BudgetError, InputError, PreconditionError
from hausdorff.typing import NetEvaluator, Point, Scalar, SequenceEvaluator

logger = logging.getLogger(__name__)

DEFAULT_TOL_REL = 1e-12


class Property(Enum):
    CM = "CM"
    CA = "CA"


class Verdict(Enum):
    NoViolationFound = "NoViolationFound"
    Violation = "Violation"


@dataclass(frozen=True)
class Budget:
    max_order: int = 12
    max_shift: int = 50
    max_order_2d: Tuple[int, int] = (6, 6)
    max_shift_2d: Tuple[int, int] = (20, 20)

    def __post_init__(self):
        if self.max_order < 1 or min(self.max_order_2d) < 0 or sum(self.max_order_2d) < 1:
            raise BudgetError("difference orders must be at least 1")
        if self.max_shift < 0 or min(self.max_shift_2d) < 0:
            raise BudgetError("shift budgets must be nonnegative")


@dataclass(frozen=True)
class Witness:
    orders: Tuple[int, ...]
    shift: Tuple[int, ...]
    value: Scalar


@dataclass(frozen=True)
class DiffReport:
    property: Property
    max_order: Tuple[int, ...]
    max_shift: Tuple[int, ...]
    verdict: Verdict
    witness: Optional[Witness] = None
    exact: bool = True

    @property
    def violated(self) -> bool:
        return self.verdict is Verdict.Violation


def _checked(value: Scalar, exact: bool) -> Scalar:
    if exact:
        if isinstance(value, float):
            raise PreconditionError(
                "evaluator returned a float in exact mode; pass exact=False for float evaluation"
            )
        return Fraction(value)
    return float(value)


def _violates(prop: Property, total_order: int, value: Scalar, tol: float = 0.0) -> bool:
    if prop is Property.CM:
        return value < -tol
    return total_order >= 1 and value > tol


def _float_sum(terms: Sequence[float]) -> Tuple[float, float]:
    scale = max((abs(t) for t in terms), default=0.0)
    return math.fsum(terms), scale


def forward_diff_1d(
    phi: SequenceEvaluator, order: int, shift: int, exact: bool = True
) -> Scalar:
    """
    Computes nabla_1^j phi(m) = sum_i (-1)^i C(j, i) phi(m + i).
    """
    terms = [
        (-1) ** i * binomial(order, i) * _checked(phi(shift + i), exact)
        for i in range(order + 1)
    ]
    if exact:
        return sum(terms, Fraction(0))
    return _float_sum(terms)[0]


def mixed_diff_2d(
    f: NetEvaluator, orders: Tuple[int, int], shift: Tuple[int, int], exact: bool = True
) -> Scalar:
    """
    Computes nabla_(1,0)^j1 nabla_(0,1)^j2 f(m, n) as a binomial double sum.
    """
    (j1, j2), (m, n) = orders, shift
    terms = [
        (-1) ** (i1 + i2)
        * binomial(j1, i1)
        * binomial(j2, i2)
        * _checked(f(m + i1, n + i2), exact)
        for i1 in range(j1 + 1)
        for i2 in range(j2 + 1)
    ]
    if exact:
        return sum(terms, Fraction(0))
    return _float_sum(terms)[0]


def _add(point: Point, step: Point) -> Point:
    if isinstance(point, tuple):
        return tuple(p + s for p, s in zip(point, step))
    return point + step


def forward_diff_general(
    phi, steps: Iterable[Point], shift: Point, exact: bool = True
) -> Scalar:
    """
    Computes nabla_{a_1} ... nabla_{a_n} phi(s) by inclusion-exclusion over subsets of the steps.
    Points of Z_+^2 are tuples and are unpacked into the evaluator.
    """
    steps = list(steps)
    if not steps:
        raise InputError("forward_diff_general needs at least one step")
    weights = Counter()
    for chosen in itertools.product((False, True), repeat=len(steps)):
        point = shift
        for pick, step in zip(chosen, steps):
            if pick:
                point = _add(point, step)
        weights[point] += (-1) ** sum(chosen)
    terms = []
    for point, weight in weights.items():
        if weight == 0:
            continue
        value = phi(*point) if isinstance(point, tuple) else phi(point)
        terms.append(weight * _checked(value, exact))
    if exact:
        return sum(terms, Fraction(0))
    return _float_sum(terms)[0]


def scan_1d(
    phi: SequenceEvaluator,
    prop: Property,
    max_order: int = Budget.max_order,
    max_shift: int = Budget.max_shift,
    exact: bool = True,
    tol_rel: float = DEFAULT_TOL_REL,
) -> DiffReport:
    """
    Checks the sign of nabla_1^j phi(m) for 0 <= j <= N, 0 <= m <= M (CA skips j = 0)
    and returns the first violation in (j, then m) order.
    """
    if max_order < 1:
        raise BudgetError("scan_1d needs max_order >= 1, got " + str(max_order))
    if max_shift < 0:
        raise BudgetError("scan_1d needs max_shift >= 0, got " + str(max_shift))
    values = [_checked(phi(i), exact) for i in range(max_order + max_shift + 1)]

    def report(witness=None):
        return DiffReport(
            prop,
            (max_order,),
            (max_shift,),
            Verdict.Violation if witness else Verdict.NoViolationFound,
            witness,
            exact,
        )

    if exact:
        row: List[Fraction] = values
        for j in range(max_order + 1):
            if j:
                row = [row[i] - row[i + 1] for i in range(len(row) - 1)]
            for m in range(max_shift + 1):
                if _violates(prop, j, row[m]):
                    logger.debug("%s violation at order %d shift %d", prop.value, j, m)
                    return report(Witness((j,), (m,), row[m]))
        return report()

    for j in range(max_order + 1):
        coefficients = [(-1) ** i * binomial(j, i) for i in range(j + 1)]
        for m in range(max_shift + 1):
            value, scale = _float_sum([c * values[m + i] for i, c in enumerate(coefficients)])
            if _violates(prop, j, value, tol_rel * scale):
                logger.debug("%s float violation at order %d shift %d", prop.value, j, m)
                return report(Witness((j,), (m,), value))
    return report()


def scan_2d(
    f: NetEvaluator,
    prop: Property,
    max_order: Tuple[int, int] = Budget.max_order_2d,
    max_shift: Tuple[int, int] = Budget.max_shift_2d,
    exact: bool = True,
    tol_rel: float = DEFAULT_TOL_REL,
) -> DiffReport:
    """
    Mixed-difference scan on Z_+^2. Orders range over 0 <= j1 <= N1, 0 <= j2 <= N2
    (CA needs total order >= 1); the first violation in (j1, j2, m, n) order is reported.
    """
    (n1, n2), (m1, m2) = max_order, max_shift
    if min(n1, n2) < 0 or n1 + n2 < 1:
        raise BudgetError("scan_2d needs N1 + N2 >= 1, got " + str(max_order))
    if min(m1, m2) < 0:
        raise BudgetError("scan_2d needs nonnegative shifts, got " + str(max_shift))

    def report(witness=None):
        return DiffReport(
            prop,
            tuple(max_order),
            tuple(max_shift),
            Verdict.Violation if witness else Verdict.NoViolationFound,
            witness,
            exact,
        )

    if not exact:
        for j1, j2 in itertools.product(range(n1 + 1), range(n2 + 1)):
            for m, n in itertools.product(range(m1 + 1), range(m2 + 1)):
                terms = [
                    (-1) ** (i1 + i2)
                    * binomial(j1, i1)
                    * binomial(j2, i2)
                    * _checked(f(m + i1, n + i2), False)
                    for i1 in range(j1 + 1)
                    for i2 in range(j2 + 1)
                ]
                value, scale = _float_sum(terms)
                if _violates(prop, j1 + j2, value, tol_rel * scale):
                    return report(Witness((j1, j2), (m, n), value))
        return report()

    grid = [
        [_checked(f(m, n), True) for n in range(m2 + n2 + 1)] for m in range(m1 + n1 + 1)
    ]
    base = grid
    for j1 in range(n1 + 1):
        if j1:
            base = [
                [a - b for a, b in zip(base[i], base[i + 1])] for i in range(len(base) - 1)
            ]
        cur = base
        for j2 in range(n2 + 1):
            if j2:
                cur = [[row[i] - row[i + 1] for i in range(len(row) - 1)] for row in cur]
            for m in range(m1 + 1):
                for n in range(m2 + 1):
                    if _violates(prop, j1 + j2, cur[m][n]):
                        logger.debug(
                            "%s violation at orders %s shift %s", prop.value, (j1, j2), (m, n)
                        )
                        return report(Witness((j1, j2), (m, n), cur[m][n]))
    return report()
