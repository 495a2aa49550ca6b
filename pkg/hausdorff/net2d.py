"""
Nets on Z_+^2. A net f(m, n) = 1 / (psi(m) + alpha n) with psi > 0 is completely monotone
on Z_+^2 exactly when psi is completely alternating on Z_+; a positive alpha does not
change this. The two closed-form families below are instances of that equivalence.
"""
from __future__ import annotations
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

from hausdorff.criteria.characterization import degree2_iff
from hausdorff.criteria.report import ConditionReport, Criterion, InequalityTrail, Status
from hausdorff.exact import to_rational, to_rationals
from hausdorff.exceptions import InputError, PreconditionError
from hausdorff.oracle import Budget, DiffReport, Property, scan_1d, scan_2d
from hausdorff.poly import RationalSeq
from hausdorff.typing import RationalLike, Scalar

logger = logging.getLogger(__name__)


class Net2D(ABC):
    """An exactly evaluated function on Z_+^2."""

    @abstractmethod
    def __call__(self, m: int, n: int) -> Scalar:
        pass

    @abstractmethod
    def closed_form(self) -> Optional[ConditionReport]:
        """The if-and-only-if criterion for complete monotonicity, if the family has one."""
        pass

    def scan(self, budget: Budget = Budget(), prop: Property = Property.CM) -> DiffReport:
        return scan_2d(self, prop, budget.max_order_2d, budget.max_shift_2d)


class CAJCMNet(Net2D):
    def __init__(self, psi: RationalSeq, alpha: RationalLike = 1):
        self.psi = psi
        self.alpha = to_rational(alpha)
        if self.alpha <= 0:
            raise InputError("alpha must be positive, got " + str(self.alpha))

    def __call__(self, m: int, n: int) -> Scalar:
        return 1 / (self.psi(m) + self.alpha * n)

    def closed_form(self) -> Optional[ConditionReport]:
        report = degree2_iff(self.psi)
        return None if report.status is Status.NotApplicable else report

    def __str__(self):
        return "1 / (psi(m) + " + str(self.alpha) + " n), psi = " + str(self.psi)


class BiPolyNet(Net2D):
    """
    Form "i" is 1 / (a + b m + c n + d m n), form "ii" is (c + d m) / (a + b m + c n + d m n).
    Both are completely monotone iff ad - bc <= 0.
    """

    FORMS = ("i", "ii")

    def __init__(self, a: RationalLike, b: RationalLike, c: RationalLike, d: RationalLike, form: str = "i"):
        self.a, self.b, self.c, self.d = _bipoly_params(a, b, c, d)
        if form not in self.FORMS:
            raise InputError("bipoly form must be 'i' or 'ii', got " + repr(form))
        self.form = form

    def __call__(self, m: int, n: int) -> Scalar:
        den = self.a + self.b * m + self.c * n + self.d * m * n
        if self.form == "i":
            return 1 / den
        return (self.c + self.d * m) / den

    def closed_form(self) -> ConditionReport:
        return bipoly_iff(self.a, self.b, self.c, self.d)

    def __str__(self):
        den = "(" + " + ".join(
            [str(self.a), str(self.b) + " m", str(self.c) + " n", str(self.d) + " m n"]
        ) + ")"
        num = "1" if self.form == "i" else "(" + str(self.c) + " + " + str(self.d) + " m)"
        return num + " / " + den


class BiCompKind(Enum):
    I = "I"
    II = "II"
    III = "III"


_BICOMP_ARITY = {BiCompKind.I: 2, BiCompKind.II: 3, BiCompKind.III: 4}


def _bicomp_params(kind: Union[BiCompKind, str], params: Sequence[RationalLike]):
    kind = BiCompKind(kind)
    params = to_rationals(params)
    if len(params) != _BICOMP_ARITY[kind]:
        raise InputError(
            "bicomp " + kind.value + " takes " + str(_BICOMP_ARITY[kind]) + " parameters, got " + str(len(params))
        )
    if any(p <= 0 for p in params):
        raise InputError("bicomp parameters must be positive")
    if kind is BiCompKind.I:
        a, b = params[:1], params[1:]
    elif kind is BiCompKind.II:
        a, b = params[:1], tuple(sorted(params[1:]))
    else:
        a, b = tuple(sorted(params[:2])), tuple(sorted(params[2:]))
    return kind, a, b


class BiCompNet(Net2D):
    """
    The nets
        I:   (m+a1) / ((m+b1) + (m+a1) n)
        II:  (m+a1) / ((m+b1)(m+b2) + (m+a1) n)
        III: (m+a1)(m+a2) / ((m+b1)(m+b2) + (m+a1)(m+a2) n)
    with parameters given as (a1, b1), (a1, b1, b2) and (a1, a2, b1, b2).
    """

    def __init__(self, kind: Union[BiCompKind, str], params: Sequence[RationalLike]):
        self.kind, self.a, self.b = _bicomp_params(kind, params)

    @property
    def psi(self) -> RationalSeq:
        """The sequence psi with f = 1 / (psi(m) + n)."""
        return RationalSeq.from_shifts(self.b, self.a)

    def __call__(self, m: int, n: int) -> Scalar:
        p = Fraction(1)
        for a in self.a:
            p *= m + a
        q = Fraction(1)
        for b in self.b:
            q *= m + b
        return p / (q + p * n)

    def closed_form(self) -> ConditionReport:
        return bicomp_iff(self.kind, self.a + self.b)


def bicomp_iff(kind: Union[BiCompKind, str], params: Sequence[RationalLike]) -> ConditionReport:
    kind, a, b = _bicomp_params(kind, params)
    trail = InequalityTrail()
    trail.le("b1 <= a1", b[0], a[0])
    if kind is not BiCompKind.I:
        trail.le("a1 <= b2", a[0], b[1])
    if kind is BiCompKind.III:
        trail.le("b1 + b2 <= a1 + a2", b[0] + b[1], a[0] + a[1])
    return trail.report(Criterion.BiComp, notes=("kind " + kind.value,))


def _bipoly_params(a, b, c, d) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    a, b, c, d = to_rationals((a, b, c, d))
    if a <= 0:
        raise InputError("bipoly needs a > 0, got " + str(a))
    if min(b, c, d) < 0:
        raise InputError("bipoly needs b, c, d >= 0")
    return a, b, c, d


def bipoly_iff(a: RationalLike, b: RationalLike, c: RationalLike, d: RationalLike) -> ConditionReport:
    """Complete monotonicity of both bipoly forms: ad - bc <= 0."""
    a, b, c, d = _bipoly_params(a, b, c, d)
    trail = InequalityTrail()
    trail.le("ad - bc <= 0", a * d - b * c, Fraction(0))
    return trail.report(Criterion.BiPoly)


@dataclass(frozen=True)
class CAJCMResult:
    """
    ``ca_verdict`` is the degree-2 characterization when it applies, else the 1-D CA scan.
    ``consistent`` is False only when complete alternation was established and the exact
    2-D scan still found a violation. ``budget_warning`` flags a psi known not to be CA
    whose net showed no violation within budget.
    """

    ca_verdict: Union[ConditionReport, DiffReport]
    cm2d_verdict: DiffReport
    consistent: bool
    budget_warning: bool = False

    @property
    def ca_established(self) -> Optional[bool]:
        if isinstance(self.ca_verdict, ConditionReport):
            return self.ca_verdict.holds
        return False if self.ca_verdict.violated else None


def cajcm_classify(psi: RationalSeq, alpha: RationalLike = 1, budget: Budget = Budget()) -> CAJCMResult:
    net = CAJCMNet(psi, alpha)
    horizon = max(budget.max_order + budget.max_shift, budget.max_order_2d[0] + budget.max_shift_2d[0])
    for m in range(horizon + 1):
        if psi(m) <= 0:
            raise PreconditionError(
                "psi must be strictly positive, psi(" + str(m) + ") = " + str(psi(m))
            )
    ca_verdict = net.closed_form()
    if ca_verdict is None:
        ca_verdict = scan_1d(psi, Property.CA, budget.max_order, budget.max_shift)
    cm2d = net.scan(budget)
    result = CAJCMResult(ca_verdict, cm2d, True)
    established = result.ca_established
    consistent = not (established is True and cm2d.violated)
    warning = established is False and not cm2d.violated
    if not consistent:
        logger.warning("psi = %s is completely alternating but the net scan found %s", psi, cm2d.witness)
    if warning:
        logger.warning("psi = %s is not completely alternating; no net violation within %s", psi, cm2d.max_shift)
    return CAJCMResult(ca_verdict, cm2d, consistent, warning)
