"""
Runs every analysis on a request and synthesizes one verdict per property.

Verdict precedence, strongest first:
    1. an if-and-only-if criterion
    2. the linear and constant coefficients together with a proved weight sign
    3. a failed necessary condition
    4. an exact finite-difference violation (a genuine counterexample)
    5. an exact endpoint sign of the weight in the wrong direction
    6. a sampled weight sign in the wrong direction (EmpiricallyRefuted)
    7. a clean finite-difference scan (EmpiricallySupported)
"""
from __future__ import annotations
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, FrozenSet, Optional, Sequence, Tuple

from hausdorff.criteria import IFF_CRITERIA, NECESSARY_CRITERIA, ConditionReport, Status, ratio_criteria
from hausdorff.exceptions import InconsistencyError, InputError
from hausdorff.net2d import BiCompNet, BiPolyNet, CAJCMNet, cajcm_classify
from hausdorff.oracle import DEFAULT_TOL_REL, Budget, DiffReport, Property, Witness, scan_1d
from hausdorff.poly import PartialFractions, RationalSeq, partial_fractions
from hausdorff.weight import (
    DEFAULT_GRID_SIZE,
    SignReport,
    SignStatus,
    dump_weight_csv,
    sign_analyze,
    weight_from_partial_fractions,
)

logger = logging.getLogger(__name__)

NET_FAMILIES = ("cajcm", "bipoly-i", "bipoly-ii", "bicomp-I", "bicomp-II", "bicomp-III")


class Conclusion(Enum):
    Proved = "Proved"
    ProvedNot = "ProvedNot"
    EmpiricallySupported = "EmpiricallySupported"
    EmpiricallyRefuted = "EmpiricallyRefuted"
    Unknown = "Unknown"


@dataclass(frozen=True)
class NetRequest:
    family: str
    params: Tuple[Fraction, ...] = ()
    alpha: Fraction = Fraction(1)

    def __post_init__(self):
        if self.family not in NET_FAMILIES:
            raise InputError("unknown net family " + repr(self.family))


@dataclass(frozen=True)
class AnalysisRequest:
    """
    Exactly one target: a rational sequence (``zeros`` or ``numerator_coeffs`` over
    ``poles``) or a net. For a cajcm net, the sequence fields describe psi.
    """

    poles: Tuple[Fraction, ...] = ()
    zeros: Optional[Tuple[Fraction, ...]] = None
    numerator_coeffs: Optional[Tuple[Fraction, ...]] = None
    net: Optional[NetRequest] = None
    properties: FrozenSet[Property] = frozenset((Property.CM, Property.CA))
    budget: Budget = Budget()
    grid_size: int = DEFAULT_GRID_SIZE
    tol_rel: float = DEFAULT_TOL_REL
    shift: Fraction = Fraction(0)
    dump_weight: Optional[str] = None

    def __post_init__(self):
        if self.zeros is not None and self.numerator_coeffs is not None:
            raise InputError("give the numerator either factored or by coefficients, not both")
        ratio = self.zeros is not None or self.numerator_coeffs is not None
        needs_psi = self.net is not None and self.net.family == "cajcm"
        if self.net is not None and ratio and not needs_psi:
            raise InputError("a request has exactly one target")
        if needs_psi and not ratio:
            raise InputError("the cajcm family needs psi as --num/--den")
        if self.net is None and not ratio:
            raise InputError("no target: give --num or --num-coeffs")
        if not self.properties:
            raise InputError("no property requested")

    def sequence(self) -> RationalSeq:
        if self.zeros is not None:
            r = RationalSeq.from_shifts(self.zeros, self.poles)
        else:
            r = RationalSeq.from_coefficients(self.numerator_coeffs, self.poles)
        return r.shifted(self.shift)


@dataclass(frozen=True)
class PropertyVerdict:
    property: Property
    conclusion: Conclusion
    rule: str
    witness: Optional[Witness] = None
    notes: Tuple[str, ...] = ()


@dataclass(frozen=True)
class WeightSummary:
    expression: str
    sign: SignReport


@dataclass(frozen=True)
class Report:
    request: AnalysisRequest
    partial_fractions: Optional[PartialFractions] = None
    criteria: Tuple[ConditionReport, ...] = ()
    weight: Optional[WeightSummary] = None
    oracle: Dict[str, DiffReport] = field(default_factory=dict)
    verdicts: Dict[str, PropertyVerdict] = field(default_factory=dict)


def _budget_text(report: DiffReport) -> str:
    return "order " + str(report.max_order) + ", shift " + str(report.max_shift)


def _uniqueness_rule(prop: Property, pf: PartialFractions, sign: SignReport) -> Optional[Tuple[Conclusion, str]]:
    zero = sign.identically_zero
    if prop is Property.CA:
        if pf.a1 < 0:
            return Conclusion.ProvedNot, "linear coefficient a1 < 0"
        if zero or sign.status is SignStatus.NonPositiveProved:
            return Conclusion.Proved, "a1 >= 0 and weight <= 0 (" + sign.proof_route.value + ")"
        if sign.status is SignStatus.NonNegativeProved:
            return Conclusion.ProvedNot, "weight proved >= 0 and not identically zero"
        return None
    if pf.a1 != 0:
        return Conclusion.ProvedNot, "linear coefficient a1 != 0"
    if pf.a0 < 0:
        return Conclusion.ProvedNot, "atom at one a0 < 0"
    if zero or sign.status is SignStatus.NonNegativeProved:
        return Conclusion.Proved, "a1 = 0, a0 >= 0 and weight >= 0 (" + sign.proof_route.value + ")"
    if sign.status is SignStatus.NonPositiveProved:
        return Conclusion.ProvedNot, "weight proved <= 0 and not identically zero"
    return None


def _wrong_sign(prop: Property, sign: int) -> bool:
    return sign > 0 if prop is Property.CA else sign < 0


def _checked(verdict: PropertyVerdict, oracle: Optional[DiffReport]) -> PropertyVerdict:
    if verdict.conclusion is Conclusion.Proved and oracle is not None and oracle.violated and oracle.exact:
        raise InconsistencyError(
            verdict.property.value
            + " proved by '"
            + verdict.rule
            + "' but the exact scan found "
            + str(oracle.witness)
        )
    return verdict


def synthesize(
    prop: Property,
    criteria: Sequence[ConditionReport],
    pf: PartialFractions,
    sign: SignReport,
    oracle: DiffReport,
) -> PropertyVerdict:
    by_criterion = {report.criterion: report for report in criteria}

    def verdict(conclusion, rule, witness=None):
        return _checked(PropertyVerdict(prop, conclusion, rule, witness), oracle)

    for criterion in IFF_CRITERIA[prop]:
        report = by_criterion.get(criterion)
        if report is not None and report.status is not Status.NotApplicable:
            conclusion = Conclusion.Proved if report.holds else Conclusion.ProvedNot
            return verdict(conclusion, "iff criterion " + criterion.value, oracle.witness)
    unique = _uniqueness_rule(prop, pf, sign)
    if unique is not None:
        return verdict(*unique, oracle.witness)
    for criterion in NECESSARY_CRITERIA[prop]:
        report = by_criterion.get(criterion)
        if report is not None and report.fails:
            return verdict(Conclusion.ProvedNot, "necessary condition " + criterion.value + " fails", oracle.witness)
    if oracle.violated:
        return verdict(Conclusion.ProvedNot, "exact oracle violation", oracle.witness)
    if any(_wrong_sign(prop, s) for s in sign.endpoint_signs):
        return verdict(Conclusion.ProvedNot, "exact endpoint sign of the weight")
    wrong = SignStatus.NonNegativeSampled if prop is Property.CA else SignStatus.NonPositiveSampled
    if sign.status in (SignStatus.MixedSign, wrong):
        return verdict(Conclusion.EmpiricallyRefuted, "sampled weight sign " + sign.status.value)
    return verdict(
        Conclusion.EmpiricallySupported, "no violation up to " + _budget_text(oracle)
    )


def analyze_sequence(r: RationalSeq, request: AnalysisRequest):
    from hausdorff import _debug

    pf = partial_fractions(r)
    wx = weight_from_partial_fractions(pf)
    sign = sign_analyze(wx, request.grid_size, request.tol_rel)
    if _debug:
        logger.debug("weight of %s: %s -> %s", r, wx, sign.status.value)
    if request.dump_weight:
        dump_weight_csv(wx, request.dump_weight, request.grid_size)
    return pf, wx, sign


def classify_command(request: AnalysisRequest) -> Report:
    if request.net is not None:
        return net2d_command(request)
    r = request.sequence()
    pf, wx, sign = analyze_sequence(r, request)
    criteria = ratio_criteria(r)
    oracle, verdicts = {}, {}
    for prop in sorted(request.properties, key=lambda p: p.value):
        scan = scan_1d(r, prop, request.budget.max_order, request.budget.max_shift)
        oracle[prop.value] = scan
        verdicts[prop.value] = synthesize(prop, criteria, pf, sign, scan)
        logger.debug("%s: %s by %s", prop.value, verdicts[prop.value].conclusion.value, verdicts[prop.value].rule)
    return Report(request, pf, criteria, WeightSummary(wx.format(), sign), oracle, verdicts)


def _net_verdict(prop: Property, closed: Optional[ConditionReport], scan: DiffReport, notes=()) -> PropertyVerdict:
    if closed is not None and closed.status is not Status.NotApplicable:
        conclusion = Conclusion.Proved if closed.holds else Conclusion.ProvedNot
        verdict = PropertyVerdict(prop, conclusion, "iff criterion " + closed.criterion.value, scan.witness, notes)
    elif scan.violated:
        verdict = PropertyVerdict(prop, Conclusion.ProvedNot, "exact oracle violation", scan.witness, notes)
    else:
        verdict = PropertyVerdict(
            prop, Conclusion.EmpiricallySupported, "no violation up to " + _budget_text(scan), None, notes
        )
    return _checked(verdict, scan)


def net2d_command(request: AnalysisRequest) -> Report:
    wanted = request.net
    if wanted.family == "cajcm":
        psi = request.sequence()
        result = cajcm_classify(psi, wanted.alpha, request.budget)
        notes = ("consistent" if result.consistent else "inconsistent",)
        if result.budget_warning:
            notes += ("psi is not completely alternating but no net violation surfaced within budget",)
        closed = CAJCMNet(psi, wanted.alpha).closed_form()
        criteria = (closed,) if closed is not None else ()
        oracle = {Property.CM.value: result.cm2d_verdict}
        verdicts = {Property.CM.value: _net_verdict(Property.CM, closed, result.cm2d_verdict, notes)}
        if isinstance(result.ca_verdict, DiffReport):
            oracle[Property.CA.value] = result.ca_verdict
            verdicts[Property.CA.value] = _net_verdict(Property.CA, None, result.ca_verdict)
        else:
            verdicts[Property.CA.value] = PropertyVerdict(
                Property.CA,
                Conclusion.Proved if result.ca_verdict.holds else Conclusion.ProvedNot,
                "iff criterion " + result.ca_verdict.criterion.value,
            )
        return Report(request, partial_fractions(psi), criteria, None, oracle, verdicts)

    if wanted.family.startswith("bipoly"):
        if len(wanted.params) != 4:
            raise InputError("bipoly takes 4 parameters a,b,c,d")
        net = BiPolyNet(*wanted.params, form=wanted.family.split("-")[1])
    else:
        net = BiCompNet(wanted.family.split("-")[1], wanted.params)
    closed = net.closed_form()
    scan = net.scan(request.budget)
    return Report(
        request,
        None,
        (closed,),
        None,
        {Property.CM.value: scan},
        {Property.CM.value: _net_verdict(Property.CM, closed, scan, (str(net),))},
    )


def decompose_command(request: AnalysisRequest) -> Report:
    r = request.sequence()
    return Report(request, partial_fractions(r))


def weight_command(request: AnalysisRequest) -> Report:
    r = request.sequence()
    pf, wx, sign = analyze_sequence(r, request)
    return Report(request, pf, weight=WeightSummary(wx.format(), sign))


def conditions_command(request: AnalysisRequest) -> Report:
    r = request.sequence()
    return Report(request, partial_fractions(r), ratio_criteria(r))
