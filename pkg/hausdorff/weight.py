"""
Representing densities of rational moment sequences.

A rational sequence with partial fractions a0 + a1 n + sum c / (n + b)^m is the moment
sequence of an atom ``a0`` at t = 1 plus the density

    w(t) = sum c / (m-1)! * t^(b-1) * (-ln t)^(m-1)

on (0, 1), plus the linear part ``a1 n`` in the completely alternating representation.
Sign information about w decides complete monotonicity (w >= 0) and complete
alternation (w <= 0) by uniqueness of the representing measure.
"""
from __future__ import annotations
import csv
import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import torch

from hausdorff.exceptions import InputError, UnsupportedFormError
from hausdorff.oracle import DEFAULT_TOL_REL, Budget, DiffReport, Property, scan_1d
from hausdorff.poly import PartialFractions
from hausdorff.typing import SequenceEvaluator

logger = logging.getLogger(__name__)

DEFAULT_GRID_SIZE = 8192
ABS_TOL_FLOOR = 1e-300
U_MAX = 40.0
# exp() of float64 overflows just above 709
_EXP_CAP = 650.0


class SignStatus(Enum):
    NonPositiveProved = "NonPositiveProved"
    NonNegativeProved = "NonNegativeProved"
    NonPositiveSampled = "NonPositiveSampled"
    NonNegativeSampled = "NonNegativeSampled"
    MixedSign = "MixedSign"
    Inconclusive = "Inconclusive"

    @property
    def proved(self) -> bool:
        return self in (SignStatus.NonPositiveProved, SignStatus.NonNegativeProved)

    @property
    def nonnegative(self) -> bool:
        return self in (SignStatus.NonNegativeProved, SignStatus.NonNegativeSampled)

    @property
    def nonpositive(self) -> bool:
        return self in (SignStatus.NonPositiveProved, SignStatus.NonPositiveSampled)


class ProofRoute(Enum):
    PartialSums = "PartialSums"
    DescartesBound = "DescartesBound"
    Sampling = "Sampling"


@dataclass(frozen=True)
class WeightTerm:
    coefficient: Fraction
    exponent: Fraction
    log_power: int = 0


def _sign(x) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class WeightExpression:
    """
    Density terms c * t^(b-1) * (-ln t)^j, sorted by (b, j), plus the atom at one and
    the linear coefficient of the sequence.
    """

    terms: Tuple[WeightTerm, ...] = ()
    atom_at_one: Fraction = Fraction(0)
    linear_coeff: Fraction = Fraction(0)

    def __post_init__(self):
        merged: Dict[Tuple[Fraction, int], Fraction] = defaultdict(Fraction)
        for term in self.terms:
            if term.exponent <= 0:
                raise InputError("weight exponents must be positive, got " + str(term.exponent))
            if term.log_power < 0:
                raise InputError("log powers must be nonnegative")
            merged[(Fraction(term.exponent), term.log_power)] += Fraction(term.coefficient)
        terms = tuple(WeightTerm(c, b, j) for (b, j), c in sorted(merged.items()))
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "atom_at_one", Fraction(self.atom_at_one))
        object.__setattr__(self, "linear_coeff", Fraction(self.linear_coeff))

    @property
    def is_power_sum(self) -> bool:
        return all(term.log_power == 0 for term in self.terms)

    @property
    def identically_zero(self) -> bool:
        return all(term.coefficient == 0 for term in self.terms)

    def nonzero_terms(self) -> Tuple[WeightTerm, ...]:
        return tuple(term for term in self.terms if term.coefficient != 0)

    def sign_near_zero(self) -> int:
        """Exact sign of w(t) as t -> 0+: smallest exponent, then highest log power, dominates."""
        terms = self.nonzero_terms()
        if not terms:
            return 0
        smallest = terms[0].exponent
        dominant = max((t for t in terms if t.exponent == smallest), key=lambda t: t.log_power)
        return _sign(dominant.coefficient)

    def sign_near_one(self) -> int:
        """Exact sign of w(t) as t -> 1-, from the Taylor expansion in u = -ln t."""
        terms = self.nonzero_terms()
        powers: Dict[Fraction, int] = defaultdict(int)
        for term in terms:
            powers[term.exponent] = max(powers[term.exponent], term.log_power + 1)
        for k in range(sum(powers.values()) + 1):
            coefficient = sum(
                (
                    term.coefficient
                    * (1 - term.exponent) ** (k - term.log_power)
                    / math.factorial(k - term.log_power)
                    for term in terms
                    if term.log_power <= k
                ),
                Fraction(0),
            )
            if coefficient != 0:
                return _sign(coefficient)
        return 0

    def format(self, absorb_t: bool = False) -> str:
        """
        Renders the density. With ``absorb_t`` the factor t^(-1) is folded into the
        exponents, giving t * w(t) = sum c t^b (-ln t)^j.
        """
        parts = []
        for term in self.nonzero_terms():
            power = term.exponent if absorb_t else term.exponent - 1
            text = str(term.coefficient) + "*t^" + str(power)
            if term.log_power:
                text += "*(-ln t)^" + str(term.log_power)
            parts.append(text)
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def __str__(self):
        return self.format()


@dataclass(frozen=True)
class SignReport:
    status: SignStatus
    proof_route: ProofRoute
    witnesses: Tuple[Tuple[float, float], ...] = ()
    min_sampled: Optional[float] = None
    max_sampled: Optional[float] = None
    sign_changes: Optional[int] = None
    endpoint_signs: Tuple[int, int] = (0, 0)
    crossings: Tuple[float, ...] = ()
    identically_zero: bool = False

    @property
    def certified(self) -> bool:
        return self.status.proved


def weight_from_partial_fractions(pf: PartialFractions) -> WeightExpression:
    terms = []
    for term in pf.terms:
        if term.pole <= 0:
            raise InputError("weight needs positive poles, got " + str(term.pole))
        terms.append(
            WeightTerm(
                term.coefficient / math.factorial(term.order - 1), term.pole, term.order - 1
            )
        )
    return WeightExpression(tuple(terms), pf.a0, pf.a1)


def moment_reconstruct(wx: WeightExpression, n: int) -> Fraction:
    """
    Integrates t^n against the atom and density, using
    int_0^1 t^n t^(b-1) (-ln t)^j dt = j! / (n+b)^(j+1).
    """
    value = wx.atom_at_one + wx.linear_coeff * n
    for term in wx.terms:
        value += term.coefficient * math.factorial(term.log_power) / (n + term.exponent) ** (
            term.log_power + 1
        )
    return value


def descartes_sign_changes(coefficients: Iterable[Fraction]) -> int:
    signs = [_sign(c) for c in coefficients if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def partial_sum_sign_test(wx: WeightExpression) -> SignReport:
    """
    For a pure power sum, nonpositive prefix sums of the coefficients (ascending exponent)
    force w <= 0 on (0, 1); applied to -w, nonnegative prefix sums force w >= 0.
    """
    if not wx.is_power_sum:
        raise UnsupportedFormError("partial sum route needs a pure power sum")
    prefix, sums = Fraction(0), []
    for term in wx.terms:
        prefix += term.coefficient
        sums.append(prefix)
    common = dict(
        proof_route=ProofRoute.PartialSums,
        endpoint_signs=(wx.sign_near_zero(), wx.sign_near_one()),
        identically_zero=wx.identically_zero,
    )
    if all(s >= 0 for s in sums):
        return SignReport(SignStatus.NonNegativeProved, **common)
    if all(s <= 0 for s in sums):
        return SignReport(SignStatus.NonPositiveProved, **common)
    return SignReport(SignStatus.Inconclusive, **common)


def _descartes_route(wx: WeightExpression) -> Tuple[Optional[SignStatus], Optional[int]]:
    """
    Zero sign changes prove a definite sign. For a pure power sum the coefficients are
    ordered by exponent; for a single pole t^(b-1) P(-ln t) the coefficients of P are used.
    """
    terms = wx.nonzero_terms()
    if wx.is_power_sum:
        coefficients = [t.coefficient for t in terms]
    elif len({t.exponent for t in terms}) == 1:
        coefficients = [t.coefficient for t in sorted(terms, key=lambda t: t.log_power)]
    else:
        return None, None
    changes = descartes_sign_changes(coefficients)
    if changes:
        return None, changes
    if coefficients and coefficients[0] < 0:
        return SignStatus.NonPositiveProved, 0
    return SignStatus.NonNegativeProved, 0


def _evaluate_u(wx: WeightExpression, u: torch.Tensor) -> Tuple[torch.Tensor, torch.Tensor]:
    total = torch.zeros_like(u)
    scale = torch.zeros_like(u)
    for term in wx.nonzero_terms():
        value = (
            float(term.coefficient)
            * torch.exp(-(float(term.exponent) - 1.0) * u)
            * u ** term.log_power
        )
        total = total + value
        scale = torch.maximum(scale, value.abs())
    return total, scale


def evaluate_weight(wx: WeightExpression, t) -> torch.Tensor:
    """Evaluates w at points t in (0, 1) in float64."""
    t = torch.as_tensor(t, dtype=torch.float64)
    return _evaluate_u(wx, -torch.log(t))[0]


def _u_cap(wx: WeightExpression) -> float:
    spread = max((abs(float(t.exponent) - 1.0) for t in wx.nonzero_terms()), default=0.0)
    return min(700.0, _EXP_CAP / spread) if spread > 0 else 700.0


def sample_points(wx: WeightExpression, grid_size: int = DEFAULT_GRID_SIZE) -> torch.Tensor:
    """
    Sampling abscissae in u = -ln t: a uniform t grid, a uniform u grid on (0, 40],
    points u = 2^-k towards t = 1 and geometric points beyond u = 40 towards t = 0.
    Returned in ascending t.
    """
    if grid_size < 64:
        raise InputError("grid_size must be at least 64, got " + str(grid_size))
    t_grid = torch.linspace(0.0, 1.0, grid_size + 2, dtype=torch.float64)[1:-1]
    u_grid = torch.linspace(0.0, U_MAX, grid_size + 1, dtype=torch.float64)[1:]
    near_one = torch.tensor([2.0 ** -k for k in range(1, 53)], dtype=torch.float64)
    far, cap = [], _u_cap(wx)
    u = U_MAX * 1.25
    while u <= cap:
        far.append(u)
        u *= 1.25
    u_all = torch.cat(
        [-torch.log(t_grid), u_grid, near_one, torch.tensor(far, dtype=torch.float64)]
    )
    return torch.sort(u_all, descending=True).values


def sample_weight(
    wx: WeightExpression, grid_size: int = DEFAULT_GRID_SIZE
) -> Tuple[torch.Tensor, torch.Tensor, torch.Tensor]:
    """Returns (t, w(t), per-point term scale) in ascending t."""
    u = sample_points(wx, grid_size)
    w, scale = _evaluate_u(wx, u)
    return torch.exp(-u), w, scale


def _bisect(wx: WeightExpression, lo: float, hi: float, sign_lo: int, steps: int = 60) -> float:
    for _ in range(steps):
        mid = 0.5 * (lo + hi)
        value = float(_evaluate_u(wx, torch.tensor([mid], dtype=torch.float64))[0][0])
        if _sign(value) == sign_lo:
            lo = mid
        else:
            hi = mid
    return math.exp(-0.5 * (lo + hi))


def sign_analyze(
    wx: WeightExpression,
    grid_size: int = DEFAULT_GRID_SIZE,
    tol_rel: float = DEFAULT_TOL_REL,
) -> SignReport:
    """
    Sign of the density on (0, 1). Proofs come from zero coefficient sign changes
    (DescartesBound) or nonpositive / nonnegative prefix sums (PartialSums); otherwise
    the density is sampled and the result is labeled as non-certified.

    A sample counts as positive (negative) when it exceeds tol_rel times the largest
    term magnitude at that point, with an absolute floor of 1e-300.
    """
    endpoint_signs = (wx.sign_near_zero(), wx.sign_near_one())
    u = sample_points(wx, grid_size)
    w, scale = _evaluate_u(wx, u)
    t = torch.exp(-u)
    tol = torch.clamp(tol_rel * scale, min=ABS_TOL_FLOOR)
    positive, negative = w > tol, w < -tol
    common = dict(
        min_sampled=float(w.min()) if len(w) else 0.0,
        max_sampled=float(w.max()) if len(w) else 0.0,
        endpoint_signs=endpoint_signs,
        identically_zero=wx.identically_zero,
    )

    status, changes = _descartes_route(wx)
    if status is not None:
        logger.debug("weight sign proved by zero sign changes: %s", status.value)
        return SignReport(status, ProofRoute.DescartesBound, sign_changes=0, **common)
    if wx.is_power_sum:
        proved = partial_sum_sign_test(wx)
        if proved.status.proved:
            logger.debug("weight sign proved by partial sums: %s", proved.status.value)
            return SignReport(proved.status, ProofRoute.PartialSums, sign_changes=changes, **common)

    signs = positive.to(torch.int64) - negative.to(torch.int64)
    crossings: List[float] = []
    previous = None
    for i in torch.nonzero(signs).flatten().tolist():
        if previous is not None and signs[i] != signs[previous]:
            crossings.append(_bisect(wx, float(u[previous]), float(u[i]), int(signs[previous])))
        previous = i
    witnesses = []
    if bool(negative.any()):
        i = int(torch.argmin(torch.where(negative, w, torch.zeros_like(w))))
        witnesses.append((float(t[i]), float(w[i])))
    if bool(positive.any()):
        i = int(torch.argmax(torch.where(positive, w, torch.zeros_like(w))))
        witnesses.append((float(t[i]), float(w[i])))

    has_pos, has_neg = bool(positive.any()), bool(negative.any())
    if has_pos and has_neg:
        result = SignStatus.MixedSign
    elif has_neg:
        contradicted = max(endpoint_signs) > 0
        result = SignStatus.Inconclusive if contradicted else SignStatus.NonPositiveSampled
    elif has_pos:
        contradicted = min(endpoint_signs) < 0
        result = SignStatus.Inconclusive if contradicted else SignStatus.NonNegativeSampled
    else:
        result = SignStatus.Inconclusive
    logger.debug("weight sign sampled (non-certified): %s", result.value)
    return SignReport(
        result,
        ProofRoute.Sampling,
        witnesses=tuple(witnesses),
        sign_changes=changes,
        crossings=tuple(crossings[:16]),
        **common,
    )


def dump_weight_csv(wx: WeightExpression, path: str, grid_size: int = DEFAULT_GRID_SIZE) -> None:
    t, w, _ = sample_weight(wx, grid_size)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["t", "w"])
        for ti, wi in zip(t.tolist(), w.tolist()):
            writer.writerow([format(ti, ".17g"), format(wi, ".17g")])


def _exp_sequence(psi: SequenceEvaluator, t: float) -> SequenceEvaluator:
    def phi(m: int) -> float:
        exponent = -t * float(psi(m))
        if exponent > 700.0:
            logger.warning("clamping exp(%g) at psi(%d); psi is very negative", exponent, m)
            exponent = 700.0
        return math.exp(exponent)

    return phi


def ca_exp_reports(
    psi: SequenceEvaluator,
    t_values: Sequence[float],
    max_order: int = Budget.max_order,
    max_shift: int = Budget.max_shift,
    tol_rel: float = DEFAULT_TOL_REL,
) -> Dict[float, DiffReport]:
    """Float-mode CM scans of m -> exp(-t psi(m)) for every sampled t."""
    reports = {}
    for t in t_values:
        if not t > 0:
            raise InputError("exponential spot check needs t > 0, got " + str(t))
        reports[t] = scan_1d(
            _exp_sequence(psi, float(t)), Property.CM, max_order, max_shift, False, tol_rel
        )
    return reports


def ca_exp_spotcheck(
    psi: SequenceEvaluator,
    t_values: Sequence[float],
    max_order: int = Budget.max_order,
    max_shift: int = Budget.max_shift,
    tol_rel: float = DEFAULT_TOL_REL,
) -> bool:
    """
    psi is completely alternating iff exp(-t psi) is completely monotone for every t > 0;
    this checks the sampled t values at a finite budget.
    """
    for t, report in ca_exp_reports(psi, t_values, max_order, max_shift, tol_rel).items():
        if report.violated:
            logger.info(
                "exp(-%g psi) is not CM: orders %s shift %s value %r",
                t,
                report.witness.orders,
                report.witness.shift,
                report.witness.value,
            )
            return False
    return True
