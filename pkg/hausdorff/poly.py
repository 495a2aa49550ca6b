from __future__ import annotations
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from hausdorff.exact import rational_sqrt, solve_exact, to_rational, to_rationals
from hausdorff.exceptions import InputError, UnsupportedFormError
from hausdorff.typing import RationalLike, Scalar

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Poly:
    """
    Polynomial with exact rational coefficients in ascending degree order.
    The highest stored coefficient is nonzero; the zero polynomial has no coefficients.
    """

    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        coeffs = list(to_rationals(self.coefficients))
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def constant(cls, value: RationalLike) -> Poly:
        return cls((to_rational(value),))

    @classmethod
    def from_shift_roots(cls, shifts: Iterable[RationalLike]) -> Poly:
        return poly_from_shift_roots(shifts)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, i: int) -> Fraction:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else Fraction(0)

    def __call__(self, x: Scalar) -> Scalar:
        value = Fraction(0) if not isinstance(x, float) else 0.0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def __add__(self, other: Union[Poly, RationalLike]) -> Poly:
        other = _as_poly(other)
        size = max(len(self.coefficients), len(other.coefficients))
        return Poly(tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coefficients))

    def __sub__(self, other: Union[Poly, RationalLike]) -> Poly:
        return self + (-_as_poly(other))

    def __mul__(self, other: Union[Poly, RationalLike]) -> Poly:
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return Poly(tuple(out))

    __rmul__ = __mul__

    def __divmod__(self, other: Poly) -> Tuple[Poly, Poly]:
        if other.is_zero():
            raise InputError("polynomial division by zero")
        rem = list(self.coefficients)
        quotient = [Fraction(0)] * max(len(rem) - other.degree, 0)
        for shift in range(len(quotient) - 1, -1, -1):
            factor = rem[shift + other.degree] / other.leading
            quotient[shift] = factor
            for i, c in enumerate(other.coefficients):
                rem[shift + i] -= factor * c
        return Poly(tuple(quotient)), Poly(tuple(rem[: other.degree]))

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else "x^" + str(i))
            if mono and c == 1:
                parts.append(mono)
            elif mono:
                parts.append(str(c) + "*" + mono)
            else:
                parts.append(str(c))
        return " + ".join(parts).replace("+ -", "- ")


def _as_poly(value: Union[Poly, RationalLike]) -> Poly:
    return value if isinstance(value, Poly) else Poly.constant(value)


def poly_from_shift_roots(shifts: Iterable[RationalLike]) -> Poly:
    """
    Expands prod_i (x + a_i). The actual roots are -a_i.
    """
    coeffs = [Fraction(1)]
    for a in to_rationals(shifts):
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += a * c
            nxt[i + 1] += c
        coeffs = nxt
    return Poly(tuple(coeffs))


def merge_poles(shifts: Iterable[RationalLike]) -> Tuple[Tuple[Fraction, int], ...]:
    """Sorts pole shifts ascending and merges repeated ones into multiplicities."""
    counts = Counter(to_rationals(shifts))
    return tuple(sorted(counts.items()))


@dataclass(frozen=True)
class RationalSeq:
    """
    The sequence r(n) = p(n) / prod_i (n + b_i)^{m_i} on the nonnegative integers.

    Args:
        numerator: the polynomial p.
        poles: pairs (b, multiplicity), strictly ascending in b, every b > 0.
        zero_shifts: the a_i with p = prod (x + a_i), when p was given factored.
    """

    numerator: Poly
    poles: Tuple[Tuple[Fraction, int], ...] = ()
    zero_shifts: Optional[Tuple[Fraction, ...]] = None

    def __post_init__(self):
        poles = merge_poles(b for b, m in self.poles for _ in range(m))
        object.__setattr__(self, "poles", poles)
        if self.zero_shifts is not None:
            object.__setattr__(self, "zero_shifts", tuple(sorted(to_rationals(self.zero_shifts))))
        _check_form(self.numerator, poles)

    @classmethod
    def from_shifts(
        cls, zeros: Sequence[RationalLike], poles: Sequence[RationalLike]
    ) -> RationalSeq:
        zeros = to_rationals(zeros)
        return cls(poly_from_shift_roots(zeros), merge_poles(poles), zeros)

    @classmethod
    def from_coefficients(
        cls, coefficients: Sequence[RationalLike], poles: Sequence[RationalLike]
    ) -> RationalSeq:
        return cls(Poly(to_rationals(coefficients)), merge_poles(poles))

    @property
    def pole_shifts(self) -> Tuple[Fraction, ...]:
        return tuple(b for b, m in self.poles for _ in range(m))

    @property
    def k(self) -> int:
        return sum(m for _, m in self.poles)

    @property
    def is_simple(self) -> bool:
        return all(m == 1 for _, m in self.poles)

    @property
    def denominator(self) -> Poly:
        return poly_from_shift_roots(self.pole_shifts)

    def __call__(self, n: Scalar) -> Scalar:
        return self.numerator(n) / self.denominator(n)

    def shifted(self, constant: RationalLike) -> RationalSeq:
        """
        Returns r + constant. Complete alternation is invariant under adding a constant.
        """
        constant = to_rational(constant)
        if constant == 0:
            return self
        return RationalSeq(self.numerator + self.denominator * constant, self.poles)

    def factored_numerator(self) -> Optional[Tuple[Fraction, Tuple[Fraction, ...]]]:
        """
        Returns (scale, shifts) with p = scale * prod (x + a_i), or None if the numerator
        has no exact rational factorization we can recover.
        """
        if self.zero_shifts is not None:
            return Fraction(1), self.zero_shifts
        p = self.numerator
        if p.is_zero():
            return None
        lead = p.leading
        if p.degree == 0:
            return lead, ()
        if p.degree == 1:
            return lead, (p.coefficient(0) / lead,)
        if p.degree == 2:
            s, q = p.coefficient(1) / lead, p.coefficient(0) / lead
            root = rational_sqrt(s * s - 4 * q)
            if root is None:
                return None
            return lead, tuple(sorted(((s - root) / 2, (s + root) / 2)))
        return None

    def __str__(self):
        den = "".join("(x+" + str(b) + ")" + ("^" + str(m) if m > 1 else "") for b, m in self.poles)
        if self.zero_shifts is not None:
            num = "".join("(x+" + str(a) + ")" for a in self.zero_shifts) or "1"
        else:
            num = "(" + str(self.numerator) + ")"
        return num + " / " + (den or "1")


def _check_form(numerator: Poly, poles: Sequence[Tuple[Fraction, int]]) -> None:
    for b, _ in poles:
        if b <= 0:
            raise InputError("nonpositive pole shift " + str(b))
    k = sum(m for _, m in poles)
    if numerator.degree > k + 1:
        raise InputError(
            "numerator degree "
            + str(numerator.degree)
            + " exceeds number of poles plus one ("
            + str(k + 1)
            + ")"
        )


@dataclass(frozen=True)
class PoleTerm:
    pole: Fraction
    order: int
    coefficient: Fraction


@dataclass(frozen=True)
class PartialFractions:
    """a0 + a1 x + sum over terms of c / (x + b)^order."""

    a0: Fraction
    a1: Fraction
    terms: Tuple[PoleTerm, ...] = ()

    def __call__(self, n: Scalar) -> Scalar:
        value = self.a0 + self.a1 * n
        for term in self.terms:
            value += term.coefficient / (n + term.pole) ** term.order
        return value

    @property
    def is_simple(self) -> bool:
        return all(term.order == 1 for term in self.terms)

    def coefficients(self) -> Tuple[Fraction, ...]:
        """Order-one coefficients by ascending pole."""
        return tuple(term.coefficient for term in self.terms if term.order == 1)


def partial_fractions(r: RationalSeq) -> PartialFractions:
    _check_form(r.numerator, r.poles)
    quotient, rem = divmod(r.numerator, r.denominator)
    a0, a1 = quotient.coefficient(0), quotient.coefficient(1)
    if r.is_simple:
        shifts = r.pole_shifts
        terms = []
        for i, b in enumerate(shifts):
            denom = Fraction(1)
            for j, other in enumerate(shifts):
                if j != i:
                    denom *= other - b
            terms.append(PoleTerm(b, 1, r.numerator(-b) / denom))
        return PartialFractions(a0, a1, tuple(terms))
    return PartialFractions(a0, a1, _repeated_pole_terms(rem, r.poles))


def _repeated_pole_terms(
    rem: Poly, poles: Sequence[Tuple[Fraction, int]]
) -> Tuple[PoleTerm, ...]:
    # rem = sum_{b,j} c_{b,j} q / (x+b)^j, matched coefficient-wise in the monomial basis
    size = sum(m for _, m in poles)
    columns: List[Tuple[Fraction, int]] = [(b, j) for b, m in poles for j in range(1, m + 1)]
    basis = []
    for b, j in columns:
        shifts = [s for s, m in poles for _ in range(m if s != b else m - j)]
        basis.append(poly_from_shift_roots(shifts))
    matrix = [[basis[col].coefficient(i) for col in range(size)] for i in range(size)]
    solution = solve_exact(matrix, [rem.coefficient(i) for i in range(size)])
    logger.debug("solved %d x %d partial fraction system", size, size)
    return tuple(PoleTerm(b, j, c) for (b, j), c in zip(columns, solution))


def reconstruct_check(pf: PartialFractions, r: RationalSeq, n_max: int) -> bool:
    return all(pf(n) == r(n) for n in range(n_max + 1))


def coefficient_sum_identity(r: RationalSeq) -> Tuple[Fraction, Fraction]:
    """
    Returns (sum of c_i, sum of (a_i - b_i)), which agree for k simple poles and k zero shifts.
    """
    if r.zero_shifts is None:
        raise UnsupportedFormError("coefficient sum identity needs a factored numerator")
    if not r.is_simple:
        raise UnsupportedFormError("coefficient sum identity needs simple poles")
    if len(r.zero_shifts) != r.k:
        raise UnsupportedFormError(
            "coefficient sum identity needs as many zero shifts as poles"
        )
    pf = partial_fractions(r)
    lhs = sum(pf.coefficients(), Fraction(0))
    rhs = sum(r.zero_shifts, Fraction(0)) - sum(r.pole_shifts, Fraction(0))
    return lhs, rhs
