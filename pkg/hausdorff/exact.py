"""
Exact rational kernel. Every exact computation in the package goes through
:class:`fractions.Fraction`, which keeps numerator and denominator reduced.
"""
from __future__ import annotations
import math
import re
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from hausdorff.exceptions import DomainError, InputError, PreconditionError
from hausdorff.typing import BigRational, RationalLike

__all__ = [
    "binomial",
    "rat_from_string",
    "rat_to_string",
    "to_rational",
    "to_rationals",
    "solve_exact",
    "rational_sqrt",
]

_RATIONAL = re.compile(r"-?\d+(?:/\d+|\.\d+)?")


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise DomainError("binomial arguments must be nonnegative, got " + str((n, k)))
    if k > n:
        raise DomainError("binomial(" + str(n) + ", " + str(k) + ") requires k <= n")
    return math.comb(n, k)


def rat_from_string(s: str) -> BigRational:
    """
    Parses ``[-]digits[/digits]`` or ``[-]digits[.digits]`` into an exact rational.
    Decimals are never routed through binary floating point.
    """
    if not isinstance(s, str) or not _RATIONAL.fullmatch(s):
        raise InputError("malformed rational literal " + repr(s))
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise InputError("zero denominator in " + repr(s))
        return Fraction(int(num), int(den))
    if "." in s:
        whole, frac = s.split(".")
        sign = -1 if whole.startswith("-") else 1
        digits = int(whole.lstrip("-") + frac)
        return Fraction(sign * digits, 10 ** len(frac))
    return Fraction(int(s))


def rat_to_string(x: BigRational) -> str:
    x = Fraction(x)
    return str(x.numerator) + "/" + str(x.denominator)


def to_rational(value: RationalLike) -> BigRational:
    # Floats are refused: they only enter through the explicit float mode.
    if isinstance(value, bool):
        raise InputError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return rat_from_string(value.strip())
    raise PreconditionError(
        "exact computations need int, Fraction or str values, got "
        + type(value).__name__
    )


def to_rationals(values: Iterable[RationalLike]) -> Tuple[BigRational, ...]:
    return tuple(to_rational(v) for v in values)


def rational_sqrt(x: BigRational) -> Optional[BigRational]:
    """Returns the exact square root of ``x`` if it is a rational square, else None."""
    if x < 0:
        return None
    num, den = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if num * num == x.numerator and den * den == x.denominator:
        return Fraction(num, den)
    return None


def solve_exact(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> List[Fraction]:
    """
    Gauss-Jordan elimination over the rationals for a square nonsingular system.

    :param matrix: row-major coefficients
    :param rhs: right-hand side
    :return: the unique solution
    """
    size = len(rhs)
    rows = [list(map(Fraction, row)) + [Fraction(r)] for row, r in zip(matrix, rhs)]
    for col in range(size):
        pivot = next((i for i in range(col, size) if rows[i][col] != 0), None)
        if pivot is None:
            raise InputError("singular linear system")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        lead = rows[col][col]
        rows[col] = [v / lead for v in rows[col]]
        for i in range(size):
            if i != col and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [v - factor * p for v, p in zip(rows[i], rows[col])]
    return [row[size] for row in rows]
