"""
Input syntax of the command line. A factored polynomial is a product of factors
``(x+<rat>)`` or ``(x-<rat>)``; ``(x+a)`` contributes the shift a, ``(x-a)`` the shift -a.
The rational may carry its own sign, so ``(x+-2)`` is the shift -2.
"""
from __future__ import annotations
from fractions import Fraction
from typing import List, Tuple

from pyparsing import (
    OneOrMore,
    ParseBaseException,
    Regex,
    Suppress,
    delimitedList,
    oneOf,
)

from hausdorff.exact import rat_from_string
from hausdorff.exceptions import ParseError

_SIGNED = Regex(r"-?\d+(?:/\d+|\.\d+)?")

# "-" stops backtracking: once "(" is consumed the rest of the factor must follow.
_FACTOR = (
    Suppress("(") - Suppress("x") - oneOf("+ -") - _SIGNED - Suppress(")")
).setParseAction(lambda toks: rat_from_string(toks[1]) * (1 if toks[0] == "+" else -1))
_PRODUCT = OneOrMore(_FACTOR)
_RATIONAL_LIST = delimitedList(_SIGNED.copy().setParseAction(lambda toks: rat_from_string(toks[0])))


def _parse(grammar, text: str, what: str) -> list:
    if text is None or not text.strip():
        raise ParseError("empty " + what, 0, text or "")
    try:
        return list(grammar.parseString(text, parseAll=True))
    except ParseBaseException as e:
        raise ParseError("unexpected token in " + what + " " + repr(text), e.loc, text) from None


def parse_factored_poly(text: str) -> List[Fraction]:
    return _parse(_PRODUCT, text, "factored polynomial")


def parse_rational_list(text: str) -> List[Fraction]:
    """Comma separated rationals, e.g. ``1, 3/2, -0.25``."""
    return _parse(_RATIONAL_LIST, text, "rational list")


def parse_pair(text: str) -> Tuple[int, int]:
    parts = _parse(_RATIONAL_LIST, text, "pair")
    if len(parts) != 2 or any(p.denominator != 1 for p in parts):
        raise ParseError("expected two integers N1,N2 in " + repr(text), 0, text)
    return int(parts[0]), int(parts[1])
