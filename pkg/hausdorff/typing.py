from __future__ import annotations
from fractions import Fraction
from typing import Callable, Tuple, Union

BigRational = Fraction

RationalLike = Union[int, Fraction, str]

Scalar = Union[Fraction, float]

SequenceEvaluator = Callable[[int], Scalar]

NetEvaluator = Callable[[int, int], Scalar]

# A point of Z_+ or Z_+^2
Point = Union[int, Tuple[int, ...]]
