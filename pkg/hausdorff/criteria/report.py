from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple


class Criterion(Enum):
    Ball = "Ball"
    Main3PartialSums = "Main3PartialSums"
    Main1PermCM = "Main1PermCM"
    Main1PermCA = "Main1PermCA"
    CARoot1 = "CARoot1"
    CARoot2 = "CARoot2"
    CARoot2b = "CARoot2b"
    SpecialCase = "SpecialCase"
    BiCase = "BiCase"
    CAExInterlace = "CAExInterlace"
    CnPos = "CnPos"
    NecCondSumCM = "NecCondSumCM"
    NecCondSumCA = "NecCondSumCA"
    BiComp = "BiComp"
    BiPoly = "BiPoly"


class Status(Enum):
    Holds = "Holds"
    Fails = "Fails"
    NotApplicable = "NotApplicable"


@dataclass(frozen=True)
class Inequality:
    label: str
    lhs: Fraction
    relation: str
    rhs: Fraction
    holds: bool

    def __str__(self):
        mark = "ok" if self.holds else "FAILS"
        return (
            self.label + ": " + str(self.lhs) + " " + self.relation + " " + str(self.rhs) + " [" + mark + "]"
        )


@dataclass(frozen=True)
class ConditionReport:
    """
    Outcome of one closed-form criterion. ``status`` is Holds exactly when every
    inequality in ``detail`` holds; ``certificate`` is a one-line permutation.
    """

    criterion: Criterion
    status: Status
    detail: Tuple[Inequality, ...] = ()
    certificate: Optional[Tuple[int, ...]] = None
    notes: Tuple[str, ...] = ()

    @property
    def holds(self) -> bool:
        return self.status is Status.Holds

    @property
    def fails(self) -> bool:
        return self.status is Status.Fails


class InequalityTrail:
    """Collects the inequalities a criterion checks, in the order it checks them."""

    def __init__(self):
        self.detail: List[Inequality] = []

    def le(self, label: str, lhs: Fraction, rhs: Fraction) -> bool:
        holds = lhs <= rhs
        self.detail.append(Inequality(label, Fraction(lhs), "<=", Fraction(rhs), holds))
        return holds

    def lt(self, label: str, lhs: Fraction, rhs: Fraction) -> bool:
        holds = lhs < rhs
        self.detail.append(Inequality(label, Fraction(lhs), "<", Fraction(rhs), holds))
        return holds

    def chain(self, label: str, values: Sequence[Fraction], names: Sequence[str]) -> bool:
        """Strict chain values[0] < values[1] < ..."""
        ok = True
        for i in range(len(values) - 1):
            ok &= self.lt(label + " " + names[i] + " < " + names[i + 1], values[i], values[i + 1])
        return ok

    def report(
        self,
        criterion: Criterion,
        certificate: Optional[Tuple[int, ...]] = None,
        notes: Sequence[str] = (),
    ) -> ConditionReport:
        holds = all(item.holds for item in self.detail)
        return ConditionReport(
            criterion,
            Status.Holds if holds else Status.Fails,
            tuple(self.detail),
            certificate if holds else None,
            tuple(notes),
        )


def not_applicable(criterion: Criterion, reason: str) -> ConditionReport:
    return ConditionReport(criterion, Status.NotApplicable, notes=(reason,))


def all_positive(*groups: Sequence[Fraction]) -> bool:
    return all(x > 0 for group in groups for x in group)


def sorted_with_positions(values: Sequence[Fraction]) -> Tuple[Tuple[Fraction, ...], Tuple[int, ...]]:
    order = sorted(range(len(values)), key=lambda i: values[i])
    return tuple(values[i] for i in order), tuple(i + 1 for i in order)
