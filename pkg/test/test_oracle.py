from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hausdorff.exceptions import BudgetError, PreconditionError
from hausdorff.oracle import (
    Budget,
    Property,
    Verdict,
    forward_diff_1d,
    forward_diff_general,
    mixed_diff_2d,
    scan_1d,
    scan_2d,
)
from hausdorff.poly import RationalSeq


def harmonic(n):
    return F(1, n + 1)


def test_forward_diff_1d():
    assert forward_diff_1d(harmonic, 2, 0) == F(1, 3)
    assert forward_diff_1d(harmonic, 0, 4) == F(1, 5)
    # nabla^j 1/(n+1) at 0 is 1/(j+1)
    for j in range(8):
        assert forward_diff_1d(harmonic, j, 0) == F(1, j + 1)


def test_float_mode():
    value = forward_diff_1d(lambda n: 1.0 / (n + 1), 2, 0, exact=False)
    assert value == pytest.approx(1 / 3)
    with pytest.raises(PreconditionError):
        forward_diff_1d(lambda n: 1.0 / (n + 1), 2, 0)


def test_forward_diff_general_matches_1d():
    for j in range(1, 5):
        assert forward_diff_general(harmonic, [1] * j, 2) == forward_diff_1d(harmonic, j, 2)
    assert forward_diff_general(harmonic, [2, 3], 0) == harmonic(0) - harmonic(2) - harmonic(3) + harmonic(5)


def test_forward_diff_general_2d():
    f = lambda m, n: F(1, 1 + m + n + m * n)
    assert forward_diff_general(f, [(1, 0), (0, 1)], (1, 2)) == mixed_diff_2d(f, (1, 1), (1, 2))


def test_scan_1d_ca_non_example():
    r = RationalSeq.from_shifts([6], [5])
    report = scan_1d(r, Property.CA)
    assert report.verdict is Verdict.Violation
    assert report.witness.orders == (1,)
    assert report.witness.shift == (0,)
    assert report.witness.value == F(1, 30)
    assert round(float(report.witness.value), 3) == 0.033
    assert report.exact


def test_scan_1d_cm_holds_for_first_example():
    r = RationalSeq.from_shifts(["1.5", 2, 4], [1, 3, "3.5"])
    report = scan_1d(r, Property.CM, 12, 50)
    assert report.verdict is Verdict.NoViolationFound
    assert report.max_order == (12,) and report.max_shift == (50,)


def test_scan_1d_second_example_violation_late():
    r = RationalSeq.from_shifts([6, 8, 14], [5, 10, 13])
    report = scan_1d(r, Property.CM, 12, 50)
    assert report.violated
    assert report.witness.orders == (1,)
    m = report.witness.shift[0]
    assert 30 <= m <= 50
    assert report.witness.value < 0
    # independent closed form of the first difference
    pf_c = [(F(27, 40), 5), (F(-32, 15), 10), (F(35, 24), 13)]
    closed = sum(c / ((m + b) * (m + b + 1)) for c, b in pf_c)
    assert closed == report.witness.value
    assert all(sum(c / ((i + b) * (i + b + 1)) for c, b in pf_c) >= 0 for i in range(m))


def test_scan_1d_float_mode():
    report = scan_1d(lambda n: 1.0 / (n + 1), Property.CM, 10, 20, exact=False)
    assert report.verdict is Verdict.NoViolationFound
    assert not report.exact


def test_budget_errors():
    with pytest.raises(BudgetError):
        scan_1d(harmonic, Property.CM, 0, 10)
    with pytest.raises(BudgetError):
        scan_2d(lambda m, n: F(1), Property.CM, (0, 0), (2, 2))
    with pytest.raises(BudgetError):
        Budget(max_order=0)


def test_ca_skips_order_zero():
    # a positive constant is completely alternating but its order 0 value is positive
    assert not scan_1d(lambda n: F(5), Property.CA, 4, 4).violated


def test_scan_2d_bipoly_violation():
    f = lambda m, n: F(1, 1 + m + n + 2 * m * n)
    report = scan_2d(f, Property.CM, (3, 3), (3, 3))
    assert report.violated
    assert mixed_diff_2d(f, (3, 3), (0, 0)) < 0
    assert mixed_diff_2d(f, report.witness.orders, report.witness.shift) == report.witness.value


def test_scan_2d_product_of_moment_sequences():
    f = lambda m, n: F(1, (m + 1) * (n + 2))
    assert not scan_2d(f, Property.CM, (4, 4), (6, 6)).violated
    assert not scan_2d(lambda m, n: 1.0 / ((m + 1) * (n + 2)), Property.CM, (3, 3), (4, 4), exact=False).violated


def test_forward_diff_general_examples():
    r = RationalSeq.from_shifts([6], [5])
    assert forward_diff_general(r, [2], 0) == F(2, 35)
    assert forward_diff_general(r, [0], 3) == 0
    assert forward_diff_general(r, [1, 0, 2], 0) == 0
    assert forward_diff_general(lambda m, n: F(1, 1 + m + n), [(0, 0), (1, 1)], (0, 0)) == 0


shifts = st.fractions(min_value=F(1, 4), max_value=8, max_denominator=6)
steps = st.integers(min_value=0, max_value=5)


@st.composite
def rational_seq(draw):
    poles = draw(st.lists(shifts, min_size=1, max_size=3))
    zeros = draw(st.lists(shifts, max_size=len(poles) + 1))
    return RationalSeq.from_shifts(zeros, poles)


@settings(max_examples=100, deadline=None)
@given(rational_seq(), steps, steps, st.integers(min_value=0, max_value=10))
def test_step_sum_identity(r, a, b, s):
    # nabla_{a+b} = nabla_a + nabla_b - nabla_a nabla_b
    combined = forward_diff_general(r, [a + b], s)
    assert combined == forward_diff_general(r, [a], s) + forward_diff_general(r, [b], s) - forward_diff_general(r, [a, b], s)


@settings(max_examples=50, deadline=None)
@given(
    st.tuples(shifts, shifts),
    st.tuples(steps, steps),
    st.tuples(steps, steps),
    st.tuples(st.integers(min_value=0, max_value=4), st.integers(min_value=0, max_value=4)),
)
def test_step_sum_identity_2d(coefficients, a, b, s):
    c1, c2 = coefficients
    f = lambda m, n: 1 / (1 + c1 * m + c2 * n + m * n)
    total = (a[0] + b[0], a[1] + b[1])
    combined = forward_diff_general(f, [total], s)
    assert combined == forward_diff_general(f, [a], s) + forward_diff_general(f, [b], s) - forward_diff_general(f, [a, b], s)


@settings(max_examples=100, deadline=None)
@given(
    st.fractions(min_value=-2, max_value=2, max_denominator=12),
    st.integers(min_value=0, max_value=10),
    st.integers(min_value=0, max_value=10),
)
def test_geometric_differences(t, j, m):
    assert forward_diff_1d(lambda n: t ** n, j, m) == t ** m * (1 - t) ** j


@settings(max_examples=50, deadline=None)
@given(shifts)
def test_single_pole_is_clean(b):
    r = RationalSeq.from_shifts([], [b])
    assert not scan_1d(r, Property.CM).violated


@settings(max_examples=100, deadline=None)
@given(
    rational_seq(),
    st.sampled_from(list(Property)),
    st.integers(min_value=1, max_value=6),
    st.integers(min_value=0, max_value=15),
    st.integers(min_value=0, max_value=6),
    st.integers(min_value=0, max_value=25),
)
def test_larger_budget_keeps_violations(r, prop, order, shift, extra_order, extra_shift):
    small = scan_1d(r, prop, order, shift)
    large = scan_1d(r, prop, order + extra_order, shift + extra_shift)
    if small.violated:
        assert large.violated
        assert (large.witness.orders, large.witness.shift) <= (small.witness.orders, small.witness.shift)