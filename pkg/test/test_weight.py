import csv
from fractions import Fraction as F

import pytest
import torch

from hausdorff.exceptions import InputError, UnsupportedFormError
from hausdorff.poly import RationalSeq, partial_fractions
from hausdorff.weight import (
    ProofRoute,
    SignStatus,
    WeightExpression,
    WeightTerm,
    ca_exp_reports,
    ca_exp_spotcheck,
    dump_weight_csv,
    evaluate_weight,
    moment_reconstruct,
    partial_sum_sign_test,
    sample_points,
    sign_analyze,
    weight_from_partial_fractions,
)


def weight_of(zeros, poles) -> WeightExpression:
    return weight_from_partial_fractions(partial_fractions(RationalSeq.from_shifts(zeros, poles)))


@pytest.fixture
def first_weight() -> WeightExpression:
    return weight_of(("1.5", 2, 4), (1, 3, "3.5"))


@pytest.fixture
def second_weight() -> WeightExpression:
    return weight_of((6, 8, 14), (5, 10, 13))


def test_weight_terms(first_weight, second_weight):
    assert first_weight.terms == (
        WeightTerm(F(3, 10), 1, 0),
        WeightTerm(F(-3, 2), 3, 0),
        WeightTerm(F(6, 5), F(7, 2), 0),
    )
    assert (first_weight.atom_at_one, first_weight.linear_coeff) == (1, 0)
    assert [(t.coefficient, t.exponent) for t in second_weight.terms] == [
        (F(27, 40), 5),
        (F(-32, 15), 10),
        (F(35, 24), 13),
    ]
    assert first_weight.format(absorb_t=True) == "3/10*t^1 - 3/2*t^3 + 6/5*t^7/2"


def test_double_pole_term():
    wx = weight_of((1, 2), (3, 3))
    assert WeightTerm(F(2), 3, 1) in wx.terms


def test_terms_merge_and_validate():
    wx = WeightExpression((WeightTerm(F(1), 2, 0), WeightTerm(F(2), 2, 0), WeightTerm(F(-1), 1, 0)))
    assert wx.terms == (WeightTerm(F(-1), 1, 0), WeightTerm(F(3), 2, 0))
    with pytest.raises(InputError):
        WeightExpression((WeightTerm(F(1), 0, 0),))


def test_moment_reconstruct(first_weight):
    assert moment_reconstruct(first_weight, 0) == F(8, 7)
    assert moment_reconstruct(WeightExpression((WeightTerm(F(1), 1, 0),)), 5) == F(1, 6)
    assert moment_reconstruct(WeightExpression((WeightTerm(F(1), 2, 1),)), 0) == F(1, 4)


def test_partial_sum_sign_test(first_weight):
    assert partial_sum_sign_test(weight_of((1, 3), (2, 4))).status is SignStatus.NonPositiveProved
    single = WeightExpression((WeightTerm(F(-2), 3, 0),))
    assert partial_sum_sign_test(single).status is SignStatus.NonPositiveProved
    assert partial_sum_sign_test(first_weight).status is SignStatus.Inconclusive
    with pytest.raises(UnsupportedFormError):
        partial_sum_sign_test(weight_of((1, 2), (3, 3)))


def test_endpoint_signs(first_weight, second_weight):
    assert first_weight.sign_near_zero() == 1
    assert first_weight.sign_near_one() == 1
    assert second_weight.sign_near_zero() == 1
    # sum of coefficients is zero, the next Taylor coefficient sum c (1 - b) = -sum c b is -1
    assert second_weight.sign_near_one() == -1


def test_sign_first_example(first_weight):
    report = sign_analyze(first_weight)
    assert report.status is SignStatus.NonNegativeSampled
    assert report.proof_route is ProofRoute.Sampling
    assert not report.certified
    assert report.min_sampled >= -1e-12 * abs(report.max_sampled)
    assert report.endpoint_signs == (1, 1)
    assert len(sample_points(first_weight)) >= 10 ** 4


def test_sign_second_example(second_weight):
    report = sign_analyze(second_weight)
    assert report.status is SignStatus.MixedSign
    negative = [t for t, w in report.witnesses if w < 0]
    positive = [t for t, w in report.witnesses if w > 0]
    assert 0.9 < negative[0] < 1
    assert 0.5 < positive[0] < 0.9
    assert report.sign_changes == 2
    assert len(report.crossings) >= 1
    w = evaluate_weight(second_weight, [0.95, 0.8])
    assert w[0] < 0 < w[1]


def test_sign_descartes_routes():
    report = sign_analyze(weight_of((2, 4), (1, 3)))
    assert report.status is SignStatus.NonNegativeProved
    assert report.proof_route is ProofRoute.DescartesBound
    # (x+1)(x+4)/(x+2)^2: c1 = 1, c2 = -2 has one sign change in P(-ln t)
    assert sign_analyze(weight_of((1, 4), (2, 2))).status is not SignStatus.NonPositiveProved
    # (x+1)(x+3)/(x+2)^2 = 1 - 1/(x+2)^2
    proved = sign_analyze(weight_of((1, 3), (2, 2)))
    assert proved.status is SignStatus.NonPositiveProved


def test_sign_partial_sums_route():
    # one sign change, prefix sums -2, -1
    wx = WeightExpression((WeightTerm(F(-2), 1, 0), WeightTerm(F(1), 2, 0)))
    report = sign_analyze(wx)
    assert report.status is SignStatus.NonPositiveProved
    assert report.proof_route is ProofRoute.PartialSums


def test_sampling_does_not_contradict_proofs():
    wx = weight_of((1, 3), (2, 4))
    report = sign_analyze(wx)
    assert report.status.nonpositive and report.certified
    assert report.max_sampled <= 1e-12


def test_grid_size():
    with pytest.raises(InputError):
        sign_analyze(weight_of((1,), (2,)), grid_size=10)


def test_dump_weight_csv(tmp_path, first_weight):
    path = tmp_path / "w.csv"
    dump_weight_csv(first_weight, str(path), grid_size=64)
    raw = path.read_bytes()
    assert b"\r\n" not in raw
    rows = list(csv.reader(raw.decode().splitlines()))
    assert rows[0] == ["t", "w"]
    t = [float(row[0]) for row in rows[1:]]
    assert t == sorted(t)
    assert all(0 < x < 1 for x in t)


def test_evaluate_weight_matches_closed_form(first_weight):
    t = torch.tensor([0.25, 0.5], dtype=torch.float64)
    expected = 0.3 - 1.5 * t ** 2 + 1.2 * t ** 2.5
    assert torch.allclose(evaluate_weight(first_weight, t), expected)


@pytest.mark.parametrize(
    "psi,expected",
    [
        (lambda n: F(n), True),
        (RationalSeq.from_shifts((6,), (5,)), False),
        (lambda n: F(3), True),
    ],
)
def test_ca_exp_spotcheck(psi, expected):
    assert ca_exp_spotcheck(psi, [0.5, 1.0, 2.0], max_order=8, max_shift=20) is expected


def test_ca_exp_reports_records_first_violation():
    reports = ca_exp_reports(RationalSeq.from_shifts((6,), (5,)), [1.0], max_order=4, max_shift=4)
    witness = reports[1.0].witness
    assert witness.orders == (1,) and witness.shift == (0,)
    assert witness.value < 0
    with pytest.raises(InputError):
        ca_exp_reports(lambda n: F(n), [0.0])
