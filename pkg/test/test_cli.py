import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hausdorff.cli.classify import AnalysisRequest, Conclusion, NetRequest, classify_command
from hausdorff.cli.main import main
from hausdorff.cli.parse import parse_factored_poly, parse_pair, parse_rational_list
from hausdorff.criteria import RATIO_CRITERIA
from hausdorff.exact import rat_to_string
from hausdorff.exceptions import InputError, ParseError
from hausdorff.oracle import Property

FIRST = ["--num", "(x+1.5)(x+2)(x+4)", "--den", "(x+1)(x+3)(x+3.5)"]
SECOND = ["--num", "(x+6)(x+8)(x+14)", "--den", "(x+5)(x+10)(x+13)"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    assert code == 0, err
    return json.loads(out), out


@pytest.mark.parametrize(
    "text,expected",
    [
        ("(x+1.5)(x+2)(x+4)", [F(3, 2), 2, 4]),
        ("(x+1)", [1]),
        ("(x-2)(x+1/3)", [-2, F(1, 3)]),
        (" ( x + 1 ) (x+2) ", [1, 2]),
        ("(x+-2)", [-2]),
        ("(x--1/2)", [F(1, 2)]),
        ("(x+-0.5)(x-3)", [F(-1, 2), -3]),
    ],
)
def test_parse_factored_poly(text, expected):
    assert parse_factored_poly(text) == expected


@pytest.mark.parametrize(
    "text,offset",
    [
        ("(x+1)(y+2)", 6),
        ("", 0),
        ("   ", 0),
        ("(x+1", 4),
    ],
)
def test_parse_errors(text, offset):
    with pytest.raises(ParseError) as info:
        parse_factored_poly(text)
    assert info.value.offset == offset
    assert isinstance(info.value, InputError)


def test_parse_lists():
    assert parse_rational_list("1, 3/2,-0.25") == [1, F(3, 2), F(-1, 4)]
    assert parse_pair("6,6") == (6, 6)
    with pytest.raises(ParseError):
        parse_pair("1/2,3")


def test_first_example(capsys):
    report, _ = run_json(capsys, "classify", *FIRST, "--property", "cm")
    assert report["verdicts"]["CM"]["conclusion"] == "EmpiricallySupported"
    criteria = {c["criterion"]: c for c in report["criteria"]}
    assert criteria["Ball"]["status"] == "Fails"
    assert report["weight"]["sign"]["status"] == "NonNegativeSampled"
    assert report["partial_fractions"]["a0"] == "1/1"
    assert [t["coefficient"] for t in report["partial_fractions"]["terms"]] == ["3/10", "-3/2", "6/5"]
    assert report["oracle"]["CM"]["verdict"] == "NoViolationFound"
    assert sorted(report) == sorted(["request", "partial_fractions", "criteria", "weight", "oracle", "verdicts"])


def test_non_example(capsys):
    report, _ = run_json(capsys, "classify", "--num", "(x+6)", "--den", "(x+5)", "--property", "ca")
    verdict = report["verdicts"]["CA"]
    assert verdict["conclusion"] == "ProvedNot"
    assert verdict["rule"] == "iff criterion CARoot1"
    witness = report["oracle"]["CA"]["witness"]
    assert witness == {"orders": [1], "shift": [0], "value": "1/30"}


def test_second_example(capsys):
    report, _ = run_json(capsys, "classify", *SECOND, "--property", "cm")
    verdict = report["verdicts"]["CM"]
    assert verdict["conclusion"] == "ProvedNot"
    assert verdict["rule"] == "exact oracle violation"
    assert verdict["witness"]["orders"] == [1]
    assert 30 <= verdict["witness"]["shift"][0] <= 50
    criteria = {c["criterion"]: c for c in report["criteria"]}
    assert criteria["Main1PermCM"]["status"] == "Holds"
    assert criteria["Main1PermCM"]["certificate"] == [1, 3, 2]


def test_every_criterion_listed_once(capsys):
    report, _ = run_json(capsys, "classify", *SECOND)
    assert [c["criterion"] for c in report["criteria"]] == [c.value for c in RATIO_CRITERIA]
    assert all(c["status"] in ("Holds", "Fails", "NotApplicable") for c in report["criteria"])
    assert set(report["verdicts"]) == {"CM", "CA"}


def test_json_round_trip(capsys):
    report, out = run_json(capsys, "classify", *FIRST)
    assert json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n" == out


def test_text_output(capsys):
    code, out, _ = run(capsys, "classify", "--num", "(x+6)", "--den", "(x+5)", "--property", "ca")
    assert code == 0
    assert "verdict CA: ProvedNot (iff criterion CARoot1)" in out
    assert "oracle CA: Violation at orders (1,) shift (0,) value 1/30" in out


@pytest.mark.parametrize(
    "argv,code,message",
    [
        (["classify", "--num", "(x+1)(y+2)", "--den", "(x+1)"], 1, "offset 6"),
        (["classify", "--num", "(x+1)", "--den", "(x-1)"], 1, "nonpositive pole"),
        (["classify", "--num", "(x+1)", "--den", "(x+2)", "--max-order", "0"], 2, "orders"),
        (["classify", "--den", "(x+2)"], 1, "no target"),
    ],
)
def test_exit_codes(capsys, argv, code, message):
    status, _, err = run(capsys, *argv)
    assert status == code
    assert err.startswith("error: ")
    assert message in err


def test_decompose_and_conditions(capsys):
    report, _ = run_json(capsys, "decompose", "--num-coeffs", "2,3,1", "--den", "(x+3)(x+3)")
    assert [(t["order"], t["coefficient"]) for t in report["partial_fractions"]["terms"]] == [
        (1, "-3/1"),
        (2, "2/1"),
    ]
    assert report["criteria"] == []
    report, _ = run_json(capsys, "conditions", "--num", "(x+1)(x+3)", "--den", "(x+2)(x+4)")
    criteria = {c["criterion"]: c["status"] for c in report["criteria"]}
    assert criteria["Main3PartialSums"] == "Holds"
    assert criteria["CAExInterlace"] == "Holds"


def test_weight_dump(capsys, tmp_path):
    path = tmp_path / "weight.csv"
    report, _ = run_json(capsys, "weight", *SECOND, "--dump-weight", str(path))
    assert report["weight"]["sign"]["status"] == "MixedSign"
    assert path.read_text().startswith("t,w\n")


def test_shift_option(capsys):
    report, _ = run_json(capsys, "classify", "--num", "(x+1)", "--den", "(x+2)", "--shift", "3", "--property", "ca")
    assert report["request"]["shift"] == "3/1"
    assert report["verdicts"]["CA"]["conclusion"] == "Proved"


def test_net2d_bipoly(capsys):
    report, _ = run_json(
        capsys, "net2d", "--family", "bipoly-ii", "--params", "2,1,1,3", "--max-order-2d", "2,2", "--max-shift-2d", "4,4"
    )
    verdict = report["verdicts"]["CM"]
    assert verdict["conclusion"] == "ProvedNot"
    assert verdict["rule"] == "iff criterion BiPoly"
    assert verdict["witness"] == {"orders": [1, 0], "shift": [0, 0], "value": "-5/6"}


def test_net2d_cajcm(capsys):
    report, _ = run_json(
        capsys,
        "net2d",
        "--family",
        "cajcm",
        "--num",
        "(x+6)",
        "--den",
        "(x+5)",
        "--alpha",
        "2",
        "--max-order-2d",
        "2,2",
        "--max-shift-2d",
        "3,3",
    )
    assert report["verdicts"]["CA"]["conclusion"] == "ProvedNot"
    assert report["verdicts"]["CM"]["conclusion"] == "ProvedNot"
    assert report["verdicts"]["CM"]["notes"] == ["consistent"]


def test_classify_command_directly():
    request = AnalysisRequest(poles=(F(5),), zeros=(F(6),), properties=frozenset((Property.CA,)))
    report = classify_command(request)
    assert report.verdicts["CA"].conclusion is Conclusion.ProvedNot
    with pytest.raises(InputError):
        AnalysisRequest(zeros=(F(1),), net=NetRequest("bipoly-i", (1, 1, 1, 1)))
    with pytest.raises(InputError):
        NetRequest("torus")


def factored_text(shifts):
    return "".join(
        "(x+" + rat_to_string(a) + ")" if a >= 0 else "(x-" + rat_to_string(-a) + ")" for a in shifts
    )


@st.composite
def factored_input(draw):
    poles = draw(st.lists(st.fractions(min_value=F(1, 4), max_value=8, max_denominator=6), min_size=1, max_size=3))
    zeros = draw(
        st.lists(st.fractions(min_value=-4, max_value=8, max_denominator=6), max_size=len(poles) + 1)
    )
    numerator = ["--num", factored_text(zeros)] if zeros else ["--num-coeffs", "1"]
    return numerator, factored_text(poles)


@settings(max_examples=50, deadline=None)
@given(factored_input())
def test_classify_never_reports_inconsistency(texts):
    numerator, den = texts
    argv = ["classify", *numerator, "--den", den, "--json", "--max-order", "6", "--max-shift", "20", "--grid", "1024"]
    assert main(argv) == 0
