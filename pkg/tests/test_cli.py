import json
import re
import subprocess
import sys
from pathlib import Path

import pytest

from cli_cases import CASES
from daehee.cli import main
from daehee.numerics import parse_rational

GOLDEN = Path(__file__).parent / "golden"
RATIONAL = re.compile(r"-?\d+(?:/\d+)?")


def run(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, capsys):
    argv, expected_code = CASES[name]
    code, out, _ = run(argv, capsys)
    assert code == expected_code
    assert out == (GOLDEN / f"{name}.out").read_text()


def test_subprocess_matches_golden():
    argv, _ = CASES["volkenborn_second_p2"]
    outputs = [
        subprocess.run([sys.executable, "-m", "daehee", *argv], capture_output=True, check=True).stdout
        for _ in range(2)
    ]
    assert outputs[0] == outputs[1] == (GOLDEN / "volkenborn_second_p2.out").read_bytes()


@pytest.mark.parametrize(
    "argv",
    [
        ["table", "daehee", "--n-max", "201"],
        ["table", "nosuch", "--n-max", "2"],
        ["table", "daehee", "--n-max", "-1"],
        ["eval", "bernoulli-higher", "--n", "1", "--x", "2"],
        ["eval", "daehee-poly", "--n", "1", "--x", "1.5"],
        ["eval", "daehee-poly", "--n", "1", "--x", "1/0"],
        ["eval", "daehee-poly", "--n", "1", "--x", "1", "--alpha", "2"],
        ["volkenborn", "first", "--n", "1", "--p", "17", "--levels", "1..2"],
        ["volkenborn", "first", "--n", "1", "--p", "3", "--levels", "3..1"],
        ["verify", "--ids", "nosuch"],
        ["verify", "--format", "xml"],
        ["verify", "--n-max", "40", "--trunc", "20"],
        [],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 2
    assert out == ""
    assert err


def test_budget_exit_3(capsys):
    code, out, err = run(["volkenborn", "first", "--n", "2", "--p", "2", "--levels", "1..21"], capsys)
    assert code == 3
    assert out == ""
    assert "N=21" in err


def test_identity_failure_exit_1(capsys, monkeypatch):
    from daehee import identities

    def broken(ctx, xs):
        yield identities._inst(0, 1, n=0)

    monkeypatch.setitem(identities.CATALOG, "eq3-shift-gf", ("broken", broken))
    code, out, _ = run(["verify", "--ids", "eq3-shift-gf", "--n-max", "0"], capsys)
    assert code == 1
    assert out == "eq3-shift-gf FAIL (1 instance)\n  n=0 lhs=0 rhs=1\n"


def test_verify_full_range(capsys):
    code, out, _ = run(["verify", "--n-max", "25", "--x=0,1,-1,1/2,-3/7,22/7", "--format", "csv"], capsys)
    assert code == 0
    assert ",FAIL," not in out


@pytest.mark.parametrize("name", sorted(CASES))
def test_printed_rationals_round_trip(name):
    text = (GOLDEN / f"{name}.out").read_text()
    if text.startswith(("[", "{")):
        values = []

        def walk(obj):
            if isinstance(obj, dict):
                for k, v in obj.items():
                    if k in ("sum", "value", "exact_limit", "lhs", "rhs", "x"):
                        values.append(v)
                    walk(v)
            elif isinstance(obj, list):
                for v in obj:
                    walk(v)

        walk(json.loads(text))
    else:
        values = RATIONAL.findall(text)
    for v in values:
        if isinstance(v, str) and RATIONAL.fullmatch(v):
            q = parse_rational(v)
            assert str(q.numerator) + ("" if q.denominator == 1 else f"/{q.denominator}") == v
