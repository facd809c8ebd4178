import json
import os
import subprocess

import pytest

CLI = os.environ.get("QSH_CLI", "qsh")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def test_lyndon_json_lists_seven_words():
    r = run("lyndon", "--max-weight", "4", "--format", "json")
    assert r.returncode == 0
    words = json.loads(r.stdout)
    assert len(words) == 7
    assert [2, 1, 1] in words


def test_lyndon_text_and_csv():
    r = run("lyndon", "--max-weight", "3")
    assert r.stdout.splitlines() == ["1", "2", "3", "2 1"]
    r = run("lyndon", "--max-weight", "2", "--format", "csv")
    assert r.stdout.splitlines() == ["weight,word", "1,1", "2,2"]


def test_convert_lambda_to_s():
    r = run("convert", "--from", "Lambda", "--to", "S", "--element", "(2)")
    assert r.returncode == 0
    assert r.stdout.strip() == "S:(1,1) - S:(2)"


def test_convert_psi_and_qsym():
    r = run("convert", "--from", "Psi", "--to", "S", "--element", "(2)")
    assert r.stdout.strip() == "-S:(1,1) + 2·S:(2)"
    r = run("convert", "--from", "F", "--to", "M", "--element", "F:(2)")
    assert r.stdout.strip() == "M:(1,1) + M:(2)"
    r = run("convert", "--from", "S", "--to", "M", "--element", "(2)")
    assert r.returncode == 2


def test_pair():
    r = run("pair", "--sym", "S:(1,2)", "--qsym", "M:(1,2)")
    assert r.returncode == 0
    assert r.stdout.strip() == "1"


def test_basis_and_product():
    r = run("basis", "--family", "Pi", "--word", "2")
    assert r.stdout.strip() == "-1/2·[1 1] + [2]"
    r = run("basis", "--family", "p", "--word", "2 1", "--format", "json")
    data = json.loads(r.stdout)
    assert {"word": [2, 1], "coeff": "1/1"} in data
    r = run("product", "--kind", "stuffle", "--word", "1", "--word", "2")
    assert r.stdout.strip() == "[1 2] + [2 1] + [3]"


def test_verify_passes_with_json_schema():
    r = run("verify", "--max-weight", "3")
    assert r.returncode == 0
    r = run("verify", "--max-weight", "3", "--format", "json")
    rows = json.loads(r.stdout)
    assert rows
    for row in rows:
        assert set(row) == {"check", "status", "detail"}
        assert row["status"] == "pass"


def test_verify_is_deterministic():
    a = run("verify", "--max-weight", "3", "--seed", "11", "--format", "csv")
    b = run("verify", "--max-weight", "3", "--seed", "11", "--format", "csv")
    assert a.stdout == b.stdout


@pytest.mark.parametrize("pair", ["stuffle", "shuffle", "L", "R"])
def test_factorize(pair):
    assert run("factorize", "--max-weight", "4", "--pair", pair).returncode == 0
    r = run("factorize", "--max-weight", "3", "--pair", pair, "--negative-control")
    assert r.returncode == 1
    assert "FAIL" in r.stdout


def test_hl_check():
    r = run("hl-check", "--max-weight", "3", "--q-degree", "8")
    assert r.returncode == 0


@pytest.mark.parametrize(
    "args",
    [
        [],
        ["nope"],
        ["lyndon", "--max-weight", "9"],
        ["lyndon", "--format", "xml"],
        ["basis", "--family", "Q", "--word", "1"],
        ["basis", "--family", "p", "--word", "1 x"],
        ["factorize", "--pair", "X"],
        ["product", "--word", "1"],
        ["verify", "--max-weight", "0"],
    ],
)
def test_usage_errors_exit_2(args):
    assert run(*args).returncode == 2


def test_unsafe_weight_override():
    assert run("lyndon", "--max-weight", "9", "--unsafe-weight").returncode == 0


def test_polynomial_json_round_trips_through_text():
    r = run("basis", "--family", "Sigma", "--word", "2 1", "--format", "json")
    data = json.loads(r.stdout)
    text = run("basis", "--family", "Sigma", "--word", "2 1").stdout.strip()
    terms = []
    for t in data:
        num, den = t["coeff"].split("/")
        assert den != "0"
        terms.append((tuple(t["word"]), num, den))
    assert text == "[2 1] + 1/2·[3]"
    assert terms == [((2, 1), "1", "1"), ((3,), "1", "2")]
