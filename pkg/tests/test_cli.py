from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from hzeta.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_zeta_json():
    code, text = run("zeta", "--a", "5", "--b", "3", "--pmax", "4")
    assert code == 0
    d = json.loads(text)
    assert d["values"] == {"2": "-5/192", "3": "1/1536", "4": "19/405504"}


@pytest.mark.parametrize("method", ["linear", "quadratic", "series", "bernoulli"])
def test_zeta_methods_identical(method):
    _, ref = run("zeta", "--a", "2/7", "--b", "9/4", "--pmax", "12")
    _, got = run("zeta", "--a", "2/7", "--b", "9/4", "--pmax", "12", "--method", method)
    assert json.loads(got)["values"] == json.loads(ref)["values"]


def test_zeta_csv_and_plain():
    _, text = run("zeta", "--a", "1", "--b", "1", "--pmax", "4", "--format", "csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert rows == [["p", "value"], ["2", "-1/12"], ["3", "0"], ["4", "1/720"]]
    _, text = run("zeta", "--a", "1", "--b", "1", "--pmax", "2", "--format", "plain")
    assert text.split() == ["2", "-1/12"]


def test_bernoulli_and_poly():
    _, text = run("bernoulli", "--a", "1", "--b", "3", "--nmax", "7")
    assert json.loads(text)["bernoulli"][-1] == "7/76800"
    _, text = run("poly", "--a", "1", "--b", "1", "--n", "2", "--family", "B")
    assert json.loads(text)["coefficients"] == ["1/6", "-1", "1"]
    _, text = run("poly", "--a", "2", "--b", "3", "--n", "1", "--family", "C", "--format", "plain")
    assert text.strip() == "x + 2/5"


def test_zeros_json():
    code, text = run("zeros", "--a", "1", "--b", "2", "--pairs", "2", "--precision-bits", "128")
    assert code == 0
    d = json.loads(text)
    assert d["precision_bits"] == 128
    z1 = complex(float(d["zeros"][0]["re"]), float(d["zeros"][0]["im"]))
    assert abs(z1 - (2.0888430156 + 7.4614892857j)) < 1e-9


def test_zeros_env_precision(monkeypatch):
    monkeypatch.setenv("HZETA_PRECISION_BITS", "96")
    _, text = run("zeros", "--a", "1", "--b", "1", "--pairs", "1")
    assert json.loads(text)["precision_bits"] == 96


def test_zeta_num():
    code, text = run("zeta-num", "--a", "1", "--b", "1", "--s", "2", "--pairs", "20", "--precision-bits", "96")
    d = json.loads(text)
    assert code == 0 and d["exact"] == "-1/12"
    assert float(d["error"]) < 1e-5


def test_conjecture_exit_codes(monkeypatch):
    code, text = run("conjecture", "--bmax", "4", "--nmax", "12")
    assert code == 0 and json.loads(text)["violations"] == []
    # a cap too small to see an even denominator makes alpha inconclusive, which is a failure
    code, _ = run("conjecture", "--bmax", "4", "--nmax", "4", "--alpha-nmax", "2")
    assert code == 1


def test_verify():
    code, text = run("verify", "--a", "5/2", "--b", "3", "--pmax", "10")
    assert code == 0
    assert "FAIL" not in text and text.strip().endswith("14/14 checks passed")
    code, text = run("verify", "--a", "1", "--b", "4", "--pmax", "10")
    assert code == 0 and "skipped" not in text


def test_verify_failure_exit(monkeypatch):
    from hzeta import bernoulli as bn
    from hzeta.bernoulli import CheckReport

    monkeypatch.setattr(bn, "symmetry_check", lambda p, n: CheckReport("reflection symmetry", {3: False}))
    code, text = run("verify", "--a", "2", "--b", "3", "--pmax", "6")
    assert code == 1 and "FAIL" in text


@pytest.mark.parametrize(
    "argv",
    [
        ["zeta", "--a", "0", "--b", "1", "--pmax", "4"],
        ["zeta", "--a", "1/0", "--b", "1", "--pmax", "4"],
        ["zeta", "--a", "x", "--b", "1", "--pmax", "4"],
        ["zeta", "--a", "1", "--b", "1", "--pmax", "1"],
        ["zeta", "--a", "1", "--b", "1", "--pmax", "4", "--method", "nope"],
        ["zeros", "--a", "1", "--b", "1", "--pairs", "0"],
        ["zeros", "--a", "1", "--b", "1", "--pairs", "2", "--precision-bits", "10"],
        ["zeta-num", "--a", "1", "--b", "1", "--s", "1"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv, out=io.StringIO())
    assert exc.value.code == 2


def test_deterministic_output():
    a = run("bernoulli", "--a", "3/4", "--b", "5", "--nmax", "10")
    b = run("bernoulli", "--a", "3/4", "--b", "5", "--nmax", "10")
    assert a == b


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hzeta.cli", "zeta", "--a", "1", "--b", "2", "--pmax", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["values"] == {"2": "-1/18"}
    bad = subprocess.run([sys.executable, "-m", "hzeta.cli", "zeta"], capture_output=True, text=True, check=False)
    assert bad.returncode == 2
