import json
import subprocess
import sys
from pathlib import Path

import pytest

from pdcalc.cli import main

FIX = Path(__file__).resolve().parent.parent / "fixtures"
SMALL = "--probes=probes_small.yaml"


@pytest.fixture(autouse=True)
def in_fixtures(monkeypatch):
    monkeypatch.chdir(FIX)
    monkeypatch.delenv("PDCALC_BUDGET", raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


@pytest.mark.parametrize("argv,code", [
    (("validate", "cat_1.txt"), 0),
    (("validate", "interval.yaml"), 0),
    (("validate", "collapse_1.yaml"), 0),
    (("validate", "unit_violation.txt"), 1),
    (("validate", "bad_cat.txt"), 2),
    (("validate", "probes_unclosed.yaml"), 2),
    (("validate", "probes_closed.yaml"), 0),
    (("nerve", "nosuch.txt"), 2),
    (("qrep-check", "rep:span.txt", SMALL), 0),
    (("qrep-check", "const:cat_1.txt", SMALL), 1),
    (("qrep-check", "rep:span.txt", "--probes=probes_unclosed.yaml"), 2),
    (("fibrancy", "ho:nerve:ordinal:2"), 0),
    (("fibrancy", "L:horn:2:1"), 1),
    (("lift", "--left", "horn21_incl.yaml", "--right", "n2_terminal.yaml"), 0),
    (("lift", "--left", "horn21_incl.yaml", "--right", "horn21_terminal.yaml"), 1),
    (("afib", "ho:collapse_1.yaml"), 1),
    (("afib", "ho:codiscrete_collapse.yaml"), 0),
    (("weq", "codiscrete_collapse.yaml", "--certificate", "codiscrete_cert.yaml", SMALL), 0),
    (("weq", "vertex_0_in_1.yaml", "--certificate", "bogus_cert.yaml"), 2),
    (("nerve", "span.txt", "--seed", "3"), 2),
    (("nerve", "span.txt", "--budget", "10"), 2),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_nerve_counts(capsys):
    code, out, _ = run(capsys, "nerve", "span.txt")
    assert code == 0
    assert out["cells"] == [3, 5, 7, 9] and out["nondegenerate"] == [3, 2, 0, 0]


def test_eval_representable(capsys):
    # Fun([1], Γ): 5 objects (monotone pairs), as in the oracle
    _, out, _ = run(capsys, "eval", "rep:span.txt", "ordinal:1")
    assert out["objects"] == 5


def test_ho_interval(capsys):
    _, out, _ = run(capsys, "ho", "interval.yaml")
    assert out["objects"] == 2 and out["morphisms"] == 3


def test_example_comparison(capsys):
    code, out, _ = run(capsys, "example-1-13")
    assert code == 0
    assert (out["dom_size"], out["cod_size"], out["injective"], out["surjective"]) == (23, 25, True, False)


def test_qrep_report_fields(capsys):
    _, out, _ = run(capsys, "qrep-check", "const:cat_1.txt", SMALL)
    assert out["verdict"] == "fail" and out["failing"] == ["condition2"]
    assert out["probes"] == ["[0]", "[1]"]
    assert {r["check"] for r in out["results"]} >= {"condition1", "condition2", "condition3"}


def test_lcheck(capsys):
    code, out, _ = run(capsys, "lcheck", "horn:2:1", "--probe", "span")
    assert code == 0 and out["objects"] == out["category"]["objects"] == 9


def test_budget_exhaustion_exits_3():
    # fresh process: results memoized by earlier tests would skip the enumeration
    cmd = [sys.executable, "-m", "pdcalc.cli", "report-all", "--criteria", "5", "--budget", "1000"]
    proc = subprocess.run(cmd, capture_output=True, timeout=300)
    assert proc.returncode == 3
    assert json.loads(proc.stdout)["verdict"] == "inconclusive"


def test_budget_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("PDCALC_BUDGET", "5")
    assert run(capsys, "nerve", "span.txt")[0] == 2


def test_text_format(capsys):
    assert main(["nerve", "span.txt", "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "cells" in out and not out.lstrip().startswith("{")


def test_error_message_names_module(capsys):
    _, _, err = run(capsys, "validate", "bad_cat.txt")
    assert err.startswith("error: [formats.")
