"""Acceptance criteria, one test each, with a pass/fail line per criterion."""

import subprocess
import sys

import pytest

import conftest
from pdcalc.acceptance import LIMITS_S, run_criterion, summary_line
from pdcalc.report import PASS


def record(line):
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)


@pytest.mark.parametrize("cid", sorted(LIMITS_S))
def test_criterion(cid):
    rec = run_criterion(cid, timings=True)
    line = f"{summary_line(rec)} [{rec['runtime_ms']} ms, limit {rec['limit_ms']} ms]"
    if rec["verdict"] == PASS and rec["runtime_ms"] > rec["limit_ms"]:
        line = line.replace(": PASS", ": FAIL (over time limit)", 1)
    record(line)
    failed = [c for c in rec["checks"] if c["verdict"] != PASS]
    assert rec["verdict"] == PASS, failed
    assert rec["runtime_ms"] <= rec["limit_ms"]


def test_criterion_12_determinism():
    cmd = [sys.executable, "-m", "pdcalc.cli", "report-all"]
    runs = [subprocess.run(cmd, capture_output=True, timeout=600) for _ in range(2)]
    same = runs[0].stdout == runs[1].stdout and len(runs[0].stdout) > 0
    record(f"criterion 12: {'PASS' if same else 'FAIL'} (two report-all runs, {len(runs[0].stdout)} bytes)")
    assert runs[0].returncode == runs[1].returncode
    assert same
