from __future__ import annotations

import json
import subprocess
import sys

import pytest

from nhfock.cli import UsageError, parse_module, run
from nhfock.qlaurent import LaurentInt


def test_gdim_l3(capsys):
    assert run(["gdim", "--module", "L3"]) == 0
    out = capsys.readouterr().out.strip()
    assert LaurentInt.parse(out).evaluate(1) == 6


def test_gdim_compound(capsys):
    assert run(["gdim", "--module", "TR(I(L1),1)"]) == 0
    assert LaurentInt.parse(capsys.readouterr().out.strip()) == LaurentInt({-2: 1, 0: 1})


def test_parse_module_errors():
    for bad in ["", "L", "I(L1", "TR(L2)", "TR(L2,x)", "L1 L2", "Q"]:
        with pytest.raises(UsageError):
            parse_module(bad)


def test_usage_errors():
    assert run([]) == 2
    assert run(["verify", "nope"]) == 2
    assert run(["gdim", "--module", "X(1)"]) == 2
    assert run(["verify", "qweyl", "--max-n", "-1"]) == 2


def test_verify_functors_base_case(capsys):
    assert run(["verify", "functors", "--max-n", "1", "--max-k", "1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    ses = [ln for ln in lines if "/ses[" in ln]
    assert len(ses) == 1 and ses[0].startswith("PASS")
    assert "lhs=1*q^-2 + 1*q^0 rhs=1*q^-2 + 1*q^0" in ses[0]


def test_verify_qweyl_bound_8():
    assert run(["verify", "qweyl", "--max-n", "8", "--quiet"]) == 0


def test_json_reports_are_deterministic(tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        assert run(["verify", "nilhecke", "--max-n", "3", "--seed", "5", "--quiet", "--json", str(p)]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    report = json.loads(paths[0].read_text())
    assert report["pass"] and report["settings"]["seed"] == 5
    assert {"claim", "statement", "params", "lhs", "rhs", "shift", "pass"} <= set(report["claims"][0])


def test_tables(capsys):
    assert run(["table", "--what", "binom", "--max-n", "1"]) == 0
    assert "n=1 m=1: 1*q^-2 + 1*q^0" in capsys.readouterr().out
    assert run(["table", "--what", "pairing", "--max-n", "2"]) == 0
    assert "1*q^2" in capsys.readouterr().out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nhfock", "gdim", "--module", "L2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1*q^0 + 1*q^2"


def test_verify_all_aggregates_every_suite(tmp_path):
    out = tmp_path / "all.json"
    assert run(["verify", "all", "--quiet", "--json", str(out)]) == 0
    report = json.loads(out.read_text())
    assert {c["suite"] for c in report["claims"]} == {"qlaurent", "nilhecke", "gmod", "functors", "groth", "qweyl"}
    assert report["ledger"]["induce"]["1,1"] == -2
    assert report["ledger_problems"] == []
    assert "wall_time" not in report


def test_failure_gives_exit_1(monkeypatch):
    import nhfock.suites as suites

    def broken(max_n, max_k, seed, ledger):
        return [suites.claim("broken", "always fails", {}, 0, 1, False)]
    monkeypatch.setitem(suites.RUNNERS, "qweyl", broken)
    assert run(["verify", "qweyl", "--quiet"]) == 1
