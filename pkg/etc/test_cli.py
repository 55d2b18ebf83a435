#!/usr/bin/env python3
"""
CLI 테스트 (main(argv) 의 종료 코드와 stdout)
"""

import json

import pytest

from f1points_cli import EXIT_BUDGET, EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main, n_range


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_roots_csv(capsys):
    code, out = run(capsys, "roots", "A2")
    lines = out.splitlines()
    assert code == EXIT_OK
    assert lines[0] == "# formula: reflection-closure"
    assert lines[1] == "index,root,height,positive,coroot_form"
    assert len(lines) == 2 + 6


def test_weyl_json(capsys):
    code, out = run(capsys, "weyl", "A1", "--json")
    rows = json.loads(out)
    assert code == EXIT_OK
    assert [row["word"] for row in rows] == ["e", "s1"]
    assert rows[1]["inversions"] == [[1]]


def test_weyl_census(capsys):
    code, out = run(capsys, "--format", "json", "weyl", "A2", "--census")
    rows = json.loads(out)["rows"]
    assert [(r["length"], r["count"]) for r in rows] == [(0, 1), (1, 2), (2, 2), (3, 1)]


def test_count_projective_census(capsys):
    code, out = run(capsys, "--format", "json", "count", "--gadget", "pd", "--d", "3", "--n", "2", "--census")
    payload = json.loads(out)
    assert code == EXIT_OK
    assert payload["formula"] == "binomial"
    assert payload["rows"][0]["census"] == [4, 12, 16, 8]
    assert payload["rows"][0]["P(n)"] == 40


def test_count_chevalley_against_brute_force(capsys):
    code, out = run(capsys, "--format", "json", "count", "--type", "A1", "--n", "1..4", "--enumerate")
    rows = json.loads(out)["rows"]
    assert code == EXIT_OK
    assert [r["P(n)"] for r in rows] == [6, 24, 60, 120]
    assert all(r["match"] for r in rows)
    assert [r["enumerated"] for r in rows] == [6, 24, 60, 120]


def test_count_restricted_adjoint(capsys):
    code, out = run(capsys, "--format", "json", "count", "--type", "A1:adjoint", "--n", "4", "--restricted",
                    "--census")
    row = json.loads(out)["rows"][0]
    assert row["census"] == [0, 4, 24, 32]
    assert row["psl2"] == 60


def test_count_csv_header(capsys):
    code, out = run(capsys, "count", "--gadget", "gm", "--n", "1..3")
    assert out.splitlines()[0] == "# formula: binomial"
    assert out.splitlines()[1] == "n,P(n),q"


def test_tits_table(capsys):
    code, out = run(capsys, "tits", "A1", "--group", "Z/4:eps=2", "--table")
    digest = json.loads(out)
    assert code == EXIT_OK
    assert digest["order"] == 8
    assert digest["element_orders"] == {"1": 1, "2": 1, "4": 6}


def test_tits_laws(capsys):
    code, out = run(capsys, "--format", "json", "tits", "A2", "--group", "Z/2:eps=1", "--laws")
    rows = json.loads(out)["rows"]
    assert code == EXIT_OK
    assert all(r["passed"] for r in rows)


def test_bruhat_census(capsys):
    code, out = run(capsys, "--format", "json", "bruhat", "--type", "A1", "--q", "3", "--census")
    rows = json.loads(out)["rows"]
    assert [(r["w"], r["size"]) for r in rows] == [("e", 6), ("s1", 18)]
    assert all(r["match"] for r in rows)


def test_bruhat_summary(capsys):
    code, out = run(capsys, "--format", "json", "bruhat", "--type", "A1", "--q", "3")
    row = json.loads(out)["rows"][0]
    assert row["order"] == row["formula_order"] == 24
    assert row["big_cell"] == 18


def test_eval_with_character(capsys):
    code, out = run(capsys, "eval", "--type", "A1", "--group", "Z/4:eps=2", "--char", "0")
    payload = json.loads(out)
    assert code == EXIT_OK
    assert len(payload["points"]) == 120
    assert payload["ring"] == "Z[Z/4:eps=2,eps]"
    assert "specialized" in payload["points"][0]


def test_eval_monoid(capsys):
    code, out = run(capsys, "eval", "--type", "A1", "--monoid", "F3")
    payload = json.loads(out)
    assert len(payload["points"]) == 24
    assert payload["ring"] == "GF(3)"


def test_verify_single_check(capsys):
    code, out = run(capsys, "--format", "json", "verify", "--check", "lattice_cover", "--no-progress")
    payload = json.loads(out)
    assert code == EXIT_OK
    assert payload["formula"] == "invariant-suite"
    assert payload["rows"] == [{"suite": "roots", "check": "lattice_cover", "passed": True, "error": None}]


@pytest.mark.parametrize("argv", [
    ["roots", "X9"],
    ["roots"],
    ["count", "--gadget", "pd"],
    ["count", "--gadget", "gm", "--restricted"],
    ["bruhat", "--type", "B2", "--q", "3"],
    ["bruhat", "--type", "A1", "--q", "6"],
    ["eval", "--type", "A1"],
    ["tits", "A1", "--group", "Z/4:eps=1"],
    ["verify", "--check", "nothing"],
    ["count", "--n", "0"],
    ["frobnicate"],
    ["--budget", "0", "roots", "A1"],
    [],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == EXIT_USAGE


def test_budget_exceeded(capsys):
    code = main(["--budget", "10", "count", "--gadget", "pd", "--d", "3", "--n", "2", "--enumerate"])
    assert code == EXIT_BUDGET


def test_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("F1POINTS_BUDGET", "10")
    assert main(["count", "--type", "A1", "--n", "2", "--enumerate"]) == EXIT_BUDGET


def test_help_exits_cleanly(capsys):
    assert main(["--help"]) == EXIT_OK


def test_config_round_trip(tmp_path, capsys):
    path = tmp_path / "quick.yaml"
    assert main(["config", "create", "--output", str(path), "--profile", "quick"]) == EXIT_OK
    assert main(["config", "validate", str(path)]) == EXIT_OK
    bad = tmp_path / "bad.yaml"
    bad.write_text("output:\n  format: xml\n", encoding="utf-8")
    assert main(["config", "validate", str(bad)]) == EXIT_FAILURE


def test_config_show(capsys):
    code, out = run(capsys, "config", "show")
    assert set(json.loads(out)) == {"enumeration", "output", "verify", "logging"}


def test_n_range():
    assert n_range("3") == [3]
    assert n_range("2..4") == [2, 3, 4]
