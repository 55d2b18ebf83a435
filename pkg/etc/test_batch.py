#!/usr/bin/env python3
"""
배치 검증기 테스트
"""

import json

import pytest

from batch import checks
from batch.batch_verifier import BatchVerifier, main
from batch.checks import CHECK_REGISTRY, SUITES, VerifyCheck, run_check, select_checks
from config.config_manager import EnumerationConfig, VerifyConfig


def _config(**overrides):
    values = {"max_workers": 1, "progress_bar": False}
    values.update(overrides)
    return VerifyConfig(**values)


def test_registry_covers_every_suite():
    assert {c.suite for c in CHECK_REGISTRY} == set(SUITES)
    assert len({c.name for c in CHECK_REGISTRY}) == len(CHECK_REGISTRY)


def test_select_keeps_registry_order():
    selected = select_checks(["weyl", "roots"])
    assert [c.name for c in selected] == ["root_axioms", "lattice_cover", "weyl_groups"]
    assert [c.name for c in select_checks(None, ["adjunction", "field_axioms"])] == ["field_axioms", "adjunction"]


def test_select_rejects_unknown_names():
    with pytest.raises(ValueError):
        select_checks(["geometry"])
    with pytest.raises(ValueError):
        select_checks(None, ["no_such_check"])


@pytest.mark.parametrize("name", ["field_axioms", "adjunction", "root_axioms", "lattice_cover", "weyl_groups"])
def test_cheap_checks_pass(name):
    passed, detail = run_check(name, EnumerationConfig())
    assert passed, detail


def test_serial_run(tmp_path):
    verifier = BatchVerifier(_config(suites=["roots"]), output_dir=str(tmp_path))
    summary = verifier.run()
    assert summary["batch_info"]["total_checks"] == 2
    assert summary["batch_info"]["passed_checks"] == 2
    assert verifier.all_passed
    assert verifier.failed_results() == []
    assert list(tmp_path.iterdir()) == []


def test_threaded_run_merges_in_registry_order():
    verifier = BatchVerifier(_config(max_workers=3, suites=["arith", "roots"]))
    verifier.run()
    assert [r.name for r in verifier.results] == ["field_axioms", "characters", "adjunction",
                                                  "root_axioms", "lattice_cover"]


def test_exceptions_become_failed_results(monkeypatch):
    def boom(enumeration):
        raise RuntimeError("table corrupted")

    monkeypatch.setitem(checks._BY_NAME, "root_axioms", VerifyCheck("root_axioms", "roots", boom))
    verifier = BatchVerifier(_config())
    verifier.run(["root_axioms", "lattice_cover"])
    failed = verifier.failed_results()
    assert [r.name for r in failed] == ["root_axioms"]
    assert failed[0].error_message == "RuntimeError: table corrupted"
    assert not verifier.all_passed


def test_empty_selection():
    verifier = BatchVerifier(_config(suites=["roots"]))
    summary = verifier.run(["field_axioms"])
    assert summary["batch_info"]["total_checks"] == 0
    assert not verifier.all_passed


def test_reports_are_written(tmp_path):
    verifier = BatchVerifier(_config(save_reports=True), output_dir=str(tmp_path))
    verifier.run(["lattice_cover"])
    summaries = list(tmp_path.glob("verify_summary_*.json"))
    details = list(tmp_path.glob("verify_details_*.csv"))
    assert len(summaries) == 1 and len(details) == 1
    data = json.loads(summaries[0].read_text(encoding="utf-8"))
    assert data["results"][0]["name"] == "lattice_cover"
    assert data["results"][0]["detail"]["A1:adjoint"]["index"] == 2
    assert details[0].read_text(encoding="utf-8").startswith("Suite,Check,Passed")


def test_entry_point(capsys):
    assert main(["--suite", "roots", "--workers", "1"]) == 0
    assert "passed 2/2" in capsys.readouterr().out


def test_extension_cases_cover_type_c_and_rank_three():
    specs = {rs_spec for rs_spec, _ in checks.EXTENSION_CASES}
    assert {"A3", "B3", "C2", "C3"} <= specs
    assert ("A2", "Z/6:eps=3") in checks.EXTENSION_CASES
