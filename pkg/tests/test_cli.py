"""Command-line runner: grids, check selection, formats, exit codes."""

import json

import pytest

from fockcocycles import verify_cli


def test_parse_range():
    assert verify_cli._parse_range("3") == (3, 3)
    assert verify_cli._parse_range("1:4") == (1, 4)
    with pytest.raises(ValueError):
        verify_cli._parse_range("4:1")


def test_small_grid_all_pass(capsys):
    rc = verify_cli.main(["--p", "1:2", "--q", "1", "--a", "0:1", "--b", "0:1"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "0 failed" in out


def test_json_records_are_structured(capsys):
    rc = verify_cli.main([
        "--p", "2", "--q", "1", "--a", "1", "--b", "1",
        "--checks", "closedness,vz-values,product-formula",
        "--format", "json",
    ])
    assert rc == 0
    records = json.loads(capsys.readouterr().out)
    assert {r["name"] for r in records} == {
        "closedness", "vz-values", "product-formula"}
    for r in records:
        assert set(r) == {"name", "params", "status", "millis", "counterexample"}
        assert r["status"] == "pass"
        assert r["counterexample"] is None


def test_constraint_violating_cells_skipped(capsys):
    rc = verify_cli.main([
        "--p", "1", "--q", "1", "--a", "1", "--b", "1",
        "--checks", "closedness",
    ])
    out = capsys.readouterr().out
    assert rc == 0
    assert "skipped" in out
    assert "1 skipped" in out


def test_unknown_check_rejected():
    with pytest.raises(SystemExit) as e:
        verify_cli.main(["--checks", "frobnicate"])
    assert e.value.code == 2


def test_empty_selection_succeeds(capsys):
    rc = verify_cli.main(["--checks", ","])
    assert rc == 0
    assert "no checks selected" in capsys.readouterr().out


def test_jobs_parallel_matches_serial(capsys):
    args = ["--p", "1:2", "--q", "1", "--a", "0:1", "--b", "0:1",
            "--checks", "closedness,chern-invariance", "--format", "json"]
    verify_cli.main(args)
    serial = capsys.readouterr().out
    verify_cli.main(args + ["--jobs", "4"])
    parallel = capsys.readouterr().out
    strip = lambda text: [
        {k: v for k, v in r.items() if k != "millis"} for r in json.loads(text)]
    assert strip(serial) == strip(parallel)


def test_max_degree_skips_multiplicity(capsys):
    rc = verify_cli.main([
        "--p", "2", "--q", "2", "--a", "1", "--b", "1",
        "--checks", "multiplicity-one", "--max-degree", "1",
    ])
    out = capsys.readouterr().out
    assert rc == 0
    assert "1 skipped" in out


def test_failure_exit_code_and_counterexample(monkeypatch, capsys):
    def broken(p, q):
        return "fail", "synthetic counterexample"

    monkeypatch.setitem(verify_cli.GRID_CHECKS, "exterior-dimension", broken)
    rc = verify_cli.main([
        "--p", "1", "--q", "1", "--a", "0", "--b", "0",
        "--checks", "exterior-dimension", "--format", "json",
    ])
    assert rc == 1
    records = json.loads(capsys.readouterr().out)
    assert records[0]["status"] == "fail"
    assert records[0]["counterexample"] == "synthetic counterexample"
