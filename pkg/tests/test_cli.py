"""Command-line interface: exit codes, formats, determinism."""

import csv
import io
import json
import math

import pytest

from fracsharp.cli import dispatch, to_json


def run(capsys, argv):
    code = dispatch(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_constant_json(capsys):
    code, out, _ = run(capsys, ["constant", "pitt_C", "n=3", "alpha=2",
                                "--output", "json"])
    assert code == 0
    rec = json.loads(out)
    assert rec["id"] == "pitt_C"
    assert rec["value"] == pytest.approx(16.0 * math.pi ** 2, rel=1e-15)


def test_check_pass_exit_zero(capsys):
    code, out, _ = run(capsys, ["check", "gsr_identity", "n=3", "alpha=1",
                                "profile=gaussian", "--tol", "1e-6"])
    assert code == 0
    assert "PASS" in out


def test_check_fail_exit_one(capsys):
    code, out, _ = run(capsys, ["check", "int1_gradient_limit",
                                "--output", "json"])
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_usage_errors_exit_two(capsys):
    assert run(capsys, ["check", "no_such_check"])[0] == 2
    assert run(capsys, ["check", "gsr_identity", "bogus=1"])[0] == 2
    assert run(capsys, ["constant", "pitt_C", "n=3"])[0] == 2  # missing alpha
    code, _, err = run(capsys, ["constant", "pitt_C", "n=3", "alpha=5"])
    assert code == 2
    assert "alpha" in err  # violated predicate echoed


def test_suite_list(capsys):
    code, out, _ = run(capsys, ["suite", "--list"])
    assert code == 0
    from fracsharp import check_ids
    for cid in check_ids():
        assert cid in out


def test_list_command(capsys):
    code, out, _ = run(capsys, ["list"])
    assert code == 0
    assert "pitt_C" in out and "gsr_identity" in out


def test_json_byte_identical(capsys):
    argv = ["check", "as_identity", "--output", "json"]
    _, out1, _ = run(capsys, argv)
    _, out2, _ = run(capsys, argv)
    assert out1 == out2


def test_json_csv_value_equality(capsys):
    _, out_json, _ = run(capsys, ["check", "nagy_thm5", "--output", "json"])
    _, out_csv, _ = run(capsys, ["check", "nagy_thm5", "--output", "csv"])
    rec = json.loads(out_json)
    rows = list(csv.DictReader(io.StringIO(out_csv)))
    assert len(rows) == 1
    row = rows[0]
    for field in ("lhs", "rhs", "margin", "tol"):
        assert float(row[field]) == rec[field]
    assert row["id"] == rec["id"]
    assert (row["pass"] == "True") == rec["pass"]
    assert json.loads(row["params"]) == rec["params"]


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, ["check", "hardy_classical",
                                "--output", "json", "--out", str(target)])
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["pass"] is True


def test_discrete_nsw_via_cli(capsys):
    code, out, _ = run(capsys, ["check", "discrete_nsw", "trials=100",
                                "--seed", "4", "--output", "json"])
    assert code == 0
    assert json.loads(out)["id"] == "discrete_nsw"


def test_probe_via_cli(capsys):
    code, out, _ = run(capsys, ["probe", "pitt_spectral",
                                "family=concentrating_gaussian",
                                "schedule=1,2", "--output", "json"])
    assert code == 0
    rec = json.loads(out)
    assert len(rec["ratios"]) == 2
    assert all(r["ratio"] <= 1.0 + 1e-6 for r in rec["ratios"])


def test_to_json_float_formatting():
    assert to_json(1.0 / 3.0) == "0.33333333333333331"
    assert float(to_json(math.pi)) == math.pi
    assert to_json({"b": 1, "a": 2}) == '{"a":2,"b":1}'
