import csv
import io
import json
import subprocess
import sys

import pytest

from lahnum.cli import SuiteConfig, UsageError, cmd_props, cmd_series, cmd_table, main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_table_single_row():
    assert cmd_table(1, "text").strip() == "1: 1  | total 1"


def test_table_csv_row_four():
    rows = list(csv.DictReader(io.StringIO(cmd_table(4, "csv"))))
    assert len(rows) == 10
    assert [int(r["value"]) for r in rows if r["n"] == "4"] == [24, 36, 12, 1]


def test_table_json_totals():
    rows = json.loads(cmd_table(3, "json"))
    assert [r["total"] for r in rows] == ["1", "3", "13"]
    assert rows[2]["values"] == ["6", "6", "1"]


def test_table_big_ints_are_strings():
    rows = json.loads(cmd_table(25, "json"))
    assert rows[24]["values"][0] == "15511210043330985984000000"


def test_table_csv_and_json_agree():
    rows = list(csv.DictReader(io.StringIO(cmd_table(12, "csv"))))
    js = json.loads(cmd_table(12, "json"))
    from_json = [(r["n"], k, int(v), int(r["total"])) for r in js for k, v in enumerate(r["values"], 1)]
    from_csv = [(int(r["n"]), int(r["k"]), int(r["value"]), int(r["total"])) for r in rows]
    assert from_json == from_csv


def test_table_safety_cap(capsys):
    code, _, err = run(["table", "--n-max", "501"], capsys)
    assert code == 1 and "safety cap" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        main(["verify", "--tol", "abc"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(["nonsense"])
    assert info.value.code == 1


def test_suite_config_validation():
    with pytest.raises(UsageError):
        SuiteConfig(tol=0)
    with pytest.raises(UsageError):
        SuiteConfig(grid={"w": [1.0]})
    with pytest.raises(UsageError):
        SuiteConfig(n_max=0)


def test_verify_minimal_grid(capsys):
    code, out, _ = run(["verify", "--n-max", "1", "--grid-x", "1", "--grid-z", "1", "--grid-k", "1",
                        "--format", "json"], capsys)
    assert code == 0
    reports = json.loads(out)
    assert all(r["passed"] for r in reports)
    for r in reports:
        p = r["parameters"]
        assert p.get("n", 1) == 1 and p.get("x", 1.0) == 1.0 and p.get("z", 1.0) == 1.0
        assert p.get("k", 1) == 1


def test_verify_csv_json_agree(capsys):
    args = ["verify", "--n-max", "2", "--grid-x", "0.5,2", "--grid-z", "1", "--grid-k", "0,2"]
    _, out_json, _ = run(args + ["--format", "json"], capsys)
    _, out_csv, _ = run(args + ["--format", "csv"], capsys)
    js = json.loads(out_json)
    rows = list(csv.DictReader(io.StringIO(out_csv)))
    assert len(js) == len(rows)
    for j, c in zip(js, rows):
        assert j["identity_id"] == c["identity_id"]
        assert j["parameters"] == json.loads(c["parameters"])
        assert j["lhs"] == float(c["lhs"])
        assert j["abs_error"] == float(c["abs_error"])
        assert j["rel_error"] == float(c["rel_error"])
        if j["rhs"] is not None:
            assert j["rhs"]["value"] == float(c["rhs_value"])
        assert str(j["passed"]).lower() == c["passed"]


def test_verify_deterministic(capsys):
    args = ["verify", "--n-max", "2", "--grid-z", "2", "--grid-k", "1", "--format", "json"]
    assert run(args, capsys)[1] == run(args, capsys)[1]


def test_verify_unreachable_tolerance(capsys):
    code, _, err = run(["verify", "--tol", "1e-15"], capsys)
    assert code == 2
    assert "verification failed" in err


def test_verify_writes_out_file(tmp_path, capsys):
    target = tmp_path / "reports.json"
    code, out, _ = run(["verify", "--n-max", "1", "--grid-x", "1", "--format", "json",
                        "--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert json.loads(target.read_text())


def test_props_defaults():
    code, text = cmd_props()
    assert code == 0
    assert text.splitlines()[0] == "violations: none; certificates: 12/12 real-distinct-nonpositive"


def test_props_small():
    code, text = cmd_props(m_max=2, fmt="json")
    data = json.loads(text)
    assert len(data["certificates"]) == 2
    code, text = cmd_props(max_total=4, fmt="json")
    assert json.loads(text)["violations"] == []


def test_series_output():
    rows = json.loads(cmd_series([2], 4, fmt="json"))
    assert [r["scaled"] for r in rows] == ["0", "0", "1", "6", "36"]
    alt = json.loads(cmd_series([1], 3, alternating=True, fmt="json"))
    assert [r["coefficient"] for r in alt] == ["0", "-1", "1", "-1"]
    with pytest.raises(UsageError):
        cmd_series([5], 3)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lahnum", "table", "--n-max", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "total 13" in proc.stdout
