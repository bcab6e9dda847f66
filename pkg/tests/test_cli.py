import csv
import io
import json
import math

import pytest

from sumdiff.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    record = json.loads(out)
    assert record["schemaVersion"] == "1"
    assert isinstance(record["runtimeMillis"], int)
    return code, record


def test_count(capsys):
    code, record = run_json(capsys, "count", "--m", "3", "--L", "2", "--B", "5")
    assert code == 0
    assert record["command"] == "count"
    assert record["parameters"] == {"m": 3, "L": 2, "B": 5}
    assert record["results"]["count"] == 10


def test_rate_zero_branch(capsys):
    code, record = run_json(capsys, "rate", "--c", "1", "--B", "2")
    assert code == 0
    assert record["results"]["value"] == 0
    assert record["results"]["t_star"] is None


def test_rate_c_zero_sentinel(capsys):
    code, record = run_json(capsys, "rate", "--c", "0", "--B", "3")
    assert code == 0
    assert math.isclose(record["results"]["value"], math.log(4), rel_tol=1e-15)
    assert record["results"]["t_star"] == "-inf"


def test_enumerate(capsys):
    code, record = run_json(capsys, "enumerate", "--m", "2", "--L", "1", "--B", "1")
    assert code == 0
    assert record["results"]["vectors"] == [[0, 0], [0, 1], [1, 0]]


def test_bound_and_dump_set(capsys, tmp_path):
    path = tmp_path / "u.txt"
    code, record = run_json(
        capsys, "bound", "--m", "2", "--L", "2", "--B", "1", "--dump-set", str(path)
    )
    assert code == 0
    results = record["results"]
    assert (results["d"], results["s"], results["q"]) == (9, 9, 9)
    assert results["theta"] == 1.0
    assert path.read_text() == "0\n1\n3\n4\n"


def test_verify_passes(capsys):
    code, record = run_json(capsys, "verify", "--max-m", "3", "--max-L", "3", "--max-B", "2")
    assert code == 0
    assert record["results"]["all_pass"] is True
    rows = record["results"]["checked"]
    assert len(rows) == 4 * 4 * 2
    assert all(r["sumset_identity"] and r["diffset_identity"] and r["injective_g"] for r in rows)


def test_optimize(capsys):
    code, record = run_json(capsys, "optimize", "--B", "5", "--eps", "1e-8")
    assert code == 0
    assert abs(record["results"]["theta_minus_1"] - 0.173077279785136) < 1e-8


def test_table1_json_csv_values_identical(capsys):
    code, record = run_json(
        capsys, "table1", "--b-range", "5..5", "--eps-list", "1e-6", "1e-8"
    )
    assert code == 0
    cells = record["results"]["cells"]

    code, out, _ = run(
        capsys, "table1", "--b-range", "5..5", "--eps-list", "1e-6", "1e-8", "--format", "csv"
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["B", "eps=1e-06", "eps=1e-08"]
    assert rows[1][0] == "5"
    # CSV carries full round-trip precision: values equal the JSON ones exactly
    assert [float(v) for v in rows[1][1:]] == [c["theta_minus_1"] for c in cells[0]]


def test_table1_csv_byte_identical_across_runs(capsys):
    args = ("table1", "--b-range", "3..4", "--eps-list", "1e-6", "--format", "csv")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--m", "3"])
    assert exc.value.code == 2


def test_invalid_value_exit_2(capsys):
    code, out, err = run(capsys, "count", "--m", "-3", "--L", "2", "--B", "5")
    assert code == 2
    assert out == ""
    assert "error" in err


def test_cap_exceeded_exit_2(capsys):
    code, _, err = run(capsys, "enumerate", "--m", "9", "--L", "20", "--B", "3", "--cap", "10")
    assert code == 2
    assert "cap" in err
