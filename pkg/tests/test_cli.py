import csv
import io
import json
import subprocess
import sys

import pytest

from peerreview.cli import parse_config_text, run_command, UsageError


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def rows_of(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_one_shot_example_a_table():
    code, out, err = run("one-shot", "--config", "exampleA")
    assert code == 0 and not err
    for token in ("0.450701959941", "0.22535097997", "0.3125", "capacity"):
        assert token in out
    row = rows_of(run("one-shot", "--config", "exampleA", "--csv")[1])[0]
    assert float(row["z_bar"]) == pytest.approx(1.0, abs=1e-11)


def test_dynamic_example_b():
    code, out, _ = run("dynamic", "--config", "exampleA", "--kappa", "0.3", "--z-bar", "1.0", "--csv")
    row = rows_of(out)[0]
    assert code == 0 and row["regime"] == "moderate"
    assert float(row["yield_hat"]) == pytest.approx(0.498774306536, abs=1e-11)


def test_dynamic_solves_threshold_from_capacity():
    code, out, _ = run("dynamic", "--config", "exampleA", "--n", "0.4987743065358", "--kappa", "0.3", "--csv")
    assert code == 0 and float(rows_of(out)[0]["z_bar"]) == pytest.approx(1.0, abs=1e-8)


def test_first_best_example_c():
    row = rows_of(run("first-best", "--config", "exampleC", "--csv")[1])[0]
    assert float(row["multiplier"]) == pytest.approx(0.25, abs=1e-12)
    assert float(row["implementing_probability"]) == pytest.approx(0.75, abs=1e-12)


def test_infeasible_exit_1():
    code, out, err = run("one-shot", "--config", "infeasible")
    assert code == 1 and not out and err.startswith("infeasible:")


@pytest.mark.parametrize("argv,prefix", [
    (["bogus"], "error:"),
    ([], "error:"),
    (["one-shot"], "error:"),
    (["one-shot", "--config", "/nonexistent/file"], "error:"),
    (["dynamic", "--config", "exampleA"], "error:"),
    (["one-shot", "--config", "exampleA", "--sigma", "-1"], "invalid input:"),
])
def test_bad_usage_exit_1(argv, prefix):
    code, out, err = run(*argv)
    assert code == 1 and not out and err.startswith(prefix)


def test_numerical_failure_exit_2(monkeypatch):
    from peerreview import cli
    from peerreview.errors import NumericalError

    def boom(values):
        raise NumericalError("forced")
    monkeypatch.setattr(cli, "cmd_one_shot", boom)
    assert run("one-shot", "--config", "exampleA")[0] == 2


def test_config_file_and_overrides(tmp_path):
    path = tmp_path / "scenario.txt"
    path.write_text("# running example\nalpha = 0.5\ntheta_skilled: 8\ntheta_unskilled = 4\nsigma = 1\nn = 0.2\n")
    base = rows_of(run("one-shot", "--config", str(path), "--csv")[1])[0]
    over = rows_of(run("one-shot", "--config", str(path), "--n", "0.3125", "--csv")[1])[0]
    assert float(base["yield"]) == pytest.approx(0.2, abs=1e-11)
    assert float(over["z_bar"]) == pytest.approx(1.0, abs=1e-11)


@pytest.mark.parametrize("text", ["alpha 0.5", "beta = 1", "alpha = x"])
def test_malformed_config(text):
    with pytest.raises(UsageError):
        parse_config_text(text)


def test_json_round_trip_matches_memory():
    from peerreview import Population, aggregate
    doc = json.loads(run("one-shot", "--config", "exampleA", "--json")[1])
    row = doc["rows"][0]
    ref = aggregate(Population(0.5, 8, 4), row["z_bar"], 1.0)
    assert doc["command"] == "one-shot" and doc["scenario"]["n"] == 0.3125
    for key, value in (("beta", ref.beta), ("impact", ref.impact), ("yield", ref.yield_)):
        assert row[key] == pytest.approx(value, rel=1e-11)
    assert float(f"{ref.beta:.12g}") == row["beta"]


def test_csv_twelve_digits():
    row = rows_of(run("one-shot", "--config", "exampleA", "--csv")[1])[0]
    assert row["beta"] == "0.450701959941"


def test_simulate_byte_identical_and_out(tmp_path):
    argv = ["simulate", "--config", "exampleB", "--population-size", "100000", "--seed", "7"]
    out_path = tmp_path / "sim.csv"
    code, first, _ = run(*argv, "--csv", "--out", str(out_path))
    assert code == 0
    assert run(*argv, "--csv", "--partitions", "4", "--workers", "2")[1] == first
    assert out_path.read_text() == first
    rows = rows_of(first)
    assert [r["quantity"] for r in rows] == ["beta", "yield", "impact"]
    assert all(abs(float(r["z_score"])) < 4 for r in rows)


def test_sweep_and_foc():
    out = run("sweep", "--config", "exampleA", "--param", "n", "--lo", "0.05", "--hi", "0.45",
              "--steps", "5", "--csv")[1]
    zs = [float(r["z_bar"]) for r in rows_of(out)]
    assert zs == sorted(zs, reverse=True) and len(zs) == 5
    rows = rows_of(run("foc", "--config", "exampleA", "--steps", "11", "--csv")[1])
    assert rows[-1]["kind"] == "optimum" and abs(float(rows[-1]["residual"])) <= 1e-9
    assert sum(r["kind"] == "scan" for r in rows) == 11


def test_optimize_reports_one_shot_baseline():
    row = rows_of(run("optimize", "--config", "exampleA", "--csv")[1])[0]
    assert float(row["impact_hat"]) >= float(row["one_shot_impact"])
    assert row["regime"] != "hawkish"


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "peerreview.cli", "one-shot", "--config", "exampleA", "--csv"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "0.3125" in proc.stdout
