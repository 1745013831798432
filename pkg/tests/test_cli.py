import json
import math
from pathlib import Path

import pytest
from click.testing import CliRunner

from beurling.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def read_json(path):
    return json.loads(Path(path).read_text())


def strip_log(directory):
    """All output files except the timestamped run.log, as {name: bytes}."""
    out = {}
    for p in sorted(Path(directory).iterdir()):
        if p.name != "run.log":
            out[p.name] = p.read_bytes()
    return out


def test_gen_small_system(runner, tmp_path):
    res = runner.invoke(main, [
        "gen", "--variant", "explicit-list", "--params", "2,3",
        "--bound", "13", "--out", str(tmp_path / "o"),
    ])
    assert res.exit_code == 0, res.output
    assert "enumerated 8 integers" in res.output
    enum = (tmp_path / "o" / "enumeration.csv").read_text().splitlines()
    assert len(enum) == 8
    assert enum[0].split("\t") == ["1", "", "0"]
    counting = (tmp_path / "o" / "counting.csv").read_text().splitlines()
    assert counting[0] == "x,N,psi,psi_over_x,E1_log_x"
    assert (tmp_path / "o" / "run.log").exists()


def test_check_requires_density_before_writing(runner, tmp_path):
    out = tmp_path / "o"
    res = runner.invoke(main, [
        "check", "--variant", "rational-primes", "--bound", "100",
        "--checks", "l1", "--out", str(out),
    ])
    assert res.exit_code == 2
    assert "require" in res.output
    assert not out.exists()  # validation failed before any file was written


def test_check_unknown_name(runner, tmp_path):
    res = runner.invoke(main, [
        "check", "--variant", "rational-primes", "--bound", "100",
        "--density-a", "1", "--checks", "nope", "--out", str(tmp_path / "o"),
    ])
    assert res.exit_code == 2
    assert "unknown check" in res.output


def test_check_all_reports_and_summary(runner, tmp_path):
    out = tmp_path / "o"
    res = runner.invoke(main, [
        "check", "--variant", "rational-primes", "--bound", "10000",
        "--density-a", "1",
        "--checks", "l1,zhang,little-o,chebyshev,identity,boundary",
        "--out", str(out),
    ])
    assert res.exit_code == 0, res.output
    summary = read_json(out / "summary.json")
    for name in ("l1", "zhang", "little-o", "chebyshev", "identity", "boundary"):
        rep = read_json(out / f"report-{name}.json")
        assert rep["check"] == name
        assert summary["verdicts"][name] == rep["verdict"]
    assert summary["verdicts"]["l1"] == "convergent-evidence"
    assert summary["verdicts"]["identity"] == "pass"
    assert "ratio_min" in summary["verdicts"]["chebyshev"]
    assert (out / "identity.csv").exists()
    assert (out / "boundary.csv").exists()


def test_check_reruns_byte_identical(runner, tmp_path):
    args = [
        "check", "--variant", "explicit-list", "--params", "2,3,5",
        "--bound", "500", "--density-a", "0.5", "--checks", "l1,chebyshev",
    ]
    out1, out2 = tmp_path / "a", tmp_path / "b"
    r1 = runner.invoke(main, args + ["--out", str(out1)])
    r2 = runner.invoke(main, args + ["--out", str(out2)])
    assert r1.exit_code == 0 and r2.exit_code == 0
    assert strip_log(out1) == strip_log(out2)


def test_capacity_exit_code(runner, tmp_path):
    res = runner.invoke(main, [
        "gen", "--variant", "rational-primes", "--bound", "10000",
        "--max-integers", "5", "--out", str(tmp_path / "o"),
    ])
    assert res.exit_code == 3


def test_config_file_with_overrides(runner, tmp_path):
    cfg = tmp_path / "run.ini"
    cfg.write_text(
        "[system]\n"
        "variant = explicit-list\n"
        "params = 2, 3\n"
        "bound = 100\n"
        "density_a = 0.3\n"
        "[run]\n"
        "checks = l1\n"
        "[chebyshev]\n"
        "window_lo = 10\n"
        "window_hi = 50\n"
    )
    out = tmp_path / "o"
    res = runner.invoke(main, [
        "check", "--config", str(cfg), "--checks", "chebyshev", "--out", str(out),
    ])
    assert res.exit_code == 0, res.output
    rep = read_json(out / "report-chebyshev.json")
    assert rep["window"] == [10.0, 50.0]
    assert rep["parameters"]["bound"] == 100.0


def test_missing_config_file(runner, tmp_path):
    res = runner.invoke(main, [
        "gen", "--config", str(tmp_path / "absent.ini"), "--out", str(tmp_path / "o"),
    ])
    assert res.exit_code == 2


def test_zeta_sweep(runner, tmp_path):
    out = tmp_path / "o"
    res = runner.invoke(main, [
        "zeta-sweep", "--variant", "explicit-list", "--params", "2,3",
        "--bound", "1000", "--density-a", "0.2", "--out", str(out),
        "--sigma-steps", "3", "--t-steps", "3",
    ])
    assert res.exit_code == 0, res.output
    lines = (out / "zeta_sweep.csv").read_text().splitlines()
    assert len(lines) == 1 + 9
    header = lines[0].split(",")
    assert header[:2] == ["sigma", "t"]
    row = dict(zip(header, map(float, lines[1].split(","))))
    # the three methods agree within their summed truncation bounds
    gap = math.hypot(row["euler_re"] - row["stieltjes_re"],
                     row["euler_im"] - row["stieltjes_im"])
    assert gap <= row["euler_bound"] + row["stieltjes_bound"] + 1e-9


def test_zeta_sweep_rejects_bad_sigma(runner, tmp_path):
    res = runner.invoke(main, [
        "zeta-sweep", "--variant", "single-prime", "--params", "2",
        "--bound", "100", "--sigma-lo", "0.5", "--out", str(tmp_path / "o"),
    ])
    assert res.exit_code == 2


def test_identity_check_single_prime(runner, tmp_path):
    out = tmp_path / "o"
    res = runner.invoke(main, [
        "identity-check", "--variant", "single-prime", "--params", "2",
        "--bound", "1024", "--out", str(out),
    ])
    assert res.exit_code == 0, res.output
    rep = read_json(out / "report-identity.json")
    assert rep["verdict"] == "pass"
    assert rep["max_excess_over_allowance"] == 0.0


def test_boundary_scan_command(runner, tmp_path):
    out = tmp_path / "o"
    res = runner.invoke(main, [
        "boundary-scan", "--variant", "rational-primes", "--bound", "10000",
        "--density-a", "1", "--out", str(out),
    ])
    assert res.exit_code == 0, res.output
    rep = read_json(out / "report-boundary.json")
    assert rep["verdict"].startswith("zero-free-halfwidth=")
    lines = (out / "boundary.csv").read_text().splitlines()
    assert lines[0] == "t,G_re,G_im,G_abs"
    assert len(lines) == 202


def test_report_aggregates(runner, tmp_path):
    out = tmp_path / "o"
    runner.invoke(main, [
        "check", "--variant", "rational-primes", "--bound", "1000",
        "--density-a", "1", "--checks", "l1,zhang", "--out", str(out),
    ])
    (out / "summary.json").unlink()
    res = runner.invoke(main, ["report", "--out", str(out)])
    assert res.exit_code == 0, res.output
    summary = read_json(out / "summary.json")
    assert set(summary["verdicts"]) == {"l1", "zhang"}
    assert summary["system"]["variant"] == "rational-primes"


def test_report_empty_dir(runner, tmp_path):
    res = runner.invoke(main, ["report", "--out", str(tmp_path)])
    assert res.exit_code == 2
