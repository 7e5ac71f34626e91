import json
import math
import os

import numpy as np
import pytest

from funkball.cli import main

FAST_CFG = """
# small solver for test runs
solver.m = 120
solver.path_nodes = 16
params.n = 3
params.a = 0.5
"""


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def value_of(stdout, key):
    for line in stdout.splitlines():
        if line.startswith(key + " = "):
            return line.split(" = ", 1)[1]
    raise AssertionError(f"{key} not printed in {stdout!r}")


def test_metric_funk_radial(capsys):
    code, out, _ = run(capsys, "metric", "--n", "2", "--a", "1", "--x", "0.5,0", "--y", "1,0")
    assert code == 0
    assert float(value_of(out, "F")) == pytest.approx(2.0, rel=1e-15)


def test_metric_origin_euclidean(capsys):
    code, out, _ = run(capsys, "metric", "--n", "3", "--a", "0", "--x", "0", "--y", "0,0,1")
    assert code == 0
    assert float(value_of(out, "F")) == pytest.approx(1.0, rel=1e-15)


def test_metric_reversibility_flag(capsys):
    code, out, _ = run(capsys, "metric", "--a", "0.5", "--reversibility")
    assert code == 0
    assert float(value_of(out, "r_F")) == pytest.approx(3.0, rel=1e-15)


def test_metric_verify_passes(capsys):
    code, out, _ = run(
        capsys, "metric", "--n", "2", "--a", "0.6", "--x", "0.3,0.2", "--alpha", "1,-1", "--verify"
    )
    assert code == 0
    assert "F_star" in out


def test_metric_validation_failures(capsys):
    code, _, err = run(capsys, "metric", "--n", "2", "--a", "1.5", "--x", "0.5,0", "--y", "1,0")
    assert code == 2
    code, _, err = run(capsys, "metric", "--n", "2", "--a", "0.5", "--x", "0.99,0,0", "--y", "1,0")
    assert code == 2  # dimension mismatch
    code, _, err = run(capsys, "metric", "--n", "2", "--a", "0.5")
    assert code == 2  # nothing to evaluate


def test_metric_distance_needs_funk_endpoint(capsys):
    code, out, _ = run(capsys, "metric", "--n", "2", "--a", "1", "--x", "0", "--x2", "0.5,0")
    assert code == 0
    assert float(value_of(out, "funk_distance")) == pytest.approx(math.log(2.0), rel=1e-12)
    code, _, _ = run(capsys, "metric", "--n", "2", "--a", "0.5", "--x", "0", "--x2", "0.5,0")
    assert code == 2


def test_counterexample_verdicts(capsys, tmp_path):
    out_dir = tmp_path / "ce"
    code, out, _ = run(capsys, "counterexample", "--n", "2", "--out", str(out_dir))
    assert code == 0
    assert "verdict: PASS" in out
    rows = (out_dir / "counterexample.csv").read_text().splitlines()
    assert rows[0] == "R,C1,C2,slope_fit"
    assert len(rows) == 10
    assert (out_dir / "resolved.cfg").exists()

    code, out, _ = run(capsys, "counterexample", "--n", "3")
    assert code == 0 and "verdict: PASS" in out


def test_counterexample_single_radius_rejected(capsys):
    code, _, err = run(capsys, "counterexample", "--n", "2", "--r-schedule", "0.9")
    assert code == 2


def test_solve_lambda_zero(capsys, tmp_path):
    cfg = tmp_path / "fast.cfg"
    cfg.write_text(FAST_CFG)
    code, out, _ = run(capsys, "solve", "--config", str(cfg), "--lambda", "0")
    assert code == 0
    assert value_of(out, "classification") == "only-zero"
    assert float(value_of(out, "lambda_star")) > 0.0


def test_solve_rejects_funk_endpoint(capsys):
    code, _, err = run(capsys, "solve", "--n", "3", "--a", "1", "--lambda", "1")
    assert code == 2
    assert "vector space" in err or "negation" in err


def test_solve_requires_lambda(capsys):
    code, _, _ = run(capsys, "solve", "--n", "3", "--a", "0.5")
    assert code == 2


def test_solve_writes_reports(capsys, tmp_path):
    cfg = tmp_path / "fast.cfg"
    cfg.write_text(FAST_CFG)
    out_dir = tmp_path / "run"
    code, out, _ = run(
        capsys, "solve", "--config", str(cfg), "--lambda", "200000", "--out", str(out_dir)
    )
    assert code == 0
    assert value_of(out, "classification") == "two"
    blob = json.loads((out_dir / "report.json").read_text())
    assert blob["classification"] == "two"
    assert len(blob["solutions"]) == 2
    prof = np.loadtxt(out_dir / "profile_minimizer.csv", delimiter=",", skiprows=1)
    assert prof.shape[1] == 2
    assert prof[-1, 1] == 0.0


def test_scan_explicit_schedule_and_determinism(capsys, tmp_path):
    cfg = tmp_path / "fast.cfg"
    cfg.write_text(FAST_CFG)
    outs = []
    for name in ("s1", "s2"):
        out_dir = tmp_path / name
        code, out, _ = run(
            capsys,
            "scan",
            "--config",
            str(cfg),
            "--lambdas",
            "1,200000",
            "--out",
            str(out_dir),
            "--seed",
            "7",
        )
        assert code == 0
        outs.append(out_dir)
    for fname in ("scan.json", "scan.csv", "profile_1_minimizer.csv", "resolved.cfg"):
        a = (outs[0] / fname).read_bytes()
        b = (outs[1] / fname).read_bytes()
        assert a == b, f"{fname} not byte-identical across identical runs"
    lines = (outs[0] / "scan.csv").read_text().splitlines()
    assert lines[0].startswith("lambda,classification")


def test_scan_worker_count_does_not_change_output(capsys, tmp_path):
    cfg = tmp_path / "fast.cfg"
    cfg.write_text(FAST_CFG)
    dirs = []
    for name, workers in (("w1", "1"), ("w2", "3")):
        out_dir = tmp_path / name
        code, _, _ = run(
            capsys, "scan", "--config", str(cfg), "--lambdas", "1,2",
            "--out", str(out_dir), "--workers", workers,
        )
        assert code == 0
        dirs.append(out_dir)
    assert (dirs[0] / "scan.json").read_bytes() == (dirs[1] / "scan.json").read_bytes()


def test_workers_env_fallback(capsys, monkeypatch):
    monkeypatch.setenv("FUNKBALL_WORKERS", "not-a-number")
    code, _, _ = run(capsys, "counterexample", "--n", "2", "--r-schedule", "0.5,0.9")
    assert code == 2  # env value must parse as an integer
    monkeypatch.setenv("FUNKBALL_WORKERS", "2")
    code, _, _ = run(capsys, "counterexample", "--n", "2", "--r-schedule", "0.5,0.9")
    assert code in (0, 1)


def test_config_flag_precedence(capsys, tmp_path):
    cfg = tmp_path / "base.cfg"
    cfg.write_text("params.n = 2\nparams.a = 0.9\n")
    out_dir = tmp_path / "norms"
    # --a on the command line must override the file
    code, out, _ = run(
        capsys, "norms", "--config", str(cfg), "--a", "0.0", "--out", str(out_dir)
    )
    assert code == 0
    resolved = (out_dir / "resolved.cfg").read_text()
    assert "params.a = 0" in resolved
    assert "params.n = 2" in resolved


def test_config_rejects_unknown_key(capsys, tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("params.zz = 3\n")
    code, _, err = run(capsys, "norms", "--config", str(cfg))
    assert code == 2
    assert "unknown key" in err


def test_norms_counterexample_profile(capsys):
    code, out, _ = run(capsys, "norms", "--n", "2", "--a", "1", "--r-max", str(1.0 - 1e-8))
    assert code == 0
    total = float(value_of(out, "total"))
    assert total**2 == pytest.approx(5.0 * math.pi / 12.0, abs=1e-5)


def test_norms_tent_profile(capsys):
    code, out, _ = run(capsys, "norms", "--n", "3", "--a", "0", "--profile", "tent:1,0.5")
    assert code == 0
    rep_total = float(value_of(out, "total"))
    assert rep_total > 0.0
    np.testing.assert_allclose(
        float(value_of(out, "total")), float(value_of(out, "riemannian")), rtol=1e-10
    )
    code, _, _ = run(capsys, "norms", "--n", "3", "--a", "0", "--profile", "tent:bad")
    assert code == 2


def test_csv_floats_roundtrip(capsys, tmp_path):
    out_dir = tmp_path / "ce"
    code, _, _ = run(capsys, "counterexample", "--n", "2", "--out", str(out_dir))
    assert code == 0
    rows = (out_dir / "counterexample.csv").read_text().splitlines()[1:]
    from funkball import c1_c2_integrals

    R, c1, _, _ = rows[0].split(",")
    exact_c1 = c1_c2_integrals(float(R), 2)[0]
    assert float(c1) == exact_c1  # 17 significant digits round-trip doubles


def test_diag_tables(capsys, tmp_path):
    cfg = tmp_path / "fast.cfg"
    cfg.write_text(FAST_CFG)
    out_dir = tmp_path / "diag"
    code, out, _ = run(capsys, "diag", "--config", str(cfg), "--out", str(out_dir))
    assert code == 0
    assert "gradient check" in out
    sub = np.loadtxt(out_dir / "diag_subquadraticity.csv", delimiter=",", skiprows=1)
    assert sub.shape[1] == 2
    grad = (out_dir / "diag_gradcheck.csv").read_text().splitlines()
    assert grad[0] == "state,rel_error"
    assert len(grad) == 6
