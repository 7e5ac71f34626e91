"""Command-line driver with reproducible, machine-readable output.

Subcommands map onto the library layers: ``metric`` evaluates the closed
forms at a point (with sampling-oracle cross-checks under ``--verify``),
``norms`` assembles a norm report for a radial profile, ``counterexample``
tabulates the truncated dichotomy integrals and prints a PASS/FAIL verdict,
``solve``/``scan`` drive the variational solver, and ``diag`` emits
subquadraticity and gradient-check tables.

Configuration is a flat ``key = value`` text file with dotted keys
(``params.a = 0.5``), overridden by command-line flags; every run that
writes outputs also writes its fully resolved configuration next to them.
Exit codes: 0 success, 1 certification failure, 2 validation failure.
All CSV numbers use 17 significant digits so doubles round-trip exactly.
"""

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import elliptic_solver as es
from . import finsler_core as fc
from . import sobolev as sb
from .quadrature import QuadratureConfig, unit_ball_volume

__all__ = ["main"]

EXIT_OK = 0
EXIT_CERTIFICATION = 1
EXIT_VALIDATION = 2


class CliValidationError(ValueError):
    pass


class CliCertificationError(RuntimeError):
    pass


def _fmt(x):
    if isinstance(x, float):
        return "%.17g" % x
    return str(x)


def _write_csv(path, header, rows):
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def _write_json(path, obj):
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")


# ---------------------------------------------------------------------------
# Configuration
# ---------------------------------------------------------------------------

CONFIG_DEFAULTS = {
    "params.n": 3,
    "params.a": 0.5,
    "quad.m": 64,
    "quad.r_max": 1.0 - 1e-6,
    "quad.scheme": "geometric",
    "solver.m": 400,
    "solver.r_max": 1.0 - 1e-6,
    "solver.quad_order": 8,
    "solver.tol": 1e-8,
    "solver.max_iter": 400,
    "solver.path_nodes": 32,
    "solver.max_sweeps": 4000,
    "solver.seed": 0,
    "problem.g": "default",
    "problem.kappa": "bump",
    "problem.kappa_radius": 0.5,
    "run.workers": 0,
    "run.verify": 0,
}

_INT_KEYS = {
    "params.n",
    "quad.m",
    "solver.m",
    "solver.quad_order",
    "solver.max_iter",
    "solver.path_nodes",
    "solver.max_sweeps",
    "solver.seed",
    "run.workers",
    "run.verify",
}
_STR_KEYS = {"quad.scheme", "problem.g", "problem.kappa"}


def _parse_config_file(path):
    out = {}
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise CliValidationError(f"cannot read config file {path}: {exc}")
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise CliValidationError(f"{path}:{lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in CONFIG_DEFAULTS:
            raise CliValidationError(f"{path}:{lineno}: unknown key {key!r}")
        out[key] = value
    return out


def _coerce(key, value):
    if isinstance(value, str):
        if key in _STR_KEYS:
            return value
        try:
            return int(value) if key in _INT_KEYS else float(value)
        except ValueError:
            raise CliValidationError(f"config key {key} expects a number, got {value!r}")
    return value


def resolve_config(args):
    """Merge defaults, config file, and flags; validate bounds."""
    cfg = dict(CONFIG_DEFAULTS)
    if getattr(args, "config", None):
        cfg.update(_parse_config_file(args.config))
    if getattr(args, "n", None) is not None:
        cfg["params.n"] = args.n
    if getattr(args, "a", None) is not None:
        cfg["params.a"] = args.a
    if getattr(args, "seed", None) is not None:
        cfg["solver.seed"] = args.seed
    if getattr(args, "workers", None) is not None:
        cfg["run.workers"] = args.workers
    if getattr(args, "verify", False):
        cfg["run.verify"] = 1
    cfg = {k: _coerce(k, v) for k, v in cfg.items()}
    if cfg["run.workers"] == 0:
        cfg["run.workers"] = int(os.environ.get("FUNKBALL_WORKERS", "1") or "1")
    if cfg["params.n"] < 2:
        raise CliValidationError("dimension must be at least 2")
    if not 0.0 <= cfg["params.a"] <= 1.0:
        raise CliValidationError("the interpolation parameter must lie in [0, 1]")
    if cfg["solver.tol"] <= 0.0:
        raise CliValidationError("solver tolerance must be positive")
    if not 0.0 < cfg["quad.r_max"] < 1.0 or not 0.0 < cfg["solver.r_max"] < 1.0:
        raise CliValidationError("truncation radii must lie in (0, 1)")
    if cfg["run.workers"] < 1:
        raise CliValidationError("worker count must be at least 1")
    return cfg


def _params(cfg):
    try:
        return fc.ModelParams(n=cfg["params.n"], a=cfg["params.a"])
    except fc.GeometryError as exc:
        raise CliValidationError(str(exc))


def _quad_cfg(cfg, r_max=None):
    return QuadratureConfig(
        m=cfg["quad.m"],
        r_max=r_max if r_max is not None else cfg["quad.r_max"],
        scheme=cfg["quad.scheme"],
    )


def _solver_cfg(cfg):
    return es.SolverConfig(
        M=cfg["solver.m"],
        r_max=cfg["solver.r_max"],
        quad_order=cfg["solver.quad_order"],
        tol=cfg["solver.tol"],
        max_iter=cfg["solver.max_iter"],
        path_nodes=cfg["solver.path_nodes"],
        max_sweeps=cfg["solver.max_sweeps"],
        seed=cfg["solver.seed"],
    )


def _problem(cfg):
    if cfg["problem.g"] != "default":
        raise CliValidationError(
            f"unknown nonlinearity {cfg['problem.g']!r}; only 'default' is built in"
        )
    if cfg["problem.kappa"] != "bump":
        raise CliValidationError(
            f"unknown weight {cfg['problem.kappa']!r}; only 'bump' is built in"
        )
    radius = cfg["problem.kappa_radius"]
    if not 0.0 < radius < 1.0:
        raise CliValidationError("the weight radius must lie in (0, 1)")
    return es.Nonlinearity.default(), es.WeightKappa.default(radius=radius)


def _ensure_outdir(args):
    out = getattr(args, "out", None)
    if out:
        os.makedirs(out, exist_ok=True)
    return out


def _dump_resolved(cfg, outdir):
    lines = [f"{k} = {_fmt(v)}" for k, v in sorted(cfg.items())]
    with open(os.path.join(outdir, "resolved.cfg"), "w") as fh:
        fh.write("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _parse_vec(text, n, name):
    if text is None:
        return None
    try:
        parts = [float(p) for p in text.split(",") if p.strip() != ""]
    except ValueError:
        raise CliValidationError(f"--{name} expects comma-separated numbers, got {text!r}")
    if len(parts) == 1 and parts[0] == 0.0:
        return np.zeros(n)
    if len(parts) != n:
        raise CliValidationError(f"--{name} must have {n} components, got {len(parts)}")
    return np.array(parts)


def cmd_metric(args):
    cfg = resolve_config(args)
    params = _params(cfg)
    n = params.n
    lines = []
    if args.reversibility:
        lines.append(f"r_F = {_fmt(fc.reversibility(params))}")
    x = _parse_vec(args.x, n, "x")
    try:
        p = fc.BallPoint(x) if x is not None else None
    except fc.GeometryError as exc:
        raise CliValidationError(str(exc))
    y = _parse_vec(args.y, n, "y")
    alpha = _parse_vec(args.alpha, n, "alpha")
    x2 = _parse_vec(args.x2, n, "x2")
    if p is None and (y is not None or alpha is not None):
        raise CliValidationError("--x is required to evaluate the metric")

    mismatches = []
    if p is not None:
        lines.append(f"x = {','.join(_fmt(float(v)) for v in p.x)}")
        lines.append(f"density = {_fmt(fc.volume_density(params, p))}")
        lines.append(f"beta_norm = {_fmt(fc.beta_norm(params, p))}")
        if not args.reversibility:
            lines.append(f"r_F = {_fmt(fc.reversibility(params))}")
        lines.append(f"l_F = {_fmt(fc.uniformity_lF(params))}")
    if p is not None and y is not None:
        F = fc.randers_F(params, p, y)
        lines.append(f"F = {_fmt(F)}")
    if p is not None and alpha is not None:
        Fs = fc.polar_F_star(params, p, alpha)
        grad = fc.legendre_gradient(params, p, alpha)
        lines.append(f"F_star = {_fmt(Fs)}")
        lines.append(f"grad = {','.join(_fmt(float(v)) for v in grad)}")
        if cfg["run.verify"]:
            oracle = fc.polar_F_star_oracle(params, p, alpha, samples=20000)
            if abs(oracle - Fs) > 1e-3 * (1.0 + Fs):
                mismatches.append(f"dual-norm oracle {oracle} vs closed form {Fs}")
            pair = float(alpha @ grad)
            if abs(pair - Fs * Fs) > 1e-8 * (1.0 + Fs * Fs):
                mismatches.append("duality identity alpha(grad) = F_star^2 failed")
            if abs(fc.randers_F(params, p, grad) - Fs) > 1e-8 * (1.0 + Fs):
                mismatches.append("duality identity F(grad) = F_star failed")
    if p is not None and cfg["run.verify"] and params.a < 1.0:
        r_pt = (1.0 + params.a * p.r) / (1.0 - params.a * p.r)
        oracle = fc.reversibility_oracle(params, p, samples=20000)
        if abs(oracle - r_pt) > 1e-3 * (1.0 + r_pt):
            mismatches.append(f"reversibility oracle {oracle} vs pointwise {r_pt}")
    if p is not None and x2 is not None:
        if params.a != 1.0:
            raise CliValidationError("the distance formula applies to a = 1 only")
        try:
            lines.append(f"funk_distance = {_fmt(fc.funk_distance(p, fc.BallPoint(x2)))}")
        except fc.GeometryError as exc:
            raise CliValidationError(str(exc))
    if not lines:
        raise CliValidationError("nothing to evaluate: pass --x with --y/--alpha, or --reversibility")
    print("\n".join(lines))
    if mismatches:
        for m in mismatches:
            print(f"VERIFY FAIL: {m}", file=sys.stderr)
        raise CliCertificationError("oracle verification failed")
    return EXIT_OK


def cmd_norms(args):
    cfg = resolve_config(args)
    params = _params(cfg)
    if args.profile == "counterexample":
        u = sb.counterexample_profile()
    elif args.profile.startswith("tent:"):
        try:
            h, w = (float(v) for v in args.profile[5:].split(","))
        except ValueError:
            raise CliValidationError("tent profile must be written tent:height,width")
        if not 0.0 < w < 1.0:
            raise CliValidationError("tent width must lie in (0, 1)")
        u = es.RadialFunction.from_callables(
            lambda r, h=h, w=w: h * np.maximum(1.0 - np.asarray(r) / w, 0.0),
            lambda r, h=h, w=w: np.where(np.asarray(r) < w, -h / w, 0.0),
            r_max=1.0,
            label="tent",
        )
    else:
        raise CliValidationError(f"unknown profile {args.profile!r}")
    r_max = args.r_max if args.r_max is not None else cfg["quad.r_max"]
    if not 0.0 < r_max < 1.0:
        raise CliValidationError("truncation radius must lie in (0, 1)")
    report = sb.w12a_norm(u, params, _quad_cfg(cfg, r_max=r_max))
    for name in sb.NormReport.CSV_HEADER:
        print(f"{name} = {_fmt(getattr(report, name))}")
    outdir = _ensure_outdir(args)
    if outdir:
        _write_json(os.path.join(outdir, "norms.json"), report.to_json_dict())
        _write_csv(
            os.path.join(outdir, "norms.csv"),
            sb.NormReport.CSV_HEADER,
            [report.to_csv_row()],
        )
        _dump_resolved(cfg, outdir)
    return EXIT_OK


def cmd_counterexample(args):
    cfg = resolve_config(args)
    n = cfg["params.n"]
    if args.r_schedule:
        try:
            schedule = [float(v) for v in args.r_schedule.split(",")]
        except ValueError:
            raise CliValidationError("--r-schedule expects comma-separated radii")
    else:
        schedule = [1.0 - 10.0 ** (-k) for k in range(1, 10)]
    if len(schedule) < 2:
        raise CliValidationError("need at least two truncation radii to fit a slope")
    try:
        trend = sb.divergence_trend(n, schedule, _quad_cfg(cfg))
    except ValueError as exc:
        raise CliValidationError(str(exc))
    rows = [
        (R, c1, c2, trend["slope"])
        for R, c1, c2 in zip(trend["R"], trend["C1"], trend["C2"])
    ]
    header = ("R", "C1", "C2", "slope_fit")
    limit = trend["c1_limit"]
    slope_ok = abs(trend["slope"] - trend["slope_expected"]) <= 0.05 * trend["slope_expected"]
    c1_ok = trend["c1_rel_error"] <= 1e-4
    verdict = "PASS" if (slope_ok and c1_ok) else "FAIL"
    print(f"C1 limit = {_fmt(limit)} (relative error {_fmt(trend['c1_rel_error'])})")
    print(
        f"C2 slope = {_fmt(trend['slope'])} vs expected {_fmt(trend['slope_expected'])}"
    )
    print(f"verdict: {verdict}")
    outdir = _ensure_outdir(args)
    if outdir:
        _write_csv(os.path.join(outdir, "counterexample.csv"), header, rows)
        _dump_resolved(cfg, outdir)
    if verdict != "PASS":
        raise CliCertificationError("dichotomy verdict FAIL")
    return EXIT_OK


def _write_solve_outputs(outdir, cfg, report, tag=""):
    prefix = f"{tag}_" if tag else ""
    _write_json(os.path.join(outdir, f"{prefix}report.json"), report.to_json_dict())
    _write_csv(
        os.path.join(outdir, f"{prefix}report.csv"),
        es.CSV_SCAN_HEADER,
        report.csv_rows(),
    )
    for sol in report.solutions:
        prof = sol["profile"]
        _write_csv(
            os.path.join(outdir, f"{prefix}profile_{sol['which']}.csv"),
            ("r", "u"),
            list(zip(prof.nodes.tolist(), prof.values.tolist())),
        )


def cmd_solve(args):
    cfg = resolve_config(args)
    params = _params(cfg)
    if params.a >= 1.0:
        raise CliValidationError(
            "the solver requires a < 1: at a = 1 the function class is not closed "
            "under negation, so the variational formulation is unavailable"
        )
    lam = args.lam
    if lam is None:
        raise CliValidationError("--lambda is required for solve")
    if lam < 0.0:
        raise CliValidationError("lambda must be non-negative")
    nl, kappa = _problem(cfg)
    scfg = _solver_cfg(cfg)
    report = es.solve(lam, params, kappa, nl, scfg)
    print(f"lambda_star = {_fmt(report.lambda_star)}")
    print(f"lambda_tilde_est = {_fmt(report.lambda_tilde_est)}")
    print(f"classification = {report.classification}")
    for sol in report.solutions:
        print(
            f"  {sol['which']}: J = {_fmt(sol['energy'])}, residual = "
            f"{_fmt(sol['residual'])}, h12_norm = {_fmt(sol['h12_norm'])}"
        )
    for msg in report.failures:
        print(f"  note: {msg}")
    outdir = _ensure_outdir(args)
    if outdir:
        _write_solve_outputs(outdir, cfg, report)
        _dump_resolved(cfg, outdir)
    if report.failures or any(not s["ok"] for s in report.solutions):
        raise CliCertificationError("solution certification failed")
    return EXIT_OK


def cmd_scan(args):
    cfg = resolve_config(args)
    params = _params(cfg)
    if params.a >= 1.0:
        raise CliValidationError(
            "the scan requires a < 1: at a = 1 the function class is not closed "
            "under negation, so the variational formulation is unavailable"
        )
    nl, kappa = _problem(cfg)
    scfg = _solver_cfg(cfg)
    lam_star = es.nonexistence_threshold(params, nl, kappa)
    try:
        lam_tilde = es.tilde_lambda_estimate(params, kappa, nl, cfg=scfg)
    except es.SolverError:
        lam_tilde = math.inf
    if args.lambdas:
        try:
            schedule = [float(v) for v in args.lambdas.split(",")]
        except ValueError:
            raise CliValidationError("--lambdas expects comma-separated numbers")
    else:
        if not math.isfinite(lam_tilde):
            raise CliValidationError(
                "no finite onset estimate; pass an explicit --lambdas schedule"
            )
        schedule = [0.5 * lam_star, 10.0 * lam_tilde]
    if any(l < 0.0 for l in schedule):
        raise CliValidationError("lambda values must be non-negative")
    workers = cfg["run.workers"]

    def one(lam):
        try:
            return es.solve(lam, params, kappa, nl, scfg)
        except Exception as exc:
            return es.SolveReport(
                lam=lam,
                classification="error",
                lambda_star=lam_star,
                lambda_tilde_est=lam_tilde,
                failures=(str(exc),),
                mesh_size=scfg.M,
                r_max=scfg.r_max,
                kappa_measure=kappa.measure,
            )

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(one, schedule))
    else:
        reports = [one(lam) for lam in schedule]
    report = es.LambdaScanReport(
        lambdas=tuple(schedule),
        reports=tuple(reports),
        lambda_star=lam_star,
        lambda_tilde_est=lam_tilde,
    )
    print(f"lambda_star = {_fmt(report.lambda_star)}")
    print(f"lambda_tilde_est = {_fmt(report.lambda_tilde_est)}")
    for lam, rep in zip(report.lambdas, report.reports):
        print(f"lambda = {_fmt(lam)}: {rep.classification}")
    outdir = _ensure_outdir(args)
    if outdir:
        _write_json(os.path.join(outdir, "scan.json"), report.to_json_dict())
        _write_csv(os.path.join(outdir, "scan.csv"), es.CSV_SCAN_HEADER, report.csv_rows())
        for k, rep in enumerate(report.reports):
            for sol in rep.solutions:
                prof = sol["profile"]
                _write_csv(
                    os.path.join(outdir, f"profile_{k}_{sol['which']}.csv"),
                    ("r", "u"),
                    list(zip(prof.nodes.tolist(), prof.values.tolist())),
                )
        _dump_resolved(cfg, outdir)
    bad = [r for r in report.reports if r.classification == "error"]
    if bad or any(not s["ok"] for r in report.reports for s in r.solutions):
        raise CliCertificationError("scan encountered per-lambda failures")
    return EXIT_OK


def cmd_diag(args):
    cfg = resolve_config(args)
    params = _params(cfg)
    if params.a >= 1.0:
        raise CliValidationError("diagnostics require a < 1")
    nl, kappa = _problem(cfg)
    scfg = _solver_cfg(cfg)
    outdir = _ensure_outdir(args)

    nodes = es.solver_nodes(scfg)
    direction = np.maximum(1.0 - nodes / 0.4, 0.0)
    direction[-1] = 0.0
    table = es.subquadraticity_diagnostic(direction, params, kappa, nl, cfg=scfg)
    peak = float(np.max(table[:, 1]))
    ends = max(table[0, 1], table[-1, 1])
    print(
        f"subquadraticity: peak ratio {_fmt(peak)}, end ratios "
        f"{_fmt(float(table[0, 1]))} / {_fmt(float(table[-1, 1]))}"
    )

    gradcheck_rows = []
    worst = 0.0
    lam = args.lam if args.lam is not None else 1.0
    for state in range(5):
        rng = np.random.default_rng(np.random.SeedSequence([scfg.seed, 977, state]))
        vals = rng.standard_normal(nodes.size) * np.maximum(0.0, 1.0 - nodes / 0.9)
        vals[-1] = 0.0
        u = es.RadialFunction.from_values(nodes, vals)
        g = es.discrete_gradient(u, lam, params, kappa, nl, scfg)
        idx = np.arange(0, nodes.size - 1, max(1, nodes.size // 24))
        fd = np.zeros(idx.size)
        h = 1e-6
        for j, i in enumerate(idx):
            vp, vm = vals.copy(), vals.copy()
            vp[i] += h
            vm[i] -= h
            up = es.RadialFunction.from_values(nodes, vp)
            um = es.RadialFunction.from_values(nodes, vm)
            fd[j] = (
                es.j_lambda(up, lam, params, kappa, nl, scfg)
                - es.j_lambda(um, lam, params, kappa, nl, scfg)
            ) / (2.0 * h)
        scale = float(np.max(np.abs(g[idx]))) or 1.0
        rel = float(np.max(np.abs(g[idx] - fd)) / scale)
        worst = max(worst, rel)
        gradcheck_rows.append((state, rel))
    print(f"gradient check: worst relative error {_fmt(worst)} over 5 states")

    if outdir:
        _write_csv(
            os.path.join(outdir, "diag_subquadraticity.csv"),
            ("t", "ratio"),
            [tuple(row) for row in table],
        )
        _write_csv(
            os.path.join(outdir, "diag_gradcheck.csv"),
            ("state", "rel_error"),
            gradcheck_rows,
        )
        _dump_resolved(cfg, outdir)
    if worst > 1e-5:
        raise CliCertificationError("gradient check exceeded its tolerance")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def _add_common(sub):
    sub.add_argument("--n", type=int, help="space dimension (>= 2)")
    sub.add_argument("--a", type=float, help="interpolation parameter in [0, 1]")
    sub.add_argument("--config", help="flat key = value configuration file")
    sub.add_argument("--out", help="output directory for reports")
    sub.add_argument("--seed", type=int, help="master seed for randomized stages")
    sub.add_argument("--workers", type=int, help="parallel scan workers")
    sub.add_argument("--verify", action="store_true", help="run oracle cross-checks")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="funkball",
        description="Metric calculus, Sobolev norms and a radial variational "
        "solver for the Funk-type metric family on the unit ball.",
    )
    subs = ap.add_subparsers(dest="command", required=True)

    m = subs.add_parser("metric", help="evaluate the metric closed forms at a point")
    _add_common(m)
    m.add_argument("--x", help="base point, comma-separated (0 for the origin)")
    m.add_argument("--y", help="tangent vector")
    m.add_argument("--alpha", help="covector")
    m.add_argument("--x2", help="second point for the a = 1 distance")
    m.add_argument("--reversibility", action="store_true", help="print r_F only")
    m.set_defaults(fn=cmd_metric)

    n = subs.add_parser("norms", help="norm report for a radial profile")
    _add_common(n)
    n.add_argument("--profile", default="counterexample", help="counterexample or tent:h,w")
    n.add_argument("--r-max", dest="r_max", type=float, help="truncation radius")
    n.set_defaults(fn=cmd_norms)

    c = subs.add_parser("counterexample", help="dichotomy integrals and verdict")
    _add_common(c)
    c.add_argument("--r-schedule", dest="r_schedule", help="comma-separated truncation radii")
    c.set_defaults(fn=cmd_counterexample)

    s = subs.add_parser("solve", help="solve at one lambda")
    _add_common(s)
    s.add_argument("--lambda", dest="lam", type=float, help="coupling value")
    s.set_defaults(fn=cmd_solve)

    sc = subs.add_parser("scan", help="classify a lambda schedule")
    _add_common(sc)
    sc.add_argument("--lambdas", help="comma-separated lambda schedule")
    sc.set_defaults(fn=cmd_scan)

    d = subs.add_parser("diag", help="subquadraticity and gradient-check tables")
    _add_common(d)
    d.add_argument("--lambda", dest="lam", type=float, help="coupling for the gradient check")
    d.set_defaults(fn=cmd_diag)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except CliValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (fc.GeometryError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except CliCertificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CERTIFICATION


if __name__ == "__main__":
    sys.exit(main())
