"""Command-line experiment runner.

Subcommands: simulate | ensemble | fit | classical | distribution.
Exit codes: 0 success (including unconverged-with-warning), 2 config
error, 3 I/O error, 4 numerical failure.
"""

from __future__ import annotations

import argparse
import functools
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import __version__, classical, disorder, walk
from . import config as cfgmod
from . import output
from . import stats
from .config import ConfigError


# ---------------------------------------------------------------------------
# flag parsing helpers

def _parse_number(text: str):
    try:
        return int(text)
    except ValueError:
        return float(text)


def parse_disorder_flag(text: str) -> dict:
    """KIND:k=v,k=v  e.g. poisson:lambda=1.0 or binomial:n=5,p=0.2."""
    kind, _, rest = text.partition(":")
    if not kind:
        raise ConfigError(f"bad --disorder value: {text!r}")
    params = {}
    if rest:
        for item in rest.split(","):
            key, eq, val = item.partition("=")
            if not eq:
                raise ConfigError(f"bad --disorder parameter: {item!r}")
            try:
                params[key.strip()] = _parse_number(val)
            except ValueError as exc:
                raise ConfigError(f"bad --disorder parameter value: {item!r}") from exc
    return {"kind": kind.strip(), "params": params}


def _merge_flags(args) -> dict:
    """File config (if any) overlaid with explicitly given flags."""
    raw = cfgmod.load_file(args.config) if getattr(args, "config", None) else {}
    if getattr(args, "walker", None):
        raw["walker"] = args.walker
    if getattr(args, "coin", None):
        raw["coin"] = args.coin
    if getattr(args, "steps", None) is not None:
        raw["steps"] = args.steps
    if getattr(args, "disorder", None):
        node = parse_disorder_flag(args.disorder)
        node["mode"] = "static" if getattr(args, "static", False) else "dynamic"
        prev = raw.get("disorder")
        if isinstance(prev, dict) and "eps" in prev:
            node.setdefault("eps", prev["eps"])
        raw["disorder"] = node
    elif getattr(args, "static", False):
        prev = raw.get("disorder")
        if not isinstance(prev, dict):
            raise ConfigError("--static requires a disorder spec")
        prev["mode"] = "static"
    if getattr(args, "seed", None) is not None:
        raw["seed"] = args.seed
    if getattr(args, "sigma", None):
        raw["sigma"] = args.sigma
    if getattr(args, "threads", None) is not None:
        raw["threads"] = args.threads
    if getattr(args, "tmin", None) is not None:
        raw.setdefault("fit", {})["t_min"] = args.tmin
    if getattr(args, "tmax", None) is not None:
        raw.setdefault("fit", {})["t_max"] = args.tmax
    if getattr(args, "batch", None) is not None:
        raw.setdefault("ensemble", {})["batch_size"] = args.batch
    if getattr(args, "max_realizations", None) is not None:
        raw.setdefault("ensemble", {})["max_realizations"] = args.max_realizations
    if getattr(args, "min_realizations", None) is not None:
        raw.setdefault("ensemble", {})["min_realizations"] = args.min_realizations
    if getattr(args, "no_convergence", False):
        raw.setdefault("ensemble", {})["convergence"] = False
    if getattr(args, "snapshots", None):
        raw["snapshots"] = [int(v) for v in args.snapshots.split(",")]
    return raw


# ---------------------------------------------------------------------------
# realization runners (top-level so worker pools can pickle them)

def _realize_series(cfg_dict: dict, index: int) -> stats.MomentSeries:
    cfg = cfgmod.from_dict(cfg_dict)
    rng = disorder.substream(cfg.seed, index)
    if cfg.walker == "classical-2d":
        jumps = disorder.sample_sequence(cfg.disorder, cfg.steps, rng)
        return classical.crw_sigma(jumps)
    coin = cfg.coin_matrix()
    phi = cfg.initial_state()
    if cfg.disorder_mode == "static":
        field = disorder.sample_field(cfg.disorder, cfg.steps * cfg.disorder.R,
                                      rng)
        series, _, _ = walk.simulate_static(coin, phi, field, cfg.steps)
        return series
    jumps = disorder.sample_sequence(cfg.disorder, cfg.steps, rng)
    series, _ = walk.simulate(coin, phi, jumps, dim=cfg.dim)
    return series


def run_ensemble(cfg: cfgmod.ExperimentConfig) -> stats.EnsembleResult:
    """The convergence-protocol ensemble for a validated config."""
    cfg_dict = cfg.to_dict()
    runner = functools.partial(_realize_series, cfg_dict)
    if cfg.threads > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            def map_batch(indices):
                return list(pool.map(runner, indices))
            return stats.ensemble_average(
                runner, steps=cfg.steps, master_seed=cfg.seed,
                batch_size=cfg.batch_size,
                max_realizations=cfg.max_realizations,
                min_realizations=cfg.min_realizations,
                t_min=cfg.t_min, t_max=cfg.t_max, sigma_kind=cfg.sigma_kind,
                use_convergence=cfg.use_convergence, map_batch=map_batch)
    return stats.ensemble_average(
        runner, steps=cfg.steps, master_seed=cfg.seed,
        batch_size=cfg.batch_size, max_realizations=cfg.max_realizations,
        min_realizations=cfg.min_realizations,
        t_min=cfg.t_min, t_max=cfg.t_max, sigma_kind=cfg.sigma_kind,
        use_convergence=cfg.use_convergence)


# ---------------------------------------------------------------------------
# subcommands

def cmd_simulate(args) -> int:
    cfg = cfgmod.from_dict(_merge_flags(args))
    snap_times = cfg.snapshots or [cfg.steps]
    rng = disorder.substream(cfg.seed, 0)
    if cfg.walker == "classical-2d":
        if cfg.disorder_mode == "dynamic":
            jumps = disorder.sample_sequence(cfg.disorder, cfg.steps, rng)
        else:
            jumps = np.ones(cfg.steps, dtype=int)
        snaps = {}
        for dist in classical.crw_iterate(jumps):
            if dist.t in snap_times:
                snaps[dist.t] = dist
    else:
        coin = cfg.coin_matrix()
        phi = cfg.initial_state()
        if cfg.disorder_mode == "static":
            field = disorder.sample_field(cfg.disorder,
                                          cfg.steps * cfg.disorder.R, rng)
            _, snaps, _ = walk.simulate_static(coin, phi, field, cfg.steps,
                                               snapshot_times=snap_times)
        else:
            if cfg.disorder_mode == "dynamic":
                jumps = disorder.sample_sequence(cfg.disorder, cfg.steps, rng)
            else:
                jumps = np.ones(cfg.steps, dtype=int)
            _, snaps = walk.simulate(coin, phi, jumps, dim=cfg.dim,
                                     snapshot_times=snap_times)
    base = args.out or "qwalk_simulate"
    written = []
    for t in sorted(snaps):
        path = f"{base}_t{t}.csv"
        output.write_snapshot_csv(path, snaps[t])
        written.append(path)
    man = output.run_manifest(cfg, __version__, written)
    output.write_json(f"{base}.manifest.json", man)
    for path in written:
        print(path)
    return 0


def cmd_ensemble(args) -> int:
    cfg = cfgmod.from_dict(_merge_flags(args), require_fit_window=True)
    if cfg.disorder_mode == "none":
        raise ConfigError("ensemble requires a disorder spec "
                          "(use a degenerate constant-jump spec for clean runs)")
    result = run_ensemble(cfg)
    base = args.out or "qwalk_ensemble"
    csv_path, json_path = f"{base}.csv", f"{base}.json"
    output.write_series_csv(csv_path, result.t, result.sigma_mean,
                            result.n_realizations)
    summary = output.fit_summary(result.fit, result.n_realizations,
                                 result.converged)
    output.write_json(json_path, summary)
    man = output.run_manifest(cfg, __version__, [csv_path, json_path],
                              realization_indices=result.realization_indices,
                              history=result.history, fit=result.fit,
                              converged=result.converged)
    output.write_json(f"{base}.manifest.json", man)
    if not result.converged:
        print("warning: fit did not stabilize before the realization cap",
              file=sys.stderr)
    print(f"alpha={output.fmt(result.fit.alpha)} "
          f"ci95={output.fmt(result.fit.ci95)} "
          f"n_final={result.n_realizations} converged={result.converged}")
    return 0


def cmd_fit(args) -> int:
    t, sigma = output.read_series_csv(args.infile)
    fit = stats.fit_exponent(t, sigma, t_min=args.tmin, t_max=args.tmax)
    summary = output.fit_summary(fit, n_final=0, converged=True)
    del summary["n_final"], summary["converged"]
    if args.out:
        output.write_json(args.out, summary)
    print(f"alpha={output.fmt(fit.alpha)} ci95={output.fmt(fit.ci95)} "
          f"lsq_error={output.fmt(fit.lsq_error)}")
    return 0


def cmd_classical(args) -> int:
    raw = _merge_flags(args)
    raw["walker"] = "classical-2d"
    cfg = cfgmod.from_dict(raw, require_fit_window=True)
    base = args.out or "qwalk_classical"
    csv_path, json_path = f"{base}.csv", f"{base}.json"
    if cfg.disorder_mode == "none":
        series = classical.crw_clean_sigma(cfg.steps)
        sigma = series.pick(cfg.sigma_kind)
        fit = stats.fit_exponent(series.t, sigma, cfg.t_min, cfg.t_max)
        output.write_series_csv(csv_path, series.t, sigma, 1,
                                walker="classical")
        output.write_json(json_path, output.fit_summary(fit, 1, True))
        man = output.run_manifest(cfg, __version__, [csv_path, json_path],
                                  fit=fit, converged=True,
                                  realization_indices=[0])
        output.write_json(f"{base}.manifest.json", man)
        print(f"alpha={output.fmt(fit.alpha)} ci95={output.fmt(fit.ci95)} "
              f"n_final=1 converged=True")
        return 0
    result = run_ensemble(cfg)
    output.write_series_csv(csv_path, result.t, result.sigma_mean,
                            result.n_realizations, walker="classical")
    output.write_json(json_path, output.fit_summary(
        result.fit, result.n_realizations, result.converged))
    man = output.run_manifest(cfg, __version__, [csv_path, json_path],
                              realization_indices=result.realization_indices,
                              history=result.history, fit=result.fit,
                              converged=result.converged)
    output.write_json(f"{base}.manifest.json", man)
    print(f"alpha={output.fmt(result.fit.alpha)} "
          f"ci95={output.fmt(result.fit.ci95)} "
          f"n_final={result.n_realizations} converged={result.converged}")
    return 0


def cmd_distribution(args) -> int:
    if not args.disorder:
        raise ConfigError("distribution requires --disorder KIND:PARAMS")
    node = parse_disorder_flag(args.disorder)
    try:
        spec = disorder.DisorderSpec(kind=node["kind"], params=node["params"],
                                     eps=args.eps)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    moments = disorder.exact_moments(spec)
    ks = list(range(spec.R + 1))
    pmf_values = [disorder.pmf(spec, k) for k in ks]
    base = args.out or "qwalk_distribution"
    output.write_distribution_csv(f"{base}.csv", ks, pmf_values)
    output.write_json(f"{base}.json", {
        "kind": spec.kind,
        "params": dict(spec.params),
        "eps": spec.eps,
        "truncation_radius": spec.R,
        "mean": moments.mean,
        "variance": moments.variance,
        "fano": moments.fano,
    })
    print(f"kind={spec.kind} R={spec.R} mean={output.fmt(moments.mean)} "
          f"variance={output.fmt(moments.variance)}")
    return 0


# ---------------------------------------------------------------------------
# parser

def _add_common(p, ensemble: bool = False):
    p.add_argument("--config", help="YAML config file; flags override it")
    p.add_argument("--walker", choices=cfgmod.WALKERS)
    p.add_argument("--coin", choices=("grover", "fourier", "hadamard"))
    p.add_argument("--steps", type=int)
    p.add_argument("--disorder", help="KIND:k=v,... e.g. poisson:lambda=1.0")
    p.add_argument("--static", action="store_true",
                   help="use static (per-vertex) disorder")
    p.add_argument("--seed", type=int)
    p.add_argument("--sigma", choices=("radial", "std"),
                   help="dispersion measure for series and fits")
    p.add_argument("--threads", type=int)
    p.add_argument("--tmin", type=int)
    p.add_argument("--tmax", type=int)
    p.add_argument("--out", help="output path prefix")
    if ensemble:
        p.add_argument("--batch", type=int, help="realizations per batch")
        p.add_argument("--max-realizations", type=int, dest="max_realizations")
        p.add_argument("--min-realizations", type=int, dest="min_realizations")
        p.add_argument("--no-convergence", action="store_true",
                       dest="no_convergence",
                       help="run to max realizations without the stop rule")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwalk",
        description="Discrete-time quantum walks with quenched jump disorder")
    parser.add_argument("--version", action="version",
                        version=f"qwalk {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="single trajectory, snapshot outputs")
    _add_common(p)
    p.add_argument("--snapshots", help="comma-separated times, default final")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("ensemble", help="disorder-averaged sigma(t) and fit")
    _add_common(p, ensemble=True)
    p.set_defaults(func=cmd_ensemble)

    p = sub.add_parser("fit", help="fit a sigma series CSV")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--tmin", type=int, default=18)
    p.add_argument("--tmax", type=int, default=50)
    p.add_argument("--out")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("classical", help="classical-walk baseline")
    _add_common(p, ensemble=True)
    p.set_defaults(func=cmd_classical)

    p = sub.add_parser("distribution", help="pmf table, moments, truncation")
    p.add_argument("--disorder", required=True)
    p.add_argument("--eps", type=float, default=1e-4)
    p.add_argument("--out")
    p.set_defaults(func=cmd_distribution)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    except (FloatingPointError, ValueError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
