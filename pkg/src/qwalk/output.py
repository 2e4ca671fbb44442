"""File outputs: CSV series/snapshots, JSON summaries, run manifests.

Every number is serialized with up to 17 significant digits (%.17g), the
round-trip-lossless precision for IEEE doubles, so identical runs produce
byte-identical files.  Manifest timestamps honor SOURCE_DATE_EPOCH for
reproducible builds.
"""

from __future__ import annotations

import os
import time

import numpy as np


def fmt(value) -> str:
    """Render one scalar for CSV/JSON output."""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        if not np.isfinite(value):
            raise FloatingPointError(f"non-finite value in output: {value}")
        return f"{float(value):.17g}"
    raise TypeError(f"unsupported scalar: {type(value)}")


def _json_render(obj) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, str):
        out = obj.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{out}"'
    if isinstance(obj, (bool, np.bool_, int, np.integer, float, np.floating)):
        return fmt(obj)
    if isinstance(obj, (list, tuple, np.ndarray)):
        items = ",".join(_json_render(v) for v in obj)
        return f"[{items}]"
    if isinstance(obj, dict):
        items = ",".join(f'{_json_render(str(k))}:{_json_render(v)}'
                         for k, v in sorted(obj.items()))
        return "{" + items + "}"
    raise TypeError(f"unsupported JSON value: {type(obj)}")


def canonical_json(obj) -> str:
    """Deterministic JSON: sorted keys, %.17g floats, no whitespace."""
    return _json_render(obj)


def write_json(path: str, obj) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(canonical_json(obj))
        fh.write("\n")


def write_series_csv(path: str, t, sigma_mean, n_realizations,
                     walker: str | None = None) -> None:
    """The sigma series schema: t, sigma_mean, n_realizations[, walker]."""
    header = "t,sigma_mean,n_realizations"
    if walker is not None:
        header += ",walker"
    lines = [header]
    for i, tv in enumerate(t):
        row = f"{int(tv)},{fmt(float(sigma_mean[i]))},{int(n_realizations)}"
        if walker is not None:
            row += f",{walker}"
        lines.append(row)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def write_snapshot_csv(path: str, dist) -> None:
    """Snapshot schema: x, y, p — every site of the current window."""
    w = dist.half_width
    lines = ["x,y,p"]
    p = np.asarray(dist.p, dtype=float)
    if dist.dim == 1:
        for i in range(p.shape[0]):
            lines.append(f"{i - w},0,{fmt(float(p[i]))}")
    else:
        for i in range(p.shape[0]):
            for k in range(p.shape[1]):
                lines.append(f"{i - w},{k - w},{fmt(float(p[i, k]))}")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def write_distribution_csv(path: str, ks, pmf_values) -> None:
    lines = ["k,pmf"]
    for k, v in zip(ks, pmf_values):
        lines.append(f"{int(k)},{fmt(float(v))}")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def read_series_csv(path: str):
    """Read a sigma series written by write_series_csv (by column name)."""
    with open(path, "r", encoding="utf-8") as fh:
        rows = [line.strip() for line in fh if line.strip()]
    header = rows[0].split(",")
    try:
        ti = header.index("t")
        si = header.index("sigma_mean")
    except ValueError as exc:
        raise ValueError(f"{path}: missing required column: {exc}") from exc
    t, sigma = [], []
    for line in rows[1:]:
        parts = line.split(",")
        t.append(float(parts[ti]))
        sigma.append(float(parts[si]))
    return np.array(t), np.array(sigma)


def fit_summary(fit, n_final: int, converged: bool) -> dict:
    return {
        "alpha": fit.alpha,
        "ci95": fit.ci95,
        "lsq_error": fit.lsq_error,
        "t_min": fit.t_min,
        "t_max": fit.t_max,
        "n_final": n_final,
        "converged": converged,
    }


def manifest_timestamp() -> str:
    """UTC timestamp; SOURCE_DATE_EPOCH pins it for byte-reproducible runs."""
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    ts = int(epoch) if epoch else int(time.time())
    return time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime(ts))


def run_manifest(cfg, version: str, outputs: list[str],
                 realization_indices=None, history=None,
                 fit=None, converged=None, extra: dict | None = None) -> dict:
    man = {
        "config": cfg.to_dict(),
        "config_hash": cfg.config_hash(),
        "version": version,
        "timestamp": manifest_timestamp(),
        "master_seed": cfg.seed,
        "outputs": [os.path.basename(p) for p in outputs],
    }
    if realization_indices is not None:
        man["realization_seeds"] = [[cfg.seed, i] for i in realization_indices]
    if history is not None:
        man["convergence_history"] = [[n, a] for n, a in history]
    if fit is not None:
        man["fit"] = fit_summary(fit, n_final=len(realization_indices or []),
                                 converged=bool(converged))
    if extra:
        man.update(extra)
    return man
