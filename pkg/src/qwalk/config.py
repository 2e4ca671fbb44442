"""Experiment configuration: YAML file + flag overrides, validation, hashing.

A config round-trips losslessly through `to_dict`/`from_dict`, and its
canonical JSON form (sorted keys, 17-significant-digit floats) feeds the
run-manifest hash.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field as dc_field

import numpy as np
import yaml

from .disorder import DisorderSpec
from .walk import COIN_PRESETS, coin_operator, initial_coin_state
from .output import canonical_json

WALKERS = ("quantum-2d", "quantum-1d", "classical-2d")


class ConfigError(ValueError):
    """Invalid experiment configuration (CLI exit code 2)."""


@dataclass
class ExperimentConfig:
    walker: str = "quantum-2d"
    coin: str | dict = "grover"
    initial: list | None = None          # coin amplitudes; None = preset
    steps: int = 50
    disorder_mode: str = "none"          # none | dynamic | static
    disorder: DisorderSpec | None = None
    batch_size: int = 50
    max_realizations: int = 2000
    min_realizations: int = 50
    use_convergence: bool = True
    t_min: int = 18
    t_max: int = 50
    sigma_kind: str = "radial"
    seed: int = 12345
    snapshots: list[int] = dc_field(default_factory=list)
    threads: int = 1

    # -- structural helpers -------------------------------------------------

    @property
    def dim(self) -> int:
        return 1 if self.walker == "quantum-1d" else 2

    def coin_matrix(self) -> np.ndarray:
        if isinstance(self.coin, str):
            return coin_operator(self.coin, dim=self.dim)
        rows = self.coin["matrix"]
        mat = np.array([[complex(v) for v in row] for row in rows])
        return mat

    def initial_state(self) -> np.ndarray:
        if self.initial is not None:
            return np.array([complex(v) for v in self.initial])
        if isinstance(self.coin, str):
            return initial_coin_state(self.coin, dim=self.dim)
        raise ConfigError("custom coin matrix requires explicit 'initial' amplitudes")

    def to_dict(self) -> dict:
        d = {
            "walker": self.walker,
            "coin": self.coin,
            "initial": self.initial,
            "steps": self.steps,
            "disorder": None if self.disorder is None else {
                "mode": self.disorder_mode,
                "kind": self.disorder.kind,
                "params": dict(self.disorder.params),
                "eps": self.disorder.eps,
            },
            "ensemble": {
                "batch_size": self.batch_size,
                "max_realizations": self.max_realizations,
                "min_realizations": self.min_realizations,
                "convergence": self.use_convergence,
            },
            "fit": {"t_min": self.t_min, "t_max": self.t_max},
            "sigma": self.sigma_kind,
            "seed": self.seed,
            "snapshots": list(self.snapshots),
            "threads": self.threads,
        }
        return d

    def config_hash(self) -> str:
        return hashlib.sha256(canonical_json(self.to_dict()).encode()).hexdigest()


def _parse_disorder(node) -> tuple[str, DisorderSpec | None]:
    if node is None or node == "none":
        return "none", None
    if not isinstance(node, dict):
        raise ConfigError("disorder must be 'none' or a mapping")
    mode = node.get("mode", "dynamic")
    if mode not in ("dynamic", "static"):
        raise ConfigError(f"disorder mode must be dynamic or static, got {mode!r}")
    kind = node.get("kind")
    if kind is None:
        raise ConfigError("disorder mapping requires a 'kind'")
    params = dict(node.get("params", {}))
    eps = float(node.get("eps", 1e-4))
    try:
        spec = DisorderSpec(kind=kind, params=params, eps=eps)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    return mode, spec


def from_dict(raw: dict, require_fit_window: bool = False) -> ExperimentConfig:
    """Build and validate a config from a plain mapping."""
    known = {"walker", "coin", "initial", "steps", "disorder", "ensemble",
             "fit", "sigma", "seed", "snapshots", "threads"}
    unknown = set(raw) - known
    if unknown:
        raise ConfigError(f"unknown config key: {sorted(unknown)[0]!r}")
    walker = raw.get("walker", "quantum-2d")
    if walker not in WALKERS:
        raise ConfigError(f"walker must be one of {WALKERS}, got {walker!r}")
    mode, spec = _parse_disorder(raw.get("disorder"))
    ens = raw.get("ensemble", {}) or {}
    fit = raw.get("fit", {}) or {}
    cfg = ExperimentConfig(
        walker=walker,
        coin=raw.get("coin", "grover"),
        initial=raw.get("initial"),
        steps=int(raw.get("steps", 50)),
        disorder_mode=mode,
        disorder=spec,
        batch_size=int(ens.get("batch_size", 50)),
        max_realizations=int(ens.get("max_realizations", 2000)),
        min_realizations=int(ens.get("min_realizations", 50)),
        use_convergence=bool(ens.get("convergence", True)),
        t_min=int(fit.get("t_min", 18)),
        t_max=int(fit.get("t_max", 50)),
        sigma_kind=str(raw.get("sigma", "radial")),
        seed=int(raw.get("seed", 12345)),
        snapshots=[int(t) for t in raw.get("snapshots", [])],
        threads=int(raw.get("threads", 1)),
    )
    validate(cfg, require_fit_window=require_fit_window)
    return cfg


def validate(cfg: ExperimentConfig, require_fit_window: bool = False) -> None:
    if cfg.walker not in WALKERS:
        raise ConfigError(f"walker must be one of {WALKERS}")
    if isinstance(cfg.coin, str):
        if cfg.coin.lower() not in COIN_PRESETS:
            raise ConfigError(f"unknown coin preset: {cfg.coin!r}")
    else:
        size = 2 if cfg.dim == 1 else 4
        try:
            mat = cfg.coin_matrix()
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"bad custom coin matrix: {exc}") from exc
        if mat.shape != (size, size):
            raise ConfigError(f"custom coin matrix must be {size}x{size}")
        if np.abs(mat @ mat.conj().T - np.eye(size)).max() > 1e-10:
            raise ConfigError("custom coin matrix is not unitary")
    if cfg.initial is not None:
        phi = np.array([complex(v) for v in cfg.initial])
        size = 2 if cfg.dim == 1 else 4
        if phi.shape != (size,):
            raise ConfigError(f"initial coin state must have {size} amplitudes")
        if abs(float((np.abs(phi) ** 2).sum()) - 1.0) > 1e-9:
            raise ConfigError("initial coin state must be normalized")
    if cfg.steps < 1:
        raise ConfigError("steps must be >= 1")
    if cfg.t_min < 1 or cfg.t_max <= cfg.t_min:
        raise ConfigError("fit window requires 1 <= t_min < t_max")
    # Snapshot-only runs may stop before the fit window opens.
    if require_fit_window and cfg.steps < cfg.t_max:
        raise ConfigError("steps must cover the fit window (steps >= t_max)")
    if cfg.sigma_kind not in ("radial", "std"):
        raise ConfigError("sigma must be 'radial' or 'std'")
    if cfg.batch_size < 1:
        raise ConfigError("ensemble batch_size must be >= 1")
    if cfg.max_realizations < cfg.batch_size:
        raise ConfigError("max_realizations must be >= batch_size")
    if cfg.min_realizations < 1:
        raise ConfigError("min_realizations must be >= 1")
    if cfg.threads < 1:
        raise ConfigError("threads must be >= 1")
    if any(t < 0 or t > cfg.steps for t in cfg.snapshots):
        raise ConfigError("snapshot times must lie in [0, steps]")
    if cfg.walker == "classical-2d" and cfg.disorder_mode == "static":
        raise ConfigError("static disorder is not defined for the classical walker")
    if cfg.walker == "quantum-1d" and cfg.disorder_mode == "static":
        raise ConfigError("static disorder is implemented on the 2D lattice only")


def load_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = yaml.safe_load(fh)
    except yaml.YAMLError as exc:
        raise ConfigError(f"cannot parse config file {path}: {exc}") from exc
    if raw is None:
        raw = {}
    if not isinstance(raw, dict):
        raise ConfigError(f"config file {path} must contain a mapping")
    return raw
