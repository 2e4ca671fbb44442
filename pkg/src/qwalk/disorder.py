"""Discrete jump-length distributions: pmf, moments, truncation, sampling.

All five families live on the nonnegative integers.  A spec carries its
truncation radius R, the minimal bound with tail probability at most eps;
draws above R are resampled so the sampler realizes the truncated law.

Streams are counter-based (Philox) and keyed by (master_seed, index), so
realization i of an ensemble owns a private substream independent of
scheduling order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

KINDS = ("poisson", "binomial", "hypergeometric", "negative-binomial",
         "geometric")

_PARAM_NAMES = {
    "poisson": ("lambda",),
    "binomial": ("n", "p"),
    "hypergeometric": ("N", "m", "n"),
    "negative-binomial": ("r", "p"),
    "geometric": ("p",),
}

_R_SEARCH_CAP = 100_000


def canonical_kind(kind: str) -> str:
    key = kind.strip().lower().replace("_", "-")
    if key == "negbin":
        key = "negative-binomial"
    if key not in KINDS:
        raise ValueError(f"unknown distribution kind: {kind!r}")
    return key


def _validate(kind: str, params: dict) -> None:
    names = _PARAM_NAMES[kind]
    for name in names:
        if name not in params:
            raise ValueError(f"{kind}: missing parameter {name!r}")
    extra = set(params) - set(names)
    if extra:
        raise ValueError(f"{kind}: unexpected parameter {sorted(extra)[0]!r}")
    if kind == "poisson":
        if not params["lambda"] > 0:
            raise ValueError("poisson: parameter 'lambda' must be > 0")
    elif kind == "binomial":
        n, p = params["n"], params["p"]
        if not (isinstance(n, (int, np.integer)) and n >= 1):
            raise ValueError("binomial: parameter 'n' must be an integer >= 1")
        # p = 1 is tolerated as the degenerate constant-jump spec
        if not 0 < p <= 1:
            raise ValueError("binomial: parameter 'p' must be in (0, 1]")
    elif kind == "hypergeometric":
        N, m, n = params["N"], params["m"], params["n"]
        for name, v in (("N", N), ("m", m), ("n", n)):
            if not isinstance(v, (int, np.integer)):
                raise ValueError(f"hypergeometric: parameter {name!r} must be an integer")
        if N < 1:
            raise ValueError("hypergeometric: parameter 'N' must be >= 1")
        if not 0 <= m <= N:
            raise ValueError("hypergeometric: parameter 'm' must be in [0, N]")
        if not 0 < n <= N:
            raise ValueError("hypergeometric: parameter 'n' must be in (0, N]")
    elif kind == "negative-binomial":
        r, p = params["r"], params["p"]
        if not (isinstance(r, (int, np.integer)) and r >= 1):
            raise ValueError("negative-binomial: parameter 'r' must be an integer >= 1")
        if not 0 < p < 1:
            raise ValueError("negative-binomial: parameter 'p' must be in (0, 1)")
    elif kind == "geometric":
        if not 0 < params["p"] < 1:
            raise ValueError("geometric: parameter 'p' must be in (0, 1)")


@dataclass(frozen=True)
class DisorderSpec:
    """A jump-length distribution plus its truncation radius."""

    kind: str
    params: dict
    eps: float = 1e-4
    R: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "kind", canonical_kind(self.kind))
        _validate(self.kind, self.params)
        if not 0 < self.eps < 1:
            raise ValueError("eps must be in (0, 1)")
        object.__setattr__(self, "R", truncation_radius(self.kind, self.params,
                                                        self.eps))

    def label(self) -> str:
        inner = ",".join(f"{k}={self.params[k]}"
                         for k in _PARAM_NAMES[self.kind])
        return f"{self.kind}({inner})"


@dataclass(frozen=True)
class DistributionMoments:
    mean: float
    variance: float

    @property
    def fano(self) -> float:
        return self.variance / self.mean


def _log_comb(n: float, k: float) -> float:
    return (math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1))


def _comb(n: int, k: int) -> float:
    if k < 0 or k > n:
        return 0.0
    # exact below 20, log-gamma beyond to avoid overflow
    if n <= 20:
        return float(math.comb(n, k))
    return math.exp(_log_comb(n, k))


def pmf(spec: DisorderSpec, k: int) -> float:
    """Probability of jump length k under the untruncated distribution."""
    if k < 0:
        return 0.0
    kind, p = spec.kind, spec.params
    if kind == "poisson":
        lam = p["lambda"]
        return math.exp(-lam + k * math.log(lam) - math.lgamma(k + 1))
    if kind == "binomial":
        n, q = p["n"], p["p"]
        if k > n:
            return 0.0
        if q == 1.0:
            return 1.0 if k == n else 0.0
        return _comb(n, k) * q ** k * (1 - q) ** (n - k)
    if kind == "hypergeometric":
        N, m, n = p["N"], p["m"], p["n"]
        if k > min(m, n) or n - k > N - m:
            return 0.0
        if N <= 20:
            return math.comb(m, k) * math.comb(N - m, n - k) / math.comb(N, n)
        return math.exp(_log_comb(m, k) + _log_comb(N - m, n - k)
                        - _log_comb(N, n))
    if kind == "negative-binomial":
        r, q = p["r"], p["p"]
        return _comb(k + r - 1, r - 1) * q ** r * (1 - q) ** k
    if kind == "geometric":
        q = p["p"]
        return (1 - q) ** k * q
    raise AssertionError(kind)


def support_max(kind: str, params: dict):
    """Largest attainable jump, or None for unbounded supports."""
    if kind == "binomial":
        return params["n"]
    if kind == "hypergeometric":
        return min(params["m"], params["n"])
    return None


def truncation_radius(kind: str, params: dict, eps: float = 1e-4) -> int:
    """Minimal R with P(X > R) <= eps, by direct tail summation."""
    kind = canonical_kind(kind)
    _validate(kind, params)
    probe = DisorderSpec.__new__(DisorderSpec)  # pmf needs kind/params only
    object.__setattr__(probe, "kind", kind)
    object.__setattr__(probe, "params", params)
    bound = support_max(kind, params)
    tail = 1.0
    r = -1
    while tail > eps:
        r += 1
        tail -= pmf(probe, r)
        if bound is not None and r >= bound:
            return bound
        if r > _R_SEARCH_CAP:
            raise ValueError(f"{kind}: truncation radius search exceeded cap")
    return max(r, 0)


def exact_moments(spec: DisorderSpec) -> DistributionMoments:
    """Closed-form mean and variance of the untruncated distribution."""
    kind, p = spec.kind, spec.params
    if kind == "poisson":
        lam = p["lambda"]
        return DistributionMoments(lam, lam)
    if kind == "binomial":
        n, q = p["n"], p["p"]
        return DistributionMoments(n * q, n * q * (1 - q))
    if kind == "hypergeometric":
        N, m, n = p["N"], p["m"], p["n"]
        mean = n * m / N
        var = mean * (1 - m / N) * (N - n) / (N - 1) if N > 1 else 0.0
        return DistributionMoments(mean, var)
    if kind == "negative-binomial":
        r, q = p["r"], p["p"]
        return DistributionMoments(r * (1 - q) / q, r * (1 - q) / q ** 2)
    if kind == "geometric":
        q = p["p"]
        return DistributionMoments((1 - q) / q, (1 - q) / q ** 2)
    raise AssertionError(kind)


# ---------------------------------------------------------------------------
# sampling

def substream(master_seed: int, index: int) -> np.random.Generator:
    """Counter-based stream for realization `index` under a master seed."""
    key = np.array([master_seed, index], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def _draw_raw(spec: DisorderSpec, rng: np.random.Generator, size: int):
    kind, p = spec.kind, spec.params
    if kind == "poisson":
        return rng.poisson(p["lambda"], size=size)
    if kind == "binomial":
        return rng.binomial(p["n"], p["p"], size=size)
    if kind == "hypergeometric":
        return rng.hypergeometric(p["m"], p["N"] - p["m"], p["n"], size=size)
    if kind == "negative-binomial":
        return rng.negative_binomial(p["r"], p["p"], size=size)
    if kind == "geometric":
        # numpy's geometric counts trials (1-based); the paper's counts failures
        return rng.geometric(p["p"], size=size) - 1
    raise AssertionError(kind)


def sample_jumps(spec: DisorderSpec, count: int,
                 rng: np.random.Generator) -> np.ndarray:
    """count i.i.d. truncated draws (resample-above-R semantics)."""
    out = _draw_raw(spec, rng, count)
    bad = out > spec.R
    while bad.any():
        out[bad] = _draw_raw(spec, rng, int(bad.sum()))
        bad = out > spec.R
    return out.astype(np.int64)


def sample_jump(spec: DisorderSpec, rng: np.random.Generator) -> int:
    return int(sample_jumps(spec, 1, rng)[0])


def sample_sequence(spec: DisorderSpec, steps: int,
                    rng: np.random.Generator) -> np.ndarray:
    """A length-T jump sequence J_1..J_T for dynamic disorder."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    return sample_jumps(spec, steps, rng)


def sample_field(spec: DisorderSpec, half_width: int,
                 rng: np.random.Generator) -> np.ndarray:
    """A quenched per-vertex jump field over [-w, w]^2 (row-major draw)."""
    if half_width < 0:
        raise ValueError("half_width must be >= 0")
    n = 2 * half_width + 1
    return sample_jumps(spec, n * n, rng).reshape(n, n)
