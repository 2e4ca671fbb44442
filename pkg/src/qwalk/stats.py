"""Position moments, sigma(t) series, ensemble averaging, power-law fits.

Two dispersion measures are carried side by side because the literature
mixes them and they scale differently for ring-shaped profiles:

* ``sigma``      — radial: sqrt(m2 - m1^2) with m_k = sum (x^2+y^2)^(k/2) P.
                   This is the primary definition used for the
                   disorder-averaged scaling tables.
* ``sigma_std``  — standard deviation of the position vector:
                   sqrt(m2 - |E[r]|^2).  For the symmetric initial states
                   used here E[r] = 0, so this is sqrt(m2).  The clean
                   ballistic fits and all 1D baselines use this one.

The 1D analogs replace the radius with |x|.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import stats as _sps

SIGMA_KINDS = ("radial", "std")


# ---------------------------------------------------------------------------
# distributions and moments

@dataclass
class PositionDistribution:
    """Probability per site over the symmetric window [-w, w] (^2 in 2D)."""

    p: np.ndarray
    t: int

    @property
    def dim(self) -> int:
        return self.p.ndim

    @property
    def half_width(self) -> int:
        return (self.p.shape[0] - 1) // 2

    def axis(self) -> np.ndarray:
        w = self.half_width
        return np.arange(-w, w + 1, dtype=float)


def moment(dist: PositionDistribution, k: int) -> float:
    """Radial moment m_k = sum (x^2+y^2)^(k/2) P; 1D uses |x|^k."""
    if k not in (1, 2):
        raise ValueError("moment order k must be 1 or 2")
    ax = dist.axis()
    if dist.dim == 1:
        r = np.abs(ax)
        return float((dist.p * r ** k).sum())
    x, y = np.meshgrid(ax, ax, indexing="ij")
    r2 = x * x + y * y
    val = r2 if k == 2 else np.sqrt(r2)
    return float((dist.p * val).sum())


def dispersion(dist: PositionDistribution) -> tuple[float, float, float, float]:
    """(m1, m2, sigma_radial, sigma_std) for one distribution."""
    ax = dist.axis()
    if dist.dim == 1:
        r = np.abs(ax)
        m1 = float((dist.p * r).sum())
        m2 = float((dist.p * ax * ax).sum())
        mean = float((dist.p * ax).sum())
        drift2 = mean * mean
    else:
        x, y = np.meshgrid(ax, ax, indexing="ij")
        r2 = x * x + y * y
        m1 = float((dist.p * np.sqrt(r2)).sum())
        m2 = float((dist.p * r2).sum())
        mx = float((dist.p * x).sum())
        my = float((dist.p * y).sum())
        drift2 = mx * mx + my * my
    sigma = float(np.sqrt(max(m2 - m1 * m1, 0.0)))
    sigma_std = float(np.sqrt(max(m2 - drift2, 0.0)))
    return m1, m2, sigma, sigma_std


@dataclass
class MomentSeries:
    """Per-step radial moments and both dispersion measures."""

    t: np.ndarray
    m1: np.ndarray
    m2: np.ndarray
    sigma: np.ndarray
    sigma_std: np.ndarray

    def pick(self, sigma_kind: str) -> np.ndarray:
        if sigma_kind == "radial":
            return self.sigma
        if sigma_kind == "std":
            return self.sigma_std
        raise ValueError(f"sigma_kind must be one of {SIGMA_KINDS}")


def collect_series(distributions) -> MomentSeries:
    """Build a MomentSeries from an iterable of PositionDistribution."""
    rows = [(d.t,) + dispersion(d) for d in distributions]
    if not rows:
        raise ValueError("no distributions supplied")
    t, m1, m2, sg, ss = (np.array(col) for col in zip(*rows))
    return MomentSeries(t=t, m1=m1, m2=m2, sigma=sg, sigma_std=ss)


# ---------------------------------------------------------------------------
# power-law fitting

@dataclass
class ScalingFit:
    """OLS fit of ln(1/sigma) = -alpha ln t + c over [t_min, t_max]."""

    alpha: float
    intercept: float
    ci95: float
    lsq_error: float
    t_min: int
    t_max: int
    n_points: int


def fit_exponent(t: np.ndarray, sigma: np.ndarray, t_min: int = 18,
                 t_max: int = 50) -> ScalingFit:
    """Fit the scaling exponent; ci95 is the half-width from the slope SE."""
    t = np.asarray(t, dtype=float)
    sigma = np.asarray(sigma, dtype=float)
    mask = (t >= t_min) & (t <= t_max)
    if mask.sum() < 3:
        raise ValueError("fit window must contain at least 3 points")
    if (sigma[mask] <= 0).any():
        raise ValueError("sigma must be positive over the fit window")
    x = np.log(t[mask])
    y = np.log(1.0 / sigma[mask])
    n = x.size
    xm, ym = x.mean(), y.mean()
    sxx = ((x - xm) ** 2).sum()
    slope = ((x - xm) * (y - ym)).sum() / sxx
    intercept = ym - slope * xm
    resid = y - (slope * x + intercept)
    ss_res = float((resid ** 2).sum())
    if n > 2:
        se = np.sqrt(ss_res / (n - 2) / sxx)
        ci95 = float(se * _sps.t.ppf(0.975, n - 2))
    else:
        ci95 = 0.0
    return ScalingFit(alpha=float(-slope), intercept=float(intercept),
                      ci95=ci95, lsq_error=ss_res / n,
                      t_min=int(t_min), t_max=int(t_max), n_points=int(n))


def round_2sig(x: float) -> float:
    """Round to two significant figures (convergence comparisons)."""
    return float(f"{x:.2g}")


# ---------------------------------------------------------------------------
# disorder-ensemble averaging

@dataclass
class EnsembleResult:
    """Disorder-averaged sigma series plus the convergence record."""

    t: np.ndarray
    sigma_mean: np.ndarray          # selected dispersion, averaged
    sigma_radial_mean: np.ndarray
    sigma_std_mean: np.ndarray
    n_realizations: int
    master_seed: int
    realization_indices: list[int]
    history: list[tuple[int, float]] = field(default_factory=list)
    converged: bool = True
    sigma_kind: str = "radial"
    fit: ScalingFit | None = None


def ensemble_average(run_realization, steps: int, master_seed: int,
                     batch_size: int = 50, max_realizations: int = 2000,
                     min_realizations: int = 50, t_min: int = 18,
                     t_max: int = 50, sigma_kind: str = "radial",
                     use_convergence: bool = True,
                     map_batch=None) -> EnsembleResult:
    """Grow the realization set in batches until the fit stabilizes.

    run_realization(index) -> MomentSeries for that realization's private
    stream.  After each batch the exponent is refit on the running mean;
    the protocol stops once two consecutive fits agree after rounding to
    two significant figures, or at max_realizations (flagged, not
    discarded).  map_batch, if given, evaluates a list of indices
    (possibly in parallel); accumulation always happens in index order so
    results are schedule-independent.
    """
    if sigma_kind not in SIGMA_KINDS:
        raise ValueError(f"sigma_kind must be one of {SIGMA_KINDS}")
    if batch_size < 1 or max_realizations < batch_size:
        raise ValueError("need batch_size >= 1 and max_realizations >= batch_size")
    if map_batch is None:
        map_batch = lambda idxs: [run_realization(i) for i in idxs]

    acc_r = np.zeros(steps)
    acc_s = np.zeros(steps)
    t_axis = np.arange(1, steps + 1)
    n = 0
    history: list[tuple[int, float]] = []
    converged = False
    prev: float | None = None
    while n < max_realizations:
        batch = list(range(n, min(n + batch_size, max_realizations)))
        series_list = map_batch(batch)
        for series in series_list:       # fixed index order: deterministic sums
            acc_r += series.sigma
            acc_s += series.sigma_std
        n += len(batch)
        sel = (acc_r if sigma_kind == "radial" else acc_s) / n
        alpha = fit_exponent(t_axis, sel, t_min, t_max).alpha
        history.append((n, alpha))
        if prev is not None and n >= min_realizations and \
                round_2sig(alpha) == round_2sig(prev):
            converged = True
            break
        prev = alpha
    sigma_radial_mean = acc_r / n
    sigma_std_mean = acc_s / n
    selected = sigma_radial_mean if sigma_kind == "radial" else sigma_std_mean
    fit = fit_exponent(t_axis, selected, t_min, t_max)
    return EnsembleResult(t=t_axis, sigma_mean=selected,
                          sigma_radial_mean=sigma_radial_mean,
                          sigma_std_mean=sigma_std_mean,
                          n_realizations=n, master_seed=master_seed,
                          realization_indices=list(range(n)),
                          history=history, converged=converged,
                          sigma_kind=sigma_kind, fit=fit)
