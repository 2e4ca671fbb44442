"""Discrete-time quantum walks with quenched jump-length disorder.

Coined walks on 1D and 2D lattices where the shift length is drawn from
a truncated integer distribution, either per step (dynamic) or frozen
per vertex (static).  Disorder-averaged dispersion series are fit to a
power law to extract spreading exponents, with an exact classical
random-walk baseline for comparison.
"""

__version__ = "0.1.0"

from .classical import crw_asymptotic, crw_clean_sigma, crw_exact, crw_iterate, crw_sigma
from .config import ConfigError, ExperimentConfig, from_dict, load_file
from .disorder import (
    DisorderSpec,
    DistributionMoments,
    exact_moments,
    pmf,
    sample_field,
    sample_jump,
    sample_jumps,
    sample_sequence,
    substream,
    truncation_radius,
)
from .stats import (
    EnsembleResult,
    MomentSeries,
    PositionDistribution,
    ScalingFit,
    collect_series,
    dispersion,
    ensemble_average,
    fit_exponent,
    moment,
)
from .walk import (
    WalkerState,
    coin_operator,
    distribution,
    evolve,
    evolve_static,
    initial_coin_state,
    new_state,
    probabilities,
    simulate,
    simulate_static,
    step,
    step_static,
)

__all__ = [
    "__version__",
    "ConfigError",
    "DisorderSpec",
    "DistributionMoments",
    "EnsembleResult",
    "ExperimentConfig",
    "MomentSeries",
    "PositionDistribution",
    "ScalingFit",
    "WalkerState",
    "coin_operator",
    "collect_series",
    "crw_asymptotic",
    "crw_clean_sigma",
    "crw_exact",
    "crw_iterate",
    "crw_sigma",
    "dispersion",
    "distribution",
    "ensemble_average",
    "evolve",
    "evolve_static",
    "exact_moments",
    "fit_exponent",
    "from_dict",
    "initial_coin_state",
    "load_file",
    "moment",
    "new_state",
    "pmf",
    "probabilities",
    "sample_field",
    "sample_jump",
    "sample_jumps",
    "sample_sequence",
    "simulate",
    "simulate_static",
    "step",
    "step_static",
    "substream",
    "truncation_radius",
]
