"""Jump-length distribution tests: pmf/moment oracles via scipy.stats,
truncation radii by independent CDF summation, sampler statistics,
and substream determinism."""

import numpy as np
import pytest
from scipy import stats as sps

from qwalk import disorder
from qwalk.disorder import DisorderSpec

CASES = [
    ("poisson", {"lambda": 1.0}),
    ("poisson", {"lambda": 0.7}),
    ("poisson", {"lambda": 2.0}),
    ("binomial", {"n": 5, "p": 0.2}),
    ("binomial", {"n": 40, "p": 0.4}),
    ("hypergeometric", {"N": 20, "m": 5, "n": 4}),
    ("negative-binomial", {"r": 1, "p": 0.5}),
    ("negative-binomial", {"r": 3, "p": 0.4}),
    ("geometric", {"p": 0.5}),
    ("geometric", {"p": 0.25}),
]


def _scipy_dist(kind, params):
    if kind == "poisson":
        return sps.poisson(params["lambda"])
    if kind == "binomial":
        return sps.binom(params["n"], params["p"])
    if kind == "hypergeometric":
        return sps.hypergeom(params["N"], params["m"], params["n"])
    if kind == "negative-binomial":
        return sps.nbinom(params["r"], params["p"])
    if kind == "geometric":
        return sps.geom(params["p"], loc=-1)   # shift support to {0,1,...}
    raise AssertionError(kind)


# ---------------------------------------------------------------------------
# pmf and moments

@pytest.mark.parametrize("kind,params", CASES)
def test_pmf_matches_scipy(kind, params):
    spec = DisorderSpec(kind=kind, params=params)
    ref = _scipy_dist(kind, params)
    for k in range(16):
        assert disorder.pmf(spec, k) == pytest.approx(ref.pmf(k), abs=1e-12)


def test_pmf_large_parameters_lgamma_path():
    spec = DisorderSpec(kind="binomial", params={"n": 100, "p": 0.3})
    ref = sps.binom(100, 0.3)
    for k in [0, 1, 17, 30, 55, 99, 100]:
        assert disorder.pmf(spec, k) == pytest.approx(ref.pmf(k), rel=1e-10)
    spec = DisorderSpec(kind="negative-binomial", params={"r": 40, "p": 0.6})
    ref = sps.nbinom(40, 0.6)
    for k in [0, 5, 25, 60]:
        assert disorder.pmf(spec, k) == pytest.approx(ref.pmf(k), rel=1e-10)


@pytest.mark.parametrize("kind,params", CASES)
def test_exact_moments_match_scipy(kind, params):
    spec = DisorderSpec(kind=kind, params=params)
    ref = _scipy_dist(kind, params)
    m = disorder.exact_moments(spec)
    assert m.mean == pytest.approx(float(ref.mean()), abs=1e-12)
    assert m.variance == pytest.approx(float(ref.var()), abs=1e-12)


def test_unit_mean_parameterizations():
    """The five unit-mean specs used in the exponent comparisons."""
    table = [
        ("poisson", {"lambda": 1.0}, 1.0),
        ("binomial", {"n": 5, "p": 0.2}, 0.8),
        ("hypergeometric", {"N": 20, "m": 5, "n": 4}, 12 / 19),
        ("negative-binomial", {"r": 1, "p": 0.5}, 2.0),
        ("geometric", {"p": 0.5}, 2.0),
    ]
    for kind, params, var in table:
        m = disorder.exact_moments(DisorderSpec(kind=kind, params=params))
        assert m.mean == pytest.approx(1.0, abs=1e-12)
        assert m.variance == pytest.approx(var, abs=1e-12)


def test_fano_classification():
    fano = {kind: disorder.exact_moments(DisorderSpec(kind=kind, params=p)).fano
            for kind, p, _ in [
                ("poisson", {"lambda": 1.0}, None),
                ("binomial", {"n": 5, "p": 0.2}, None),
                ("hypergeometric", {"N": 20, "m": 5, "n": 4}, None),
                ("negative-binomial", {"r": 1, "p": 0.5}, None),
                ("geometric", {"p": 0.5}, None)]}
    assert fano["poisson"] == pytest.approx(1.0, abs=1e-12)
    assert fano["binomial"] < 1 and fano["hypergeometric"] < 1
    assert fano["negative-binomial"] > 1 and fano["geometric"] > 1
    # sub-Poissonian spreads faster: hypergeometric is the narrowest here
    assert fano["hypergeometric"] < fano["binomial"]


# ---------------------------------------------------------------------------
# truncation radius

def _radius_by_cdf(kind, params, eps=1e-4):
    ref = _scipy_dist(kind, params)
    R = 0
    while float(1.0 - ref.cdf(R)) > eps:
        R += 1
    return R


@pytest.mark.parametrize("kind,params", CASES)
def test_truncation_radius_matches_cdf_summation(kind, params):
    spec = DisorderSpec(kind=kind, params=params)
    assert spec.R == _radius_by_cdf(kind, params)


def test_truncation_radius_reference_values():
    expected = [
        ("poisson", {"lambda": 1.0}, 6),
        ("poisson", {"lambda": 0.7}, 5),
        ("poisson", {"lambda": 2.0}, 9),
        ("binomial", {"n": 5, "p": 0.2}, 5),
        ("geometric", {"p": 0.5}, 13),
        ("hypergeometric", {"N": 20, "m": 5, "n": 4}, 4),
    ]
    for kind, params, R in expected:
        assert DisorderSpec(kind=kind, params=params).R == R


def test_truncation_radius_finite_support_cap():
    # full support already inside the bound: R is the support maximum
    spec = DisorderSpec(kind="binomial", params={"n": 5, "p": 0.2})
    assert spec.R <= 5
    spec = DisorderSpec(kind="binomial", params={"n": 1, "p": 1.0})
    assert spec.R == 1


def test_truncation_radius_eps_dependence():
    loose = DisorderSpec(kind="poisson", params={"lambda": 1.0}, eps=1e-2)
    tight = DisorderSpec(kind="poisson", params={"lambda": 1.0}, eps=1e-8)
    assert loose.R < 6 < tight.R


# ---------------------------------------------------------------------------
# sampling

def test_substream_determinism_and_independence():
    a1 = disorder.substream(123, 0).integers(0, 1 << 30, size=8)
    a2 = disorder.substream(123, 0).integers(0, 1 << 30, size=8)
    b = disorder.substream(123, 1).integers(0, 1 << 30, size=8)
    c = disorder.substream(124, 0).integers(0, 1 << 30, size=8)
    assert np.array_equal(a1, a2)
    assert not np.array_equal(a1, b)
    assert not np.array_equal(a1, c)


def test_degenerate_constant_jump():
    spec = DisorderSpec(kind="binomial", params={"n": 1, "p": 1.0})
    rng = disorder.substream(5, 0)
    draws = disorder.sample_jumps(spec, 1000, rng)
    assert np.all(draws == 1)


def test_geometric_support_starts_at_zero():
    spec = DisorderSpec(kind="geometric", params={"p": 0.7})
    rng = disorder.substream(9, 0)
    draws = disorder.sample_jumps(spec, 100_000, rng)
    assert draws.min() == 0
    frac0 = float((draws == 0).mean())
    assert frac0 == pytest.approx(0.7, abs=0.01)


@pytest.mark.parametrize("kind,params", CASES)
def test_samples_respect_truncation(kind, params):
    spec = DisorderSpec(kind=kind, params=params)
    rng = disorder.substream(77, 0)
    draws = disorder.sample_jumps(spec, 200_000, rng)
    assert draws.min() >= 0
    assert draws.max() <= spec.R


def test_sampler_mean_and_chisquare_poisson():
    spec = DisorderSpec(kind="poisson", params={"lambda": 1.0})
    rng = disorder.substream(2024, 0)
    n = 1_000_000
    draws = disorder.sample_jumps(spec, n, rng)
    mom = disorder.exact_moments(spec)
    se = np.sqrt(mom.variance / n)
    assert abs(draws.mean() - mom.mean) < 4 * se
    # chi-square against the truncated, renormalized pmf
    mass = np.array([disorder.pmf(spec, k) for k in range(spec.R + 1)])
    mass /= mass.sum()
    observed = np.bincount(draws, minlength=spec.R + 1)
    _, p = sps.chisquare(observed, mass * n)
    assert p > 0.001


def test_sample_field_shape_and_range():
    spec = DisorderSpec(kind="poisson", params={"lambda": 1.0})
    rng = disorder.substream(3, 0)
    field = disorder.sample_field(spec, 10, rng)
    assert field.shape == (21, 21)
    assert field.min() >= 0 and field.max() <= spec.R


def test_sample_field_row_major_matches_flat_draw():
    """The field is the flat sample sequence laid out row-major, so a
    field draw and a sequence draw from the same substream agree."""
    spec = DisorderSpec(kind="poisson", params={"lambda": 1.0})
    field = disorder.sample_field(spec, 4, disorder.substream(42, 7))
    flat = disorder.sample_jumps(spec, 9 * 9, disorder.substream(42, 7))
    assert np.array_equal(field.reshape(-1), flat)


# ---------------------------------------------------------------------------
# validation

def test_validation_errors_name_the_parameter():
    with pytest.raises(ValueError, match="lambda"):
        DisorderSpec(kind="poisson", params={"lambda": -1.0})
    with pytest.raises(ValueError, match="lambda"):
        DisorderSpec(kind="poisson", params={})
    with pytest.raises(ValueError, match="p"):
        DisorderSpec(kind="binomial", params={"n": 5, "p": 1.5})
    with pytest.raises(ValueError, match="n"):
        DisorderSpec(kind="binomial", params={"n": 0, "p": 0.5})
    with pytest.raises(ValueError, match="p"):
        DisorderSpec(kind="geometric", params={"p": 0.0})
    with pytest.raises(ValueError, match="r"):
        DisorderSpec(kind="negative-binomial", params={"r": 0, "p": 0.5})
    with pytest.raises(ValueError, match="m"):
        DisorderSpec(kind="hypergeometric", params={"N": 10, "m": 11, "n": 2})
    with pytest.raises(ValueError, match="n"):
        DisorderSpec(kind="hypergeometric", params={"N": 10, "m": 5, "n": 11})
    with pytest.raises(ValueError):
        DisorderSpec(kind="zipf", params={"s": 2})
    with pytest.raises(ValueError, match="unexpected parameter"):
        DisorderSpec(kind="poisson", params={"lambda": 1.0, "mu": 2.0})


def test_kind_aliases():
    assert disorder.canonical_kind("negative_binomial") == "negative-binomial"
    assert disorder.canonical_kind("negbin") == "negative-binomial"
    assert disorder.canonical_kind("Poisson") == "poisson"
    spec = DisorderSpec(kind="negative_binomial", params={"r": 1, "p": 0.5})
    assert spec.kind == "negative-binomial"


def test_binomial_p_one_is_the_only_boundary_allowed():
    DisorderSpec(kind="binomial", params={"n": 1, "p": 1.0})   # degenerate spec
    with pytest.raises(ValueError):
        DisorderSpec(kind="binomial", params={"n": 5, "p": 0.0})
