"""Static (per-vertex) disorder tests against a brute-force dict oracle.

The oracle evolves {(coin, x, y): amplitude} site by site with plain
Python loops, renormalizing exactly like the production path, so any
indexing or accumulation bug in the vectorized scatter shows up as a
mismatch.
"""

import math

import numpy as np
import pytest

import qwalk
from qwalk import disorder, walk


def _oracle_step(amps: dict, coin: np.ndarray, field: np.ndarray):
    """One coin+shift step on the dict state; returns (new_amps, raw_norm)."""
    wf = field.shape[0] // 2
    moves = [(1, 0), (-1, 0), (0, 1), (0, -1)]
    out: dict = {}
    sites = {}
    for (c, x, y), a in amps.items():
        sites.setdefault((x, y), [0j] * 4)[c] = a
    for (x, y), vec in sites.items():
        j = int(field[x + wf, y + wf])
        mixed = coin @ np.array(vec)
        for c, (dx, dy) in enumerate(moves):
            key = (c, x + dx * j, y + dy * j)
            out[key] = out.get(key, 0j) + mixed[c]
    raw = math.sqrt(sum(abs(a) ** 2 for a in out.values()))
    return {k: v / raw for k, v in out.items()}, raw


def _state_to_dict(state: walk.WalkerState) -> dict:
    w = state.half_width
    out = {}
    for c, xi, yi in zip(*np.nonzero(np.abs(state.psi) > 1e-15)):
        out[(int(c), int(xi) - w, int(yi) - w)] = state.psi[c, xi, yi]
    return out


def test_step_static_matches_dict_oracle_exactly():
    spec = disorder.DisorderSpec(kind="poisson", params={"lambda": 1.0})
    rng = disorder.substream(4, 0)
    steps = 6
    field = disorder.sample_field(spec, steps * spec.R, rng)
    coin = qwalk.coin_operator("grover")
    phi = qwalk.initial_coin_state("grover")

    state = walk.new_state(phi, dim=2)
    amps = {(c, 0, 0): phi[c] for c in range(4) if abs(phi[c]) > 0}
    for _ in range(steps):
        state, raw = walk.step_static(state, coin, field)
        amps, raw_oracle = _oracle_step(amps, coin, field)
        assert raw == pytest.approx(raw_oracle, abs=1e-12)
        got = _state_to_dict(state)
        assert set(got) == set(amps)
        for key, val in amps.items():
            assert got[key] == pytest.approx(val, abs=1e-12)


def test_uniform_field_equals_clean_dynamic():
    """A field of all ones is exactly the clean unit-shift walk."""
    coin = qwalk.coin_operator("fourier")
    phi = qwalk.initial_coin_state("fourier")
    steps = 10
    field = np.ones((2 * steps + 1, 2 * steps + 1), dtype=int)
    s_static = walk.new_state(phi, dim=2)
    s_clean = walk.new_state(phi, dim=2)
    for _ in range(steps):
        s_static, raw = walk.step_static(s_static, coin, field)
        s_clean = walk.step(s_clean, coin, 1)
        assert raw == pytest.approx(1.0, abs=1e-12)
    assert s_static.half_width == s_clean.half_width
    assert np.abs(s_static.psi - s_clean.psi).max() < 1e-12


def test_zero_field_traps_at_origin():
    coin = qwalk.coin_operator("grover")
    phi = qwalk.initial_coin_state("grover")
    field = np.zeros((11, 11), dtype=int)
    series, snaps, raws = walk.simulate_static(coin, phi, field, 8,
                                               snapshot_times=[8])
    assert snaps[8].half_width == 0
    assert snaps[8].p.sum() == pytest.approx(1.0, abs=1e-12)
    assert np.abs(series.sigma_std).max() == 0
    assert np.allclose(raws, 1.0, atol=1e-12)


def test_field_too_small_raises():
    coin = qwalk.coin_operator("grover")
    phi = qwalk.initial_coin_state("grover")
    field = np.full((3, 3), 2, dtype=int)   # reach after one step exceeds w=1
    s = walk.new_state(phi, dim=2)
    with pytest.raises(ValueError):
        s, _ = walk.step_static(s, coin, field)
        walk.step_static(s, coin, field)


def test_raw_norms_reflect_non_unitary_map():
    """With zeros present the map has traps and collisions, so some raw
    norms must differ from 1; the state itself stays normalized."""
    spec = disorder.DisorderSpec(kind="poisson", params={"lambda": 1.0})
    rng = disorder.substream(11, 3)
    field = disorder.sample_field(spec, 12 * spec.R, rng)
    coin = qwalk.coin_operator("grover")
    phi = qwalk.initial_coin_state("grover")
    series, _, raws = walk.simulate_static(coin, phi, field, 12)
    assert raws.shape == (12,)
    assert np.abs(raws - 1.0).max() > 1e-6
    state = walk.new_state(phi, dim=2)
    for _ in range(12):
        state, _ = walk.step_static(state, coin, field)
    assert abs(state.norm() - 1.0) < 1e-12


def test_simulate_static_series_matches_stepwise():
    spec = disorder.DisorderSpec(kind="poisson", params={"lambda": 1.0})
    rng = disorder.substream(7, 1)
    field = disorder.sample_field(spec, 10 * spec.R, rng)
    coin = qwalk.coin_operator("grover")
    phi = qwalk.initial_coin_state("grover")
    series, snaps, _ = walk.simulate_static(coin, phi, field, 10,
                                            snapshot_times=[10])
    state = walk.new_state(phi, dim=2)
    for _ in range(10):
        state, _ = walk.step_static(state, coin, field)
    P = walk.probabilities(state)
    assert np.abs(P - snaps[10].p).max() < 1e-14
    assert series.t[-1] == 10
