"""Coined discrete-time quantum walks on the line and the square lattice.

State layout: psi[c, x] (1D) or psi[c, x, y] (2D), complex128, with the
position axes covering the symmetric window [-w, w] so index i maps to
coordinate i - w.  The array grows adaptively by the realized jump each
step instead of being allocated for the worst case.

Coin-direction convention (2D): component 0 moves +x, 1 moves -x,
2 moves +y, 3 moves -y.  1D: component 0 moves +x, 1 moves -x.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import stats

SQRT2 = np.sqrt(2.0)


# ---------------------------------------------------------------------------
# coins and initial states

def coin_operator(name: str, dim: int = 2) -> np.ndarray:
    """Return the coin unitary for a preset name.

    2D presets: 'grover' (entries 1/2 - delta_jk), 'fourier'
    (entries i^(jk)/2), 'hadamard' (H_2 tensor H_2).  1D: 'hadamard'.
    """
    key = name.lower()
    if dim == 1:
        if key != "hadamard":
            raise ValueError(f"unknown 1D coin preset: {name!r}")
        return np.array([[1, 1], [1, -1]], dtype=complex) / SQRT2
    if dim != 2:
        raise ValueError(f"dim must be 1 or 2, got {dim}")
    if key == "grover":
        return 0.5 - np.eye(4, dtype=complex)
    if key == "fourier":
        return np.array([[1j ** (j * k) for k in range(4)] for j in range(4)],
                        dtype=complex) / 2.0
    if key == "hadamard":
        h2 = np.array([[1, 1], [1, -1]], dtype=complex) / SQRT2
        return np.kron(h2, h2)
    raise ValueError(f"unknown coin preset: {name!r}")


def initial_coin_state(name: str, dim: int = 2) -> np.ndarray:
    """Symmetric-spreading initial coin amplitudes for each preset coin."""
    key = name.lower()
    if dim == 1:
        if key != "hadamard":
            raise ValueError(f"unknown 1D coin preset: {name!r}")
        return np.array([1.0, 1.0j]) / SQRT2
    if key == "grover":
        return np.array([0.5, 0.5, -0.5, -0.5], dtype=complex)
    if key == "fourier":
        a = (1.0 - 1.0j) / (2.0 * SQRT2)
        return np.array([0.5, a, 0.5, -a])
    if key == "hadamard":
        return np.array([0.5, 0.5j, -0.5j, 0.5])
    raise ValueError(f"unknown coin preset: {name!r}")


COIN_PRESETS = ("grover", "fourier", "hadamard")


# ---------------------------------------------------------------------------
# walker state

@dataclass
class WalkerState:
    """Amplitudes over the coin and position degrees of freedom at time t."""

    psi: np.ndarray
    t: int

    @property
    def dim(self) -> int:
        return self.psi.ndim - 1

    @property
    def half_width(self) -> int:
        return (self.psi.shape[1] - 1) // 2

    def norm(self) -> float:
        return float((np.abs(self.psi) ** 2).sum())


def new_state(coin_amplitudes: np.ndarray, dim: int = 2) -> WalkerState:
    """Walker at the origin with the given coin amplitudes (unit norm)."""
    phi = np.asarray(coin_amplitudes, dtype=complex)
    expected = 2 if dim == 1 else 4
    if phi.shape != (expected,):
        raise ValueError(f"coin state must have {expected} amplitudes")
    nrm = np.sqrt((np.abs(phi) ** 2).sum())
    if not np.isclose(nrm, 1.0, atol=1e-9):
        raise ValueError("initial coin state must be normalized")
    psi = phi.reshape((expected,) + (1,) * dim).copy()
    return WalkerState(psi=psi, t=0)


def probabilities(state: WalkerState) -> np.ndarray:
    """Position probability array P(x[,y]) = sum_c |psi_c|^2."""
    return (np.abs(state.psi) ** 2).sum(axis=0)


# ---------------------------------------------------------------------------
# evolution

def step(state: WalkerState, coin: np.ndarray, jump: int) -> WalkerState:
    """One coin-then-shift step with a shared jump length for all directions.

    jump = 0 applies the coin with no displacement.  The position window
    grows by the jump so no amplitude is ever clipped.
    """
    if jump < 0:
        raise ValueError("jump must be a nonnegative integer")
    j = int(jump)
    psi = state.psi
    n = psi.shape[1]
    if state.dim == 1:
        cp = coin @ psi
        if j == 0:
            return WalkerState(cp, state.t + 1)
        m = n + 2 * j
        out = np.zeros((2, m), dtype=complex)
        out[0, 2 * j:2 * j + n] = cp[0]
        out[1, 0:n] = cp[1]
        return WalkerState(out, state.t + 1)
    cp = np.einsum("jk,kxy->jxy", coin, psi)
    if j == 0:
        return WalkerState(cp, state.t + 1)
    m = n + 2 * j
    out = np.zeros((4, m, m), dtype=complex)
    out[0, 2 * j:2 * j + n, j:j + n] = cp[0]
    out[1, 0:n, j:j + n] = cp[1]
    out[2, j:j + n, 2 * j:2 * j + n] = cp[2]
    out[3, j:j + n, 0:n] = cp[3]
    return WalkerState(out, state.t + 1)


def step_static(state: WalkerState, coin: np.ndarray,
                field: np.ndarray) -> tuple[WalkerState, float]:
    """One step where the jump is fixed per vertex by a quenched field.

    Amplitudes scattering onto the same target site accumulate, so this
    linear map is in general not unitary.  The state is renormalized and
    the raw per-step norm factor returned for auditing; position
    distributions derived from the state therefore sum to one.

    ``field`` is an integer array over [-wf, wf]^2 that must cover the
    grown window (wf >= current half-width + max jump in the window).
    """
    if state.dim != 2:
        raise ValueError("static disorder is implemented on the 2D lattice")
    psi = state.psi
    w = state.half_width
    n = 2 * w + 1
    wf = (field.shape[0] - 1) // 2
    fb = field[wf - w:wf + w + 1, wf - w:wf + w + 1]
    cp = np.einsum("jk,kxy->jxy", coin, psi)
    grow = int(fb.max())
    w2 = w + grow
    if w2 > wf:
        raise ValueError("jump field does not cover the grown window")
    m = 2 * w2 + 1
    off = w2 - w
    out = np.zeros((4, m, m), dtype=complex)
    for j in range(grow + 1):
        mask = fb == j
        if not mask.any():
            continue
        out[0, off + j:off + j + n, off:off + n][mask] += cp[0][mask]
        out[1, off - j:off - j + n, off:off + n][mask] += cp[1][mask]
        out[2, off:off + n, off + j:off + j + n][mask] += cp[2][mask]
        out[3, off:off + n, off - j:off - j + n][mask] += cp[3][mask]
    raw_norm = float((np.abs(out) ** 2).sum())
    if raw_norm <= 0.0:
        raise FloatingPointError("static step annihilated all amplitude")
    out /= np.sqrt(raw_norm)
    return WalkerState(out, state.t + 1), raw_norm


def evolve(state: WalkerState, coin: np.ndarray, jumps):
    """Yield the state after each of the T = len(jumps) steps."""
    for j in jumps:
        state = step(state, coin, int(j))
        yield state


def evolve_static(state: WalkerState, coin: np.ndarray, field: np.ndarray,
                  steps: int):
    """Yield (state, raw_norm) after each static-disorder step."""
    for _ in range(steps):
        state, raw = step_static(state, coin, field)
        yield state, raw


# ---------------------------------------------------------------------------
# memory-light simulation drivers

def distribution(state: WalkerState) -> stats.PositionDistribution:
    return stats.PositionDistribution(p=probabilities(state), t=state.t)


def simulate(coin: np.ndarray, phi: np.ndarray, jumps, dim: int = 2,
             snapshot_times=()):
    """Run a trajectory, recording moments per step and snapshots on demand.

    Returns (MomentSeries, {t: PositionDistribution}).  Only the sigma
    bookkeeping is kept per step, so memory stays at one state plus the
    requested snapshots.
    """
    wanted = set(int(t) for t in snapshot_times)
    state = new_state(phi, dim=dim)
    snaps: dict[int, stats.PositionDistribution] = {}
    if 0 in wanted:
        snaps[0] = distribution(state)
    dists = []
    for state in evolve(state, coin, jumps):
        d = distribution(state)
        dists.append(d)
        if state.t in wanted:
            snaps[state.t] = d
    series = stats.collect_series(dists)
    return series, snaps


def simulate_static(coin: np.ndarray, phi: np.ndarray, field: np.ndarray,
                    steps: int, snapshot_times=()):
    """Static-disorder trajectory; also returns the raw per-step norms."""
    wanted = set(int(t) for t in snapshot_times)
    state = new_state(phi, dim=2)
    snaps: dict[int, stats.PositionDistribution] = {}
    if 0 in wanted:
        snaps[0] = distribution(state)
    dists = []
    raw_norms = []
    for state, raw in evolve_static(state, coin, field, steps):
        raw_norms.append(raw)
        d = distribution(state)
        dists.append(d)
        if state.t in wanted:
            snaps[state.t] = d
    series = stats.collect_series(dists)
    return series, snaps, np.array(raw_norms)
