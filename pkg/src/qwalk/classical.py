"""Classical random walk baseline on the square lattice.

Closed-form clean probabilities, the Gaussian asymptotic used for
cross-checks, and the quarter-weighted iterative map for disordered
jumps.  A rational-arithmetic mode makes the small-t oracle comparisons
exact.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .stats import MomentSeries, PositionDistribution, collect_series


def crw_exact(t: int, x: int, y: int):
    """Clean-walk probability P_t(x, y) as an exact Fraction.

    The closed form (1/4^t) C(t, (t+x+y)/2) C(t, (t+x-y)/2) applies when
    x + y has the parity of t and |x| + |y| <= t; elsewhere zero.
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    if (x + y - t) % 2 != 0 or abs(x) + abs(y) > t:
        return Fraction(0)
    a = (t + x + y) // 2
    b = (t + x - y) // 2
    if not (0 <= a <= t and 0 <= b <= t):
        return Fraction(0)
    return Fraction(math.comb(t, a) * math.comb(t, b), 4 ** t)


def crw_asymptotic(t: int, x: int, y: int) -> float:
    """Gaussian approximant (2/(pi t)) exp(-(x^2+y^2)/t); validation only."""
    if t < 1:
        raise ValueError("t must be >= 1")
    return 2.0 / (math.pi * t) * math.exp(-(x * x + y * y) / t)


def point_mass(exact: bool = False) -> np.ndarray:
    value = Fraction(1) if exact else 1.0
    p = np.empty((1, 1), dtype=object if exact else float)
    p[0, 0] = value
    return p


def crw_disordered_step(p: np.ndarray, jump: int) -> np.ndarray:
    """One quarter-weighted jump step; grows the window, preserves the sum.

    Works elementwise, so it runs in double or Fraction (object) mode.
    """
    if jump < 0:
        raise ValueError("jump must be a nonnegative integer")
    j = int(jump)
    quarter = Fraction(1, 4) if p.dtype == object else 0.25
    if j == 0:
        return p.copy()
    n = p.shape[0]
    m = n + 2 * j
    out = np.zeros((m, m), dtype=p.dtype)
    if p.dtype == object:
        out[:] = Fraction(0)
    q = p * quarter
    out[2 * j:2 * j + n, j:j + n] += q
    out[0:n, j:j + n] += q
    out[j:j + n, 2 * j:2 * j + n] += q
    out[j:j + n, 0:n] += q
    return out


def crw_iterate(jumps, exact: bool = False):
    """Yield PositionDistribution after each jump of the iterative map."""
    p = point_mass(exact)
    t = 0
    for j in jumps:
        p = crw_disordered_step(p, int(j))
        t += 1
        yield PositionDistribution(p=p if exact else np.asarray(p, dtype=float),
                                   t=t)


def crw_sigma(jumps) -> MomentSeries:
    """Moment series of the iterative map under the given jump sequence."""
    return collect_series(crw_iterate(jumps, exact=False))


def crw_clean_sigma(steps: int) -> MomentSeries:
    """Clean-walk series (J identically 1)."""
    return crw_sigma(np.ones(steps, dtype=int))
