"""Disorder-averaged scaling: the headline sub-ballistic exponents.

Averages sigma(t) over dynamic-disorder realizations for each coin with
unit-mean Poisson jumps and fits alpha on t in [18, 50].  Uses a small
realization floor so the demo finishes in ~30 s; the acceptance tests
run the full protocol (>= 200 realizations).
"""

import numpy as np

import qwalk
from qwalk import disorder

SEED = 12345
STEPS = 50
MIN_N = 50


def ensemble(coin_name, spec):
    coin = qwalk.coin_operator(coin_name)
    phi = qwalk.initial_coin_state(coin_name)

    def run(i):
        rng = disorder.substream(SEED, i)
        jumps = disorder.sample_jumps(spec, STEPS, rng)
        series, _ = qwalk.simulate(coin, phi, jumps)
        return series

    return qwalk.ensemble_average(run, steps=STEPS, master_seed=SEED,
                                  min_realizations=MIN_N)


def main():
    spec = qwalk.DisorderSpec(kind="poisson", params={"lambda": 1.0})
    print(f"{'coin':<10} {'alpha':>8} {'ci95':>8} {'n':>6} {'converged':>10}")
    for name in ("grover", "fourier", "hadamard"):
        res = ensemble(name, spec)
        print(f"{name:<10} {res.fit.alpha:>8.4f} {res.fit.ci95:>8.4f} "
              f"{res.n_realizations:>6} {str(res.converged):>10}")
    print("\nall sub-ballistic (alpha < 1) yet super-diffusive "
          "(alpha > 1/2); grover spreads fastest")

    # the convergence history shows the protocol settling
    res = ensemble("grover", spec)
    hist = ", ".join(f"n={n}: {a:.3f}" for n, a in res.history)
    print(f"\ngrover fit history: {hist}")


if __name__ == "__main__":
    main()
