"""Why the sector constraint matters: the shift-register hard instance.

A cyclic shift of a random +-1 vector reveals one fresh, statistically
independent coordinate per step, so any causal predictor pays expected
squared loss >= 1 per round for d rounds, no matter how clever. Its
eigenvalues are the d-th roots of unity, i.e. the full circle: with
beta = pi there is no spectral cliff and nothing to compress.

Run:  python demos/05_memory_lower_bound.py
"""

import numpy as np

from sector_spectral import shift_register
from sector_spectral.experiments import _lower_bound_trial

d = 48
sr = shift_register(d, seed=3)
print("first 12 observations:", sr.observations(12).astype(int))
print("period check: y[t + d] == y[t] ->",
      bool(np.array_equal(sr.observations(2 * d)[:d], sr.observations(2 * d)[d:])))

trials = 100
losses = [_lower_bound_trial(seed, d, lam=1e-5) for seed in range(trials)]
print(f"\nforward-ridge learner on {trials} random registers of size d={d}:")
print(f"  mean cumulative loss over the first {d} rounds: {np.mean(losses):.2f}")
print(f"  information-theoretic floor:                    {d}")
print("\nevery learner is stuck at ~d: the first pass over the register is "
      "pure coin-flipping, which is exactly the Omega(d) barrier that a "
      "bounded sector angle removes")
