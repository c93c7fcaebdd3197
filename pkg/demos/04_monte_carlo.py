"""Seeded Monte Carlo estimates and their reproducibility guarantees.

Each trial draws from its own substream keyed by (seed, trial index) and the
aggregation is an integer sum, so the stats are a pure function of
(target, trials, seed): reruns and different worker counts cannot change them.
"""

import numpy as np

from bellrsp import SQRT_HALF, canonicalize_target, exact_analyze, monte_carlo

general = canonicalize_target(0.6, 0.8j, 2)
equatorial = canonicalize_target(SQRT_HALF, SQRT_HALF * np.exp(0.5j), 4)

trials, seed = 50_000, 2026

for name, target in (("general", general), ("equatorial", equatorial)):
    exact = exact_analyze(target)
    stats = monte_carlo(target, trials, seed)
    sigma = 0.5 / np.sqrt(trials)
    print(f"{name} target, {trials} trials, seed {seed}")
    print(f"  success_rate {stats.success_rate:.5f}   "
          f"(exact {exact.p_success:.1f}, sampling sigma ~ {sigma:.5f})")
    print(f"  mean_bits    {stats.mean_bits:.5f}   "
          f"(exact {exact.expected_bits:.1f})\n")

print("Reruns with the same seed are identical:")
again = monte_carlo(general, trials, seed)
print(f"  {monte_carlo(general, trials, seed) == again}")

print("Worker count does not change the result:")
serial = monte_carlo(general, 10_000, seed=7, workers=1)
parallel = monte_carlo(general, 10_000, seed=7, workers=4)
print(f"  1 worker == 4 workers: {serial == parallel}")
