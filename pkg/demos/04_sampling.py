# %% [markdown]
# # Simulated Stern-Gerlach runs
#
# Sampling outcomes from the Born rule on a site's reduced state recovers
# the expectation values used by the measure.

# %%
import math

from spinent import Direction, expectation_at, max_expectation_analytic, parse_state, sample_measurements

state = parse_state("1/2|00> + sqrt(3)/2|11>")

# %% [markdown]
# Along `theta = pi` the first qubit reads +1 with probability 3/4.

# %%
d = Direction(math.pi, 0)
for shots in (100, 10_000, 1_000_000):
    r = sample_measurements(state, 1, d, shots, seed=1)
    print(f"shots={shots:>8}  counts={r.counts}  mean={r.mean:.4f}  exact={expectation_at(state, 1, d):.4f}")

# %% [markdown]
# Measuring along the optimal direction found analytically.

# %%
best = max_expectation_analytic(state, 2)
r = sample_measurements(state, 2, best.direction, 100_000, seed=7)
print(f"max <sigma_2> = {best.value:.4f}, sampled mean {r.mean:.4f} +/- {r.std_error:.4f}")

# %% [markdown]
# A qutrit GHZ site gives mean 0 in every direction.

# %%
ghz = parse_state("1/sqrt(3)|00> + 1/sqrt(3)|11> + 1/sqrt(3)|22>")
r = sample_measurements(ghz, 1, Direction(1.0, 2.0), 100_000, seed=3)
print(r.counts, f"mean={r.mean:.4f} +/- {r.std_error:.4f}")
