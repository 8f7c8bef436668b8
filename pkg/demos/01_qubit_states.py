# %% [markdown]
# # Entanglement of qubit states from maximal spin expectations
#
# Each party measures its own qubit along the direction that maximizes the
# expectation value. For a product state both can reach +1; entanglement
# pulls the reachable maximum toward zero. The separability index `gamma`
# averages these maxima and `E = 1 - gamma`.

# %%
import math

from spinent import Direction, entanglement, expectation_at, parse_state, spin_vector

# %% [markdown]
# A Bell state: every direction gives expectation 0 on either qubit.

# %%
bell = parse_state("1/sqrt(2)|01> + 1/sqrt(2)|10>")
for theta, phi in [(0, 0), (math.pi / 2, 0), (1.0, 2.0)]:
    print(f"<sigma_1>(theta={theta:.3f}, phi={phi:.3f}) = {expectation_at(bell, 1, Direction(theta, phi)):+.3f}")
print("E(Bell) =", entanglement(bell).E)

# %% [markdown]
# The plus-plus product state reaches +1 along x on both qubits.

# %%
pp = parse_state("1/2|00> + 1/2|01> + 1/2|10> + 1/2|11>")
report = entanglement(pp)
for s in report.sites:
    d = s.max_expectation.direction
    print(f"site {s.profile.site}: max = {s.max_expectation.value:.3f} at theta={d.theta:.3f}, phi={d.phi:.3f}")
print("gamma =", report.gamma, " E =", report.E)

# %% [markdown]
# `1/2|00> + sqrt(3)/2|11>`: the expectation on qubit 1 is `-cos(theta)/2`,
# so the best either party can do is 1/2 and `E = 1/2`.

# %%
ex1 = parse_state("1/2|00> + sqrt(3)/2|11>")
print("spin vector on site 1:", spin_vector(ex1, 1))
print("E =", round(entanglement(ex1).E, 12))

# %% [markdown]
# A three-qubit state: each site's maximum is 3/5, so `gamma = 3/5`.

# %%
ex2 = parse_state("1/sqrt(5)|011> + 2/sqrt(5)|100>")
r = entanglement(ex2)
print([round(s.max_expectation.value, 12) for s in r.sites], "E =", round(r.E, 12))

# %% [markdown]
# Sweeping the two-qubit family `cos t|00> + sin t|11>` traces
# `E = 1 - |cos^2 t - sin^2 t|`.

# %%
for t in [0, math.pi / 12, math.pi / 6, math.pi / 4]:
    s = parse_state(f"{math.cos(t)!r}|00> + {math.sin(t)!r}|11>")
    print(f"t = {t:.4f}  E = {entanglement(s).E:.6f}  closed form = {1 - abs(math.cos(2 * t)):.6f}")
