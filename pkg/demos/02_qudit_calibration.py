# %% [markdown]
# # Qudits: calibrating the index with eta and alpha
#
# For local dimension `d` the spin observable has eigenvalues
# `d-1, d-3, ..., -(d-1)` and `E = (d-1) - gamma`. Each site gets an offset
# `eta` (mean of the distinct eigenvalues present on that site) and a gain
# `alpha` so that product states land at `gamma = d-1`.

# %%
import numpy as np

from spinent import entanglement, parse_state, site_profile, spin_direction_matrix
from spinent.spin import Direction

# %% [markdown]
# The d=3 and d=4 observables along a generic direction.

# %%
np.set_printoptions(precision=3, suppress=True)
print(spin_direction_matrix(3, Direction(0.4, 0.0)).matrix.real)
print(spin_direction_matrix(4, Direction(0.4, 0.0)).matrix.real)


# %%
def show(expr, dim=None):
    state = parse_state(expr, dim)
    r = entanglement(state)
    print(expr)
    for s in r.sites:
        p = s.profile
        print(f"  site {p.site}: eigenvalues {p.distinct_eigenvalues}  eta={p.eta:g}  "
              f"alpha={p.alpha if p.alpha is None else round(p.alpha, 6)}  max={s.max_expectation.value:.6f}")
    print(f"  gamma={r.gamma:.6f}  E={r.E:.6f}  warnings={list(r.warnings)}")


# %% [markdown]
# Two qutrit pairs with different eta/alpha but equal entanglement.

# %%
show("1/2|02> + sqrt(3)/2|20>")
show("1/2|01> + sqrt(3)/2|20>")

# %% [markdown]
# Qutrit GHZ is maximally entangled (`E = 2`); the second state repeats
# eigenvalue 2 on site 2, which is counted once in eta but twice in alpha.

# %%
show("1/sqrt(3)|00> + 1/sqrt(3)|11> + 1/sqrt(3)|22>")
show("1/sqrt(3)|00> + 1/sqrt(2)|11> + 1/sqrt(6)|20>")
print(site_profile(parse_state("1/sqrt(3)|00> + 1/sqrt(2)|11> + 1/sqrt(6)|20>"), 2))

# %% [markdown]
# Three d=4 pairs, all with `E = 6/5`.

# %%
for expr in ["1/sqrt(5)|01> + 2/sqrt(5)|10>", "1/sqrt(5)|03> + 2/sqrt(5)|30>", "1/sqrt(5)|12> + 2/sqrt(5)|21>"]:
    show(expr, 4)

# %% [markdown]
# The measure is not zero on every product state. Here site 1 is pinned
# to `|1>` and site 2 is an equal superposition, yet `E = 1 - sqrt(2)`.
# The report flags it instead of clamping.

# %%
show("1/sqrt(3)|10> + 1/sqrt(3)|11> + 1/sqrt(3)|12>")
