"""Separability index and the spin-expectation entanglement measure.

For a state of ``N`` sites with common local dimension ``d`` and
``lambda_max = d - 1``::

    gamma = (1/N) * sum_i alpha_i * |max<sigma_i> - eta_i|
    E     = lambda_max - gamma

``eta_i`` is the mean of the *distinct* eigenvalues ``d-1-2k`` carried by
site ``i`` across the state's basis components, and
``alpha_i = l * lambda_max / sum_j |lambda_ij - eta_i|`` sums over *all*
``l`` components. A site whose digit never changes across components is
factored out of the state and contributes ``lambda_max`` directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NumericError, UnsupportedStateError
from .expectation import MaxExpectation, Method, max_expectation
from .spin import eigenvalue_of_digit
from .state import PureState, check_site, components, product_check

E_TOLERANCE = 1e-9
SEPARABLE_NONZERO_E = "separable-nonzero-E"
NEGATIVE_E = "negative-E"


@dataclass(frozen=True)
class SiteProfile:
    """Eigenvalue bookkeeping for one site.

    ``alpha`` is ``None`` and ``eta`` is 0 for factorable sites.
    """

    site: int
    l: int
    distinct_eigenvalues: tuple[int, ...]
    eta: float
    alpha: float | None
    factorable: bool


@dataclass(frozen=True)
class SiteResult:
    profile: SiteProfile
    max_expectation: MaxExpectation
    term: float


@dataclass(frozen=True)
class MeasureReport:
    dims: tuple[int, ...]
    gamma: float
    lambda_max: int
    E: float
    sites: tuple[SiteResult, ...]
    method: str
    warnings: tuple[str, ...] = field(default=())


def _uniform_dim(state: PureState) -> int:
    if not state.is_uniform():
        raise UnsupportedStateError(
            f"the measure needs one local dimension for all sites, got {state.dims}"
        )
    return state.dims[0]


def site_profile(state: PureState, site: int) -> SiteProfile:
    d = _uniform_dim(state)
    axis = check_site(state, site)
    comps = components(state)
    lams = [eigenvalue_of_digit(d, c.digits[axis]) for c in comps]
    distinct = tuple(sorted(set(lams), reverse=True))
    if len(distinct) == 1:
        return SiteProfile(site, len(comps), distinct, 0.0, None, True)

    # eta over distinct eigenvalues, alpha's denominator over every component
    eta = abs(sum(distinct)) / len(distinct)
    spread = sum(abs(lam - eta) for lam in lams)
    if spread == 0:
        raise NumericError(f"alpha is undefined on site {site}: all eigenvalues equal eta")
    alpha = len(comps) * (d - 1) / spread
    return SiteProfile(site, len(comps), distinct, eta, alpha, False)


def _site_results(state: PureState, method: Method, **grid_options) -> tuple[SiteResult, ...]:
    lam_max = _uniform_dim(state) - 1
    results = []
    for site in range(1, state.n_sites + 1):
        prof = site_profile(state, site)
        mx = max_expectation(state, site, method, **grid_options)
        if prof.factorable:
            term = float(lam_max)
        else:
            term = prof.alpha * abs(mx.value - prof.eta)
        results.append(SiteResult(prof, mx, term))
    return tuple(results)


def gamma(state: PureState, method: Method = "analytic", **grid_options) -> tuple[float, tuple[SiteResult, ...]]:
    """Separability index and the per-site details it was built from."""
    if state.n_sites < 2:
        raise UnsupportedStateError("the measure needs N >= 2 sites")
    sites = _site_results(state, method, **grid_options)
    return sum(s.term for s in sites) / state.n_sites, sites


def qubit_gamma(state: PureState) -> float:
    """Uncalibrated index: mean of the per-site maximal expectations.

    This is the plain multi-qubit form; for qubits with both levels present
    on every site it coincides with :func:`gamma`.
    """
    return sum(max_expectation(state, i).value for i in range(1, state.n_sites + 1)) / state.n_sites


def entanglement(state: PureState, method: Method = "analytic", **grid_options) -> MeasureReport:
    """Entanglement ``E = (d - 1) - gamma`` with per-site details.

    ``E`` is not clamped. The report carries ``"separable-nonzero-E"`` when
    the state is a product state yet ``|E| > 1e-9``, and ``"negative-E"``
    when ``E < -1e-9``.
    """
    g, sites = gamma(state, method, **grid_options)
    lam_max = state.dims[0] - 1
    e = lam_max - g
    warnings = []
    if abs(e) > E_TOLERANCE and product_check(state).fully_product:
        warnings.append(SEPARABLE_NONZERO_E)
    if e < -E_TOLERANCE:
        warnings.append(NEGATIVE_E)
    return MeasureReport(
        dims=state.dims,
        gamma=g,
        lambda_max=lam_max,
        E=e,
        sites=sites,
        method=method,
        warnings=tuple(warnings),
    )
