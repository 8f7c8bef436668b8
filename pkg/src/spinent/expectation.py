"""Single-site spin expectation values and their maximization over directions.

Because ``sigma_n = 2 n.J`` is linear in the unit vector ``n``, the
expectation on a site is ``n . v`` where ``v`` is the site's spin vector
``(<2Jx>, <2Jy>, <2Jz>)``. Its maximum over the sphere is therefore
``|v|``, attained along ``v / |v|``. :func:`max_expectation_grid` finds
the same maximum by brute-force search and serves as an oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .spin import TWO_PI, Direction, embed_at_site, spin_direction_matrix, spin_matrices
from .state import PureState, check_site, reduced_density

ZERO_VECTOR_TOLERANCE = 1e-12

Method = Literal["analytic", "grid"]


@dataclass(frozen=True)
class MaxExpectation:
    """Largest directional spin expectation on one site.

    ``direction`` is ``None`` when the maximum vanishes, since every
    direction then gives the same value.
    """

    value: float
    direction: Direction | None
    method: str


@dataclass(frozen=True)
class SampleResult:
    counts: dict[int, int]
    mean: float
    shots: int
    probabilities: dict[int, float]

    @property
    def std_error(self) -> float:
        """Standard error of the mean implied by the exact outcome distribution."""
        mu = sum(k * p for k, p in self.probabilities.items())
        var = sum(p * (k - mu) ** 2 for k, p in self.probabilities.items())
        return math.sqrt(var / self.shots)


def _site_rho(state: PureState, site: int) -> tuple[np.ndarray, int]:
    axis = check_site(state, site)
    return reduced_density(state, site), state.dims[axis]


def expectation_at(state: PureState, site: int, direction: Direction | tuple[float, float]) -> float:
    """``Tr(rho_site sigma_n)`` for the spin observable along ``direction``."""
    rho, d = _site_rho(state, site)
    sigma = spin_direction_matrix(d, direction).matrix
    return float(np.real(np.trace(rho @ sigma)))


def expectation_full(state: PureState, site: int, direction: Direction | tuple[float, float]) -> float:
    """Same quantity as :func:`expectation_at`, via the embedded full-system operator."""
    check_site(state, site)
    obs = spin_direction_matrix(state.dims[site - 1], direction)
    op = embed_at_site(obs, state.dims, site)
    psi = state.amplitudes
    return float(np.real(np.vdot(psi, op @ psi)))


def spin_vector(state: PureState, site: int) -> np.ndarray:
    """``(<2Jx>, <2Jy>, <2Jz>)`` on the reduced state of ``site``."""
    rho, d = _site_rho(state, site)
    return np.array([np.real(np.trace(rho @ s)) for s in spin_matrices(d)])


def max_expectation_analytic(state: PureState, site: int) -> MaxExpectation:
    v = spin_vector(state, site)
    r = float(np.linalg.norm(v))
    if r < ZERO_VECTOR_TOLERANCE:
        return MaxExpectation(0.0, None, "analytic")
    return MaxExpectation(r, Direction.from_vector(v), "analytic")


def _lattice_values(rho, d, thetas, phis) -> np.ndarray:
    """Expectation on every (theta, phi) lattice point, shape (len(thetas), len(phis))."""
    st, ct = np.sin(thetas)[:, None], np.cos(thetas)[:, None]
    cp, sp = np.cos(phis)[None, :], np.sin(phis)[None, :]
    n = np.stack(np.broadcast_arrays(st * cp, st * sp, ct), axis=-1)
    return _direction_values(rho, d, n)


def _direction_values(rho, d, n) -> np.ndarray:
    """Tr(rho sigma_n) for an array of unit vectors ``n`` (last axis = 3)."""
    basis = np.stack([s.reshape(-1) for s in spin_matrices(d)])
    # every sigma_n in the batch, flattened row-major: shape (..., d*d)
    sigmas = n.astype(complex) @ basis
    return np.real(sigmas @ rho.T.reshape(-1))


def _tangent_basis(n0: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    helper = np.array([1.0, 0.0, 0.0]) if abs(n0[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    e1 = np.cross(n0, helper)
    e1 /= np.linalg.norm(e1)
    return e1, np.cross(n0, e1)


def max_expectation_grid(
    state: PureState, site: int, coarse_steps: int = 64, refine_rounds: int = 8
) -> MaxExpectation:
    """Maximize the expectation by lattice search with window refinement.

    A ``coarse_steps x coarse_steps`` lattice covers ``theta in [0, pi]``
    and ``phi in [0, 2 pi)``; ties break toward the smallest
    ``(theta, phi)``. Each refinement round lays a ``coarse_steps`` square
    lattice on the tangent plane at the incumbent, projected back onto the
    sphere, with the window half-width halved every round. Working in the
    tangent plane keeps the zoom well-behaved at the poles, where ``phi``
    is degenerate.
    """
    if coarse_steps < 8:
        raise ValueError("coarse_steps must be >= 8")
    if refine_rounds < 0:
        raise ValueError("refine_rounds must be >= 0")
    rho, d = _site_rho(state, site)

    thetas = np.linspace(0.0, math.pi, coarse_steps)
    phis = np.arange(coarse_steps) * (TWO_PI / coarse_steps)
    vals = _lattice_values(rho, d, thetas, phis)
    a, b = np.unravel_index(np.argmax(vals), vals.shape)
    best = float(vals[a, b])
    n0 = Direction(thetas[a], phis[b]).unit_vector

    # two coarse theta spacings: covers the coarse lattice's covering radius
    half = 2.0 * math.pi / (coarse_steps - 1)
    offsets = np.linspace(-1.0, 1.0, coarse_steps)
    for _ in range(refine_rounds):
        e1, e2 = _tangent_basis(n0)
        u = half * offsets
        pts = n0 + u[:, None, None] * e1 + u[None, :, None] * e2
        pts /= np.linalg.norm(pts, axis=-1, keepdims=True)
        vals = _direction_values(rho, d, pts)
        a, b = np.unravel_index(np.argmax(vals), vals.shape)
        if vals[a, b] > best:
            best, n0 = float(vals[a, b]), pts[a, b]
        half /= 2.0

    if best < ZERO_VECTOR_TOLERANCE:
        return MaxExpectation(max(best, 0.0), None, "grid")
    return MaxExpectation(best, Direction.from_vector(n0), "grid")


def max_expectation(state: PureState, site: int, method: Method = "analytic", **grid_options) -> MaxExpectation:
    if method == "analytic":
        return max_expectation_analytic(state, site)
    if method == "grid":
        return max_expectation_grid(state, site, **grid_options)
    raise ValueError(f"unknown method {method!r}")


def find_eigen_direction(state: PureState) -> Direction:
    """Direction whose qubit spin observable has ``state`` as its +1 eigenvector."""
    if state.dims != (2,):
        raise ValueError(f"expected a single qubit, got dims {state.dims}")
    v = spin_vector(state, 1)
    # pure qubit: Bloch vector has unit length
    return Direction.from_vector(v)


def sample_measurements(
    state: PureState,
    site: int,
    direction: Direction | tuple[float, float],
    shots: int,
    seed: int,
) -> SampleResult:
    """Simulate ``shots`` projective measurements of ``sigma_n`` on one site.

    Outcome probabilities follow the Born rule on the reduced state; the
    draw is a single multinomial from ``numpy.random.default_rng(seed)``.
    """
    if shots < 1:
        raise ValueError("shots must be >= 1")
    rho, d = _site_rho(state, site)
    evals, evecs = np.linalg.eigh(spin_direction_matrix(d, direction).matrix)
    probs = np.real(np.einsum("ik,ij,jk->k", evecs.conj(), rho, evecs))
    probs = np.clip(probs, 0.0, None)
    probs /= probs.sum()
    # eigh returns ascending order; report outcomes as exact integers
    outcomes = [int(round(e)) for e in evals]
    rng = np.random.default_rng(seed)
    draws = rng.multinomial(shots, probs)
    counts = {k: int(n) for k, n in sorted(zip(outcomes, draws), reverse=True)}
    mean = sum(k * n for k, n in counts.items()) / shots
    return SampleResult(
        counts=counts,
        mean=float(mean),
        shots=int(shots),
        probabilities={k: float(p) for k, p in sorted(zip(outcomes, probs), reverse=True)},
    )
