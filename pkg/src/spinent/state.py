"""Pure multi-qudit states, partial traces and basis-component bookkeeping.

Amplitudes are stored big-endian: site 1 is the most significant digit, so
``|abc>`` with dims ``(d1, d2, d3)`` lives at index ``a*d2*d3 + b*d3 + c``.
Sites are addressed 1-based throughout the public API.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from .errors import InvalidStateError, NormalizationWarning, SiteIndexError

ZERO_THRESHOLD = 1e-12
NORM_TOLERANCE = 1e-9
PURITY_TOLERANCE = 1e-9
MAX_AMPLITUDES = 10**6


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized amplitude vector over a multi-qudit computational basis.

    Unnormalized input is rescaled to unit norm; a
    :class:`~spinent.errors.NormalizationWarning` is issued when the input
    norm differed from 1 by more than ``1e-9``.

    Parameters
    ----------
    amplitudes : array_like
        Complex amplitudes, length ``prod(dims)``.
    dims : sequence of int
        Local dimension of each site, each ``>= 2``.
    """

    amplitudes: np.ndarray
    dims: tuple[int, ...]
    input_norm: float = field(init=False)

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if len(dims) < 1:
            raise InvalidStateError("a state needs at least one site")
        if any(d < 2 for d in dims):
            raise InvalidStateError(f"local dimensions must be >= 2, got {dims}")
        total = int(np.prod(dims))
        if total > MAX_AMPLITUDES:
            raise InvalidStateError(
                f"state has {total} amplitudes, more than the cap of {MAX_AMPLITUDES}"
            )
        amps = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amps.size != total:
            raise InvalidStateError(
                f"expected {total} amplitudes for dims {dims}, got {amps.size}"
            )
        if not np.all(np.isfinite(amps)):
            raise InvalidStateError("amplitudes must be finite")
        norm = float(np.linalg.norm(amps))
        if norm <= ZERO_THRESHOLD:
            raise InvalidStateError("zero vector is not a state")
        if abs(norm - 1.0) > NORM_TOLERANCE:
            warnings.warn(
                f"input norm {norm:.12g} rescaled to 1", NormalizationWarning, stacklevel=3
            )
        amps = amps / norm
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "input_norm", norm)

    @property
    def n_sites(self) -> int:
        return len(self.dims)

    @property
    def tensor(self) -> np.ndarray:
        """Amplitudes reshaped to one axis per site."""
        return self.amplitudes.reshape(self.dims)

    def is_uniform(self) -> bool:
        return len(set(self.dims)) == 1

    def __repr__(self):
        return f"PureState(dims={self.dims}, {render(self)!r})"


class BasisComponent(NamedTuple):
    """One nonzero term ``coefficient * |digits>`` of a state."""

    digits: tuple[int, ...]
    coefficient: complex


class ProductCheck(NamedTuple):
    """Per-site separable-from-rest flags and the overall verdict."""

    site_separable: tuple[bool, ...]
    fully_product: bool


def check_site(state: PureState, site: int) -> int:
    """Validate a 1-based site index and return the 0-based axis."""
    if isinstance(site, bool) or not isinstance(site, (int, np.integer)):
        raise SiteIndexError(f"site must be an integer, got {site!r}")
    if not 1 <= site <= state.n_sites:
        raise SiteIndexError(f"site {site} out of range 1..{state.n_sites}")
    return int(site) - 1


def basis_digits(index: int, dims: Sequence[int]) -> tuple[int, ...]:
    return tuple(int(k) for k in np.unravel_index(index, tuple(dims)))


def components(state: PureState) -> list[BasisComponent]:
    """All basis terms with ``|amplitude| > 1e-12``, ascending by basis index."""
    idx = np.flatnonzero(np.abs(state.amplitudes) > ZERO_THRESHOLD)
    return [
        BasisComponent(basis_digits(i, state.dims), complex(state.amplitudes[i]))
        for i in idx
    ]


def reduced_density(state: PureState, site: int) -> np.ndarray:
    """Reduced density matrix of one site (partial trace over all others)."""
    axis = check_site(state, site)
    d = state.dims[axis]
    m = np.moveaxis(state.tensor, axis, 0).reshape(d, -1)
    rho = m @ m.conj().T
    # exact Hermiticity; the product above is Hermitian only to rounding
    return 0.5 * (rho + rho.conj().T)


def purity(rho: np.ndarray) -> float:
    return float(np.real(np.trace(rho @ rho)))


def product_check(state: PureState) -> ProductCheck:
    """Flag sites whose reduced state is pure (``Tr rho^2 >= 1 - 1e-9``)."""
    flags = tuple(
        purity(reduced_density(state, i)) >= 1.0 - PURITY_TOLERANCE
        for i in range(1, state.n_sites + 1)
    )
    return ProductCheck(flags, all(flags))


def is_factorable_site(state: PureState, site: int) -> bool:
    """True when every basis component carries the same digit at ``site``."""
    axis = check_site(state, site)
    digits = {c.digits[axis] for c in components(state)}
    return len(digits) == 1


def tensor_product(*states: PureState) -> PureState:
    """Product state of the given states, sites concatenated in order."""
    amps = np.array([1.0 + 0j])
    dims: tuple[int, ...] = ()
    for s in states:
        amps = np.kron(amps, s.amplitudes)
        dims = dims + s.dims
    return PureState(amps, dims)


def permute_sites(state: PureState, order: Sequence[int]) -> PureState:
    """Reorder sites: new site ``k`` is old site ``order[k-1]`` (1-based)."""
    axes = [check_site(state, s) for s in order]
    if sorted(axes) != list(range(state.n_sites)):
        raise SiteIndexError(f"{list(order)} is not a permutation of the sites")
    t = np.transpose(state.tensor, axes)
    return PureState(t.reshape(-1), tuple(state.dims[a] for a in axes))


def random_state(dims: Sequence[int], rng: np.random.Generator | None = None) -> PureState:
    """Haar-random pure state (normalized complex Gaussian vector)."""
    rng = np.random.default_rng() if rng is None else rng
    n = int(np.prod(dims))
    z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return PureState(z / np.linalg.norm(z), tuple(dims))


def basis_state(digits: Sequence[int], dims: Sequence[int]) -> PureState:
    amps = np.zeros(int(np.prod(dims)), dtype=complex)
    amps[np.ravel_multi_index(tuple(digits), tuple(dims))] = 1.0
    return PureState(amps, tuple(dims))


def _format_complex(z: complex) -> str:
    re, im = z.real, z.imag
    if abs(im) <= ZERO_THRESHOLD:
        return repr(float(re))
    if abs(re) <= ZERO_THRESHOLD:
        return f"{float(im)!r}*i"
    return f"({float(re)!r} + {float(im)!r}*i)"


def render(state: PureState) -> str:
    """State expression that :func:`spinent.parsing.parse_state` reads back.

    Coefficients are written with full ``repr`` precision. Digits are
    concatenated, so this is only lossless for local dimensions <= 10.
    """
    terms = []
    for digits, coef in components(state):
        ket = "|" + "".join(str(k) for k in digits) + ">"
        terms.append(f"{_format_complex(coef)}*{ket}")
    return " + ".join(terms)
