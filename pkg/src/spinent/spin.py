"""Direction-parameterized spin observables for arbitrary local dimension.

For local dimension ``d`` the observable along ``n(theta, phi)`` is
``sigma_n = 2 n.J`` with ``J`` the spin-``(d-1)/2`` angular momentum
matrices. Basis level ``k`` is the ``J_z`` eigenstate with ``m = j - k``,
so ``sigma_n`` at ``theta = 0`` is ``diag(d-1, d-3, ..., -(d-1))``. For
``d = 2`` this is the Pauli combination
``sx sin(t)cos(p) + sy sin(t)sin(p) + sz cos(t)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import InvalidStateError, SiteIndexError

TWO_PI = 2.0 * math.pi
# dense embedded operators are (prod dims)^2 complex entries
MAX_EMBED_DIM = 2048
_ANGLE_SLACK = 1e-12


@dataclass(frozen=True)
class Direction:
    """Polar angle ``theta`` in ``[0, pi]`` and azimuth ``phi`` in ``[0, 2 pi)``."""

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        theta = float(self.theta)
        if not (-_ANGLE_SLACK <= theta <= math.pi + _ANGLE_SLACK):
            raise ValueError(f"theta must lie in [0, pi], got {theta}")
        theta = min(max(theta, 0.0), math.pi)
        phi = float(self.phi) % TWO_PI
        if phi >= TWO_PI:  # -tiny % 2pi rounds up to 2pi
            phi = 0.0
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)

    @property
    def unit_vector(self) -> np.ndarray:
        st = math.sin(self.theta)
        return np.array([st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)])

    @classmethod
    def from_vector(cls, v) -> "Direction":
        """Direction of a nonzero 3-vector."""
        x, y, z = (float(c) for c in v)
        r = math.sqrt(x * x + y * y + z * z)
        if r == 0.0:
            raise ValueError("zero vector has no direction")
        theta = math.acos(max(-1.0, min(1.0, z / r)))
        return cls(theta, math.atan2(y, x))


@dataclass(frozen=True, eq=False)
class SpinObservable:
    dim: int
    direction: Direction
    matrix: np.ndarray


def _check_dim(d) -> int:
    if isinstance(d, bool) or int(d) != d or d < 2:
        raise ValueError(f"local dimension must be an integer >= 2, got {d!r}")
    return int(d)


@lru_cache(maxsize=None)
def _spin_components(d: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    j = (d - 1) / 2.0
    m = j - np.arange(d)
    # <m+1|J+|m> sits one above the diagonal with descending m
    ladder = np.sqrt(j * (j + 1.0) - m[1:] * (m[1:] + 1.0))
    jplus = np.diag(ladder.astype(complex), 1)
    jminus = jplus.conj().T
    sx = jplus + jminus
    sy = -1j * (jplus - jminus)
    sz = np.diag(2.0 * m).astype(complex)
    for a in (sx, sy, sz):
        a.setflags(write=False)
    return sx, sy, sz


def spin_matrices(d: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``(2Jx, 2Jy, 2Jz)`` for local dimension ``d`` (read-only arrays)."""
    return _spin_components(_check_dim(d))


def spin_direction_matrix(d: int, direction: Direction | tuple[float, float]) -> SpinObservable:
    """Spin observable ``2 n.J`` of dimension ``d`` along ``direction``.

    For ``d = 3`` and ``d = 4`` this is entry-for-entry the familiar
    matrix with ``(d-1) cos(theta)`` in the top-left corner and
    ``sqrt(d-1) e^{-i phi} sin(theta)`` next to it.
    """
    d = _check_dim(d)
    if not isinstance(direction, Direction):
        direction = Direction(*direction)
    nx, ny, nz = direction.unit_vector
    sx, sy, sz = _spin_components(d)
    return SpinObservable(d, direction, nx * sx + ny * sy + nz * sz)


def eigenvalue_of_digit(d: int, k: int) -> int:
    """Eigenvalue ``d - 1 - 2k`` of ``2Jz`` on basis level ``k``."""
    d = _check_dim(d)
    if not 0 <= k < d:
        raise ValueError(f"digit {k} out of range for dimension {d}")
    return d - 1 - 2 * int(k)


def embed_at_site(obs: SpinObservable | np.ndarray, dims: Sequence[int], site: int) -> np.ndarray:
    """Kronecker-embed a single-site operator at 1-based ``site``.

    Produces ``I (x) ... (x) obs (x) ... (x) I`` in the same big-endian
    ordering as :class:`~spinent.state.PureState`.
    """
    dims = tuple(int(d) for d in dims)
    matrix = obs.matrix if isinstance(obs, SpinObservable) else np.asarray(obs)
    if not 1 <= site <= len(dims):
        raise SiteIndexError(f"site {site} out of range 1..{len(dims)}")
    if matrix.shape != (dims[site - 1], dims[site - 1]):
        raise ValueError(
            f"operator of shape {matrix.shape} does not match site dimension {dims[site - 1]}"
        )
    total = math.prod(dims)
    if total > MAX_EMBED_DIM:
        raise InvalidStateError(f"system dimension {total} exceeds the embedding cap of {MAX_EMBED_DIM}")
    left = math.prod(dims[: site - 1])
    right = math.prod(dims[site:])
    return np.kron(np.kron(np.eye(left), matrix), np.eye(right))
