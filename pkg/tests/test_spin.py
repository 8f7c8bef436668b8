import math

import numpy as np
import pytest

from spinent import Direction, eigenvalue_of_digit, embed_at_site, spin_direction_matrix
from spinent.errors import InvalidStateError, SiteIndexError

import oracles

SPOT = (math.pi / 3, math.pi / 5)


def test_direction_normalizes_phi():
    assert Direction(0.3, -0.5).phi == pytest.approx(2 * math.pi - 0.5)
    assert Direction(0.3, 2 * math.pi).phi == 0.0
    with pytest.raises(ValueError):
        Direction(4.0, 0.0)


def test_direction_round_trip():
    d = Direction(1.1, 4.0)
    back = Direction.from_vector(3.5 * d.unit_vector)
    assert back.theta == pytest.approx(1.1) and back.phi == pytest.approx(4.0)


def test_qutrit_entries_generic_direction():
    theta, phi = 0.7, 1.9
    m = spin_direction_matrix(3, Direction(theta, phi)).matrix
    assert m[0, 0] == pytest.approx(2 * math.cos(theta))
    assert m[0, 1] == pytest.approx(math.sqrt(2) * np.exp(-1j * phi) * math.sin(theta))
    assert m[2, 2] == pytest.approx(-2 * math.cos(theta))


def test_ququart_entries_generic_direction():
    theta, phi = 0.7, 1.9
    m = spin_direction_matrix(4, Direction(theta, phi)).matrix
    assert m[1, 2] == pytest.approx(2 * np.exp(-1j * phi) * math.sin(theta))
    assert m[0, 0] == pytest.approx(3 * math.cos(theta))


def test_pauli_x():
    m = spin_direction_matrix(2, Direction(math.pi / 2, 0)).matrix
    np.testing.assert_allclose(m, [[0, 1], [1, 0]], atol=1e-15)


@pytest.mark.parametrize(
    "d, oracle",
    [(2, oracles.pauli_direction), (3, oracles.qutrit_direction), (4, oracles.ququart_direction)],
)
@pytest.mark.parametrize("angles", [SPOT, (0.0, 0.0), (math.pi, 1.0), (2.2, 5.9)])
def test_matches_written_out_matrices(d, oracle, angles):
    m = spin_direction_matrix(d, Direction(*angles)).matrix
    np.testing.assert_allclose(m, oracle(*angles), atol=1e-12)


def test_rejects_small_dimension():
    with pytest.raises(ValueError):
        spin_direction_matrix(1, Direction(0, 0))


@pytest.mark.parametrize("d, k, lam", [(3, 0, 2), (4, 1, 1), (2, 1, -1), (5, 2, 0)])
def test_eigenvalue_of_digit(d, k, lam):
    assert eigenvalue_of_digit(d, k) == lam


def test_eigenvalue_of_digit_range():
    with pytest.raises(ValueError):
        eigenvalue_of_digit(3, 3)


@pytest.mark.parametrize("d", range(2, 9))
def test_eigenvalue_matches_diagonal(d):
    m = spin_direction_matrix(d, Direction(0, 0)).matrix
    assert np.count_nonzero(m - np.diag(np.diag(m))) == 0
    for k in range(d):
        assert m[k, k] == eigenvalue_of_digit(d, k)


def test_spectrum_and_hermiticity(rng):
    for _ in range(2000):
        d = int(rng.integers(2, 7))
        m = spin_direction_matrix(d, Direction(rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi))).matrix
        assert np.max(np.abs(m - m.conj().T)) <= 1e-12
        np.testing.assert_allclose(np.linalg.eigvalsh(m), np.arange(-(d - 1), d, 2), atol=1e-9)


@pytest.mark.parametrize("d", range(2, 7))
def test_direction_linearity(d, rng):
    x = spin_direction_matrix(d, Direction(math.pi / 2, 0)).matrix
    y = spin_direction_matrix(d, Direction(math.pi / 2, math.pi / 2)).matrix
    z = spin_direction_matrix(d, Direction(0, 0)).matrix
    for _ in range(20):
        t, p = rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi)
        m = spin_direction_matrix(d, Direction(t, p)).matrix
        combo = math.sin(t) * math.cos(p) * x + math.sin(t) * math.sin(p) * y + math.cos(t) * z
        assert np.max(np.abs(m - combo)) <= 1e-12


def test_embed_two_qubits_matches_written_out():
    obs = spin_direction_matrix(2, Direction(*SPOT))
    np.testing.assert_allclose(embed_at_site(obs, (2, 2), 1), oracles.two_qubit_site1(*SPOT), atol=1e-12)
    np.testing.assert_allclose(embed_at_site(obs, (2, 2), 2), oracles.two_qubit_site2(*SPOT), atol=1e-12)


@pytest.mark.parametrize("site", [1, 2, 3])
def test_embed_three_qubits_matches_pattern(site):
    obs = spin_direction_matrix(2, Direction(*SPOT))
    np.testing.assert_allclose(
        embed_at_site(obs, (2, 2, 2), site), oracles.three_qubit_site(site, *SPOT), atol=1e-12
    )


def test_embed_single_site_identity_case():
    obs = spin_direction_matrix(2, Direction(0, 0))
    np.testing.assert_array_equal(embed_at_site(obs, (2,), 1), np.diag([1, -1]))


def test_embed_commutes_across_sites(rng):
    dims = (2, 3, 4)
    mats = [
        embed_at_site(spin_direction_matrix(d, Direction(rng.uniform(0, math.pi), rng.uniform(0, 6))), dims, i + 1)
        for i, d in enumerate(dims)
    ]
    for i in range(3):
        for j in range(i + 1, 3):
            assert np.max(np.abs(mats[i] @ mats[j] - mats[j] @ mats[i])) <= 1e-12


def test_embed_errors():
    obs = spin_direction_matrix(3, Direction(0, 0))
    with pytest.raises(ValueError):
        embed_at_site(obs, (2, 2), 1)
    with pytest.raises(SiteIndexError):
        embed_at_site(obs, (3, 3), 3)
    with pytest.raises(InvalidStateError):
        embed_at_site(obs, (3,) * 8, 1)
