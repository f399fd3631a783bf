import numpy as np
import pytest
import scipy.linalg

from clock_visibility.errors import StructuralError
from clock_visibility.numerics import evolution_operator, hermitian_eig, inner_product


def random_hermitian(rng, dim):
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return a + a.conj().T


def test_eigh_diagonal_matrix_sorted():
    h = np.diag([3.0, -1.0, 2.0])
    spec = hermitian_eig(h)
    assert np.allclose(spec.eigenvalues, [-1.0, 2.0, 3.0])
    # columns are permuted unit vectors with positive phase
    assert np.allclose(np.abs(spec.eigenvectors), np.eye(3)[:, [1, 2, 0]])
    assert np.all(spec.eigenvectors.real.max(axis=0) > 0.99)


def test_eigh_reconstructs_matrix():
    rng = np.random.default_rng(7)
    for dim in (2, 3, 5, 8, 12):
        h = random_hermitian(rng, dim)
        spec = hermitian_eig(h)
        rebuilt = (spec.eigenvectors * spec.eigenvalues) @ spec.eigenvectors.conj().T
        assert np.max(np.abs(rebuilt - h)) < 1e-11 * max(1, np.max(np.abs(h)))


def test_eigh_orthonormal_columns():
    rng = np.random.default_rng(8)
    h = random_hermitian(rng, 9)
    spec = hermitian_eig(h)
    gram = spec.eigenvectors.conj().T @ spec.eigenvectors
    assert np.max(np.abs(gram - np.eye(9))) < 1e-12


def test_eigh_ascending_order():
    rng = np.random.default_rng(9)
    h = random_hermitian(rng, 11)
    w = hermitian_eig(h).eigenvalues
    assert np.all(np.diff(w) >= 0)


def test_eigh_phase_convention():
    rng = np.random.default_rng(10)
    h = random_hermitian(rng, 6)
    v = hermitian_eig(h).eigenvectors
    for k in range(6):
        col = v[:, k]
        first = col[np.flatnonzero(np.abs(col) > 1e-9)[0]]
        assert abs(first.imag) < 1e-12
        assert first.real > 0


def test_eigh_deterministic():
    rng = np.random.default_rng(11)
    h = random_hermitian(rng, 7)
    a = hermitian_eig(h)
    b = hermitian_eig(h.copy())
    assert np.array_equal(a.eigenvalues, b.eigenvalues)
    assert np.array_equal(a.eigenvectors, b.eigenvectors)


def test_eigh_degenerate_deterministic():
    # twofold degenerate subspace: ordering must still be reproducible
    h = np.diag([1.0, 1.0, 2.0]).astype(complex)
    a = hermitian_eig(h)
    b = hermitian_eig(h)
    assert np.array_equal(a.eigenvectors, b.eigenvectors)
    assert np.allclose(a.eigenvalues, [1.0, 1.0, 2.0])


def test_eigh_rejects_non_hermitian():
    with pytest.raises(StructuralError):
        hermitian_eig(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_eigh_rejects_non_square():
    with pytest.raises(StructuralError):
        hermitian_eig(np.zeros((2, 3)))


def test_eigh_rejects_non_finite():
    h = np.array([[np.nan, 0.0], [0.0, 1.0]])
    with pytest.raises(StructuralError):
        hermitian_eig(h)


def test_evolution_identity_at_t_zero():
    rng = np.random.default_rng(12)
    h = random_hermitian(rng, 5)
    u = evolution_operator(h, 0.0)
    assert np.max(np.abs(u - np.eye(5))) < 1e-12


def test_evolution_diagonal_phases():
    h = np.diag([1.0, 2.0, -0.5])
    u = evolution_operator(h, 0.7)
    expected = np.diag(np.exp(-1j * np.array([1.0, 2.0, -0.5]) * 0.7))
    assert np.max(np.abs(u - expected)) < 1e-14


def test_evolution_unitary():
    rng = np.random.default_rng(13)
    for dim in (2, 4, 8):
        h = random_hermitian(rng, dim)
        for t in (0.1, 1.0, 17.3, -2.2):
            u = evolution_operator(h, t)
            assert np.max(np.abs(u.conj().T @ u - np.eye(dim))) < 1e-12


def test_evolution_composes():
    rng = np.random.default_rng(14)
    h = random_hermitian(rng, 6)
    u = evolution_operator(h, 0.4) @ evolution_operator(h, 1.1)
    assert np.max(np.abs(u - evolution_operator(h, 1.5))) < 1e-12


def test_evolution_matches_scipy_expm():
    # independent route: Pade-approximant matrix exponential
    rng = np.random.default_rng(15)
    for dim in (2, 5, 9):
        h = random_hermitian(rng, dim)
        t = rng.uniform(0.0, 3.0)
        direct = scipy.linalg.expm(-1j * h * t)
        assert np.max(np.abs(evolution_operator(h, t) - direct)) < 1e-10


def test_evolution_rejects_bad_time():
    h = np.eye(2)
    with pytest.raises(StructuralError):
        evolution_operator(h, float("inf"))
    with pytest.raises(StructuralError):
        evolution_operator(h, 1.0 + 2.0j)


def test_inner_product_conjugates_first_argument():
    a = np.array([1.0j, 0.0])
    b = np.array([1.0, 0.0])
    assert inner_product(a, b) == pytest.approx(-1.0j)
    assert inner_product(b, a) == pytest.approx(1.0j)


def test_inner_product_orthogonal():
    assert inner_product([1.0, 0.0], [0.0, 1.0]) == 0.0


def test_inner_product_dim_mismatch():
    with pytest.raises(StructuralError):
        inner_product([1.0, 0.0], [1.0, 0.0, 0.0])


def test_inner_product_norm_preserved_under_evolution():
    rng = np.random.default_rng(16)
    h = random_hermitian(rng, 5)
    v = rng.normal(size=5) + 1j * rng.normal(size=5)
    v /= np.linalg.norm(v)
    w = evolution_operator(h, 2.31) @ v
    assert inner_product(w, w).real == pytest.approx(1.0, abs=1e-12)
