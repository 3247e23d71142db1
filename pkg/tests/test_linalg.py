import numpy as np
import pytest

from mera_lab import linalg
from mera_lab.errors import ContractError, ShapeError
from mera_lab.gates import entangler_rotation, swap

from conftest import GROUND_PATTERN, SZ0_BLOCK

I2 = np.eye(2, dtype=complex)
I4 = np.eye(4, dtype=complex)


def eight_dim_entangler_block(theta: float) -> np.ndarray:
    """Hand-placed entries of the two-site rotation followed by an idle site."""
    c, s = np.cos(theta), np.sin(theta)
    m = np.zeros((8, 8), dtype=complex)
    for k in (0, 1, 6, 7):
        m[k, k] = 1.0
    m[2, 2] = c
    m[2, 4] = s
    m[3, 3] = c
    m[3, 5] = s
    m[4, 2] = -s
    m[4, 4] = c
    m[5, 3] = -s
    m[5, 5] = c
    return m


def test_kron_identities():
    assert np.array_equal(linalg.kron(I2, I2), I4)


def test_kron_gate_with_idle_site_matches_hand_blocks():
    theta = 0.37
    expected = eight_dim_entangler_block(theta)
    assert linalg.allclose(linalg.kron(entangler_rotation(theta), I2), expected, tol=0.0)


def test_kron_nested_gives_block_diagonal():
    theta = 0.37
    block = linalg.kron(entangler_rotation(theta), I2)
    full = linalg.kron(I2, block)
    expected = np.zeros((16, 16), dtype=complex)
    expected[:8, :8] = block
    expected[8:, 8:] = block
    assert np.array_equal(full, expected)


def test_matmul_identity_and_involution():
    s = swap()
    assert np.array_equal(linalg.matmul(I4, s), s)
    assert np.array_equal(linalg.matmul(s, s), I4)


def test_matmul_rotation_unitarity():
    u = entangler_rotation(0.3)
    assert linalg.allclose(linalg.matmul(u, linalg.adjoint(u)), I4, tol=1e-15)


def test_matmul_shape_mismatch():
    with pytest.raises(ShapeError):
        linalg.matmul(np.ones((2, 3)), np.ones((2, 3)))


def test_adjoint():
    assert np.array_equal(linalg.adjoint(I4), I4)
    assert np.array_equal(linalg.adjoint(swap()), swap())
    theta = 0.61
    assert linalg.allclose(linalg.adjoint(entangler_rotation(theta)), entangler_rotation(-theta), tol=0.0)


def test_eigh_diagonal():
    values, _ = linalg.eigh(np.diag([2.0, 1.0]).astype(complex))
    assert np.allclose(values, [1.0, 2.0])


def test_eigh_half_filling_block():
    # Independent oracle first: the stated eigenvector satisfies H v = -2 v.
    v = GROUND_PATTERN
    assert np.max(np.abs(SZ0_BLOCK @ v - (-2.0) * v)) == 0.0
    values, vectors = linalg.eigh(SZ0_BLOCK)
    assert abs(values[0] - (-2.0)) < 1e-12
    overlap = abs(np.vdot(vectors[:, 0], v / np.linalg.norm(v)))
    assert abs(overlap - 1.0) < 1e-12


def test_eigh_two_by_two_exchange():
    values, _ = linalg.eigh(np.array([[0.0, 1.0], [1.0, 0.0]]))
    assert np.allclose(values, [-1.0, 1.0])


def test_eigh_rejects_non_hermitian():
    with pytest.raises(ContractError):
        linalg.eigh(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_eigh_reconstruction_random_hermitian():
    rng = np.random.default_rng(11)
    for dim in (2, 3, 8, 16, 33, 64):
        raw = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        h = (raw + raw.conj().T) / 2.0
        values, vectors = linalg.eigh(h)
        recon = (vectors * values) @ vectors.conj().T
        assert linalg.frobenius_norm(recon - h) <= 1e-9 * linalg.frobenius_norm(h)
        ortho = vectors.conj().T @ vectors
        assert np.max(np.abs(ortho - np.eye(dim))) < 1e-10
        assert np.all(np.diff(values) >= -1e-12)


def test_svd_identity():
    _, singulars, _ = linalg.svd(I4)
    assert np.allclose(singulars, np.ones(4))


def test_svd_regrouped_entangler():
    # Regroup the two-site rotation's indices as (row site, col site) pairs
    # and check the factorization reassembles it.
    u = entangler_rotation(np.pi / 6)
    regrouped = u.reshape(2, 2, 2, 2).transpose(0, 2, 1, 3).reshape(4, 4)
    left, singulars, right = linalg.svd(regrouped)
    recon = (left * singulars) @ right.conj().T
    assert np.max(np.abs(recon - regrouped)) < 1e-13
    assert np.all(singulars >= -1e-15)
    assert np.all(np.diff(singulars) <= 1e-15)


def test_svd_rank_one():
    a = np.array([1.0, 1j]) / np.sqrt(2)
    b = np.array([0.0, 1.0], dtype=complex)
    _, singulars, _ = linalg.svd(np.outer(a, b.conj()))
    assert abs(singulars[0] - 1.0) < 1e-14
    assert np.all(np.abs(singulars[1:]) < 1e-14)


def test_svd_reconstruction_random():
    rng = np.random.default_rng(12)
    for _ in range(100):
        for dim in (4, 8):
            m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
            u, s, v = linalg.svd(m)
            assert np.max(np.abs((u * s) @ v.conj().T - m)) < 1e-11


def test_frobenius_norm():
    assert linalg.frobenius_norm(np.zeros((4, 4))) == 0.0
    assert abs(linalg.frobenius_norm(I4) - 2.0) < 1e-15


def test_frobenius_norm_layer_exchange_commutator():
    from mera_lab.gates import embed, swap_layer

    theta = 0.4
    inner = embed(entangler_rotation(theta), 2, 4)
    swaps = swap_layer(4)
    outer = swaps @ inner @ swaps
    assert linalg.frobenius_norm(inner @ outer - outer @ inner) < 1e-13


def test_kron_associativity_exact_on_integers():
    a = np.array([[1, 2], [3, 4]], dtype=complex)
    b = np.array([[0, 1], [1, 0]], dtype=complex)
    c = np.array([[2, 0], [0, 5]], dtype=complex)
    assert np.array_equal(linalg.kron(linalg.kron(a, b), c), linalg.kron(a, linalg.kron(b, c)))


def test_kron_associativity_random():
    # regrouping the scalar triple products costs at most a few ulp
    rng = np.random.default_rng(13)
    a, b, c = (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)) for _ in range(3))
    assert linalg.allclose(linalg.kron(linalg.kron(a, b), c), linalg.kron(a, linalg.kron(b, c)), tol=1e-14)


def test_mixed_product_property():
    rng = np.random.default_rng(14)
    a, b, c, d = (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)) for _ in range(4))
    lhs = linalg.kron(a, b) @ linalg.kron(c, d)
    rhs = linalg.kron(a @ c, b @ d)
    assert np.max(np.abs(lhs - rhs)) < 1e-13


def test_allclose_tolerance():
    a = np.zeros((2, 2))
    b = np.full((2, 2), 1e-13)
    assert linalg.allclose(a, b)
    assert not linalg.allclose(a, b, tol=1e-14)
    assert not linalg.allclose(a, np.zeros((3, 3)))
