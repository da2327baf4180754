import numpy as np
import pytest

from lagschottky import kernels, numkit


def test_sym_eig_identity():
    w, V = numkit.sym_eig(np.eye(3))
    assert np.allclose(w, [1.0, 1.0, 1.0])
    assert np.allclose(V.T @ V, np.eye(3), atol=1e-10)


def test_sym_eig_diagonal():
    w, _ = numkit.sym_eig(np.diag([2.0, -3.0]))
    assert np.allclose(w, [-3.0, 2.0])


def test_sym_eig_random_residual():
    rng = np.random.default_rng(0)
    S = numkit.symmetrize(rng.normal(size=(4, 4)))
    w, V = numkit.sym_eig(S)
    norm = np.linalg.norm(S, 2)
    for i in range(4):
        assert np.linalg.norm(S @ V[:, i] - w[i] * V[:, i]) <= 1e-10 * (1 + norm)
    assert np.max(np.abs(V.T @ V - np.eye(4))) <= 1e-10


def test_sym_eig_residual_bound_many_sizes():
    # 1000 random symmetric matrices, n <= 8
    rng = np.random.default_rng(1)
    for trial in range(1000):
        n = int(rng.integers(1, 9))
        S = numkit.symmetrize(rng.normal(size=(n, n)) * rng.choice([0.01, 1.0, 100.0]))
        w, V = numkit.sym_eig(S)
        norm = max(np.abs(w)) if n else 0.0
        resid = np.max(np.abs(S @ V - V @ np.diag(w)))
        assert resid <= 1e-10 * (1 + norm)
        assert np.max(np.abs(V.T @ V - np.eye(n))) <= 1e-10
        assert np.all(np.diff(w) >= -1e-12 * (1 + norm))


def test_sym_eig_rejects_nonfinite():
    with pytest.raises(ValueError):
        numkit.sym_eig(np.array([[np.nan, 0.0], [0.0, 1.0]]))


def test_signature_examples():
    assert numkit.signature(np.diag([1.0, -1.0])) == numkit.Signature(1, 0, 1)
    assert numkit.signature(np.diag([1.0, -1.0])).k == 0
    assert numkit.signature(np.diag([5.0, 3.0, -2.0])) == numkit.Signature(2, 0, 1)
    assert numkit.signature(np.diag([5.0, 3.0, -2.0])).k == 1
    assert numkit.signature(np.zeros((2, 2))) == numkit.Signature(0, 2, 0)


def test_signature_sylvester_congruence():
    rng = np.random.default_rng(2)
    for _ in range(50):
        n = int(rng.integers(2, 7))
        S = numkit.symmetrize(rng.normal(size=(n, n)))
        sig = numkit.signature(S)
        if sig.zero:
            continue
        A = np.eye(n) + 0.5 * rng.normal(size=(n, n))
        while abs(np.linalg.det(A)) < 0.1:
            A = np.eye(n) + 0.5 * rng.normal(size=(n, n))
        assert numkit.signature(A.T @ S @ A) == sig


def test_rank_examples():
    assert numkit.rank(np.eye(6)) == 6
    M = np.column_stack([np.eye(4)[:, :3], np.eye(4)[:, 2]])
    assert numkit.rank(M) == 3


def test_rank_lagrangian_concatenation():
    # [P0 | Qinf] is a permutation matrix up to signs: det = +-1 exactly
    for n in (1, 2, 3):
        M = np.hstack([np.vstack([np.eye(n), np.zeros((n, n))]),
                       np.vstack([np.zeros((n, n)), np.eye(n)])])
        assert abs(abs(np.linalg.det(M)) - 1.0) < 1e-12
        assert numkit.rank(M) == 2 * n


def test_spd_pencil_eigvals():
    rng = np.random.default_rng(3)
    G = rng.normal(size=(3, 3))
    B = G @ G.T + 0.5 * np.eye(3)
    A = numkit.symmetrize(rng.normal(size=(3, 3)))
    mu = numkit.spd_pencil_eigvals(A, B)
    # pencil residual: det(A - mu B) = 0
    for m in mu:
        assert abs(np.linalg.det(A - m * B)) < 1e-8 * max(1.0, abs(np.linalg.det(B)))


def test_spd_pencil_rejects_indefinite_base():
    from lagschottky.errors import NotPositiveDefinite
    with pytest.raises(NotPositiveDefinite):
        numkit.spd_pencil_eigvals(np.eye(2), np.diag([1.0, -1.0]))


def test_backend_paths_agree():
    rng = np.random.default_rng(4)
    for _ in range(30):
        n = int(rng.integers(2, 9))
        S = numkit.symmetrize(rng.normal(size=(n, n)))
        w_j, V_j = kernels.jacobi_eigh(S)
        w_n, _ = kernels.numpy_eigh(S)
        assert np.allclose(w_j, w_n, atol=1e-10 * (1 + np.max(np.abs(w_n))))
        assert np.max(np.abs(S @ V_j - V_j @ np.diag(w_j))) <= 1e-10 * (1 + np.max(np.abs(w_n)))
