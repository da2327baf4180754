"""Small dense real linear algebra used throughout: symmetric
eigendecomposition, signatures with tolerance, numerical rank, and the
symmetric-definite pencil reduction."""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import NotPositiveDefinite

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Signature:
    """Eigenvalue sign counts of a symmetric matrix."""
    pos: int
    zero: int
    neg: int

    @property
    def k(self) -> int:
        """Positive count minus negative count."""
        return self.pos - self.neg

    @property
    def n(self) -> int:
        return self.pos + self.zero + self.neg


def symmetrize(A):
    """Exactly symmetric copy of A."""
    A = np.asarray(A, dtype=float)
    return 0.5 * (A + A.T)


def sym_eig(S):
    """Eigendecomposition of a symmetric matrix.

    Returns (w, V): eigenvalues ascending, orthonormal eigenvector columns.
    The input is symmetrized first; eigenvector signs are canonicalized so
    the largest-magnitude component of each column is positive.
    """
    S = np.asarray(S, dtype=float)
    if S.ndim != 2 or S.shape[0] != S.shape[1] or S.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {S.shape}")
    if not np.all(np.isfinite(S)):
        raise ValueError("matrix has non-finite entries")
    w, V = kernels.eigh_dispatch(symmetrize(S))
    for j in range(V.shape[1]):
        i = int(np.argmax(np.abs(V[:, j])))
        if V[i, j] < 0.0:
            V[:, j] = -V[:, j]
    return w, V


def signature(S, tol=DEFAULT_TOL) -> Signature:
    """Count eigenvalues of S against the threshold tol * max(1, ||S||)."""
    w, _ = sym_eig(S)
    thresh = tol * max(1.0, float(np.max(np.abs(w))) if w.size else 0.0)
    pos = int(np.sum(w > thresh))
    neg = int(np.sum(w < -thresh))
    zero = int(w.size) - pos - neg
    return Signature(pos=pos, zero=zero, neg=neg)


def rank(M, tol=DEFAULT_TOL) -> int:
    """Numerical rank with threshold tol * max(1, ||M||)."""
    M = np.asarray(M, dtype=float)
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix has non-finite entries")
    if M.size == 0:
        return 0
    s = np.linalg.svd(M, compute_uv=False)
    return int(np.sum(s > tol * max(1.0, s[0])))


def spd_pencil_eigvals(A, B):
    """Eigenvalues of the pencil (A, B) with B positive definite.

    Reduces via the Cholesky factor of B and calls sym_eig; a failed
    factorization means B is not positive definite.
    """
    A = symmetrize(A)
    B = symmetrize(B)
    try:
        L = np.linalg.cholesky(B)
    except np.linalg.LinAlgError as exc:
        raise NotPositiveDefinite("pencil base matrix is not positive definite") from exc
    Y = np.linalg.solve(L, A)
    M = np.linalg.solve(L, Y.T).T
    w, _ = sym_eig(M)
    return w
