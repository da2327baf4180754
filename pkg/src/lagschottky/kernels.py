"""Hot numeric kernels.

jacobi_eigh is the workhorse: every Maslov-index evaluation reduces to a
symmetric eigendecomposition of a small (at most 2n x 2n) matrix, and the
suites run tens of thousands of them.  Cyclic Jacobi is used because at these
sizes robustness and accuracy matter more than asymptotics.  When numba is
active the kernel is @njit-compiled; on the numpy backend numpy.linalg.eigh
serves the same contract (see backend.py).
"""

import numpy as np

from .backend import USING_NUMBA, njit

JACOBI_SWEEP_TOL = 1e-12
JACOBI_MAX_SWEEPS = 64


@njit(cache=True)
def jacobi_eigh(S, sweep_tol=JACOBI_SWEEP_TOL, max_sweeps=JACOBI_MAX_SWEEPS):
    """Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Returns (w, V) with eigenvalues w ascending and orthonormal eigenvector
    columns V.  Sweeps stop once the off-diagonal norm drops below
    sweep_tol times the Frobenius norm of the input.
    """
    n = S.shape[0]
    A = S.copy()
    V = np.eye(n)
    scale = 0.0
    for i in range(n):
        for j in range(n):
            scale += A[i, j] * A[i, j]
    scale = np.sqrt(scale)
    if scale == 0.0:
        return np.zeros(n), V
    for _ in range(max_sweeps):
        off = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                off += 2.0 * A[i, j] * A[i, j]
        if np.sqrt(off) <= sweep_tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if np.abs(apq) <= 1e-300:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = 1.0 / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = A[k, p]
                    akq = A[k, q]
                    A[k, p] = c * akp - s * akq
                    A[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = A[p, k]
                    aqk = A[q, k]
                    A[p, k] = c * apk - s * aqk
                    A[q, k] = s * apk + c * aqk
                A[p, q] = 0.0
                A[q, p] = 0.0
                for k in range(n):
                    vkp = V[k, p]
                    vkq = V[k, q]
                    V[k, p] = c * vkp - s * vkq
                    V[k, q] = s * vkp + c * vkq
    w = np.empty(n)
    for i in range(n):
        w[i] = A[i, i]
    order = np.argsort(w)
    w_sorted = np.empty(n)
    V_sorted = np.empty((n, n))
    for j in range(n):
        w_sorted[j] = w[order[j]]
        for i in range(n):
            V_sorted[i, j] = V[i, order[j]]
    return w_sorted, V_sorted


def numpy_eigh(S):
    """LAPACK-backed reference path with the same output contract."""
    w, V = np.linalg.eigh(S)
    return w, V


def eigh_dispatch(S):
    """Backend-selected symmetric eigendecomposition (ascending eigenvalues)."""
    if USING_NUMBA:
        return jacobi_eigh(S)
    return numpy_eigh(S)
