"""The Lagrangian Grassmannian of R^{2n} with its Maslov-index partial
cyclic order.

Form convention, fixed once for the whole package: in the block splitting
u = (u1, u2) with u1 the first n and u2 the last n coordinates,

    omega(u, v) = u1 . v2 - u2 . v1,

i.e. the Gram matrix of omega is [[0, I], [-I, 0]] and omega(e_i, e_{n+i}) = 1.
Equivalently omega(u, v) = <Ju, v> for the operator J sending e_i to e_{n+i}
and e_{n+i} to -e_i.  Every formula below assumes this convention.
"""

from dataclasses import dataclass

import numpy as np

from . import numkit, pco
from .errors import (
    DegenerateDifference,
    DegenerateRestriction,
    GeometryError,
    NonPositiveLine,
    NotASubspaceBasis,
    NotInInterval,
    NotIsotropic,
    NotPositiveDefinite,
    NotTransverse,
)

GAP_TOL = 1e-8
ISO_TOL = 1e-9
RANK_TOL = 1e-9
SYMPLECTIC_TOL = 1e-8


def gram_j(n):
    """Gram matrix of omega: [[0, I], [-I, 0]]."""
    J = np.zeros((2 * n, 2 * n))
    J[:n, n:] = np.eye(n)
    J[n:, :n] = -np.eye(n)
    return J


def omega(u, v):
    """Symplectic pairing of two vectors in R^{2n}."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != v.shape or u.ndim != 1 or u.shape[0] % 2 != 0:
        raise ValueError(f"expected equal even-dimensional vectors, got {u.shape} and {v.shape}")
    n = u.shape[0] // 2
    return float(u[:n] @ v[n:] - u[n:] @ v[:n])


@dataclass(frozen=True, eq=False)
class Lagrangian:
    """An n-dimensional omega-isotropic subspace, held as a 2n x n matrix
    with orthonormal columns.  Equality is metric (gap below GAP_TOL);
    there is no meaningful hash."""
    n: int
    basis: np.ndarray

    def projector(self):
        return self.basis @ self.basis.T


def lagrangian_from_matrix(M, rank_tol=RANK_TOL, iso_tol=ISO_TOL) -> Lagrangian:
    """Canonical (orthonormalized) Lagrangian spanned by the columns of M."""
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != 2 * M.shape[1] or M.shape[1] < 1:
        raise ValueError(f"expected a 2n x n matrix, got shape {M.shape}")
    n = M.shape[1]
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix has non-finite entries")
    if numkit.rank(M, rank_tol) < n:
        raise NotASubspaceBasis(f"columns span less than {n} dimensions")
    Q, R = np.linalg.qr(M)
    signs = np.sign(np.diag(R))
    signs[signs == 0.0] = 1.0
    B = Q * signs
    iso = B.T @ gram_j(n) @ B
    if np.max(np.abs(iso)) > iso_tol:
        raise NotIsotropic(f"basis pairs to {np.max(np.abs(iso)):.3e} under omega")
    return Lagrangian(n=n, basis=B)


def p0(n) -> Lagrangian:
    """Span of the first n coordinates."""
    M = np.vstack([np.eye(n), np.zeros((n, n))])
    return Lagrangian(n=n, basis=M)


def q_inf(n) -> Lagrangian:
    """Span of the last n coordinates (the chart's point at infinity)."""
    M = np.vstack([np.zeros((n, n)), np.eye(n)])
    return Lagrangian(n=n, basis=M)


def grassmann_gap(L1: Lagrangian, L2: Lagrangian) -> float:
    """Projector distance ||Pi_1 - Pi_2||_F / sqrt(2), in [0, sqrt(n)]."""
    if L1.n != L2.n:
        raise ValueError("dimension mismatch")
    return float(np.linalg.norm(L1.projector() - L2.projector(), "fro") / np.sqrt(2.0))


def lag_close(L1: Lagrangian, L2: Lagrangian, tol=GAP_TOL) -> bool:
    return grassmann_gap(L1, L2) < tol


def is_transverse(L1: Lagrangian, L2: Lagrangian, tol=RANK_TOL) -> bool:
    """Rank test on the concatenated bases."""
    if L1.n != L2.n:
        raise ValueError("dimension mismatch")
    return numkit.rank(np.hstack([L1.basis, L2.basis]), tol) == 2 * L1.n


@dataclass(frozen=True, eq=False)
class SymplecticMap:
    """A matrix preserving omega (kind 'symplectic') or anti-preserving it
    (kind 'antisymplectic'; arises from reflections)."""
    matrix: np.ndarray
    kind: str


def symplectic_map(M, tol=SYMPLECTIC_TOL) -> SymplecticMap:
    """Wrap M, inferring whether it preserves or anti-preserves omega."""
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] % 2 != 0:
        raise ValueError(f"expected a 2n x 2n matrix, got shape {M.shape}")
    n = M.shape[0] // 2
    J = gram_j(n)
    G = M.T @ J @ M
    scale = tol * max(1.0, float(np.max(np.abs(M))) ** 2)
    if np.max(np.abs(G - J)) <= scale:
        return SymplecticMap(matrix=M, kind="symplectic")
    if np.max(np.abs(G + J)) <= scale:
        return SymplecticMap(matrix=M, kind="antisymplectic")
    raise GeometryError("matrix neither preserves nor anti-preserves omega")


def map_inverse(T: SymplecticMap) -> SymplecticMap:
    """Inverse via the form identity (exact up to roundoff, no solve)."""
    n = T.matrix.shape[0] // 2
    J = gram_j(n)
    if T.kind == "symplectic":
        inv = -J @ T.matrix.T @ J
    else:
        inv = J @ T.matrix.T @ J
    return SymplecticMap(matrix=inv, kind=T.kind)


def map_compose(T1: SymplecticMap, T2: SymplecticMap) -> SymplecticMap:
    kind = "symplectic" if T1.kind == T2.kind else "antisymplectic"
    return SymplecticMap(matrix=T1.matrix @ T2.matrix, kind=kind)


def apply_map(T: SymplecticMap, L: Lagrangian) -> Lagrangian:
    return lagrangian_from_matrix(T.matrix @ L.basis)


def reflection(P: Lagrangian, Q: Lagrangian) -> SymplecticMap:
    """The antisymplectic involution negating P and fixing Q pointwise."""
    if not is_transverse(P, Q):
        raise NotTransverse("reflection needs a transverse pair")
    n = P.n
    T = np.hstack([P.basis, Q.basis])
    D = np.diag(np.concatenate([-np.ones(n), np.ones(n)]))
    R = np.linalg.solve(T.T, (T @ D).T).T
    return SymplecticMap(matrix=R, kind="antisymplectic")


@dataclass(frozen=True, eq=False)
class BilinearForm:
    """Symmetric form B(v, w) = omega(v, R w) attached to a transverse pair."""
    P: Lagrangian
    Q: Lagrangian
    matrix: np.ndarray

    def evaluate(self, v, w) -> float:
        return float(np.asarray(v) @ self.matrix @ np.asarray(w))

    def __call__(self, v, w) -> float:
        return self.evaluate(v, w)


def bform(P: Lagrangian, Q: Lagrangian) -> BilinearForm:
    R = reflection(P, Q)
    n = P.n
    B = numkit.symmetrize(gram_j(n) @ R.matrix)
    return BilinearForm(P=P, Q=Q, matrix=B)


def maslov(P: Lagrangian, V, Q: Lagrangian, tol=numkit.DEFAULT_TOL) -> int:
    """Index (positives minus negatives) of the pair form restricted to V.

    V may be a Lagrangian or any 2n x k basis of an isotropic subspace.  A
    numerically zero eigenvalue of the restriction means V meets P or Q and
    raises DegenerateRestriction instead of silently counting.
    """
    if not is_transverse(P, Q):
        raise NotTransverse("outer pair is not transverse")
    Vb = V.basis if isinstance(V, Lagrangian) else np.asarray(V, dtype=float)
    B = bform(P, Q)
    gram = numkit.symmetrize(Vb.T @ B.matrix @ Vb)
    sig = numkit.signature(gram, tol)
    if sig.zero > 0:
        raise DegenerateRestriction(
            f"restriction has {sig.zero} zero eigenvalue(s); V meets P or Q")
    return sig.k


def cyclic_lag(P: Lagrangian, V: Lagrangian, Q: Lagrangian) -> bool:
    """The Maslov partial cyclic order: pairwise transverse and index n.

    Returns False (never raises) on non-transverse or degenerate input.
    """
    if not (is_transverse(P, Q) and is_transverse(P, V) and is_transverse(V, Q)):
        return False
    try:
        return maslov(P, V, Q) == P.n
    except (DegenerateRestriction, NotTransverse):
        return False


# --- charts ---

def chart_to_lagrangian(S) -> Lagrangian:
    """Graph of the symmetric matrix S over the first coordinate Lagrangian."""
    S = numkit.symmetrize(S)
    n = S.shape[0]
    return lagrangian_from_matrix(np.vstack([np.eye(n), S]))


def lagrangian_to_chart(L: Lagrangian):
    """Symmetric matrix whose graph is L; needs L transverse to q_inf."""
    n = L.n
    X = L.basis[:n]
    Y = L.basis[n:]
    if numkit.rank(X, RANK_TOL) < n:
        raise NotTransverse("Lagrangian meets the chart's point at infinity")
    return numkit.symmetrize(Y @ np.linalg.inv(X))


def maslov_via_chart(Sx, Sy, tol=numkit.DEFAULT_TOL) -> int:
    """Index of the triple (graph Sx, graph Sy, infinity): the signature
    count of Sy - Sx."""
    D = numkit.symmetrize(Sy) - numkit.symmetrize(Sx)
    sig = numkit.signature(D, tol)
    if sig.zero > 0:
        raise DegenerateDifference("chart difference is singular")
    return sig.k


def pair_matrix(P: Lagrangian, Q: Lagrangian):
    """omega-pairing matrix of the two bases; invertible iff transverse."""
    return P.basis.T @ gram_j(P.n) @ Q.basis


def interval_chart(P: Lagrangian, Q: Lagrangian, L: Lagrangian):
    """Symmetric form matrix representing L as a graph over P.

    L in the interval (P, Q) iff the result is positive definite.  The
    factor 2 in b(v, v') = 2 omega(v, f(v')) is kept; the interval metric is
    scale-invariant so it is harmless.
    """
    n = P.n
    T = np.hstack([P.basis, Q.basis])
    coef = np.linalg.solve(T, L.basis)
    A = coef[:n]
    C = coef[n:]
    if numkit.rank(A, RANK_TOL) < n:
        raise NotTransverse("Lagrangian is not transverse to the interval endpoint")
    F = np.linalg.solve(A.T, C.T).T
    return numkit.symmetrize(2.0 * pair_matrix(P, Q) @ F)


def interval_unchart(P: Lagrangian, Q: Lagrangian, b) -> Lagrangian:
    """Inverse of interval_chart: the graph Lagrangian of the form b."""
    b = numkit.symmetrize(b)
    W = pair_matrix(P, Q)
    F = 0.5 * np.linalg.solve(W, b)
    return lagrangian_from_matrix(P.basis + Q.basis @ F)


def in_interval(P: Lagrangian, Q: Lagrangian, L: Lagrangian,
                tol=numkit.DEFAULT_TOL) -> bool:
    """Positive-definiteness of the chart form; equivalent to cyclic_lag."""
    try:
        b = interval_chart(P, Q, L)
    except NotTransverse:
        return False
    return numkit.signature(b, tol).pos == P.n


def interval_distance(P: Lagrangian, Q: Lagrangian, L1: Lagrangian,
                      L2: Lagrangian) -> float:
    """Symmetric-space distance between two points of the interval (P, Q):
    sqrt of the sum of squared logs of the pencil eigenvalues of the two
    chart forms."""
    b1 = _interval_chart_checked(P, Q, L1)
    b2 = _interval_chart_checked(P, Q, L2)
    try:
        mu = numkit.spd_pencil_eigvals(b2, b1)
    except NotPositiveDefinite as exc:
        raise NotInInterval("chart form is not positive definite") from exc
    if np.any(mu <= 0.0):
        raise NotInInterval("pencil has non-positive eigenvalues")
    return float(np.sqrt(np.sum(np.log(mu) ** 2)))


def _interval_chart_checked(P, Q, L):
    try:
        b = interval_chart(P, Q, L)
    except NotTransverse as exc:
        raise NotInInterval("point is not in the interval") from exc
    if numkit.signature(b).pos != P.n:
        raise NotInInterval("chart form is not positive definite")
    return b


def complete_positive_line(P: Lagrangian, Q: Lagrangian, v,
                           tol=numkit.DEFAULT_TOL) -> Lagrangian:
    """Extend a B-positive line to a Lagrangian inside the interval (P, Q).

    Greedy construction: repeatedly restrict to the omega- and B-orthogonal
    complement of the vectors found so far (a reflection-invariant symplectic
    subspace) and take the top eigenvector of the restricted form.  The
    output contains v and satisfies cyclic_lag(P, ., Q).
    """
    if not is_transverse(P, Q):
        raise NotTransverse("halfspace pair is not transverse")
    n = P.n
    v = np.asarray(v, dtype=float)
    v = v / np.linalg.norm(v)
    B = bform(P, Q)
    norm_b = float(np.linalg.norm(B.matrix, 2))
    if B(v, v) <= tol * norm_b:
        raise NonPositiveLine(f"B(v, v) = {B(v, v):.3e} is not positive")
    J = gram_j(n)
    vectors = [v]
    space = np.eye(2 * n)
    while len(vectors) < n:
        last = vectors[-1]
        constraints = np.vstack([(J @ last) @ space, (B.matrix @ last) @ space])
        _, s, Vt = np.linalg.svd(constraints)
        ncons = int(np.sum(s > RANK_TOL * max(1.0, s[0] if s.size else 0.0)))
        null = Vt[ncons:].T
        space = space @ null
        space, _ = np.linalg.qr(space)
        gram = numkit.symmetrize(space.T @ B.matrix @ space)
        w, U = numkit.sym_eig(gram)
        if w[-1] <= tol * norm_b:
            raise NonPositiveLine("no positive direction left; input degenerate")
        vectors.append(space @ U[:, -1])
    return lagrangian_from_matrix(np.column_stack(vectors))


# --- random generation and sampling ---

def random_symmetric(n, rng, scale=1.0):
    G = rng.normal(size=(n, n))
    return numkit.symmetrize(scale * G)


def random_spd(n, rng, scale=1.0):
    G = rng.normal(size=(n, n))
    return scale * (G @ G.T) + 0.3 * np.eye(n)


def random_symplectic(n, rng, scale=0.4) -> SymplecticMap:
    """Well-conditioned random element: shear-shear-block-diagonal product."""
    S1 = random_symmetric(n, rng, scale)
    S2 = random_symmetric(n, rng, scale)
    A = np.eye(n) + scale * rng.normal(size=(n, n))
    while abs(np.linalg.det(A)) < 0.1:
        A = np.eye(n) + scale * rng.normal(size=(n, n))
    upper = np.block([[np.eye(n), S1], [np.zeros((n, n)), np.eye(n)]])
    lower = np.block([[np.eye(n), np.zeros((n, n))], [S2, np.eye(n)]])
    diag = np.block([[A, np.zeros((n, n))],
                     [np.zeros((n, n)), np.linalg.inv(A).T]])
    return SymplecticMap(matrix=upper @ lower @ diag, kind="symplectic")


def random_lagrangian(n, rng) -> Lagrangian:
    """Chart graph pushed by a random symplectic map (covers non-chart points)."""
    L = chart_to_lagrangian(random_symmetric(n, rng))
    return apply_map(random_symplectic(n, rng), L)


def random_transverse_tuple(n, rng, count, max_tries=1000):
    """Pairwise-transverse Lagrangians by rejection sampling."""
    for _ in range(max_tries):
        tup = [random_lagrangian(n, rng) for _ in range(count)]
        if all(is_transverse(a, b)
               for i, a in enumerate(tup) for b in tup[i + 1:]):
            return tuple(tup)
    raise RuntimeError("could not sample a pairwise-transverse tuple")


def sample_in_interval(P: Lagrangian, Q: Lagrangian, rng, scale=1.0) -> Lagrangian:
    return interval_unchart(P, Q, random_spd(P.n, rng, scale))


def _lag_sampler(a, b, rng, count):
    return [sample_in_interval(a, b, rng) for _ in range(count)]


def lagrangian_pco_model(n) -> pco.PcoModel:
    """The Maslov partial cyclic order as an abstract PCO model."""
    return pco.PcoModel(f"lag(2x{n})", cyclic_lag, _lag_sampler)
