import numpy as np
import pytest

from lagschottky import numkit, pco
from lagschottky import symplectic as sp
from lagschottky.errors import (
    DegenerateDifference,
    DegenerateRestriction,
    NonPositiveLine,
    NotInInterval,
    NotIsotropic,
    NotASubspaceBasis,
    NotTransverse,
)


def test_omega_convention():
    n = 3
    e = np.eye(2 * n)
    for i in range(n):
        assert sp.omega(e[i], e[n + i]) == 1.0
    rng = np.random.default_rng(0)
    for _ in range(20):
        u, v = rng.normal(size=6), rng.normal(size=6)
        assert sp.omega(u, u) == 0.0
        assert np.isclose(sp.omega(u, v), -sp.omega(v, u))
    with pytest.raises(ValueError):
        sp.omega(np.ones(4), np.ones(6))


def test_lagrangian_from_matrix():
    L = sp.lagrangian_from_matrix(np.vstack([np.eye(2), np.zeros((2, 2))]))
    assert sp.lag_close(L, sp.p0(2))
    S = np.array([[1.0, 0.5], [0.5, -2.0]])
    G = sp.lagrangian_from_matrix(np.vstack([np.eye(2), S]))
    assert np.max(np.abs(G.basis.T @ sp.gram_j(2) @ G.basis)) < 1e-12
    with pytest.raises(NotIsotropic):
        sp.lagrangian_from_matrix(np.vstack([np.eye(2), np.array([[0.0, 1.0], [0.0, 0.0]])]))
    with pytest.raises(NotASubspaceBasis):
        sp.lagrangian_from_matrix(np.zeros((4, 2)))


def test_is_transverse():
    assert sp.is_transverse(sp.p0(2), sp.q_inf(2))
    L = sp.p0(2)
    assert not sp.is_transverse(L, L)
    rng = np.random.default_rng(1)
    for _ in range(20):
        S = sp.random_symmetric(2, rng)
        assert sp.is_transverse(sp.chart_to_lagrangian(S), sp.q_inf(2))


def test_reflection():
    R = sp.reflection(sp.p0(1), sp.q_inf(1))
    assert R.kind == "antisymplectic"
    assert np.allclose(R.matrix, np.diag([-1.0, 1.0]))
    rng = np.random.default_rng(2)
    P, Q = sp.random_transverse_tuple(2, rng, 2)
    R = sp.reflection(P, Q)
    assert np.allclose(R.matrix @ R.matrix, np.eye(4), atol=1e-9)
    for _ in range(10):
        v, w = rng.normal(size=4), rng.normal(size=4)
        assert np.isclose(sp.omega(R.matrix @ v, R.matrix @ w), -sp.omega(v, w))
    with pytest.raises(NotTransverse):
        sp.reflection(P, P)


def test_bform():
    B = sp.bform(sp.p0(1), sp.q_inf(1))
    for x, y in [(1.0, 1.0), (2.0, -0.5), (0.3, 0.7)]:
        assert np.isclose(B([x, y], [x, y]), 2 * x * y)
    rng = np.random.default_rng(3)
    for n in (1, 2, 3):
        P, Q = sp.random_transverse_tuple(n, rng, 2)
        B = sp.bform(P, Q)
        sig = numkit.signature(B.matrix)
        assert (sig.pos, sig.zero, sig.neg) == (n, 0, n)
        Bop = sp.bform(Q, P)
        assert np.max(np.abs(Bop.matrix + B.matrix)) < 1e-12 * max(1.0, np.max(np.abs(B.matrix)))


def test_maslov_basic():
    P, Q = sp.p0(1), sp.q_inf(1)
    V = sp.lagrangian_from_matrix(np.array([[1.0], [1.0]]))
    assert sp.maslov(P, V, Q) == 1
    assert sp.maslov(Q, V, P) == -1
    assert sp.cyclic_lag(P, V, Q)
    assert not sp.cyclic_lag(Q, V, P)
    assert not sp.cyclic_lag(P, P, Q)


def test_maslov_reversal_and_bound():
    rng = np.random.default_rng(4)
    for n in (1, 2, 3):
        for _ in range(30):
            P, V, Q = sp.random_transverse_tuple(n, rng, 3)
            try:
                m = sp.maslov(P, V, Q)
            except DegenerateRestriction:
                continue
            assert abs(m) <= n
            assert sp.maslov(Q, V, P) == -m


def test_maslov_degenerate_restriction():
    P, Q = sp.p0(2), sp.q_inf(2)
    # V shares a direction with P
    V = np.column_stack([P.basis[:, 0], sp.chart_to_lagrangian(np.eye(2)).basis[:, 1]])
    with pytest.raises(DegenerateRestriction):
        sp.maslov(P, V, Q)
    with pytest.raises(NotTransverse):
        sp.maslov(P, sp.p0(2), sp.p0(2))


def test_maslov_accepts_isotropic_subspace():
    # restriction to a one-dimensional isotropic subspace of R^4
    P, Q = sp.p0(2), sp.q_inf(2)
    v = np.array([1.0, 0.0, 1.0, 0.0])  # B(v,v) = 2 > 0
    assert sp.maslov(P, v[:, None], Q) == 1


def test_charts_roundtrip():
    assert sp.lag_close(sp.chart_to_lagrangian(np.zeros((2, 2))), sp.p0(2))
    rng = np.random.default_rng(5)
    for n in (1, 2, 3, 4):
        for _ in range(10):
            S = sp.random_symmetric(n, rng)
            L = sp.chart_to_lagrangian(S)
            S2 = sp.lagrangian_to_chart(L)
            assert np.max(np.abs(S - S2)) < 1e-9 * (1 + np.max(np.abs(S)))
    with pytest.raises(NotTransverse):
        sp.lagrangian_to_chart(sp.q_inf(2))


def test_maslov_via_chart():
    assert sp.maslov_via_chart(np.zeros((1, 1)), np.ones((1, 1))) == 1
    rng = np.random.default_rng(6)
    for n in (1, 2, 3):
        Sx = sp.random_symmetric(n, rng)
        assert sp.maslov_via_chart(Sx, Sx + sp.random_spd(n, rng)) == n
    with pytest.raises(DegenerateDifference):
        sp.maslov_via_chart(np.zeros((2, 2)), np.diag([1.0, 0.0]))


def test_maslov_chart_cross_oracle():
    rng = np.random.default_rng(7)
    for n in (1, 2, 3):
        count = 0
        while count < 100:
            Sx = sp.random_symmetric(n, rng)
            Sy = sp.random_symmetric(n, rng)
            try:
                expected = sp.maslov_via_chart(Sx, Sy)
            except DegenerateDifference:
                continue
            count += 1
            got = sp.maslov(sp.chart_to_lagrangian(Sx), sp.chart_to_lagrangian(Sy),
                            sp.q_inf(n))
            assert got == expected


def test_complete_positive_line():
    P, Q = sp.p0(1), sp.q_inf(1)
    L = sp.complete_positive_line(P, Q, np.array([1.0, 1.0]))
    assert sp.lag_close(L, sp.lagrangian_from_matrix(np.array([[1.0], [1.0]])))
    P2, Q2 = sp.p0(2), sp.q_inf(2)
    v = np.array([1.0, 0.0, 1.0, 0.0])
    L2 = sp.complete_positive_line(P2, Q2, v)
    assert sp.maslov(P2, L2, Q2) == 2
    assert np.linalg.norm(L2.projector() @ v - v) < 1e-9 * np.linalg.norm(v)
    with pytest.raises(NonPositiveLine):
        sp.complete_positive_line(P2, Q2, np.array([1.0, 0.0, -1.0, 0.0]))


def test_complete_positive_line_random():
    rng = np.random.default_rng(8)
    for n in (2, 3):
        P, Q = sp.random_transverse_tuple(n, rng, 2)
        B = sp.bform(P, Q)
        done = 0
        while done < 20:
            v = rng.normal(size=2 * n)
            if B(v, v) <= 1e-6:
                continue
            done += 1
            L = sp.complete_positive_line(P, Q, v)
            assert sp.cyclic_lag(P, L, Q)
            vv = v / np.linalg.norm(v)
            assert np.linalg.norm(L.projector() @ vv - vv) < 1e-8


def test_interval_distance():
    P, Q = sp.p0(1), sp.q_inf(1)
    L1 = sp.interval_unchart(P, Q, np.array([[1.0]]))
    L2 = sp.interval_unchart(P, Q, np.array([[2.0]]))
    assert sp.interval_distance(P, Q, L1, L1) < 1e-12
    assert np.isclose(sp.interval_distance(P, Q, L1, L2), np.log(2.0))
    assert np.isclose(sp.interval_distance(P, Q, L1, L2),
                      sp.interval_distance(P, Q, L2, L1))
    with pytest.raises(NotInInterval):
        bad = sp.interval_unchart(P, Q, np.array([[-1.0]]))
        sp.interval_distance(P, Q, L1, bad)


def test_interval_chart_characterization():
    # L in (P,Q) iff chart form positive definite iff cyclic_lag
    rng = np.random.default_rng(9)
    for n in (1, 2, 3):
        P, Q = sp.random_transverse_tuple(n, rng, 2)
        for _ in range(15):
            S = sp.random_symmetric(n, rng)
            L = sp.interval_unchart(P, Q, S)
            pos = numkit.signature(sp.interval_chart(P, Q, L)).pos == n
            assert pos == sp.cyclic_lag(P, L, Q)


def test_grassmann_gap():
    assert sp.grassmann_gap(sp.p0(2), sp.p0(2)) == 0.0
    assert np.isclose(sp.grassmann_gap(sp.p0(1), sp.q_inf(1)), 1.0)
    rng = np.random.default_rng(10)
    for _ in range(20):
        A, B, C = (sp.random_lagrangian(2, rng) for _ in range(3))
        assert sp.grassmann_gap(A, C) <= sp.grassmann_gap(A, B) + sp.grassmann_gap(B, C) + 1e-12
        assert sp.grassmann_gap(A, B) <= np.sqrt(2) + 1e-12


def test_symplectic_map_kinds():
    rng = np.random.default_rng(11)
    T = sp.random_symplectic(3, rng)
    assert T.kind == "symplectic"
    inv = sp.map_inverse(T)
    assert np.allclose(inv.matrix @ T.matrix, np.eye(6), atol=1e-9)
    R = sp.reflection(sp.p0(2), sp.q_inf(2))
    assert sp.symplectic_map(R.matrix).kind == "antisymplectic"
    with pytest.raises(Exception):
        sp.symplectic_map(np.diag([1.0, 2.0, 3.0, 4.0]))


def test_maslov_cocycle_and_invariance():
    rng = np.random.default_rng(12)
    for n in (2, 3):
        done = 0
        while done < 40:
            P, V, Q, W = sp.random_transverse_tuple(n, rng, 4)
            try:
                coc = (sp.maslov(V, Q, W) - sp.maslov(P, Q, W)
                       + sp.maslov(P, V, W) - sp.maslov(P, V, Q))
            except DegenerateRestriction:
                continue
            done += 1
            assert coc == 0
            T = sp.random_symplectic(n, rng)
            assert sp.maslov(sp.apply_map(T, P), sp.apply_map(T, V),
                             sp.apply_map(T, Q)) == sp.maslov(P, V, Q)


def test_orbit_values():
    rng = np.random.default_rng(13)
    for n in (2, 3):
        seen = set()
        done = 0
        while done < 150:
            P, V, Q = sp.random_transverse_tuple(n, rng, 3)
            try:
                seen.add(sp.maslov(P, V, Q))
            except DegenerateRestriction:
                continue
            done += 1
        assert seen == set(range(-n, n + 1, 2))


def test_reflection_reverses_order():
    rng = np.random.default_rng(14)
    for n in (1, 2, 3):
        done = 0
        while done < 25:
            P, V, Q = sp.random_transverse_tuple(n, rng, 3)
            try:
                m = sp.maslov(P, V, Q)
            except DegenerateRestriction:
                continue
            done += 1
            R = sp.reflection(P, Q)
            assert sp.maslov(P, sp.apply_map(R, V), Q) == -m


def test_increasing_complete_full_proper():
    rng = np.random.default_rng(15)
    n = 2
    # (a) chart-increasing bounded sequences converge in the gap metric
    S_inf = sp.random_symmetric(n, rng)
    Pdef = sp.random_spd(n, rng)
    seq = [sp.chart_to_lagrangian(S_inf - 0.5 ** k * Pdef) for k in range(1, 12)]
    L_inf = sp.chart_to_lagrangian(S_inf)
    for i in range(len(seq) - 2):
        assert sp.cyclic_lag(seq[i], seq[i + 1], seq[i + 2])
    gaps = [sp.grassmann_gap(L, L_inf) for L in seq]
    assert gaps[-1] < 1e-3 and gaps[-1] < gaps[0]
    # (b) nonempty interval has nonempty opposite, witnessed by reflection
    P, Q = sp.random_transverse_tuple(n, rng, 2)
    L = sp.sample_in_interval(P, Q, rng)
    R = sp.reflection(P, Q)
    assert sp.cyclic_lag(Q, sp.apply_map(R, L), P)
    # (c) closure points of the inner interval lie in the outer interval
    xs = [sp.chart_to_lagrangian(float(t) * np.eye(n)) for t in (0.0, 1.0, 2.0, 3.0)]
    assert sp.cyclic_lag(xs[0], xs[1], xs[3])
    assert sp.cyclic_lag(xs[0], xs[2], xs[3])
    for _ in range(10):
        mid = sp.sample_in_interval(xs[1], xs[2], rng)
        assert sp.cyclic_lag(xs[0], mid, xs[3])


def test_lagrangian_pco_axioms():
    model = sp.lagrangian_pco_model(2)
    rng = np.random.default_rng(16)
    pts = [sp.random_lagrangian(2, rng) for _ in range(8)]
    report = pco.axiom_check(model, pts)
    assert report.ok
