from itertools import permutations

import numpy as np
import pytest

from lagschottky import pco


def test_circle_triples():
    m = pco.circle_model()
    assert pco.triple(m, 0.0, 1/3, 2/3)
    assert not pco.triple(m, 2/3, 1/3, 0.0)
    assert not pco.triple(m, 0.0, 0.0, 0.5)  # non-distinct angles


def test_torus_triple_componentwise():
    m = pco.torus_model()
    # both coordinates counterclockwise
    assert pco.triple(m, (0.0, 0.0), (1/3, 1/4), (2/3, 1/2))
    # second coordinates clockwise: incomparable both ways
    a, b, c = (0.0, 0.0), (1/3, 2/3), (2/3, 1/3)
    assert not pco.triple(m, a, b, c)
    assert not pco.triple(m, c, b, a)


def test_is_cycle_circle():
    m = pco.circle_model()
    assert pco.is_cycle(m, [0.0, 0.25, 0.5, 0.75])
    assert not pco.is_cycle(m, [0.0, 0.5, 0.25])


def test_is_cycle_torus():
    m = pco.torus_model()
    pts = [(0.1 * i, 0.2 * i) for i in range(4)]
    assert pco.is_cycle(m, pts)


def test_interval_contains():
    m = pco.circle_model()
    assert pco.interval_contains(m, pco.Interval(0.0, 0.5), 0.25)
    assert not pco.interval_contains(m, pco.Interval(0.0, 0.5), 0.75)
    # the opposite interval
    assert pco.interval_contains(m, pco.Interval(0.5, 0.0), 0.75)


def test_increasing_sequences():
    m = pco.circle_model()
    assert pco.is_increasing_sequence(m, [0.0, 0.1, 0.2, 0.3])
    assert not pco.is_increasing_sequence(m, [0.0, 0.2, 0.1])
    t = pco.torus_model()
    assert pco.is_increasing_sequence(t, [(0.1 * i, 0.15 * i) for i in range(5)])


def test_axiom_check_circle():
    m = pco.circle_model()
    sample = [(i + 0.3) / 12 for i in range(12)]
    report = pco.axiom_check(m, sample, check_totality=True)
    assert report.ok
    assert report.total


def test_axiom_check_torus_not_total():
    m = pco.torus_model()
    rng = np.random.default_rng(0)
    first = (np.arange(8) + rng.uniform(0.1, 0.9, 8)) / 8
    second = rng.permutation(first)
    report = pco.axiom_check(m, list(zip(first, second)), check_totality=True)
    assert report.ok
    assert report.total is False
    assert report.totality  # witness present


def test_axiom_check_flags_corrupted_oracle():
    base = pco.circle_model()
    flipped = (0.1, 0.4, 0.7)

    def bad_triple(a, b, c):
        if (a, b, c) == flipped:
            return not base.triple_fn(a, b, c)
        return base.triple_fn(a, b, c)

    m = pco.PcoModel("corrupted-circle", bad_triple)
    report = pco.axiom_check(m, [0.1, 0.4, 0.7, 0.9])
    assert not report.ok
    assert report.cyclicity or report.asymmetry or report.transitivity


def test_axiom_check_needs_four_points():
    with pytest.raises(ValueError):
        pco.axiom_check(pco.circle_model(), [0.0, 0.3, 0.6])


def test_integer_wrap_model():
    m = pco.integer_wrap_model()
    assert pco.triple(m, 1, 2, 3)
    assert pco.triple(m, 3, 1, 2)
    assert not pco.triple(m, 2, 1, 3)
    report = pco.axiom_check(m, [1, 4, 7, 9, 12])
    assert report.ok


def test_circle_totality_xor_asymmetry():
    m = pco.circle_model()
    pts = [(i + 0.45) / 7 for i in range(7)]
    for a, b, c in permutations(pts, 3):
        assert pco.triple(m, a, b, c) != pco.triple(m, c, b, a)


def test_cycle_intervals_disjoint():
    # if (a,b,c) is a cycle, (a,b) and (b,c) share no sampled point
    m = pco.circle_model()
    a, b, c = 0.0, 0.35, 0.7
    assert pco.is_cycle(m, [a, b, c])
    for x in np.linspace(0.01, 0.99, 97):
        inside_ab = pco.interval_contains(m, pco.Interval(a, b), x)
        inside_bc = pco.interval_contains(m, pco.Interval(b, c), x)
        assert not (inside_ab and inside_bc)


def test_samplers_land_inside():
    rng = np.random.default_rng(1)
    m = pco.circle_model()
    for x in m.sampler(0.8, 0.2, rng, 20):  # wrapping interval
        assert pco.interval_contains(m, pco.Interval(0.8, 0.2), x)
    t = pco.torus_model()
    for x in t.sampler((0.1, 0.5), (0.4, 0.9), rng, 10):
        assert pco.interval_contains(t, pco.Interval((0.1, 0.5), (0.4, 0.9)), x)
