"""Partial cyclic orders: the ternary relation, intervals, cycles,
increasing sequences, and an axiom-checking harness with reference models
(circle, product torus, wraparound integers)."""

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Any, Callable, NamedTuple, Optional

ANGLE_EPS = 1e-12


@dataclass(frozen=True)
class PcoModel:
    """A set carrying a ternary cyclic-order oracle.

    triple_fn must be deterministic and total.  sampler, when present, draws
    points inside an interval: sampler(a, b, rng, count) -> list of points.
    """
    name: str
    triple_fn: Callable[[Any, Any, Any], bool]
    sampler: Optional[Callable] = field(default=None)


class Interval(NamedTuple):
    a: Any
    b: Any


def triple(model: PcoModel, a, b, c) -> bool:
    return bool(model.triple_fn(a, b, c))


def interval_contains(model: PcoModel, interval: Interval, x) -> bool:
    return triple(model, interval.a, x, interval.b)


def is_cycle(model: PcoModel, points) -> bool:
    """True iff every index-ordered triple of the tuple is related.

    All C(m,3) triples are checked; transitivity would allow shortcuts but
    exhaustive checking is cheap at these sizes and holds for partial orders.
    """
    points = list(points)
    if len(points) < 3:
        raise ValueError("need at least 3 points")
    for i, j, k in combinations(range(len(points)), 3):
        if not triple(model, points[i], points[j], points[k]):
            return False
    return True


def is_increasing_sequence(model: PcoModel, points) -> bool:
    """Same check as is_cycle, read as a sequence condition."""
    return is_cycle(model, points)


@dataclass
class AxiomReport:
    """Witnessed violations per axiom over an exhaustive point sample."""
    sample_size: int
    cyclicity: list
    asymmetry: list
    transitivity: list
    totality: Optional[list] = None

    @property
    def ok(self) -> bool:
        return not (self.cyclicity or self.asymmetry or self.transitivity)

    @property
    def total(self) -> Optional[bool]:
        if self.totality is None:
            return None
        return not self.totality

    def summary(self) -> str:
        lines = [
            f"sample size {self.sample_size}",
            f"cyclicity violations:    {len(self.cyclicity)}",
            f"asymmetry violations:    {len(self.asymmetry)}",
            f"transitivity violations: {len(self.transitivity)}",
        ]
        if self.totality is not None:
            lines.append(f"totality failures:       {len(self.totality)}")
        return "\n".join(lines)


def axiom_check(model: PcoModel, sample, check_totality=False,
                max_witnesses=16) -> AxiomReport:
    """Exhaustively check the PCO axioms over all ordered triples and
    quadruples of the sample; each violated axiom is reported with witnesses."""
    sample = list(sample)
    if len(sample) < 4:
        raise ValueError("axiom check needs a sample of at least 4 points")
    cyc, asym, trans, tot = [], [], [], []
    for i, j, k in permutations(range(len(sample)), 3):
        a, b, c = sample[i], sample[j], sample[k]
        if triple(model, a, b, c):
            if not triple(model, b, c, a) and len(cyc) < max_witnesses:
                cyc.append((a, b, c))
            if triple(model, c, b, a) and len(asym) < max_witnesses:
                asym.append((a, b, c))
        elif check_totality and i < j < k:
            if not triple(model, c, b, a) and len(tot) < max_witnesses:
                tot.append((a, b, c))
    for i, j, k, l in permutations(range(len(sample)), 4):
        a, b, c, d = sample[i], sample[j], sample[k], sample[l]
        if triple(model, a, b, c) and triple(model, a, c, d):
            if not triple(model, a, b, d) and len(trans) < max_witnesses:
                trans.append((a, b, c, d))
    return AxiomReport(
        sample_size=len(sample),
        cyclicity=cyc,
        asymmetry=asym,
        transitivity=trans,
        totality=tot if check_totality else None,
    )


# --- reference models ---

def _circle_triple(a, b, c):
    # Angles within 1e-12 of each other count as non-distinct: relation false.
    x = (b - a) % 1.0
    y = (c - a) % 1.0
    if x < ANGLE_EPS or x > 1.0 - ANGLE_EPS:
        return False
    if y < ANGLE_EPS or y > 1.0 - ANGLE_EPS:
        return False
    if abs(x - y) < ANGLE_EPS:
        return False
    return x < y


def _circle_sampler(a, b, rng, count):
    width = (b - a) % 1.0
    return [(a + width * t) % 1.0 for t in rng.uniform(0.05, 0.95, size=count)]


def circle_model() -> PcoModel:
    """Angles in [0,1) with the counterclockwise total cyclic order."""
    return PcoModel("circle", _circle_triple, _circle_sampler)


def _torus_triple(a, b, c):
    return _circle_triple(a[0], b[0], c[0]) and _circle_triple(a[1], b[1], c[1])


def _torus_sampler(a, b, rng, count):
    firsts = _circle_sampler(a[0], b[0], rng, count)
    seconds = _circle_sampler(a[1], b[1], rng, count)
    return list(zip(firsts, seconds))


def torus_model() -> PcoModel:
    """Componentwise product order on pairs of angles; not total."""
    return PcoModel("torus", _torus_triple, _torus_sampler)


def _wraparound_triple(a, b, c):
    return (a < b < c) or (b < c < a) or (c < a < b)


def integer_wrap_model() -> PcoModel:
    """The cyclic order induced on integers by the linear order."""
    return PcoModel("integer-wrap", _wraparound_triple)
