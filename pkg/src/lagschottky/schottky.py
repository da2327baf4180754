"""Generalized Schottky data over the Lagrangian PCO: combinatorial circle
models, reduced words and their interval order, validation, ping-pong
checks, interval contraction, and the limit map with certified bounds.

A letter is a pair (i, s) with generator index i (0-based) and sign s in
{+1, -1}; the letter (i, +1) acts by the i-th generator, (i, -1) by its
inverse.  Words print as strings: generator i is the letter chr(ord('a')+i),
uppercase for the inverse.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

import numpy as np

from . import symplectic as sp
from .errors import (
    CapacityError,
    ContractionViolation,
    InvalidSchottkyData,
    NotInInterval,
    UnsupportedFlavor,
)

DISJOINT = "disjoint-closures"
SHARED = "shared-endpoints"
DEFAULT_WORD_BUDGET = 200000

Letter = tuple


def letter_inverse(letter: Letter) -> Letter:
    return (letter[0], -letter[1])


def letter_str(letter: Letter) -> str:
    c = chr(ord("a") + letter[0])
    return c.upper() if letter[1] < 0 else c


@dataclass(frozen=True)
class ReducedWord:
    """A reduced word in the free group on g generators."""
    letters: tuple

    def __post_init__(self):
        for cur, nxt in zip(self.letters, self.letters[1:]):
            if cur[0] == nxt[0] and cur[1] == -nxt[1]:
                raise ValueError(f"word is not reduced at {letter_str(cur)}{letter_str(nxt)}")

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return "".join(letter_str(l) for l in self.letters) or "1"

    def inverse(self) -> "ReducedWord":
        return ReducedWord(tuple(letter_inverse(l) for l in reversed(self.letters)))


def word_from_str(s: str) -> ReducedWord:
    letters = []
    for ch in s.strip():
        if ch == "1":
            continue
        if not ch.isalpha():
            raise ValueError(f"bad letter {ch!r} in word {s!r}")
        letters.append((ord(ch.lower()) - ord("a"), -1 if ch.isupper() else 1))
    return ReducedWord(tuple(letters))


def concat_reduce(w1: ReducedWord, w2: ReducedWord) -> ReducedWord:
    """Concatenation with free reduction at the seam."""
    left = list(w1.letters)
    right = list(w2.letters)
    while left and right and left[-1] == letter_inverse(right[0]):
        left.pop()
        right.pop(0)
    return ReducedWord(tuple(left + right))


@dataclass(frozen=True)
class CircleModel:
    """2g labeled open intervals on the circle: interval i,s is
    (a[i,s], b[i,s]) counterclockwise, angles in [0,1)."""
    g: int
    a_plus: tuple
    b_plus: tuple
    a_minus: tuple
    b_minus: tuple
    flavor: str = DISJOINT

    def letters(self):
        return [(i, 1) for i in range(self.g)] + [(i, -1) for i in range(self.g)]

    def interval_angles(self, letter: Letter):
        i, s = letter
        if s > 0:
            return self.a_plus[i], self.b_plus[i]
        return self.a_minus[i], self.b_minus[i]

    def arrangement(self):
        """Letters sorted by interval start angle (the circle order)."""
        return sorted(self.letters(), key=lambda l: self.interval_angles(l)[0] % 1.0)

    def check_arrangement(self, eps=1e-9):
        """Failure strings if the 2g intervals do not sit disjointly on the
        circle in their declared flavor."""
        failures = []
        if self.flavor not in (DISJOINT, SHARED):
            failures.append(f"unknown flavor {self.flavor!r}")
            return failures
        order = self.arrangement()
        total = 0.0
        for idx, cur in enumerate(order):
            nxt = order[(idx + 1) % len(order)]
            a, b = self.interval_angles(cur)
            width = (b - a) % 1.0
            total += width
            to_next = (self.interval_angles(nxt)[0] - a) % 1.0 if len(order) > 1 else 1.0
            gap = to_next - width
            if width <= eps:
                failures.append(f"interval {letter_str(cur)} has nonpositive width")
            if self.flavor == DISJOINT and gap <= eps:
                failures.append(
                    f"intervals {letter_str(cur)} and {letter_str(nxt)} have touching closures")
            if self.flavor == SHARED and gap < -eps:
                failures.append(
                    f"intervals {letter_str(cur)} and {letter_str(nxt)} overlap")
        if total > 1.0 + eps:
            failures.append("interval widths sum past a full circle")
        return failures


class SchottkyData:
    """A circle model realized on Lag(2n): endpoint Lagrangians for the 4g
    circle endpoints plus g symplectic generators pairing them.

    Treated as immutable after construction; derived quantities (basepoint,
    contraction constant, diameter bound) are cached.
    """

    def __init__(self, model: CircleModel, n: int, endpoint_images: dict,
                 generators: list):
        self.model = model
        self.n = n
        self.endpoint_images = {k: tuple(v) for k, v in endpoint_images.items()}
        self.generators = list(generators)
        if len(self.generators) != model.g:
            raise ValueError(f"expected {model.g} generators, got {len(self.generators)}")
        for letter in model.letters():
            if letter not in self.endpoint_images:
                raise ValueError(f"missing endpoint images for interval {letter_str(letter)}")
        self._inverses = [sp.map_inverse(T) for T in self.generators]
        self._cache = {}

    def letter_matrix(self, letter: Letter):
        i, s = letter
        return (self.generators[i] if s > 0 else self._inverses[i]).matrix

    def word_matrix(self, word: ReducedWord):
        M = np.eye(2 * self.n)
        for letter in word.letters:
            M = M @ self.letter_matrix(letter)
        return M

    def interval(self, letter: Letter):
        """Endpoint Lagrangian pair (La, Lb) of the defining interval."""
        return self.endpoint_images[letter]


def act(data: SchottkyData, word: ReducedWord, L: sp.Lagrangian) -> sp.Lagrangian:
    """Apply the group element of a reduced word to a Lagrangian."""
    if len(word) == 0:
        return L
    return sp.lagrangian_from_matrix(data.word_matrix(word) @ L.basis)


# --- endpoint table in circle order ---

def endpoint_cycle(data: SchottkyData, dedupe_eps=1e-12):
    """All 4g endpoints as (angle, letter, which, Lagrangian) sorted by
    angle, with coincident shared endpoints deduplicated."""
    entries = []
    for letter in data.model.letters():
        a, b = data.model.interval_angles(letter)
        La, Lb = data.interval(letter)
        entries.append((a % 1.0, letter, "a", La))
        entries.append((b % 1.0, letter, "b", Lb))
    entries.sort(key=lambda e: e[0])
    deduped = []
    for e in entries:
        if deduped and abs(e[0] - deduped[-1][0]) < dedupe_eps:
            continue
        deduped.append(e)
    if len(deduped) > 1 and abs((deduped[0][0] + 1.0) - deduped[-1][0]) < dedupe_eps:
        deduped.pop()
    return deduped


@dataclass
class ValidationReport:
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        if self.ok:
            return "all checks passed"
        return "\n".join(f"FAIL: {f}" for f in self.failures)


def validate(data: SchottkyData, gap_tol=sp.GAP_TOL) -> ValidationReport:
    """Check the defining conditions: circle arrangement, symplectic
    generators, endpoint pairing, and that the endpoint map is increasing."""
    failures = list(data.model.check_arrangement())
    J = sp.gram_j(data.n)
    for i, T in enumerate(data.generators):
        M = T.matrix
        if M.shape != (2 * data.n, 2 * data.n):
            failures.append(f"generator {i} has shape {M.shape}")
            continue
        err = float(np.max(np.abs(M.T @ J @ M - J)))
        if err > sp.SYMPLECTIC_TOL * max(1.0, float(np.max(np.abs(M))) ** 2):
            failures.append(f"generator {i} is not symplectic (defect {err:.3e})")
    for i in range(data.model.g):
        T = data.generators[i]
        a_m, b_m = data.interval((i, -1))
        a_p, b_p = data.interval((i, 1))
        try:
            img_b = sp.apply_map(T, b_m)
            img_a = sp.apply_map(T, a_m)
        except Exception as exc:  # singular generator etc.
            failures.append(f"generator {i} does not act on Lagrangians: {exc}")
            continue
        gb = sp.grassmann_gap(img_b, a_p)
        ga = sp.grassmann_gap(img_a, b_p)
        if gb > gap_tol:
            failures.append(
                f"pairing h_{i}(b-) = a+ fails for generator {i} (gap {gb:.3e})")
        if ga > gap_tol:
            failures.append(
                f"pairing h_{i}(a-) = b+ fails for generator {i} (gap {ga:.3e})")
    cycle = endpoint_cycle(data)
    for prev, cur in zip(cycle, cycle[1:]):
        if abs(cur[0] - prev[0]) < 1e-12:
            if not sp.lag_close(prev[3], cur[3], gap_tol):
                failures.append(
                    f"shared endpoint at angle {cur[0]:.6f} has mismatched images")
    lags = [e[3] for e in cycle]
    for i, j, k in combinations(range(len(lags)), 3):
        if not sp.cyclic_lag(lags[i], lags[j], lags[k]):
            ei, ej, ek = cycle[i], cycle[j], cycle[k]
            failures.append(
                "endpoint images not increasing at "
                f"({letter_str(ei[1])}.{ei[2]}, {letter_str(ej[1])}.{ej[2]}, "
                f"{letter_str(ek[1])}.{ek[2]})")
            if len(failures) > 40:
                failures.append("... (truncated)")
                return ValidationReport(failures)
    return ValidationReport(failures)


# --- word enumeration in circle order ---

def _letters_after(model: CircleModel, forbidden: Letter):
    """Letters other than forbidden, in circle order starting just past the
    forbidden interval."""
    order = model.arrangement()
    idx = order.index(forbidden)
    return order[idx + 1:] + order[:idx]


def enumerate_words(model_or_data, k: int, budget=DEFAULT_WORD_BUDGET):
    """All reduced words of length k, ordered like their intervals on the
    circle.

    A word w1...wk names the interval obtained by applying w1...w(k-1) to the
    defining interval of wk; the order never touches floating Lagrangian
    data, only the circle model.
    """
    model = model_or_data.model if isinstance(model_or_data, SchottkyData) else model_or_data
    if k < 1:
        raise ValueError("word length must be at least 1 (the empty word names no interval)")
    g = model.g
    count = 2 * g * (2 * g - 1) ** (k - 1)
    if count > budget:
        raise CapacityError(f"{count} words of length {k} exceed budget {budget}")
    words = []

    def expand(prefix):
        if len(prefix) == k:
            words.append(ReducedWord(tuple(prefix)))
            return
        for nxt in _letters_after(model, letter_inverse(prefix[-1])):
            prefix.append(nxt)
            expand(prefix)
            prefix.pop()

    for first in model.arrangement():
        expand([first])
    assert len(words) == count
    return words


@dataclass(frozen=True)
class OrderKInterval:
    """The interval named by a word, carried by its endpoint Lagrangians."""
    word: ReducedWord
    endpoints: tuple


def word_interval(data: SchottkyData, word: ReducedWord) -> OrderKInterval:
    if len(word) == 0:
        raise ValueError("the empty word names no interval")
    prefix = ReducedWord(word.letters[:-1])
    last = word.letters[-1]
    Ea, Eb = data.interval(last)
    M = data.word_matrix(prefix)
    T = sp.SymplecticMap(matrix=M, kind="symplectic")
    return OrderKInterval(word=word,
                          endpoints=(sp.apply_map(T, Ea), sp.apply_map(T, Eb)))


# --- basepoint and ping pong ---

def basepoint(data: SchottkyData) -> sp.Lagrangian:
    """A Lagrangian outside every defining interval: the unit chart point of
    the widest gap between consecutive intervals."""
    if data.model.flavor != DISJOINT:
        raise UnsupportedFlavor("basepoint needs intervals with disjoint closures")
    if "basepoint" not in data._cache:
        order = data.model.arrangement()
        best = None
        for idx, cur in enumerate(order):
            nxt = order[(idx + 1) % len(order)]
            b_cur = data.model.interval_angles(cur)[1]
            a_nxt = data.model.interval_angles(nxt)[0]
            width = (a_nxt - b_cur) % 1.0
            if best is None or width > best[0]:
                best = (width, cur, nxt)
        _, cur, nxt = best
        P = data.interval(cur)[1]
        Q = data.interval(nxt)[0]
        data._cache["basepoint"] = sp.interval_unchart(P, Q, np.eye(data.n))
    return data._cache["basepoint"]


@dataclass
class PingPongReport:
    words_checked: int
    containment_failures: list
    fixed_point_failures: list

    @property
    def ok(self) -> bool:
        return not (self.containment_failures or self.fixed_point_failures)

    def summary(self) -> str:
        if self.ok:
            return f"{self.words_checked} words checked, all inside their first-letter interval"
        lines = [f"{self.words_checked} words checked"]
        lines += [f"FAIL containment: {w}" for w in self.containment_failures]
        lines += [f"FAIL fixes basepoint: {w}" for w in self.fixed_point_failures]
        return "\n".join(lines)


def ping_pong_check(data: SchottkyData, depth: int, gap_tol=sp.GAP_TOL,
                    budget=DEFAULT_WORD_BUDGET) -> PingPongReport:
    """Every reduced word of length <= depth must send the basepoint into
    its first letter's interval and must move the basepoint."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    base = basepoint(data)
    containment, fixed = [], []
    checked = 0
    for k in range(1, depth + 1):
        for word in enumerate_words(data, k, budget):
            image = act(data, word, base)
            checked += 1
            Pa, Pb = data.interval(word.letters[0])
            if not sp.cyclic_lag(Pa, image, Pb):
                containment.append(str(word))
            if sp.grassmann_gap(image, base) <= gap_tol:
                fixed.append(str(word))
    return PingPongReport(words_checked=checked,
                          containment_failures=containment,
                          fixed_point_failures=fixed)


# --- contraction and the limit map ---

def contraction_constant(data: SchottkyData, samples=6, seed=0) -> float:
    """Empirical Lipschitz constant: the max ratio of interval distances
    under every generator map from each admissible source interval into its
    target.  Must come out below one."""
    if data.model.flavor != DISJOINT:
        raise UnsupportedFlavor("contraction needs intervals with disjoint closures")
    rng = np.random.default_rng(seed)
    worst = 0.0
    for target in data.model.letters():
        Pt, Qt = data.interval(target)
        M = data.letter_matrix(target)
        T = sp.SymplecticMap(matrix=M, kind="symplectic")
        for source in data.model.letters():
            if source == letter_inverse(target):
                continue
            Ps, Qs = data.interval(source)
            for _ in range(samples):
                X = sp.sample_in_interval(Ps, Qs, rng)
                Y = sp.sample_in_interval(Ps, Qs, rng)
                d_src = sp.interval_distance(Ps, Qs, X, Y)
                if d_src < 1e-9:
                    continue
                try:
                    d_img = sp.interval_distance(Pt, Qt, sp.apply_map(T, X),
                                                 sp.apply_map(T, Y))
                except NotInInterval as exc:
                    raise ContractionViolation(
                        f"{letter_str(target)} image of a point of "
                        f"{letter_str(source)} left the target interval") from exc
                worst = max(worst, d_img / d_src)
    if worst >= 1.0:
        raise ContractionViolation(f"observed ratio {worst:.6f} is not below one")
    if "contraction" not in data._cache:
        data._cache["contraction"] = worst
    return worst


def second_order_diameter(data: SchottkyData) -> float:
    """Measured bound M: the max interval distance between the endpoints of
    any second-order interval, taken inside its first-order parent."""
    if "diam_bound" in data._cache:
        return data._cache["diam_bound"]
    worst = 0.0
    for word in enumerate_words(data, 2):
        Pa, Pb = data.interval(word.letters[0])
        Ea, Eb = word_interval(data, word).endpoints
        worst = max(worst, sp.interval_distance(Pa, Pb, Ea, Eb))
    data._cache["diam_bound"] = worst
    return worst


def _contraction_data(data, C=None, M=None):
    if C is None:
        C = data._cache.get("contraction")
        if C is None:
            C = contraction_constant(data)
    if M is None:
        M = second_order_diameter(data)
    return C, M


def eta(data: SchottkyData, word: ReducedWord, C=None, M=None):
    """Finite-depth limit map: the basepoint pushed by a reduced prefix,
    with the certified interval-metric error bound M * C^(k-2)."""
    if data.model.flavor != DISJOINT:
        raise UnsupportedFlavor("limit map needs intervals with disjoint closures")
    k = len(word)
    if k < 2:
        raise ValueError("need a prefix of length at least 2 for an error bound")
    C, M = _contraction_data(data, C, M)
    return act(data, word, basepoint(data)), M * C ** (k - 2)


@dataclass(frozen=True)
class LimitEntry:
    word: ReducedWord
    lagrangian: sp.Lagrangian
    diameter_bound: float


def limit_set(data: SchottkyData, depth: int, budget=DEFAULT_WORD_BUDGET):
    """One approximate limit Lagrangian per reduced word of length depth, in
    the cyclic order of the words' intervals."""
    if data.model.flavor != DISJOINT:
        raise UnsupportedFlavor("limit set needs intervals with disjoint closures")
    if depth < 2:
        raise ValueError("depth must be at least 2")
    C, M = _contraction_data(data)
    base = basepoint(data)
    bound = M * C ** (depth - 2)
    entries = []
    for word in enumerate_words(data, depth, budget):
        entries.append(LimitEntry(word=word,
                                  lagrangian=act(data, word, base),
                                  diameter_bound=bound))
    return entries


# --- endpoint map at depth k ---

@dataclass(frozen=True)
class XiEntry:
    """One endpoint of an order-k interval: its (nominal) circle angle, the
    word naming the interval, which endpoint, and the image Lagrangian."""
    angle: float
    word: ReducedWord
    which: str
    lagrangian: sp.Lagrangian


def xi_endpoints(data: SchottkyData, k: int, budget=DEFAULT_WORD_BUDGET):
    """The endpoint map on order-k interval endpoints, in circle order.

    For k = 1 the angles are the model's own; deeper endpoints get nominal
    angles from a deterministic subdivision that realizes the combinatorial
    order (the model carries no circle maps, so true angles are not defined).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    model = data.model
    g = model.g
    count = 2 * 2 * g * (2 * g - 1) ** (k - 1)
    if count > budget:
        raise CapacityError(f"{count} endpoints at depth {k} exceed budget {budget}")
    entries = []

    def emit(word_letters, a, width):
        word = ReducedWord(tuple(word_letters))
        Ea, Eb = word_interval(data, word).endpoints
        entries.append(XiEntry(angle=a % 1.0, word=word, which="a", lagrangian=Ea))
        entries.append(XiEntry(angle=(a + width) % 1.0, word=word, which="b", lagrangian=Eb))

    def expand(prefix, a, width):
        if len(prefix) == k:
            emit(prefix, a, width)
            return
        slot = width / (2 * g - 1)
        for m, nxt in enumerate(_letters_after(model, letter_inverse(prefix[-1]))):
            prefix.append(nxt)
            expand(prefix, a + (m + 0.25) * slot, 0.5 * slot)
            prefix.pop()

    for first in model.arrangement():
        fa, fb = model.interval_angles(first)
        expand([first], fa, (fb - fa) % 1.0)
    assert len(entries) == count
    return entries


def canon_endpoint_symbol(word: ReducedWord, letter: Letter, which: str):
    """Canonical form of a symbolic endpoint: fold the last word letter into
    the endpoint when the generator pairing identifies them."""
    letters = list(word.letters)
    if letters and letters[-1] == letter_inverse(letter):
        folded = letters.pop()
        letter = folded
        which = "b" if which == "a" else "a"
    return ReducedWord(tuple(letters)), letter, which


def xi_eval(data: SchottkyData, word: ReducedWord, letter: Letter, which: str):
    """Image Lagrangian of the symbolic endpoint (word, letter, which)."""
    word, letter, which = canon_endpoint_symbol(word, letter, which)
    La, Lb = data.interval(letter)
    return act(data, word, La if which == "a" else Lb)


# --- constructors ---

def line_lagrangian(t: float) -> sp.Lagrangian:
    """The line of RP^1 at circle angle t, as a Lagrangian of R^2."""
    phi = np.pi * (t % 1.0)
    return sp.Lagrangian(n=1, basis=np.array([[np.cos(phi)], [np.sin(phi)]]))


def line_angle(v) -> float:
    """Circle angle in [0,1) of a nonzero vector's line in RP^1."""
    return float(np.arctan2(v[1], v[0]) / np.pi % 1.0)


def mobius_angle(M, t: float) -> float:
    phi = np.pi * (t % 1.0)
    return line_angle(np.asarray(M) @ np.array([np.cos(phi), np.sin(phi)]))


def sl2_attracting_line(M) -> float:
    """Attracting fixed line of a hyperbolic 2x2 matrix, by the closed-form
    dominant eigenvector (independent of any eigensolver)."""
    M = np.asarray(M, dtype=float)
    tr = M[0, 0] + M[1, 1]
    det = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
    disc = tr * tr - 4.0 * det
    if disc <= 0.0:
        raise InvalidSchottkyData("matrix is not hyperbolic")
    lam = (tr + np.sign(tr) * np.sqrt(disc)) / 2.0
    v1 = np.array([M[0, 1], lam - M[0, 0]])
    v2 = np.array([lam - M[1, 1], M[1, 0]])
    v = v1 if np.linalg.norm(v1) >= np.linalg.norm(v2) else v2
    return line_angle(v)


def embed_diagonal_sl2(matrices, model: CircleModel, n: int) -> SchottkyData:
    """Diagonal embedding of a classical RP^1 Schottky system into Sp(2n).

    Each 2x2 generator [[a,b],[c,d]] becomes the scalar-block matrix
    [[aI,bI],[cI,dI]]; an endpoint line at angle t becomes the product
    Lagrangian spanned by cos(pi t) e_k + sin(pi t) e_{n+k}.  The input is
    validated through the n=1 path first.
    """
    mats = [np.asarray(M, dtype=float) for M in matrices]
    if len(mats) != model.g:
        raise InvalidSchottkyData(f"expected {model.g} matrices, got {len(mats)}")
    for i, M in enumerate(mats):
        if M.shape != (2, 2):
            raise InvalidSchottkyData(f"generator {i} is not 2x2")
        det = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
        if abs(det - 1.0) > 1e-8:
            raise InvalidSchottkyData(f"generator {i} has det {det:.6f}, want 1")
        if abs(M[0, 0] + M[1, 1]) <= 2.0 + 1e-12:
            raise InvalidSchottkyData(f"generator {i} is not hyperbolic")
    base = _data_from_lines(mats, model, 1)
    report = validate(base)
    if not report.ok:
        raise InvalidSchottkyData("n=1 validation failed:\n" + report.summary())
    if n == 1:
        return base
    return _data_from_lines(mats, model, n)


def _data_from_lines(mats, model, n):
    def lag(t):
        phi = np.pi * (t % 1.0)
        return sp.Lagrangian(n=n, basis=np.vstack([np.cos(phi) * np.eye(n),
                                                   np.sin(phi) * np.eye(n)]))

    images = {}
    for letter in model.letters():
        a, b = model.interval_angles(letter)
        images[letter] = (lag(a), lag(b))
    gens = []
    for M in mats:
        big = np.block([[M[0, 0] * np.eye(n), M[0, 1] * np.eye(n)],
                        [M[1, 0] * np.eye(n), M[1, 1] * np.eye(n)]])
        gens.append(sp.symplectic_map(big))
    return SchottkyData(model=model, n=n, endpoint_images=images, generators=gens)


def classical_schottky_example(g=2, lam=6.0, halfwidth=0.08):
    """A strong classical Schottky system on RP^1: generator i is the
    diagonal hyperbolic conjugated by rotation i/(2g), with its repelling
    interval centered opposite the attracting fixed line.  Interval
    endpoints are the exact generator images, so the pairing conditions hold
    to machine precision."""
    if lam <= 1.0:
        raise InvalidSchottkyData("need lam > 1 for hyperbolic generators")
    mats = []
    a_plus, b_plus, a_minus, b_minus = [], [], [], []
    for i in range(g):
        t = i / (2.0 * g)
        phi = np.pi * t
        R = np.array([[np.cos(phi), -np.sin(phi)], [np.sin(phi), np.cos(phi)]])
        A = R @ np.diag([lam, 1.0 / lam]) @ R.T
        mats.append(A)
        center = (0.5 + t) % 1.0
        am = (center - halfwidth) % 1.0
        bm = (center + halfwidth) % 1.0
        a_minus.append(am)
        b_minus.append(bm)
        a_plus.append(mobius_angle(A, bm))
        b_plus.append(mobius_angle(A, am))
    model = CircleModel(g=g, a_plus=tuple(a_plus), b_plus=tuple(b_plus),
                        a_minus=tuple(a_minus), b_minus=tuple(b_minus),
                        flavor=DISJOINT)
    return mats, model


def sp4_schottky_example(lam=4.0) -> SchottkyData:
    """The shipped two-generator example in Sp(4).

    lam = 4 keeps depth-6 word matrices well-conditioned (descent round
    trips recover points to ~1e-9); the contraction constant comes from the
    interval separation and does not degrade at moderate lam."""
    mats, model = classical_schottky_example(g=2, lam=lam)
    return embed_diagonal_sl2(mats, model, 2)
