"""Positive halfspaces in RP^{2n-1}, the fundamental domain of a Schottky
system, point classification and tiling by descent, and sampled geometry
exports (quadric boundaries, limit Legendrian lines)."""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import numkit
from . import schottky as sk
from . import symplectic as sp
from .errors import InvalidDomainData, NonPositiveLine

CLASSIFY_TOL = 1e-9
CHART_DENOM_TOL = 1e-6


def projective_point(v):
    """Unit representative with the first non-negligible coordinate positive."""
    v = np.asarray(v, dtype=float)
    nrm = np.linalg.norm(v)
    if nrm == 0.0 or not np.all(np.isfinite(v)):
        raise ValueError("projective point needs a nonzero finite vector")
    v = v / nrm
    for x in v:
        if abs(x) > 1e-12:
            if x < 0.0:
                v = -v
            break
    return v


@dataclass(frozen=True, eq=False)
class Halfspace:
    """Lines positive for the pair form of an ordered transverse pair."""
    P: sp.Lagrangian
    Q: sp.Lagrangian
    matrix: np.ndarray
    scale: float


def halfspace(P: sp.Lagrangian, Q: sp.Lagrangian) -> Halfspace:
    B = sp.bform(P, Q).matrix
    return Halfspace(P=P, Q=Q, matrix=B, scale=float(np.linalg.norm(B, 2)))


@dataclass(frozen=True)
class HalfspaceValue:
    value: float
    inside: bool
    boundary: bool


def halfspace_contains(H: Halfspace, p, tol=CLASSIFY_TOL) -> HalfspaceValue:
    """Form value on the line and the inside/boundary verdicts."""
    v = projective_point(p)
    val = float(v @ H.matrix @ v)
    band = tol * H.scale
    return HalfspaceValue(value=val, inside=val > band, boundary=abs(val) <= band)


@dataclass
class SampleReport:
    checked: int
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.violations)} violations"
        return f"{self.checked} samples checked: {status}"


def complement_identities_check(H: Halfspace, samples=1000, seed=0,
                                rel_tol=1e-12) -> SampleReport:
    """The opposite halfspace is the sign flip, and the pair reflection
    exchanges inside and outside."""
    rng = np.random.default_rng(seed)
    opp = halfspace(H.Q, H.P)
    violations = []
    flip = float(np.max(np.abs(opp.matrix + H.matrix)))
    if flip > rel_tol * H.scale:
        violations.append(f"matrix sign flip off by {flip:.3e}")
    R = sp.reflection(H.P, H.Q).matrix
    dim = H.matrix.shape[0]
    checked = 0
    for _ in range(samples):
        v = projective_point(rng.normal(size=dim))
        val = float(v @ H.matrix @ v)
        val_opp = float(v @ opp.matrix @ v)
        checked += 1
        if abs(val + val_opp) > rel_tol * max(1.0, abs(val)):
            violations.append(f"pointwise sign flip off by {abs(val + val_opp):.3e}")
        if abs(val) > CLASSIFY_TOL * H.scale:
            val_refl = float((R @ v) @ H.matrix @ (R @ v) / np.dot(R @ v, R @ v))
            if val * val_refl >= 0.0:
                violations.append("reflection image on the same side")
        if len(violations) > 20:
            break
    return SampleReport(checked=checked, violations=violations)


def projectivisation_check(H: Halfspace, samples=200, seed=0) -> SampleReport:
    """Inside lines complete to Lagrangians in the interval; outside lines
    refuse to."""
    rng = np.random.default_rng(seed)
    n = H.P.n
    violations = []
    checked = 0
    while checked < samples:
        v = projective_point(rng.normal(size=2 * n))
        verdict = halfspace_contains(H, v)
        if verdict.boundary:
            continue
        checked += 1
        if verdict.inside:
            try:
                L = sp.complete_positive_line(H.P, H.Q, v)
            except NonPositiveLine:
                violations.append("completion refused an inside line")
                continue
            if not sp.cyclic_lag(H.P, L, H.Q):
                violations.append("completed Lagrangian is not in the interval")
            if float(np.max(np.abs(L.projector() @ v - v))) > 1e-8:
                violations.append("completed Lagrangian does not contain the line")
        else:
            try:
                sp.complete_positive_line(H.P, H.Q, v)
                violations.append("completion accepted an outside line")
            except NonPositiveLine:
                pass
        if len(violations) > 20:
            break
    return SampleReport(checked=checked, violations=violations)


def disjointness_check(lagrangians, samples=1000, seed=0) -> SampleReport:
    """For a 4-cycle (P, Q, R, S): no line is positive for both pair forms."""
    P, Q, R, S = lagrangians
    from .pco import PcoModel, is_cycle
    model = PcoModel("lag", sp.cyclic_lag)
    if not is_cycle(model, [P, Q, R, S]):
        raise ValueError("input quadruple is not a cycle")
    H1 = halfspace(P, Q)
    H2 = halfspace(R, S)
    rng = np.random.default_rng(seed)
    dim = 2 * P.n
    violations = []
    checked = 0
    inside_seen = 0
    while checked < samples:
        v = projective_point(rng.normal(size=dim))
        checked += 1
        first = halfspace_contains(H1, v)
        if first.inside:
            inside_seen += 1
            second = halfspace_contains(H2, v)
            if second.value >= 0.0:
                violations.append(
                    f"line positive for both pairs ({first.value:.3e}, {second.value:.3e})")
        if len(violations) > 20:
            break
    if inside_seen == 0:
        violations.append("sampling never hit the first halfspace")
    return SampleReport(checked=checked, violations=violations)


# --- the fundamental domain ---

def halfspace_label(letter) -> str:
    return f"{chr(ord('a') + letter[0])}{'+' if letter[1] > 0 else '-'}"


@dataclass(frozen=True, eq=False)
class FundamentalDomain:
    """Complement of the 2g positive halfspaces of the defining intervals."""
    data: sk.SchottkyData
    letters: tuple
    halfspaces: tuple
    exit_norms: tuple

    def exit_letter(self, letter):
        return (letter[0], -letter[1])


def fundamental_domain(data: sk.SchottkyData) -> FundamentalDomain:
    letters = tuple(data.model.letters())
    spaces = tuple(halfspace(*data.interval(letter)) for letter in letters)
    norms = tuple(float(np.linalg.norm(data.letter_matrix((l[0], -l[1])), 2))
                  for l in letters)
    return FundamentalDomain(data=data, letters=letters, halfspaces=spaces,
                             exit_norms=norms)


IN_DOMAIN = "in_domain"
IN_HALFSPACE = "in_halfspace"
BOUNDARY = "boundary"
LIMIT_PROXIMAL = "limit_proximal"


@dataclass(frozen=True)
class Classification:
    kind: str
    letter: Optional[tuple]
    values: np.ndarray

    def label(self) -> str:
        if self.kind == IN_HALFSPACE:
            return f"{IN_HALFSPACE}:{halfspace_label(self.letter)}"
        return self.kind


def classify(fd: FundamentalDomain, p, tol=CLASSIFY_TOL) -> Classification:
    """Locate a projective point relative to the domain.

    Strictly negative on every form: in the domain.  Exactly one form
    positive: in that halfspace (two positives contradict disjointness and
    raise).  Otherwise the point sits in the boundary band."""
    v = projective_point(p)
    values = np.array([float(v @ H.matrix @ v) / H.scale for H in fd.halfspaces])
    positive = np.nonzero(values > tol)[0]
    if positive.size >= 2:
        raise InvalidDomainData(
            f"point is positive for {positive.size} halfspaces; "
            "defining intervals are not disjoint")
    if positive.size == 1:
        idx = int(positive[0])
        return Classification(kind=IN_HALFSPACE, letter=fd.letters[idx], values=values)
    if float(np.max(values)) >= -tol:
        return Classification(kind=BOUNDARY, letter=None, values=values)
    return Classification(kind=IN_DOMAIN, letter=None, values=values)


@dataclass(frozen=True)
class DescentResult:
    word: sk.ReducedWord
    point: np.ndarray
    status: str
    steps: int
    radius: float


DESCENT_SEED_RADIUS = 1e-14


def descend(fd: FundamentalDomain, p, max_steps=60, tol=CLASSIFY_TOL) -> DescentResult:
    """Certified descent into the fundamental domain.

    Repeatedly applies the generator that exits the point's current
    halfspace; on success the returned reduced word W satisfies rho(W)(p)
    in D.  An error radius is propagated through every step (the projective
    action amplifies perturbations by up to ||M|| / ||M v||); once the
    radius overwhelms the classification margins the point is numerically
    indistinguishable from a limit point and the descent reports
    limit_proximal rather than an uncertifiable answer.  Exhausting
    max_steps reports limit_proximal as well."""
    data = fd.data
    v = projective_point(p)
    r = DESCENT_SEED_RADIUS
    word = sk.ReducedWord(())
    for step in range(max_steps + 1):
        c = classify(fd, v, tol)
        if c.kind == BOUNDARY:
            return DescentResult(word=word, point=v, status=BOUNDARY,
                                 steps=step, radius=r)
        if c.kind == IN_DOMAIN:
            # value sensitivity to a radius-r point perturbation is 2r
            if float(np.max(c.values)) + 2.0 * r < -tol:
                return DescentResult(word=word, point=v, status=IN_DOMAIN,
                                     steps=step, radius=r)
            return DescentResult(word=word, point=v, status=LIMIT_PROXIMAL,
                                 steps=step, radius=r)
        idx = fd.letters.index(c.letter)
        certified = c.values[idx] - 2.0 * r > tol and all(
            c.values[j] + 2.0 * r < tol
            for j in range(len(fd.letters)) if j != idx)
        if not certified:
            return DescentResult(word=word, point=v, status=LIMIT_PROXIMAL,
                                 steps=step, radius=r)
        if step == max_steps:
            break
        exit_letter = fd.exit_letter(c.letter)
        w = data.letter_matrix(exit_letter) @ v
        alpha = fd.exit_norms[idx] / float(np.linalg.norm(w))
        r = alpha * (r + 20.0 * np.finfo(float).eps)
        v = projective_point(w)
        word = sk.concat_reduce(sk.ReducedWord((exit_letter,)), word)
    return DescentResult(word=word, point=v, status=LIMIT_PROXIMAL,
                         steps=max_steps, radius=r)


# --- geometry export ---

def direction_grid(dim: int, count: int):
    """Deterministic near-uniform directions on the unit sphere of R^dim:
    a structured grid in spherical coordinates."""
    if count < 1:
        raise ValueError("need a positive number of directions")
    if dim == 1:
        return np.array([[1.0]])
    n_angles = dim - 1
    per = max(2, int(np.ceil(count ** (1.0 / n_angles))))
    axes = []
    for j in range(n_angles):
        if j == n_angles - 1:
            axes.append((np.arange(per) + 0.5) / per * 2.0 * np.pi)
        else:
            axes.append((np.arange(per) + 0.5) / per * np.pi)
    mesh = np.meshgrid(*axes, indexing="ij")
    angles = np.stack([m.ravel() for m in mesh], axis=1)
    pts = np.empty((angles.shape[0], dim))
    for row, phi in enumerate(angles):
        v = np.empty(dim)
        sin_prod = 1.0
        for j in range(n_angles):
            v[j] = sin_prod * np.cos(phi[j])
            sin_prod *= np.sin(phi[j])
        v[dim - 1] = sin_prod
        pts[row] = v
    return pts


def _chart_coords(points, chart_index, denom_tol=CHART_DENOM_TOL):
    denom = points[:, chart_index]
    keep = np.abs(denom) > denom_tol
    if not np.any(keep):
        return np.zeros((0, points.shape[1] - 1)), keep
    kept = points[keep] / denom[keep, None]
    chart = np.delete(kept, chart_index, axis=1)
    return chart, keep


def _best_chart_index(points, default):
    counts = [int(np.sum(np.abs(points[:, c]) > CHART_DENOM_TOL))
              for c in range(points.shape[1])]
    if points.shape[0] and counts[default] >= 0.25 * points.shape[0]:
        return default
    return int(np.argmax(counts))


@dataclass
class QuadricSample:
    """Sampled points of the null conic of a halfspace form."""
    points_projective: np.ndarray
    points_chart: np.ndarray
    chart_index: int
    max_residual: float
    notice: str = ""


def quadric_export(H: Halfspace, resolution: int,
                   chart_index: Optional[int] = None) -> QuadricSample:
    """Deterministic sample of {B(v,v) = 0}: each grid direction through a
    seed null point meets the quadric in one more point; every kept point is
    Newton-polished to |B| below 1e-8."""
    if resolution < 1:
        raise ValueError("resolution must be positive")
    B = H.matrix
    dim = B.shape[0]
    w, V = numkit.sym_eig(B)
    if w[0] >= 0.0 or w[-1] <= 0.0:
        return QuadricSample(points_projective=np.zeros((0, dim)),
                             points_chart=np.zeros((0, dim - 1)),
                             chart_index=dim - 1 if chart_index is None else chart_index,
                             max_residual=0.0,
                             notice="form is definite; null set is empty")
    seed = V[:, -1] / np.sqrt(w[-1]) + V[:, 0] / np.sqrt(-w[0])
    seed = seed / np.linalg.norm(seed)
    found = [seed]
    for d in direction_grid(dim, resolution * resolution):
        denom = float(d @ B @ d)
        if abs(denom) < 1e-12 * H.scale:
            continue
        t = -2.0 * float(seed @ B @ d) / denom
        q = seed + t * d
        nrm = np.linalg.norm(q)
        if nrm < 1e-9:
            continue
        q = q / nrm
        for _ in range(3):
            grad = B @ q
            gg = float(grad @ grad)
            if gg < 1e-30:
                break
            q = q - (float(q @ B @ q) / (2.0 * gg)) * grad
            q = q / np.linalg.norm(q)
        if abs(float(q @ B @ q)) < 1e-8 * H.scale:
            found.append(projective_point(q))
    pts = np.array(found)
    residual = float(np.max(np.abs(np.einsum("ij,jk,ik->i", pts, B, pts))))
    default = dim - 1 if chart_index is None else chart_index
    use_index = _best_chart_index(pts, default) if chart_index is None else chart_index
    chart, keep = _chart_coords(pts, use_index)
    notice = "" if np.any(keep) else "chart slice is empty"
    return QuadricSample(points_projective=pts, points_chart=chart,
                         chart_index=use_index, max_residual=residual,
                         notice=notice)


@dataclass
class LegendrianSample:
    """Sampled projective lines of one limit Lagrangian."""
    word: sk.ReducedWord
    points_projective: np.ndarray
    points_chart: np.ndarray
    chart_index: int


def legendrian_export(entries, per_line=24, chart_index: Optional[int] = None):
    """Sample the projectivization of each limit-set Lagrangian."""
    out = []
    for entry in entries:
        L = entry.lagrangian
        n = L.n
        dirs = direction_grid(n, per_line)
        pts = np.array([projective_point(L.basis @ c) for c in dirs])
        default = 2 * n - 1 if chart_index is None else chart_index
        use_index = _best_chart_index(pts, default) if chart_index is None else chart_index
        chart, _ = _chart_coords(pts, use_index)
        out.append(LegendrianSample(word=entry.word, points_projective=pts,
                                    points_chart=chart, chart_index=use_index))
    return out
