"""Command-line driver.

Subcommands: validate | limit-set | classify | tile | export-scene | axioms.
Every command exits nonzero on any invariant violation; identical inputs,
flags and seed produce byte-identical output files.
"""

import argparse
import sys

import numpy as np

from . import domains, numkit, pco, schottky as sk, specfile, symplectic as sp
from .errors import GeometryError, SpecError


def _load(path):
    data, tol = specfile.load_spec(path)
    return data, tol


def _read_points(path, dim):
    """Whitespace-separated rows of 2n floats; blank lines and # comments skipped."""
    points = []
    try:
        with open(path) as fh:
            for lineno, line in enumerate(fh, 1):
                body = line.split("#", 1)[0].strip()
                if not body:
                    continue
                parts = body.split()
                if len(parts) != dim:
                    raise SpecError(f"{path}:{lineno}: expected {dim} coordinates, got {len(parts)}")
                try:
                    points.append([float(p) for p in parts])
                except ValueError as exc:
                    raise SpecError(f"{path}:{lineno}: non-numeric coordinate") from exc
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc}") from exc
    return points


def _emit(out_path, text):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_validate(args) -> int:
    data, _ = _load(args.spec)
    report = sk.validate(data)
    print("validation:", report.summary())
    if not report.ok:
        return 1
    pp = sk.ping_pong_check(data, depth=args.depth)
    print("ping pong:", pp.summary())
    return 0 if pp.ok else 1


def cmd_limit_set(args) -> int:
    data, _ = _load(args.spec)
    report = sk.validate(data)
    if not report.ok:
        print(report.summary())
        return 1
    entries = sk.limit_set(data, args.depth, budget=args.max_words)
    C = sk.contraction_constant(data, seed=args.seed)
    M = sk.second_order_diameter(data)
    doc = specfile.limit_fragment_dict(data, args.depth, entries, C, M, args.seed)
    specfile.write_canonical(args.out, doc)
    print(f"wrote {len(entries)} limit entries to {args.out}")
    return 0


def cmd_classify(args) -> int:
    data, _ = _load(args.spec)
    fd = domains.fundamental_domain(data)
    lines = []
    for row in _read_points(args.points, 2 * data.n):
        c = domains.classify(fd, np.array(row), tol=args.tol)
        lines.append(c.label())
    _emit(args.out, "".join(f"{l}\n" for l in lines))
    return 0


def cmd_tile(args) -> int:
    data, _ = _load(args.spec)
    fd = domains.fundamental_domain(data)
    lines = []
    for row in _read_points(args.points, 2 * data.n):
        r = domains.descend(fd, np.array(row), max_steps=args.max_steps, tol=args.tol)
        coords = " ".join(format(x, ".17g") for x in r.point)
        lines.append(f"{r.status} {r.word} {coords}")
    _emit(args.out, "".join(f"{l}\n" for l in lines))
    return 0


def _quadric_entries(data, fd, resolution):
    entries = []
    for letter, H in zip(fd.letters, fd.halfspaces):
        q = domains.quadric_export(H, resolution)
        entries.append({
            "name": domains.halfspace_label(letter),
            "chart_index": q.chart_index,
            "max_residual": q.max_residual,
            "points": q.points_chart.tolist(),
        })
    return entries


def _sign_grid_entries(data, fd, resolution):
    dirs = domains.direction_grid(2 * data.n, resolution * resolution)
    entries = []
    for letter, H in zip(fd.letters, fd.halfspaces):
        values = np.einsum("ij,jk,ik->i", dirs, H.matrix, dirs)
        entries.append({
            "name": domains.halfspace_label(letter),
            "grid_points": dirs.tolist(),
            "values": values.tolist(),
        })
    return entries


def cmd_export_scene(args) -> int:
    if args.resolution < 1:
        print("resolution must be positive", file=sys.stderr)
        return 2
    data, tol = _load(args.spec)
    report = sk.validate(data)
    if not report.ok:
        print(report.summary())
        return 1
    fd = domains.fundamental_domain(data)
    C = sk.contraction_constant(data, seed=args.seed)
    M = sk.second_order_diameter(data)
    entries = sk.limit_set(data, args.depth)
    notice = ""
    if data.n == 2:
        quadrics = _quadric_entries(data, fd, args.resolution)
        legendrians = [{
            "word": str(s.word),
            "points": s.points_chart.tolist(),
        } for s in domains.legendrian_export(entries)]
    else:
        notice = f"n={data.n}: downgraded to sign-grid export (full 3-D scene needs n=2)"
        print(notice)
        quadrics = _sign_grid_entries(data, fd, args.resolution)
        legendrians = [{
            "word": str(s.word),
            "points": s.points_projective.tolist(),
        } for s in domains.legendrian_export(entries)]
    sample = domains.direction_grid(2 * data.n, 256)
    counts = {}
    for v in sample:
        label = domains.classify(fd, v).label()
        counts[label] = counts.get(label, 0) + 1
    summary = {k: counts[k] for k in sorted(counts)}
    doc = specfile.scene_dict(
        data, args.depth, args.seed,
        tolerances={"gap": sp.GAP_TOL, "classify": domains.CLASSIFY_TOL, **tol},
        C=C, M=M, quadrics=quadrics, legendrians=legendrians,
        words=[str(e.word) for e in entries],
        classification_summary=summary, notice=notice)
    specfile.write_canonical(args.out, doc)
    print(f"wrote scene with {len(quadrics)} quadrics and "
          f"{len(legendrians)} legendrians to {args.out}")
    return 0


def _axiom_samples(name, size, seed):
    rng = np.random.default_rng(seed)
    if name == "circle":
        return pco.circle_model(), [float(a) for a in
                                    (np.arange(size) + rng.uniform(0.1, 0.9, size)) / size]
    if name == "torus":
        first = (np.arange(size) + rng.uniform(0.1, 0.9, size)) / size
        second = rng.permutation(first)
        return pco.torus_model(), list(zip(first.tolist(), second.tolist()))
    if name == "integer-wrap":
        return pco.integer_wrap_model(), sorted(rng.choice(10 * size, size=size,
                                                           replace=False).tolist())
    raise SpecError(f"unknown builtin model {name!r}")


def _maslov_suite(n, count, seed):
    """Index identities on random pairwise-transverse tuples."""
    rng = np.random.default_rng(seed)
    failures = []
    for _ in range(count):
        P, V, Q, W = sp.random_transverse_tuple(n, rng, 4)
        m = sp.maslov(P, V, Q)
        if abs(m) > n:
            failures.append(f"|index| = {abs(m)} exceeds n")
        if sp.maslov(Q, V, P) != -m:
            failures.append("reversal does not negate the index")
        coc = (sp.maslov(V, Q, W) - sp.maslov(P, Q, W)
               + sp.maslov(P, V, W) - sp.maslov(P, V, Q))
        if coc != 0:
            failures.append(f"cocycle identity off by {coc}")
        T = sp.random_symplectic(n, rng)
        if sp.maslov(sp.apply_map(T, P), sp.apply_map(T, V), sp.apply_map(T, Q)) != m:
            failures.append("index not invariant under a symplectic map")
        if len(failures) > 10:
            break
    return failures


def cmd_axioms(args) -> int:
    target = args.target
    bad = False
    if target.startswith("lag:n="):
        try:
            n = int(target.split("=", 1)[1])
        except ValueError:
            print(f"bad model name {target!r}", file=sys.stderr)
            return 2
    elif target in ("circle", "torus", "integer-wrap"):
        n = None
    else:
        data, _ = _load(target)
        n = data.n
    if n is None:
        model, sample = _axiom_samples(target, max(args.samples, 8), args.seed)
        report = pco.axiom_check(model, sample, check_totality=True)
        print(f"model {target}:")
        print(report.summary())
        bad = not report.ok
        if report.totality:
            print("notice: relation is not total (expected for partial orders)")
    else:
        rng = np.random.default_rng(args.seed)
        pts = [sp.random_lagrangian(n, rng) for _ in range(10)]
        report = pco.axiom_check(sp.lagrangian_pco_model(n), pts)
        print(f"lagrangian PCO (n={n}) on 10 sampled points:")
        print(report.summary())
        bad = not report.ok
        failures = _maslov_suite(n, args.samples, args.seed)
        print(f"index identities on {args.samples} random tuples: "
              f"{len(failures)} failures")
        for f in failures[:10]:
            print(f"FAIL: {f}")
        bad = bad or bool(failures)
    return 1 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lagschottky",
        description="Schottky groups on the Lagrangian Grassmannian: "
                    "validation, limit sets, tiling, and scene export.")
    sub = parser.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("validate", help="check a spec file and run ping pong")
    pv.add_argument("spec")
    pv.add_argument("--depth", type=int, default=5)
    pv.set_defaults(func=cmd_validate)

    pl = sub.add_parser("limit-set", help="compute limit Lagrangians at depth")
    pl.add_argument("spec")
    pl.add_argument("--depth", type=int, default=6)
    pl.add_argument("--out", required=True)
    pl.add_argument("--seed", type=int, default=0)
    pl.add_argument("--max-words", type=int, default=sk.DEFAULT_WORD_BUDGET)
    pl.set_defaults(func=cmd_limit_set)

    pc = sub.add_parser("classify", help="classify points against the domain")
    pc.add_argument("spec")
    pc.add_argument("points")
    pc.add_argument("--tol", type=float, default=domains.CLASSIFY_TOL)
    pc.add_argument("--out", default=None)
    pc.set_defaults(func=cmd_classify)

    pt = sub.add_parser("tile", help="descend points into the fundamental domain")
    pt.add_argument("spec")
    pt.add_argument("points")
    pt.add_argument("--max-steps", type=int, default=60)
    pt.add_argument("--tol", type=float, default=domains.CLASSIFY_TOL)
    pt.add_argument("--out", default=None)
    pt.set_defaults(func=cmd_tile)

    pe = sub.add_parser("export-scene", help="write a scene document")
    pe.add_argument("spec")
    pe.add_argument("--depth", type=int, default=4)
    pe.add_argument("--resolution", type=int, default=32)
    pe.add_argument("--seed", type=int, default=0)
    pe.add_argument("--out", required=True)
    pe.set_defaults(func=cmd_export_scene)

    pa = sub.add_parser("axioms", help="run order-axiom and index-identity suites")
    pa.add_argument("target", help="circle | torus | integer-wrap | lag:n=N | spec path")
    pa.add_argument("--samples", type=int, default=12)
    pa.add_argument("--seed", type=int, default=0)
    pa.set_defaults(func=cmd_axioms)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SpecError as exc:
        print(f"spec error: {exc}", file=sys.stderr)
        return 2
    except GeometryError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
