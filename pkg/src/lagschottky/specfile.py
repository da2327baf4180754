"""Spec and scene file formats.

Both are JSON with a version tag, row-major matrices, and a canonical writer
(fixed key order, floats at 17 significant digits) so identical inputs
produce byte-identical files.
"""

import json
import math

import numpy as np

from . import schottky as sk
from . import symplectic as sp
from .errors import SpecError

SPEC_VERSION = "schottky-spec-1"
SCENE_VERSION = "schottky-scene-1"
_SIDES = ("a_plus", "b_plus", "a_minus", "b_minus")


def _format_scalar(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if not math.isfinite(x):
            raise SpecError("non-finite number in output document")
        return format(x, ".17g")
    if isinstance(x, str):
        return json.dumps(x)
    if x is None:
        return "null"
    raise SpecError(f"cannot serialize {type(x).__name__}")


def dumps_canonical(obj, indent=0) -> str:
    """Deterministic JSON: insertion-ordered keys, %.17g floats."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        rows = [f"{inner}{json.dumps(str(k))}: {dumps_canonical(v, indent + 1)}"
                for k, v in obj.items()]
        return "{\n" + ",\n".join(rows) + "\n" + pad + "}"
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        flat = all(not isinstance(v, (dict, list, tuple, np.ndarray)) for v in obj)
        if flat:
            return "[" + ", ".join(_format_scalar(v) for v in obj) + "]"
        rows = [f"{inner}{dumps_canonical(v, indent + 1)}" for v in obj]
        return "[\n" + ",\n".join(rows) + "\n" + pad + "]"
    return _format_scalar(obj)


def write_canonical(path, obj):
    with open(path, "w") as fh:
        fh.write(dumps_canonical(obj))
        fh.write("\n")


# --- spec files ---

def data_to_spec_dict(data: sk.SchottkyData, tol=None) -> dict:
    model = data.model
    circle = {}
    lagr = {}
    for side in _SIDES:
        which = side[0]
        sign = 1 if side.endswith("plus") else -1
        circle[side] = [float(model.interval_angles((i, sign))[0 if which == "a" else 1])
                        for i in range(model.g)]
        lagr[side] = [data.interval((i, sign))[0 if which == "a" else 1].basis.tolist()
                      for i in range(model.g)]
    doc = {
        "version": SPEC_VERSION,
        "n": data.n,
        "g": model.g,
        "flavor": model.flavor,
        "endpoints_circle": circle,
        "endpoints_lagrangian": lagr,
        "generators": [T.matrix.tolist() for T in data.generators],
    }
    if tol:
        doc["tol"] = dict(tol)
    return doc


def _need(doc, key, types):
    if key not in doc:
        raise SpecError(f"missing field {key!r}")
    val = doc[key]
    if not isinstance(val, types):
        raise SpecError(f"field {key!r} has type {type(val).__name__}")
    return val


def _matrix(raw, rows, cols, where):
    try:
        M = np.array(raw, dtype=float)
    except (TypeError, ValueError) as exc:
        raise SpecError(f"{where}: not a numeric matrix") from exc
    if M.shape != (rows, cols):
        raise SpecError(f"{where}: shape {M.shape}, want ({rows}, {cols})")
    if not np.all(np.isfinite(M)):
        raise SpecError(f"{where}: non-finite entries")
    return M


def spec_dict_to_data(doc: dict):
    """Build SchottkyData from a parsed spec document.

    Returns (data, tol_overrides).  Structural problems raise SpecError with
    the offending field; bad endpoint matrices surface the geometric error.
    """
    version = _need(doc, "version", str)
    if version != SPEC_VERSION:
        raise SpecError(f"unknown version tag {version!r} (want {SPEC_VERSION!r})")
    n = _need(doc, "n", int)
    g = _need(doc, "g", int)
    if n < 1 or g < 1:
        raise SpecError("n and g must be positive")
    flavor = _need(doc, "flavor", str)
    if flavor not in (sk.DISJOINT, sk.SHARED):
        raise SpecError(f"flavor must be {sk.DISJOINT!r} or {sk.SHARED!r}")
    circle = _need(doc, "endpoints_circle", dict)
    lagr = _need(doc, "endpoints_lagrangian", dict)
    angles = {}
    for side in _SIDES:
        vals = circle.get(side)
        if not isinstance(vals, list) or len(vals) != g:
            raise SpecError(f"endpoints_circle.{side} must list {g} angles")
        try:
            angles[side] = tuple(float(v) for v in vals)
        except (TypeError, ValueError) as exc:
            raise SpecError(f"endpoints_circle.{side}: non-numeric angle") from exc
    model = sk.CircleModel(g=g, a_plus=angles["a_plus"], b_plus=angles["b_plus"],
                           a_minus=angles["a_minus"], b_minus=angles["b_minus"],
                           flavor=flavor)
    images = {}
    for i in range(g):
        for sign, plus in ((1, "plus"), (-1, "minus")):
            pair = []
            for which in ("a", "b"):
                side = f"{which}_{plus}"
                mats = lagr.get(side)
                if not isinstance(mats, list) or len(mats) != g:
                    raise SpecError(f"endpoints_lagrangian.{side} must list {g} matrices")
                raw = _matrix(mats[i], 2 * n, n, f"endpoints_lagrangian.{side}[{i}]")
                try:
                    pair.append(sp.lagrangian_from_matrix(raw))
                except Exception as exc:
                    raise SpecError(
                        f"endpoints_lagrangian.{side}[{i}]: "
                        f"{type(exc).__name__}: {exc}") from exc
            images[(i, sign)] = tuple(pair)
    raw_gens = _need(doc, "generators", list)
    if len(raw_gens) != g:
        raise SpecError(f"generators must list {g} matrices")
    gens = []
    for i, raw in enumerate(raw_gens):
        M = _matrix(raw, 2 * n, 2 * n, f"generators[{i}]")
        try:
            gens.append(sp.symplectic_map(M))
        except Exception as exc:
            raise SpecError(f"generators[{i}]: {type(exc).__name__}: {exc}") from exc
    tol = doc.get("tol", {})
    if not isinstance(tol, dict):
        raise SpecError("tol must be an object")
    return sk.SchottkyData(model=model, n=n, endpoint_images=images,
                           generators=gens), dict(tol)


def load_spec(path):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}:{exc.lineno}: invalid JSON: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise SpecError("top level must be an object")
    return spec_dict_to_data(doc)


def save_spec(path, data: sk.SchottkyData, tol=None):
    write_canonical(path, data_to_spec_dict(data, tol))


# --- scene files ---

def limit_fragment_dict(data, depth, entries, C, M, seed) -> dict:
    return {
        "version": SCENE_VERSION,
        "kind": "limit-set",
        "n": data.n,
        "g": data.model.g,
        "depth": depth,
        "seed": seed,
        "contraction_constant": C,
        "diameter_bound": M,
        "words": [str(e.word) for e in entries],
        "lagrangians": [e.lagrangian.basis.tolist() for e in entries],
        "diameter_bounds": [e.diameter_bound for e in entries],
    }


def scene_dict(data, depth, seed, tolerances, C, M, quadrics, legendrians,
               words, classification_summary, notice="") -> dict:
    return {
        "version": SCENE_VERSION,
        "kind": "scene",
        "n": data.n,
        "g": data.model.g,
        "depth": depth,
        "seed": seed,
        "tolerances": dict(tolerances),
        "contraction_constant": C,
        "diameter_bound": M,
        "notice": notice,
        "quadrics": quadrics,
        "legendrians": legendrians,
        "words": words,
        "classification_summary": classification_summary,
    }


def load_scene(path) -> dict:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}:{exc.lineno}: invalid JSON: {exc.msg}") from exc
    if not isinstance(doc, dict) or doc.get("version") != SCENE_VERSION:
        raise SpecError(f"not a {SCENE_VERSION} document")
    return doc
