"""JSON serialisation of polytopes and generator sets.

Rationals are written as canonical ``"p/q"`` strings (``"p"`` when q = 1).
Only vertex coordinates are stored for polytopes; the face structure is
always recomputed on load.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from . import exact as ex
from .polytope import Polytope, convex_hull
from .zonotope import GeneratorSet


def _coords(v) -> list[str]:
    return [ex.format_rat(ex.rat(c)) for c in v]


def polytope_to_dict(P: Polytope) -> dict[str, Any]:
    return {"dim": P.dim, "vertices": [_coords(v) for v in P.vertices]}


def polytope_from_dict(d: dict[str, Any]) -> Polytope:
    dim = int(d["dim"])
    if dim not in (2, 3):
        raise ValueError("dim must be 2 or 3")
    pts = [ex.vec(str(c) for c in v) for v in d["vertices"]]
    return convex_hull(pts, dim)


def generators_to_dict(G: GeneratorSet) -> dict[str, Any]:
    return {"dim": 3, "generators": [_coords(g) for g in G.generators]}


def generators_from_dict(d: dict[str, Any]) -> GeneratorSet:
    return GeneratorSet.of(ex.vec(str(c) for c in g) for g in d["generators"])


def to_json(d, indent: int = 1, _level: int = 0) -> str:
    """JSON text with nested containers indented but scalar-only lists kept on one line."""
    pad, inner = " " * (indent * _level), " " * (indent * (_level + 1))
    if isinstance(d, dict):
        if not d:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {to_json(v, indent, _level + 1)}" for k, v in d.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(d, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple)) for v in d):
            return json.dumps(list(d))
        items = [inner + to_json(v, indent, _level + 1) for v in d]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(d)


def dumps(obj) -> str:
    if isinstance(obj, Polytope):
        d = polytope_to_dict(obj)
    elif isinstance(obj, GeneratorSet):
        d = generators_to_dict(obj)
    else:
        raise TypeError(type(obj).__name__)
    return to_json(d)


def load(path: str | Path) -> Polytope | GeneratorSet:
    """Read a polytope (``"vertices"``) or a generator set (``"generators"``)."""
    d = json.loads(Path(path).read_text())
    if "generators" in d:
        return generators_from_dict(d)
    return polytope_from_dict(d)


def save(obj, path: str | Path) -> None:
    Path(path).write_text(dumps(obj) + "\n")
