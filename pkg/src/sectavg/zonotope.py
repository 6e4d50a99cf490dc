"""Zonotopes, their generator hypergraph and zonotope recognition."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from . import exact as ex
from .exact import Rat
from .errors import DegenerateInput, RankDeficient, TooManyGenerators, UnsupportedDimension
from .polytope import Polytope, convex_hull, difference_body, facet_vertices, is_centrally_symmetric, sum_points
from .section import edge_classes

MAX_GENERATORS = 12


@dataclass(frozen=True)
class GeneratorSet:
    """Pairwise non-parallel, non-zero generators of a zonotope in R^3."""

    generators: tuple

    def __post_init__(self):
        gens = tuple(ex.vec(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if any(len(g) != 3 for g in gens):
            raise DegenerateInput("generators must be 3-vectors")
        if any(ex.is_zero(g) for g in gens):
            raise DegenerateInput("zero generator")
        dirs = [ex.canonical_direction(g) for g in gens]
        if len(set(dirs)) != len(dirs):
            raise DegenerateInput("two generators are parallel")

    @property
    def dim(self) -> int:
        return 3

    def __len__(self) -> int:
        return len(self.generators)

    @classmethod
    def of(cls, gens: Iterable[Sequence]) -> "GeneratorSet":
        return cls(tuple(gens))


@dataclass(frozen=True)
class GeneratorHypergraph:
    """Maximal sets of generators spanning a plane through the origin.

    Every pair of generators lies in exactly one edge; ``degrees[i]`` is the
    number of edges containing generator ``i``.
    """

    vertex_count: int
    edges: tuple  # tuple[frozenset[int], ...]
    degrees: tuple

    def edge_sizes(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for e in self.edges:
            out[len(e)] = out.get(len(e), 0) + 1
        return out


@dataclass(frozen=True)
class LambdaPrediction:
    constant: bool
    lam: int | None
    degrees: tuple


def build_zonotope(G: GeneratorSet | Iterable[Sequence]) -> Polytope:
    """The zonotope ``[0, a_1] + ... + [0, a_n]`` by iterated Minkowski sums."""
    if not isinstance(G, GeneratorSet):
        G = GeneratorSet.of(G)
    n = len(G)
    if n > MAX_GENERATORS:
        raise TooManyGenerators(f"{n} generators exceed the cap of {MAX_GENERATORS}")
    if n < 3 or ex.linear_rank(G.generators) < 3:
        raise RankDeficient("generators do not span R^3")
    origin = (Rat(0),) * 3
    pts = [origin]
    for g in G.generators:
        pts = sum_points(pts, [origin, g])
    return convex_hull(pts)


def coplanarity_hypergraph(G: GeneratorSet | Iterable[Sequence]) -> GeneratorHypergraph:
    """Group generator pairs by the plane they span (canonical normal)."""
    if not isinstance(G, GeneratorSet):
        G = GeneratorSet.of(G)
    gens = G.generators
    planes: dict[tuple[int, ...], set[int]] = {}
    for i, j in combinations(range(len(gens)), 2):
        key = ex.canonical_direction(ex.cross(gens[i], gens[j]))
        planes.setdefault(key, set()).update((i, j))
    edges = tuple(frozenset(s) for s in planes.values())
    degrees = tuple(sum(1 for e in edges if i in e) for i in range(len(gens)))
    return GeneratorHypergraph(len(gens), edges, degrees)


def predict_lambda(H: GeneratorHypergraph) -> LambdaPrediction:
    """Constant section average 2*deg when all generator degrees agree."""
    degs = set(H.degrees)
    if len(degs) == 1:
        return LambdaPrediction(True, 2 * degs.pop(), H.degrees)
    return LambdaPrediction(False, None, H.degrees)


def is_zonotope(P: Polytope) -> bool:
    """A 3-polytope is a zonotope iff all its facets are centrally symmetric."""
    if P.dim != 3:
        raise UnsupportedDimension("zonotope recognition is implemented for 3-polytopes")
    return all(is_centrally_symmetric(facet_vertices(P, k)) for k in range(P.n_facets))


def is_half_zonotope(P: Polytope) -> bool:
    """Whether the difference body P - P is a zonotope."""
    if P.dim != 3:
        raise UnsupportedDimension("half-zonotope test is implemented for 3-polytopes")
    return is_zonotope(difference_body(P))


def recover_generators(P: Polytope) -> list[ex.Vec]:
    """Generators of a zonotope read off its edge classes.

    In a zonotope all edges of one class are translates of the same
    generator, so each generator is its class sum divided by the class size.
    Raises ``ValueError`` if some class mixes different edge vectors.
    """
    gens = []
    for c in edge_classes(P).classes:
        g = ex.scale(Rat(1, c.size), c.class_sum)
        for k in c.edges:
            e = P.edge_vector(k)
            if e != g and ex.neg(e) != g:
                raise ValueError("edge class with unequal edge vectors: not a zonotope")
        gens.append(g)
    return gens
