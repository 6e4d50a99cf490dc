"""Exact rational vectors.

Coordinates are ``gmpy2.mpq`` rationals (``Rat``) and vectors are plain
tuples of them.  ``fractions.Fraction`` values are accepted on input and
compare and hash equal to the corresponding ``Rat``.  Nothing here is
ever rounded.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from gmpy2 import mpq

Rat = mpq
Vec = tuple  # tuple[Rat, ...]


def rat(x) -> Rat:
    """Coerce ints, Fractions and ``"p/q"`` strings to an exact rational.

    Floats are refused: silently converting them would smuggle binary
    rounding into exact computations.
    """
    if type(x) is Rat:
        return x
    if isinstance(x, Fraction):
        return Rat(x.numerator, x.denominator)
    if isinstance(x, bool):
        raise TypeError("bool is not a coordinate")
    if isinstance(x, int):
        return Rat(x)
    if isinstance(x, str):
        return Rat(Fraction(x.strip()))
    # numpy integers
    if hasattr(x, "__index__"):
        return Rat(int(x))
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def vec(coords: Iterable) -> Vec:
    return tuple(rat(c) for c in coords)


def format_rat(x) -> str:
    """Canonical string form: ``"p/q"``, or ``"p"`` when q = 1."""
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def add(u: Sequence, v: Sequence) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def neg(u: Sequence) -> Vec:
    return tuple(-a for a in u)


def scale(s, u: Sequence) -> Vec:
    return tuple(s * a for a in u)


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), 0)


def cross(u: Sequence, v: Sequence) -> Vec:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def det3(u: Sequence, v: Sequence, w: Sequence):
    return dot(u, cross(v, w))


def is_zero(u: Sequence) -> bool:
    return all(a == 0 for a in u)


def common_denominator(points: Iterable[Sequence]) -> int:
    return reduce(lcm, (int(rat(c).denominator) for p in points for c in p), 1)


def to_integer_points(points: Sequence[Sequence]) -> list[tuple[int, ...]]:
    """Scale a point set by one positive integer so every coordinate is integral.

    A positive uniform scaling preserves every orientation predicate, so
    combinatorial work can run on Python ints instead of rationals.
    """
    d = common_denominator(points)
    return [tuple(int(rat(c) * d) for c in p) for p in points]


def canonical_direction(u: Sequence) -> tuple[int, ...]:
    """Integer primitive representative of the line spanned by ``u``.

    Coordinates are integers with gcd 1 and the first nonzero coordinate is
    positive, so parallel vectors (of either orientation) map to the same key.
    """
    if is_zero(u):
        raise ValueError("zero vector has no direction")
    fr = [rat(c) for c in u]
    d = reduce(lcm, (int(c.denominator) for c in fr), 1)
    ints = [int(c * d) for c in fr]
    g = reduce(gcd, ints)
    ints = [c // g for c in ints]
    first = next(c for c in ints if c != 0)
    if first < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def primitive(u: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries, keeping its sign."""
    g = reduce(gcd, u)
    if g == 0:
        return tuple(u)
    return tuple(c // g for c in u)


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull of ``points`` (exact elimination)."""
    if not points:
        return -1
    p0 = points[0]
    rows = [list(sub(p, p0)) for p in points[1:]]
    return _rank(rows)


def _rank(rows: list[list]) -> int:
    rows = [[rat(c) for c in r] for r in rows if not is_zero(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / pr[col]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def linear_rank(vectors: Sequence[Sequence]) -> int:
    return _rank([list(v) for v in vectors])
