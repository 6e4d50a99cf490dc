"""Seeded random directions and levels.

All randomness in the package flows from a single integer seed through
:class:`numpy.random.SeedSequence`; independent streams for workers or
paths are spawned from it, so results depend only on the seed (and on the
worker count where a routine documents that).
"""
from __future__ import annotations


import numpy as np

from .exact import Rat

DIRECTION_BOUND = 10**6
LEVEL_BITS = 32


def make_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.SeedSequence):
        return np.random.Generator(np.random.PCG64(seed))
    return np.random.default_rng(seed)


def spawn(seed, n: int) -> list[np.random.SeedSequence]:
    """``n`` independent child seeds of ``seed``; child ``i`` depends only on (seed, i)."""
    ss = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    return ss.spawn(n)


def random_int_direction(rng: np.random.Generator, dim: int = 3, bound: int = DIRECTION_BOUND) -> tuple[int, ...]:
    """Uniform integer vector in [-bound, bound]^dim, never zero."""
    while True:
        z = tuple(int(c) for c in rng.integers(-bound, bound + 1, size=dim))
        if any(z):
            return z


def random_sphere_direction(rng: np.random.Generator, dim: int = 3, bound: int = DIRECTION_BOUND) -> tuple[int, ...]:
    """Uniform direction on the sphere, rationalised to an integer vector.

    A normalised Gaussian vector is scaled by ``bound`` and rounded, which
    keeps the direction within about 1/bound of a uniform sample while
    allowing exact evaluation downstream.
    """
    while True:
        g = rng.standard_normal(dim)
        norm = np.linalg.norm(g)
        if norm == 0:
            continue
        z = tuple(int(c) for c in np.rint(g / norm * bound))
        if any(z):
            return z


def uniform_fraction(rng: np.random.Generator, bits: int = LEVEL_BITS) -> Rat:
    """Uniform dyadic rational in the open interval (0, 1)."""
    return Rat(int(rng.integers(1, 2**bits)), 2**bits)


def uniform_level(rng: np.random.Generator, lo: Rat, hi: Rat) -> Rat:
    return lo + uniform_fraction(rng) * (hi - lo)
