"""Random exact instances for tests and the ``nccov check`` suites.

Coefficients are rationals with numerators in [-4, 4] and denominators in
{1, 2}.  Nonsingular matrices are drawn by rejection.  Generators are numpy
``Generator`` objects seeded through ``SeedSequence``, so a trial's stream
depends only on the integers it was derived from.
"""
from __future__ import annotations

import itertools
import zlib
from fractions import Fraction

import numpy as np

from .errors import Singular
from .geometry.tensors import TensorPolyMap
from .ncmatrix import NcMatrix, rc_inverse
from .scalar import Quaternion
from .vspace import Basis, CoordRow

MAX_REJECTIONS = 200


def stable_id(name: str) -> int:
    return zlib.crc32(name.encode("utf-8"))


def trial_rng(seed: int, suite: str, trial: int, prop: str = "") -> np.random.Generator:
    """Independent stream for one (seed, suite, trial[, property]) cell."""
    entropy = [seed & 0xFFFFFFFFFFFFFFFF, stable_id(suite), trial]
    if prop:
        entropy.append(stable_id(prop))
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))


def rational(rng: np.random.Generator) -> Fraction:
    return Fraction(int(rng.integers(-4, 5)), int(rng.choice((1, 2))))


def quaternion(rng: np.random.Generator) -> Quaternion:
    return Quaternion(rational(rng), rational(rng), rational(rng), rational(rng))


def central(rng: np.random.Generator) -> Quaternion:
    return Quaternion(rational(rng))


def nonzero_quaternion(rng: np.random.Generator) -> Quaternion:
    while True:
        q = quaternion(rng)
        if q:
            return q


def matrix(rng: np.random.Generator, rows: int, cols: int, central_only: bool = False) -> NcMatrix:
    draw = central if central_only else quaternion
    return NcMatrix(rows, cols, tuple(draw(rng) for _ in range(rows * cols)))


def nonsingular(rng: np.random.Generator, n: int, central_only: bool = False) -> NcMatrix:
    for _ in range(MAX_REJECTIONS):
        m = matrix(rng, n, n, central_only)
        try:
            rc_inverse(m)
        except Singular:
            continue
        return m
    raise RuntimeError(f"no nonsingular {n}x{n} matrix after {MAX_REJECTIONS} draws")


def coord_row(rng: np.random.Generator, n: int, central_only: bool = False) -> CoordRow:
    return CoordRow(matrix(rng, 1, n, central_only))


def basis(rng: np.random.Generator, n: int) -> Basis:
    return Basis(nonsingular(rng, n))


def dim(rng: np.random.Generator, max_dim: int) -> int:
    return int(rng.integers(1, max_dim + 1))


def tensor(rng: np.random.Generator, arity: int, n: int, max_terms: int):
    """Random tensor-sum map; each component gets 0..max_terms terms."""
    coords = {}
    for key in itertools.product(range(n), repeat=arity + 1):
        count = int(rng.integers(0, max_terms + 1))
        if count:
            coords[key] = tuple(tuple(quaternion(rng) for _ in range(arity + 1))
                                for _ in range(count))
    return TensorPolyMap(arity, n, coords)
