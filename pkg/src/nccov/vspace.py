"""Left vector space of columns over the quaternions, at desk scale.

Abstract vectors are represented by their coordinates in a fixed reference
frame (the identity basis).  A :class:`Basis` is an invertible matrix whose
row ``k`` holds the reference coordinates of the k-th basis vector, so the
vector with coordinates ``v`` relative to ``e`` is ``v @ e`` in the reference
frame.  Scalars act on coordinates from the left.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import BasisMismatch, ShapeMismatch
from .ncmatrix import NcMatrix, identity, is_rc_nonsingular, rc_inverse, rc_product, zero
from .scalar import Quaternion, as_quaternion, format_quaternion, parse_quaternion


@dataclass(frozen=True)
class CoordRow:
    """Coordinates ``(v[0], ..., v[n-1])`` of a vector, stored as a 1 x n matrix."""

    v: NcMatrix

    def __post_init__(self):
        if self.v.rows != 1:
            raise ShapeMismatch(f"coordinate row must be 1 x n, got {self.v.shape}")

    @classmethod
    def of(cls, *values) -> "CoordRow":
        return cls(NcMatrix.from_rows([values]))

    @classmethod
    def zeros(cls, n: int) -> "CoordRow":
        return cls(zero(1, n))

    @classmethod
    def unit(cls, n: int, p: int, scale: Quaternion = Quaternion.one()) -> "CoordRow":
        """``scale`` in slot ``p``, zero elsewhere."""
        return cls(NcMatrix(1, n, tuple(scale if k == p else Quaternion.zero() for k in range(n))))

    @property
    def n(self) -> int:
        return self.v.cols

    def __len__(self):
        return self.v.cols

    def __getitem__(self, k: int) -> Quaternion:
        return self.v.entries[k]

    def __iter__(self):
        return iter(self.v.entries)

    def __add__(self, other):
        if not isinstance(other, CoordRow):
            return NotImplemented
        return CoordRow(self.v + other.v)

    def __sub__(self, other):
        if not isinstance(other, CoordRow):
            return NotImplemented
        return CoordRow(self.v - other.v)

    def __neg__(self):
        return CoordRow(-self.v)

    def __rmul__(self, a):
        # left scalar action a * v
        return CoordRow(as_quaternion(a) * self.v)

    def __str__(self):
        return "(" + ", ".join(format_quaternion(x) for x in self) + ")"

    def to_text(self) -> str:
        return ",".join(format_quaternion(x) for x in self)

    @classmethod
    def parse(cls, text: str) -> "CoordRow":
        vals = []
        offset = 0
        for part in text.split(","):
            vals.append(parse_quaternion(part, base_offset=offset))
            offset += len(part) + 1
        return cls.of(*vals)


@dataclass(frozen=True)
class Basis:
    """A basis, given by its coordinate matrix relative to the reference frame.

    Construction fails with :class:`~nccov.errors.Singular` if the matrix is
    not rc-nonsingular.
    """

    e: NcMatrix
    _inv: NcMatrix = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.e.is_square():
            raise ShapeMismatch(f"basis matrix must be square, got {self.e.shape}")
        object.__setattr__(self, "_inv", rc_inverse(self.e))

    @classmethod
    def reference(cls, n: int) -> "Basis":
        return cls(identity(n))

    @property
    def n(self) -> int:
        return self.e.rows

    @property
    def inverse_matrix(self) -> NcMatrix:
        return self._inv

    def vector(self, k: int) -> CoordRow:
        """Reference coordinates of the k-th basis vector."""
        return CoordRow(NcMatrix(1, self.n, self.e.row(k)))


@dataclass(frozen=True)
class HomMatrix:
    """A homomorphism ``V_in -> V_out`` as its matrix relative to two bases.

    Row ``i`` of ``f`` holds the coordinates (relative to ``basis_out``) of the
    image of the i-th vector of ``basis_in``.
    """

    f: NcMatrix
    basis_in: Basis
    basis_out: Basis

    def __post_init__(self):
        if self.f.shape != (self.basis_in.n, self.basis_out.n):
            raise ShapeMismatch(
                f"matrix {self.f.shape} does not match bases of dims "
                f"{self.basis_in.n}, {self.basis_out.n}")

    @property
    def n_in(self) -> int:
        return self.f.rows

    @property
    def n_out(self) -> int:
        return self.f.cols

    @cached_property
    def is_automorphism(self) -> bool:
        return self.f.is_square() and self.basis_in == self.basis_out and is_rc_nonsingular(self.f)


def _check_dims(v: CoordRow, n: int):
    if v.n != n:
        raise ShapeMismatch(f"coordinate row of length {v.n} against dimension {n}")


def expand_in_reference(v: CoordRow, e: Basis) -> CoordRow:
    """Reference-frame coordinates of ``sum_k v[k] e_k``."""
    _check_dims(v, e.n)
    return CoordRow(rc_product(v.v, e.e))


def coords_in_basis(v_ref: CoordRow, e: Basis) -> CoordRow:
    """Coordinates relative to ``e`` of the vector with reference coordinates ``v_ref``."""
    _check_dims(v_ref, e.n)
    return CoordRow(rc_product(v_ref.v, e.inverse_matrix))


def apply_hom(h: HomMatrix, v: CoordRow) -> CoordRow:
    """Image coordinates ``w[k] = sum_i v[i] f[i, k]`` (relative to ``h.basis_out``)."""
    _check_dims(v, h.n_in)
    return CoordRow(rc_product(v.v, h.f))


def hom_from_matrix(f: NcMatrix, basis_in: Basis, basis_out: Basis) -> HomMatrix:
    return HomMatrix(f, basis_in, basis_out)


def matrix_of_hom(h: HomMatrix) -> NcMatrix:
    """Recover the matrix from the images of the basis vectors of ``basis_in``."""
    images = [apply_hom(h, CoordRow.unit(h.n_in, i)) for i in range(h.n_in)]
    return NcMatrix(h.n_in, h.n_out, tuple(x for w in images for x in w))


def compose_homs(h1: HomMatrix, h2: HomMatrix) -> HomMatrix:
    """``h2`` after ``h1``: apply_hom(result, v) == apply_hom(h2, apply_hom(h1, v))."""
    if h1.basis_out != h2.basis_in:
        raise BasisMismatch("h1.basis_out differs from h2.basis_in")
    return HomMatrix(rc_product(h1.f, h2.f), h1.basis_in, h2.basis_out)


def identity_hom(e: Basis) -> HomMatrix:
    return HomMatrix(identity(e.n), e, e)


def inverse_hom(h: HomMatrix) -> HomMatrix:
    """Inverse automorphism; raises Singular if ``h.f`` is not invertible."""
    if h.basis_in != h.basis_out:
        raise BasisMismatch("inverse requires an endomorphism")
    return HomMatrix(rc_inverse(h.f), h.basis_out, h.basis_in)
