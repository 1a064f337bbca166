"""Active and passive transformations of bases.

Passive transformations act on basis matrices from the left
(``e2 = g @ e1``) and change only the basis, so coordinates change by
``v1 = v2 @ g``.  Active transformations act from the right (``e @ a``) and
move vectors along with the basis, leaving coordinates fixed.  The two actions
commute because the rc-product is associative.

The symmetry group is taken to be all of GL: any rc-nonsingular matrix is
accepted.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ShapeMismatch
from .ncmatrix import NcMatrix, identity, rc_inverse, rc_product
from .vspace import Basis, CoordRow


@dataclass(frozen=True)
class _GroupElement:
    g: NcMatrix
    _inv: NcMatrix = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.g.is_square():
            raise ShapeMismatch(f"transformation matrix must be square, got {self.g.shape}")
        object.__setattr__(self, "_inv", rc_inverse(self.g))

    @property
    def n(self) -> int:
        return self.g.rows

    @property
    def inverse_matrix(self) -> NcMatrix:
        return self._inv


@dataclass(frozen=True)
class PassiveTransform(_GroupElement):
    """Left action on the basis manifold."""

    @classmethod
    def identity(cls, n: int) -> "PassiveTransform":
        return cls(identity(n))

    def inverse(self) -> "PassiveTransform":
        return PassiveTransform(self._inv)


@dataclass(frozen=True)
class ActiveTransform(_GroupElement):
    """Right action on bases induced by an automorphism."""

    @property
    def a(self) -> NcMatrix:
        return self.g

    @classmethod
    def identity(cls, n: int) -> "ActiveTransform":
        return cls(identity(n))

    def inverse(self) -> "ActiveTransform":
        return ActiveTransform(self._inv)


def _same_dim(*ns: int):
    if len(set(ns)) != 1:
        raise ShapeMismatch(f"dimension mismatch: {ns}")


def passive_apply_basis(g: PassiveTransform, e: Basis) -> Basis:
    """New basis vectors ``e2_l = sum_p g[l, p] e1_p``."""
    _same_dim(g.n, e.n)
    return Basis(rc_product(g.g, e.e))


def passive_coords_forward(g: PassiveTransform, v2: CoordRow) -> CoordRow:
    """Coordinates relative to ``e1`` from coordinates relative to ``e2 = g e1``."""
    _same_dim(g.n, v2.n)
    return CoordRow(rc_product(v2.v, g.g))


def passive_coords_backward(g: PassiveTransform, v1: CoordRow) -> CoordRow:
    """Coordinates relative to ``e2 = g e1`` from coordinates relative to ``e1``."""
    _same_dim(g.n, v1.n)
    return CoordRow(rc_product(v1.v, g.inverse_matrix))


def active_apply(a: ActiveTransform, e: Basis) -> Basis:
    _same_dim(a.n, e.n)
    return Basis(rc_product(e.e, a.g))


def active_apply_vector(a: ActiveTransform, v_ref: CoordRow) -> CoordRow:
    """Image of a vector (reference coordinates) under the automorphism ``a``."""
    _same_dim(a.n, v_ref.n)
    return CoordRow(rc_product(v_ref.v, a.g))


def transition_matrix(e1: Basis, e2: Basis) -> PassiveTransform:
    """The unique passive ``g`` with ``passive_apply_basis(g, e1) == e2``."""
    _same_dim(e1.n, e2.n)
    return PassiveTransform(rc_product(e2.e, e1.inverse_matrix))


def compose_passive(g2: PassiveTransform, g1: PassiveTransform) -> PassiveTransform:
    """Apply ``g1`` first, then ``g2``."""
    _same_dim(g1.n, g2.n)
    return PassiveTransform(rc_product(g2.g, g1.g))


def compose_active(a1: ActiveTransform, a2: ActiveTransform) -> ActiveTransform:
    """Apply ``a1`` first, then ``a2``."""
    _same_dim(a1.n, a2.n)
    return ActiveTransform(rc_product(a1.g, a2.g))
