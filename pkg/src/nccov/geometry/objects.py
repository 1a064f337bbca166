"""Geometric objects: coordinates in W that follow passive transformations of V.

A representation ``F`` sends a passive transformation ``g`` of V to an
invertible matrix ``F(g)`` acting on W-bases.  Coordinates in W then change by
``w2 = w1 @ F(g)^-1``, a right action of the symmetry group.  The
representative ``w @ e_W`` does not depend on the chosen basis.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Union

from ..errors import BasisMismatch, ShapeMismatch
from ..ncmatrix import NcMatrix, identity, rc_inverse, rc_product
from ..transform import PassiveTransform, passive_apply_basis, transition_matrix
from ..vspace import Basis, CoordRow, HomMatrix, expand_in_reference

Group = Union[PassiveTransform, NcMatrix]


def _mat(g: Group) -> NcMatrix:
    return g.g if isinstance(g, PassiveTransform) else g


@dataclass(frozen=True)
class GroupRep:
    """A homomorphism ``F: G(V_*) -> GL(W_*)`` given as a Python callable.

    The homomorphism property is not enforced; :func:`rep_is_homomorphism`
    spot-checks it.
    """

    dim_w: int
    F: Callable[[NcMatrix], NcMatrix]
    name: str = "custom"

    def __call__(self, g: Group) -> NcMatrix:
        out = self.F(_mat(g))
        if out.shape != (self.dim_w, self.dim_w):
            raise ShapeMismatch(f"representation returned {out.shape}, expected dim {self.dim_w}")
        return out


def trivial_rep(dim_w: int) -> GroupRep:
    """``F(g) = I``: coordinates never change."""
    eye = identity(dim_w)
    return GroupRep(dim_w, lambda g: eye, name="trivial")


def tautological_rep(n: int) -> GroupRep:
    """``F(g) = g``: W is V itself and the object is an ordinary vector."""
    return GroupRep(n, lambda g: g, name="tautological")


def rep_is_homomorphism(rep: GroupRep, g: Group, h: Group) -> bool:
    g, h = _mat(g), _mat(h)
    return rep(rc_product(g, h)) == rc_product(rep(g), rep(h))


def rep_action_law_check(rep: GroupRep, g: Group, h: Group, w: CoordRow) -> bool:
    """Acting by ``g`` then ``h`` equals acting once by the composite ``h g``."""
    g, h = _mat(g), _mat(h)
    stepwise = rc_product(rc_product(w.v, rc_inverse(rep(g))), rc_inverse(rep(h)))
    at_once = rc_product(w.v, rc_inverse(rep(rc_product(h, g))))
    return stepwise == at_once


@dataclass(frozen=True)
class GeometricObject:
    """Coordinates ``w`` relative to the W-basis attached to ``v_basis``.

    ``w_basis`` defaults to the reference frame of W.
    """

    rep: GroupRep
    w: CoordRow
    v_basis: Basis
    w_basis: Optional[Basis] = field(default=None)

    def __post_init__(self):
        if self.w.n != self.rep.dim_w:
            raise ShapeMismatch(f"coordinates of length {self.w.n} for dim_w={self.rep.dim_w}")
        if self.w_basis is None:
            object.__setattr__(self, "w_basis", Basis.reference(self.rep.dim_w))
        elif self.w_basis.n != self.rep.dim_w:
            raise ShapeMismatch("w_basis has the wrong dimension")


def geo_transform(obj: GeometricObject, g: Group) -> GeometricObject:
    """Refer the object to the basis ``g v_basis``; ``w2 = w1 @ F(g)^-1``."""
    g = g if isinstance(g, PassiveTransform) else PassiveTransform(g)
    if g.n != obj.v_basis.n:
        raise ShapeMismatch(f"transform of dim {g.n} for a basis of dim {obj.v_basis.n}")
    fg = obj.rep(g)
    w2 = CoordRow(rc_product(obj.w.v, rc_inverse(fg)))
    return GeometricObject(
        obj.rep, w2,
        passive_apply_basis(g, obj.v_basis),
        Basis(rc_product(fg, obj.w_basis.e)),
    )


def representative(obj: GeometricObject) -> CoordRow:
    """Reference-frame coordinates of ``w @ e_W``; invariant under :func:`geo_transform`."""
    return expand_in_reference(obj.w, obj.w_basis)


def same_orbit(a: GeometricObject, b: GeometricObject) -> bool:
    """Do the two (basis, coordinates) pairs describe the same geometric object?"""
    if a.rep is not b.rep:
        raise BasisMismatch("objects carry different representations")
    g = transition_matrix(a.v_basis, b.v_basis)
    return geo_transform(a, g).w == b.w


def endo_transform(f1: HomMatrix, g: Group) -> HomMatrix:
    """Matrix of the same endomorphism relative to ``e2 = g e1``: ``g f1 g^-1``."""
    g = g if isinstance(g, PassiveTransform) else PassiveTransform(g)
    if f1.basis_in != f1.basis_out:
        raise BasisMismatch("endo_transform needs an endomorphism")
    if g.n != f1.n_in:
        raise ShapeMismatch(f"transform of dim {g.n} for a {f1.n_in}-dim endomorphism")
    f2 = rc_product(rc_product(g.g, f1.f), g.inverse_matrix)
    e2 = passive_apply_basis(g, f1.basis_in)
    return HomMatrix(f2, e2, e2)
