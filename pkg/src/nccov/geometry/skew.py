"""Skew-symmetric bilinear maps built from a 3-factor tensor map.

``skew_apply(h, u, v) = 1/2 (h(u, v) - h(v, u))``.  The same value can be
written as a contraction of each term ``(a0, a1, a2)`` against the formal
antisymmetric pair ``u^j (x) v^k - v^j (x) u^k`` (:class:`DetStar`), which
is the route :func:`skew_transform_check` uses.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from ..errors import ArityMismatch, ShapeMismatch
from ..ncmatrix import NcMatrix
from ..scalar import Quaternion, d_basis
from ..transform import PassiveTransform, passive_apply_basis, passive_coords_forward
from ..vspace import Basis, CoordRow, expand_in_reference
from .tensors import TensorPolyMap, apply_polylinear, transform_polylinear

_ZERO = Quaternion.zero()
_HALF = Quaternion(Fraction(1, 2))


def _require_bilinear(h: TensorPolyMap):
    if h.arity != 2:
        raise ArityMismatch(f"skew maps need arity 2, got {h.arity}")


def skew_apply(h: TensorPolyMap, u: CoordRow, v: CoordRow) -> CoordRow:
    _require_bilinear(h)
    d = apply_polylinear(h, [u, v]) - apply_polylinear(h, [v, u])
    return _HALF * d


@dataclass(frozen=True)
class DetStar:
    """The formal difference ``plus[0] (x) plus[1] - minus[0] (x) minus[1]``."""

    plus: tuple[Quaternion, Quaternion]
    minus: tuple[Quaternion, Quaternion]

    def contract(self, term) -> Quaternion:
        """Feed both pairs through ``x (x) y -> a0 x a1 y a2`` and subtract."""
        a0, a1, a2 = term
        x, y = self.plus
        p, q = self.minus
        out = a0 * x * a1 * y * a2 if x and y else _ZERO
        if p and q:
            out = out - a0 * p * a1 * q * a2
        return out


def detstar(uj: Quaternion, vj: Quaternion, uk: Quaternion, vk: Quaternion) -> DetStar:
    """Determinant-like pair for the 2x2 array ``[[uj, vj], [uk, vk]]``."""
    return DetStar((uj, vk), (vj, uk))


def skew_apply_detstar(h: TensorPolyMap, u: CoordRow, v: CoordRow) -> CoordRow:
    """Same value as :func:`skew_apply`, computed term by term through :func:`detstar`."""
    _require_bilinear(h)
    if u.n != h.dim or v.n != h.dim:
        raise ShapeMismatch("argument length does not match map dimension")
    out = [_ZERO] * h.dim
    for (i, j, k), terms in h.coords.items():
        ds = detstar(u[j], v[j], u[k], v[k])
        for t in terms:
            out[i] = out[i] + ds.contract(t)
    return _HALF * CoordRow(NcMatrix(1, h.dim, tuple(out)))


def _selector_contraction(h: TensorPolyMap, sel_u, sel_v) -> list[Quaternion]:
    # sum_{j,k} terms(i,j,k) contracted with detstar(sel_u[j], sel_v[j], sel_u[k], sel_v[k])
    out = [_ZERO] * h.dim
    for (i, j, k), terms in h.coords.items():
        ds = detstar(sel_u[j], sel_v[j], sel_u[k], sel_v[k])
        if not (all(ds.plus) or all(ds.minus)):
            continue
        for t in terms:
            out[i] = out[i] + ds.contract(t)
    return out


def skew_transform_check(h1: TensorPolyMap, g: PassiveTransform,
                         samples: Optional[Iterable[tuple[CoordRow, CoordRow]]] = None) -> bool:
    """Check the skew transformation law for ``h2 = transform_polylinear(h1, g)``.

    For every pair of slots ``q, r`` and D-basis values ``x, y``: contracting
    ``h2`` with Kronecker selectors ``x delta_q, y delta_r`` must equal
    contracting ``h1`` with the ``g``-weighted selectors ``x g[q, .]``,
    ``y g[r, .]`` and then mapping the output index back through ``g^-1``.
    Any ``samples`` ``(u2, v2)`` are additionally checked for reference-frame
    covariance of :func:`skew_apply`.
    """
    _require_bilinear(h1)
    if g.n != h1.dim:
        raise ShapeMismatch(f"transform of dim {g.n} for a map on dim {h1.dim}")
    d = h1.dim
    h2 = transform_polylinear(h1, g)
    gm, ginv = g.g, g.inverse_matrix
    for q in range(d):
        for r in range(d):
            for x in d_basis():
                for y in d_basis():
                    delta_u = [x if j == q else _ZERO for j in range(d)]
                    delta_v = [y if j == r else _ZERO for j in range(d)]
                    lhs = _selector_contraction(h2, delta_u, delta_v)
                    weighted_u = [x * gm[q, j] for j in range(d)]
                    weighted_v = [y * gm[r, j] for j in range(d)]
                    mid = _selector_contraction(h1, weighted_u, weighted_v)
                    rhs = []
                    for p in range(d):
                        acc = _ZERO
                        for i in range(d):
                            if mid[i] and ginv[i, p]:
                                acc = acc + mid[i] * ginv[i, p]
                        rhs.append(acc)
                    if lhs != rhs:
                        return False
    for u2, v2 in samples or ():
        if not skew_covariance_check(h1, g, u2, v2, h2=h2):
            return False
    return True


def skew_covariance_check(h1: TensorPolyMap, g: PassiveTransform, u2: CoordRow, v2: CoordRow,
                          h2: Optional[TensorPolyMap] = None) -> bool:
    """Reference-frame expansion of ``skew_apply`` agrees before and after ``g``."""
    h2 = h2 if h2 is not None else transform_polylinear(h1, g)
    e1 = Basis.reference(h1.dim)
    e2 = passive_apply_basis(g, e1)
    u1, v1 = passive_coords_forward(g, u2), passive_coords_forward(g, v2)
    return (expand_in_reference(skew_apply(h2, u2, v2), e2)
            == expand_in_reference(skew_apply(h1, u1, v1), e1))

