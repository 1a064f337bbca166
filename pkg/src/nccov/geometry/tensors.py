"""Tensor-sum coordinates of linear and polylinear maps over the quaternions.

A D-linear map of one quaternion variable can always be written as a finite
sum of sandwiches ``x -> sum_s a0_s * x * a1_s``.  An n-linear map of
coordinate rows is stored per component: for output index ``i`` and input
indices ``(j_1, ..., j_n)`` a list of terms ``(a_0, ..., a_n)`` acting as::

    out[i] += a_0 * v_1[j_1] * a_1 * v_2[j_2] * ... * v_n[j_n] * a_n

Term lists are not canonical (the same map has many representations), so
equality of maps is extensional, see :func:`maps_equal`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from ..errors import ArityMismatch, ParseError, ShapeMismatch
from ..ncmatrix import NcMatrix
from ..scalar import Quaternion, as_quaternion, d_basis, format_quaternion, parse_quaternion
from ..transform import PassiveTransform, passive_apply_basis, passive_coords_forward
from ..vspace import Basis, CoordRow, HomMatrix, expand_in_reference
from .objects import endo_transform

Term = tuple[Quaternion, ...]
Key = tuple[int, ...]

_ZERO = Quaternion.zero()
_ONE = Quaternion.one()


@dataclass(frozen=True, eq=False)
class TensorPolyMap:
    """Coordinates of an ``arity``-linear map ``V^arity -> V`` with ``dim V = dim``.

    ``coords`` maps ``(i, j_1, ..., j_n)`` to a tuple of (n+1)-term tuples.
    Missing keys are zero components.
    """

    arity: int
    dim: int
    coords: Mapping[Key, tuple[Term, ...]]

    def __post_init__(self):
        if self.arity < 1:
            raise ArityMismatch("arity must be at least 1")
        clean = {}
        for key, terms in self.coords.items():
            key = tuple(key)
            if len(key) != self.arity + 1 or not all(0 <= k < self.dim for k in key):
                raise ShapeMismatch(f"bad index tuple {key} for arity {self.arity}, dim {self.dim}")
            ts = []
            for t in terms:
                if len(t) != self.arity + 1:
                    raise ShapeMismatch(f"term {t} must have {self.arity + 1} factors")
                ts.append(tuple(as_quaternion(x) for x in t))
            if ts:
                clean[key] = tuple(ts)
        object.__setattr__(self, "coords", clean)

    def terms(self, key: Sequence[int]) -> tuple[Term, ...]:
        return self.coords.get(tuple(key), ())

    def n_terms(self) -> int:
        return sum(len(t) for t in self.coords.values())

    def to_text(self) -> str:
        return format_tensor(self)


def zero_map(arity: int, dim: int) -> TensorPolyMap:
    return TensorPolyMap(arity, dim, {})


def identity_linear(dim: int) -> TensorPolyMap:
    """The identity map as single ``1 (x) 1`` terms on the diagonal."""
    return TensorPolyMap(1, dim, {(i, i): ((_ONE, _ONE),) for i in range(dim)})


def linear_from_matrix(f: NcMatrix) -> TensorPolyMap:
    """Tensor coordinates of the homomorphism ``v -> v @ f``: ``out[k] = sum_j v[j] f[j, k]``."""
    if not f.is_square():
        raise ShapeMismatch("endomorphism matrix must be square")
    n = f.rows
    coords = {(k, j): ((_ONE, f[j, k]),) for k in range(n) for j in range(n) if f[j, k]}
    return TensorPolyMap(1, n, coords)


def central_linear_from_matrix(f: NcMatrix) -> TensorPolyMap:
    """Same as :func:`linear_from_matrix` but with the matrix entry as the *left* factor.

    Only represents ``v -> v @ f`` when every entry of ``f`` is central (rational).
    """
    n = f.rows
    coords = {(k, j): ((f[j, k], _ONE),) for k in range(n) for j in range(n) if f[j, k]}
    return TensorPolyMap(1, n, coords)


def _check_inputs(a: TensorPolyMap, vs: Sequence[CoordRow]):
    if len(vs) != a.arity:
        raise ArityMismatch(f"map of arity {a.arity} given {len(vs)} arguments")
    for v in vs:
        if v.n != a.dim:
            raise ShapeMismatch(f"argument of length {v.n} for a map on dim {a.dim}")


def apply_polylinear(a: TensorPolyMap, vs: Sequence[CoordRow]) -> CoordRow:
    """Evaluate the map, multiplying strictly left to right in every term."""
    _check_inputs(a, vs)
    out = [_ZERO] * a.dim
    for key, terms in a.coords.items():
        xs = [v[j] for v, j in zip(vs, key[1:])]
        if not all(xs):
            continue
        acc = out[key[0]]
        for t in terms:
            p = t[0]
            for x, factor in zip(xs, t[1:]):
                p = p * x * factor
            acc = acc + p
        out[key[0]] = acc
    return CoordRow(NcMatrix(1, a.dim, tuple(out)))


def apply_linear_tensor(a: TensorPolyMap, w: CoordRow) -> CoordRow:
    """``out[i] = sum_j sum_s a0 * w[j] * a1``."""
    if a.arity != 1:
        raise ArityMismatch(f"expected a linear map, got arity {a.arity}")
    return apply_polylinear(a, [w])


def transform_polylinear(a1: TensorPolyMap, g: PassiveTransform) -> TensorPolyMap:
    """Coordinates of the same map relative to ``e2 = g e1``.

    For output component ``(l, k_1..k_n)`` every source term
    ``(a_0, a_1, ..., a_n)`` at ``(i, j_1..j_n)`` contributes
    ``(a_0, g[k_1, j_1] a_1, ..., g[k_n, j_n] a_n g^-1[i, l])``.
    Contributions containing an exact zero factor of ``g`` or ``g^-1`` are
    dropped; they evaluate to zero.
    """
    if g.n != a1.dim:
        raise ShapeMismatch(f"transform of dim {g.n} for a map on dim {a1.dim}")
    n, d = a1.arity, a1.dim
    gm, ginv = g.g, g.inverse_matrix
    out: dict[Key, list[Term]] = {}
    for (i, *js), terms in a1.coords.items():
        # per slot: the (k, g[k, j]) pairs with nonzero weight
        slot_weights = [[(k, gm[k, j]) for k in range(d) if gm[k, j]] for j in js]
        for l in range(d):
            tail = ginv[i, l]
            if not tail:
                continue
            for combo in itertools.product(*slot_weights):
                ks = tuple(k for k, _ in combo)
                bucket = out.setdefault((l, *ks), [])
                for t in terms:
                    new = [t[0]]
                    for s, (_, w) in enumerate(combo, start=1):
                        new.append(w * t[s])
                    new[n] = new[n] * tail
                    bucket.append(tuple(new))
    return TensorPolyMap(n, d, {k: tuple(v) for k, v in out.items()})


def transform_linear_tensor(a1: TensorPolyMap, g: PassiveTransform) -> TensorPolyMap:
    """Linear case: ``(a0, a1) -> (a0, g[k, j] a1 g^-1[i, l])``."""
    if a1.arity != 1:
        raise ArityMismatch(f"expected a linear map, got arity {a1.arity}")
    return transform_polylinear(a1, g)


def covariance_check_polylinear(a1: TensorPolyMap, g: PassiveTransform,
                                vs2: Sequence[CoordRow], e1: Optional[Basis] = None) -> bool:
    """Does the image, expanded in the reference frame, agree in both bases?

    ``vs2`` are coordinates relative to ``e2 = g e1``; ``e1`` defaults to the
    reference frame.
    """
    e1 = e1 if e1 is not None else Basis.reference(a1.dim)
    e2 = passive_apply_basis(g, e1)
    a2 = transform_polylinear(a1, g)
    vs1 = [passive_coords_forward(g, v) for v in vs2]
    lhs = expand_in_reference(apply_polylinear(a2, vs2), e2)
    rhs = expand_in_reference(apply_polylinear(a1, vs1), e1)
    return lhs == rhs


def covariance_check_linear(a1: TensorPolyMap, g: PassiveTransform, v2: CoordRow,
                            e1: Optional[Basis] = None) -> bool:
    if a1.arity != 1:
        raise ArityMismatch(f"expected a linear map, got arity {a1.arity}")
    return covariance_check_polylinear(a1, g, [v2], e1)


def _sandwich(term: Term, xs: Sequence[Quaternion]) -> Quaternion:
    p = term[0]
    for x, factor in zip(xs, term[1:]):
        p = p * x * factor
    return p


def maps_equal(a: TensorPolyMap, b: TensorPolyMap) -> bool:
    """Extensional equality.

    Each slot enters D-linearly, so it is enough to compare on inputs that are
    unit coordinate rows scaled by ``1, i, j, k``.  With such inputs only one
    index tuple is active, so the comparison runs component by component.
    """
    if a.arity != b.arity:
        raise ArityMismatch(f"arity {a.arity} vs {b.arity}")
    if a.dim != b.dim:
        raise ShapeMismatch(f"dim {a.dim} vs {b.dim}")
    basis = d_basis()
    for key in set(a.coords) | set(b.coords):
        ta, tb = a.terms(key), b.terms(key)
        for xs in itertools.product(basis, repeat=a.arity):
            sa = _ZERO
            for t in ta:
                sa = sa + _sandwich(t, xs)
            sb = _ZERO
            for t in tb:
                sb = sb + _sandwich(t, xs)
            if sa != sb:
                return False
    return True


def commutative_degeneration_check(f: NcMatrix, g: PassiveTransform) -> bool:
    """With rational entries, the tensor law and the matrix conjugation law agree.

    Builds the single-term map ``(f[j, i], 1)``, transforms it, and compares
    with the tensor of ``g f g^-1`` built the same way.
    """
    e = Basis.reference(f.rows)
    f2 = endo_transform(HomMatrix(f, e, e), g).f
    return maps_equal(transform_linear_tensor(central_linear_from_matrix(f), g),
                      central_linear_from_matrix(f2))


# -- text format ------------------------------------------------------------
# components separated by ';', each "i.j1.j2=t & t & ..." with a term written
# as factors joined by '|', e.g. "0.0.1=i|j|k & 1|1|1; 1.1.0=j|1|1"

def format_tensor(a: TensorPolyMap) -> str:
    parts = []
    for key in sorted(a.coords):
        terms = " & ".join("|".join(format_quaternion(x) for x in t) for t in a.coords[key])
        parts.append(".".join(map(str, key)) + "=" + terms)
    return "; ".join(parts)


def parse_tensor(text: str, dim: int, arity: Optional[int] = None) -> TensorPolyMap:
    coords: dict[Key, list[Term]] = {}
    offset = 0
    for comp in text.split(";"):
        start = offset
        offset += len(comp) + 1
        if not comp.strip():
            continue
        if "=" not in comp:
            raise ParseError("component needs 'index=terms'", start, text)
        key_text, _, terms_text = comp.partition("=")
        try:
            key = tuple(int(s) for s in key_text.strip().split("."))
        except ValueError:
            raise ParseError(f"bad index tuple {key_text.strip()!r}", start, text) from None
        if arity is None:
            arity = len(key) - 1
        pos = start + len(key_text) + 1
        for term_text in terms_text.split("&"):
            factors = []
            fpos = pos
            for ftxt in term_text.split("|"):
                factors.append(parse_quaternion(ftxt, base_offset=fpos))
                fpos += len(ftxt) + 1
            coords.setdefault(key, []).append(tuple(factors))
            pos += len(term_text) + 1
    if arity is None:
        raise ParseError("empty tensor", 0, text)
    return TensorPolyMap(arity, dim, coords)
