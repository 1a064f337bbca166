"""Geometric objects: coordinates that follow a representation of the basis change."""
from nccov import Basis, CoordRow, NcMatrix, PassiveTransform
from nccov.geometry import (
    GeometricObject,
    GroupRep,
    geo_transform,
    rep_action_law_check,
    representative,
    tautological_rep,
    trivial_rep,
)

g = PassiveTransform(NcMatrix.parse("i,0;0,1"))
e = Basis.reference(2)

#%% the tautological representation F(g) = g describes ordinary vectors
obj = GeometricObject(tautological_rep(2), CoordRow.parse("1,0"), e)
moved = geo_transform(obj, g)
print("w1 =", obj.w, " w2 =", moved.w)
print("representative unchanged:", representative(obj) == representative(moved))

#%% the trivial representation gives invariants
inv = GeometricObject(trivial_rep(1), CoordRow.parse("2+k"), e)
print("trivial:", geo_transform(inv, g).w)

#%% a map that is not a homomorphism breaks the right-action law
transpose = GroupRep(2, lambda m: m.transpose(), name="transpose")
x, y = NcMatrix.parse("1,i;0,j"), NcMatrix.parse("k,0;1,1")
w = CoordRow.parse("1,1")
print("action law, tautological:", rep_action_law_check(tautological_rep(2), x, y, w))
print("action law, transpose:   ", rep_action_law_check(transpose, x, y, w))
