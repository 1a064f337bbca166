"""Coordinates, bases and what a passive change of basis does to them."""
from nccov import (
    ActiveTransform,
    Basis,
    CoordRow,
    NcMatrix,
    PassiveTransform,
    active_apply,
    coords_in_basis,
    expand_in_reference,
    passive_apply_basis,
    passive_coords_backward,
    passive_coords_forward,
    transition_matrix,
)
from nccov.transform import active_apply_vector

#%% a basis is a matrix whose rows are the basis vectors in the reference frame
e1 = Basis(NcMatrix.parse("1,j;0,k"))
v1 = CoordRow.parse("i,1")
print("v1 e1 in the reference frame:", expand_in_reference(v1, e1))

#%% passive change: new basis e2 = g e1, coordinates go the other way
g = PassiveTransform(NcMatrix.parse("i,0;1,1"))
e2 = passive_apply_basis(g, e1)
v2 = passive_coords_backward(g, v1)
print("v2 =", v2, "  back again:", passive_coords_forward(g, v2))
print("same vector?", expand_in_reference(v2, e2) == expand_in_reference(v1, e1))

#%% any two bases are joined by exactly one passive transformation
t = transition_matrix(e1, e2)
print("recovered g:", t.g, "  equals g?", t == g)

#%% an active transformation moves vectors along with the basis
a = ActiveTransform(NcMatrix.parse("1,i;0,j"))
moved = active_apply_vector(a, expand_in_reference(v1, e1))
print("coords of a(v) in e a:", coords_in_basis(moved, active_apply(a, e1)), " (unchanged)")

#%% and it commutes with the passive action
print("g (e a) == (g e) a:", passive_apply_basis(g, active_apply(a, e1)) == active_apply(a, e2))
