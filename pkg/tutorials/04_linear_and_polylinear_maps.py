"""Tensor-sum coordinates of linear and polylinear maps under a change of basis."""
from nccov import Basis, CoordRow, HomMatrix, NcMatrix, PassiveTransform
from nccov.geometry import (
    apply_linear_tensor,
    covariance_check_polylinear,
    endo_transform,
    format_tensor,
    linear_from_matrix,
    maps_equal,
    parse_tensor,
    transform_linear_tensor,
    transform_polylinear,
)

g = PassiveTransform(NcMatrix.parse("i,0;0,1"))

#%% an endomorphism changes by conjugation f2 = g f1 g^-1
e = Basis.reference(2)
f1 = HomMatrix(NcMatrix.parse("j,0;0,1"), e, e)
print("f2 =", endo_transform(f1, g).f)

#%% the same map written as sandwich terms x -> a0 x a1
a1 = linear_from_matrix(f1.f)
a2 = transform_linear_tensor(a1, g)
print("a1:", format_tensor(a1))
print("a2:", format_tensor(a2))
print("a2 agrees with f2:", maps_equal(a2, linear_from_matrix(endo_transform(f1, g).f)))

#%% a map that is not left-linear, x -> i x (-i), still has tensor coordinates
conj = parse_tensor("0.0=i|-i", 1)
print("i j (-i) =", apply_linear_tensor(conj, CoordRow.parse("j")))

#%% bilinear map: image is the same vector in either basis
b1 = parse_tensor("0.0.1=i|j|k & 1|1|1; 1.1.0=j|1|1", 2)
b2 = transform_polylinear(b1, g)
print("b2 has", b2.n_terms(), "terms")
print("covariant:", covariance_check_polylinear(b1, g, [CoordRow.parse("1,i"), CoordRow.parse("j,1")]))
