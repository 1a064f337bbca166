"""Skew-symmetric bilinear maps and the det* pair."""
from nccov import CoordRow, NcMatrix, PassiveTransform
from nccov.geometry import detstar, parse_tensor, skew_apply, skew_apply_detstar, skew_transform_check

h = parse_tensor("0.0.0=1|1|1", 1)
u, v = CoordRow.parse("i"), CoordRow.parse("j")

#%% 1/2 (h(u, v) - h(v, u))
print("h(u ^ v) =", skew_apply(h, u, v), "  h(v ^ u) =", skew_apply(h, v, u))

#%% the det* pair contracts term by term to the same value
ds = detstar(u[0], v[0], u[0], v[0])
(x, y), (p, q) = ds.plus, ds.minus
print(f"det* pair: {x} (x) {y} - {p} (x) {q}")
print("via det*:", skew_apply_detstar(h, u, v))

#%% the transformation law with Kronecker and g-weighted selectors
h2 = parse_tensor("0.0.1=i|j|k; 1.1.0=j|1|1 & 1|k|1", 2)
g = PassiveTransform(NcMatrix.parse("1,i;j,k"))
print("selector law holds:", skew_transform_check(h2, g))
