"""Exact quaternions and the two matrix products."""
from nccov import NcMatrix, Quaternion, cr_product, is_rc_nonsingular, rc_inverse, rc_product

#%% quaternion units do not commute
i, j, k = Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)
print("i j =", i * j, "  j i =", j * i)

#%% coefficients stay exact
x = Quaternion(1, 1)
print("(1+i)^-1 =", x.inverse(), "  check:", x * x.inverse())

#%% rc-product: row of the left factor against column of the right factor
a = NcMatrix.parse("i,j;0,1")
b = NcMatrix.parse("j,0;k,1")
print("a rc b =", rc_product(a, b))

#%% cr-product: column against row
print("cr((i;j), (1,k)) =", cr_product(NcMatrix.parse("i;j"), NcMatrix.parse("1,k")))

#%% inverse by elimination with left row operations
g = NcMatrix.parse("1,i;j,k")
h = rc_inverse(g)
print("g^-1 =", h)
print("g g^-1 =", g @ h, "  g^-1 g =", h @ g)

#%% a row that is a *left* multiple of another makes the matrix singular
print("1,i;j,-k nonsingular?", is_rc_nonsingular(NcMatrix.parse("1,i;j,-k")))
