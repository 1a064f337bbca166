from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nccov import (
    Quaternion,
    Basis,
    BasisMismatch,
    CoordRow,
    HomMatrix,
    NcMatrix,
    ShapeMismatch,
    Singular,
    apply_hom,
    compose_homs,
    coords_in_basis,
    expand_in_reference,
    hom_from_matrix,
    matrix_of_hom,
)
from nccov.vspace import identity_hom, inverse_hom

from conftest import ONE, I, J, K, coord_rows, matrices, nonsingular, oracle_mul, quaternions, row

M = NcMatrix.parse
ZERO = ONE - ONE


def test_expand_examples():
    v = row(J, ONE)
    assert expand_in_reference(v, Basis.reference(2)) == v
    assert expand_in_reference(row(ONE, ZERO), Basis(M("i,0;0,1"))) == row(I, ZERO)
    # j*i = -k computed independently
    assert oracle_mul(J, I) == -K
    assert expand_in_reference(row(J, ONE), Basis(M("i,0;0,k"))) == row(-K, K)


def test_coords_in_basis_examples():
    assert coords_in_basis(row(I, ZERO), Basis(M("i,0;0,1"))) == row(ONE, ZERO)
    v = row(I, K)
    assert coords_in_basis(v, Basis.reference(2)) == v


def test_apply_hom_examples():
    e1, e2 = Basis.reference(1), Basis.reference(2)
    v = row(ONE, I)
    assert apply_hom(identity_hom(e2), v) == v
    assert apply_hom(HomMatrix(M("j"), e1, e1), row(I)) == row(K)
    # (1*j + i*1, 1*0 + i*k); the oracle gives i*k = -j
    assert oracle_mul(I, K) == -J
    assert apply_hom(HomMatrix(M("j,0;1,k"), e2, e2), v) == row(I + J, -J)


def test_compose_examples():
    e = Basis.reference(1)
    h1, h2 = HomMatrix(M("i"), e, e), HomMatrix(M("j"), e, e)
    assert compose_homs(h1, h2).f == M("k")
    assert compose_homs(h1, identity_hom(e)) == h1
    with pytest.raises(BasisMismatch):
        compose_homs(HomMatrix(M("i"), e, Basis(M("2"))), h2)


def test_errors():
    with pytest.raises(Singular):
        Basis(M("1,i;j,-k"))
    with pytest.raises(ShapeMismatch):
        Basis(M("1,2"))
    with pytest.raises(ShapeMismatch):
        HomMatrix(M("1,2"), Basis.reference(2), Basis.reference(2))
    with pytest.raises(ShapeMismatch):
        expand_in_reference(row(ONE), Basis.reference(2))
    with pytest.raises(ShapeMismatch):
        CoordRow(M("1;2"))


def test_basis_vectors_are_rows():
    e = Basis(M("i,1;0,j"))
    assert e.vector(0) == row(I, ONE)
    assert expand_in_reference(CoordRow.unit(2, 1), e) == e.vector(1)


def test_automorphism_and_inverse():
    e = Basis.reference(2)
    h = HomMatrix(M("i,1;0,j"), e, e)
    assert h.is_automorphism
    inv = inverse_hom(h)
    assert compose_homs(h, inv) == identity_hom(e)
    assert not HomMatrix(M("1,i;j,-k"), e, e).is_automorphism


def test_coord_row_text():
    v = CoordRow.parse("1/2+i, -k")
    assert v == row(Quaternion(Fraction(1, 2), 1), -K)
    assert str(v) == "(1/2+i, -k)"
    assert CoordRow.parse(v.to_text()) == v


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(nonsingular(n), coord_rows(n))))
def test_expand_and_coords_are_inverse(pair):
    e, v = Basis(pair[0]), pair[1]
    assert coords_in_basis(expand_in_reference(v, e), e) == v
    assert expand_in_reference(coords_in_basis(v, e), e) == v


@given(st.data())
def test_matrix_of_hom_roundtrip(data):
    n, m = data.draw(st.integers(1, 3)), data.draw(st.integers(1, 3))
    f = data.draw(matrices(n, m))
    e1, e2 = Basis(data.draw(nonsingular(n))), Basis(data.draw(nonsingular(m)))
    assert matrix_of_hom(hom_from_matrix(f, e1, e2)) == f


@given(st.data(), quaternions)
def test_apply_hom_is_left_linear(data, a):
    n, m = data.draw(st.integers(1, 3)), data.draw(st.integers(1, 3))
    h = HomMatrix(data.draw(matrices(n, m)), Basis.reference(n), Basis.reference(m))
    u, v = data.draw(coord_rows(n)), data.draw(coord_rows(n))
    assert apply_hom(h, u + v) == apply_hom(h, u) + apply_hom(h, v)
    assert apply_hom(h, a * v) == a * apply_hom(h, v)


@given(st.data())
def test_compose_is_sequential_application(data):
    n, m, k = (data.draw(st.integers(1, 3)) for _ in range(3))
    e1, e2, e3 = Basis.reference(n), Basis.reference(m), Basis.reference(k)
    h1 = HomMatrix(data.draw(matrices(n, m)), e1, e2)
    h2 = HomMatrix(data.draw(matrices(m, k)), e2, e3)
    v = data.draw(coord_rows(n))
    assert apply_hom(compose_homs(h1, h2), v) == apply_hom(h2, apply_hom(h1, v))
