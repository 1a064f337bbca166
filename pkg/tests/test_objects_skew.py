import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nccov import ArityMismatch, Basis, NcMatrix, PassiveTransform, ShapeMismatch, expand_in_reference, identity
from nccov.geometry import (
    DetStar,
    GeometricObject,
    GroupRep,
    TensorPolyMap,
    detstar,
    geo_transform,
    identity_linear,
    rep_action_law_check,
    rep_is_homomorphism,
    representative,
    same_orbit,
    skew_apply,
    skew_apply_detstar,
    skew_transform_check,
    tautological_rep,
    trivial_rep,
)
from nccov.geometry.skew import skew_covariance_check

from conftest import ONE, I, J, K, coord_rows, nonsingular, oracle_mul, quaternions, row, tensors

M = NcMatrix.parse
ZERO = ONE - ONE
G = PassiveTransform(M("i,0;0,1"))


# -- geometric objects ------------------------------------------------------

def test_identity_leaves_object_alone():
    obj = GeometricObject(tautological_rep(2), row(I, J), Basis(M("1,j;0,k")))
    assert geo_transform(obj, PassiveTransform.identity(2)) == obj


def test_trivial_rep_never_changes_coordinates():
    obj = GeometricObject(trivial_rep(3), row(I, J, K), Basis(M("1,j;0,k")))
    moved = geo_transform(obj, PassiveTransform(M("j,1;0,i")))
    assert moved.w == obj.w
    assert moved.v_basis == Basis(M("j,1;0,i") @ M("1,j;0,k"))


def test_tautological_example():
    obj = GeometricObject(tautological_rep(2), row(ONE, ZERO), Basis.reference(2))
    moved = geo_transform(obj, G)
    assert moved.w == row(-I, ZERO)
    assert representative(moved) == representative(obj) == row(ONE, ZERO)


def test_rep_law_examples():
    eye = identity(2)
    for rep in (trivial_rep(2), tautological_rep(2)):
        assert rep_action_law_check(rep, eye, eye, row(I, J))
    g, h = M("1,i;0,j"), M("k,0;1,1")
    assert rep_action_law_check(tautological_rep(2), g, h, row(I, ONE + K))
    assert rep_is_homomorphism(tautological_rep(2), g, h)


def test_broken_rep_is_caught():
    # transposition reverses products for non-commuting entries: not a homomorphism
    broken = GroupRep(2, lambda g: g.transpose(), name="transpose")
    g, h = M("1,i;0,j"), M("k,0;1,1")
    assert not rep_is_homomorphism(broken, g, h)
    assert not rep_action_law_check(broken, g, h, row(ONE, ONE))


def test_same_orbit():
    e = Basis(M("1,j;0,k"))
    obj = GeometricObject(tautological_rep(2), row(I, ONE), e)
    moved = geo_transform(obj, PassiveTransform(M("j,1;0,i")))
    assert same_orbit(obj, moved)
    other = GeometricObject(obj.rep, row(ONE, ONE), moved.v_basis)
    assert not same_orbit(obj, other)


def test_rep_shape_is_checked():
    bad = GroupRep(2, lambda g: identity(3))
    with pytest.raises(ShapeMismatch):
        bad(identity(2))
    with pytest.raises(ShapeMismatch):
        GeometricObject(trivial_rep(2), row(ONE), Basis.reference(2))


@settings(max_examples=40)
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(nonsingular(n), nonsingular(n), coord_rows(n))))
def test_rep_action_law(case):
    g, h, w = case
    assert rep_action_law_check(tautological_rep(g.rows), g, h, w)
    assert rep_action_law_check(trivial_rep(g.rows), g, h, w)


@settings(max_examples=40)
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(nonsingular(n), nonsingular(n), nonsingular(n),
                                                     coord_rows(n))))
def test_representative_is_invariant(case):
    e, g, h, w = case
    obj = GeometricObject(tautological_rep(e.rows), w, Basis(e))
    once = geo_transform(obj, PassiveTransform(g))
    twice = geo_transform(once, PassiveTransform(h))
    assert representative(obj) == representative(once) == representative(twice)
    # for the tautological rep, w is a vector's coordinates in v_basis
    assert expand_in_reference(twice.w, twice.v_basis) == expand_in_reference(w, obj.v_basis)


# -- skew maps --------------------------------------------------------------

def test_skew_examples():
    h = TensorPolyMap(2, 1, {(0, 0, 0): ((ONE, ONE, ONE),)})
    assert skew_apply(h, row(I), row(J)) == row(K)
    assert skew_apply(h, row(J), row(I)) == row(-K)
    assert skew_apply(h, row(I + J), row(I + J)) == row(ZERO)


def test_detstar_examples():
    ds = detstar(I, J, I, J)
    assert ds == DetStar((I, J), (J, I))
    assert ds.contract((ONE, ONE, ONE)) == I * J - J * I == 2 * K
    assert oracle_mul(I, J) - oracle_mul(J, I) == 2 * K
    same = detstar(I, I, J, J)
    assert same.contract((K, ONE + I, J)) == ZERO


def test_skew_transform_examples():
    h = TensorPolyMap(2, 2, {(0, 1, 0): ((I, J, K),), (1, 1, 1): ((ONE, I, ONE),)})
    assert skew_transform_check(h, PassiveTransform.identity(2))
    h1 = TensorPolyMap(2, 1, {(0, 0, 0): ((I, J, K), (ONE + J, K, I))})
    assert skew_transform_check(h1, PassiveTransform(M("2-i+k")), samples=[(row(J), row(ONE + I))])


def test_skew_errors():
    with pytest.raises(ArityMismatch):
        skew_apply(identity_linear(1), row(ONE), row(ONE))
    with pytest.raises(ShapeMismatch):
        skew_transform_check(TensorPolyMap(2, 1, {}), G)


@settings(max_examples=40)
@given(st.integers(1, 2).flatmap(lambda n: st.tuples(tensors(2, n), coord_rows(n), coord_rows(n))),
       quaternions)
def test_skew_antisymmetry_and_detstar_route(case, a):
    h, u, v = case
    assert skew_apply(h, u, v) == -skew_apply(h, v, u)
    assert skew_apply(h, u, u) == skew_apply(h, a * u, a * u) == row(*([ZERO] * u.n))
    assert skew_apply(h, u, v) == skew_apply_detstar(h, u, v)


@settings(max_examples=15, deadline=None)
@given(st.integers(1, 2).flatmap(lambda n: st.tuples(tensors(2, n), nonsingular(n),
                                                     coord_rows(n), coord_rows(n))))
def test_skew_transform_law(case):
    h, g, u, v = case
    g = PassiveTransform(g)
    assert skew_transform_check(h, g, samples=[(u, v)])
    assert skew_covariance_check(h, g, u, v)
