import pickle
from fractions import Fraction

import pytest
from hypothesis import given

from nccov import ParseError, Quaternion, d_basis, parse_quaternion, quat_conj, quat_inv, quat_norm2
from nccov.scalar import format_quaternion

from conftest import ONE, I, J, K, oracle_mul, quaternions


def q(text):
    return parse_quaternion(text)


def test_addition_examples():
    assert q("1+i") + J == q("1+i+j")
    x = q("2-1/3j")
    assert x + Quaternion.zero() == x
    assert q("1/2+i") + q("1/2-i") == ONE
    # cross-check the last one coefficientwise with Fraction arithmetic
    assert Fraction(1, 2) + Fraction(1, 2) == 1


def test_unit_relations():
    assert I * J == K
    assert J * I == -K
    assert J * K == I and K * I == J
    for u in (I, J, K):
        assert u * u == -ONE
    assert I * J * K == -ONE


def test_product_example_matches_oracle():
    assert q("1+i") * q("1+j") == q("1+i+j+k")
    assert oracle_mul(q("1+i"), q("1+j")) == q("1+i+j+k")


def test_inverse_examples():
    assert quat_inv(ONE) == ONE
    assert quat_inv(I) == -I
    r = quat_inv(q("1+i"))
    assert r == q("1/2-1/2i")
    assert oracle_mul(q("1+i"), r) == ONE
    with pytest.raises(ZeroDivisionError):
        Quaternion.zero().inverse()


def test_conj_norm_basis():
    assert quat_conj(I) == -I
    assert quat_norm2(q("1+i+j+k")) == 4
    assert d_basis() == [ONE, I, J, K]


def test_coefficients_are_reduced_fractions():
    x = Quaternion(Fraction(2, 4), 1, 0, Fraction(-3, 6))
    assert x.coefficients == (Fraction(1, 2), 1, 0, Fraction(-1, 2))
    assert x == q("1/2+i-1/2k")


def test_rational_equality_and_hash():
    assert Quaternion(Fraction(3, 2)) == Fraction(3, 2)
    assert hash(Quaternion(Fraction(3, 2))) == hash(Fraction(3, 2))
    assert Quaternion(2) == 2
    assert I != 0


@given(quaternions, quaternions)
def test_mul_matches_oracle(a, b):
    assert a * b == oracle_mul(a, b)


@given(quaternions, quaternions, quaternions)
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert a + b == b + a


@given(quaternions)
def test_inverse_two_sided(a):
    if a.is_zero():
        return
    inv = a.inverse()
    assert a * inv == ONE and inv * a == ONE


@given(quaternions, quaternions)
def test_norm_multiplicative_and_conj_antihomomorphic(a, b):
    assert (a * b).norm2() == a.norm2() * b.norm2()
    assert (a * b).conj() == b.conj() * a.conj()


@given(quaternions)
def test_rationals_are_central(a):
    r = Quaternion(Fraction(-5, 3))
    assert a * r == r * a


@given(quaternions)
def test_text_roundtrip(a):
    assert parse_quaternion(format_quaternion(a)) == a


@given(quaternions)
def test_pickle_roundtrip(a):
    assert pickle.loads(pickle.dumps(a)) == a


def test_format_examples():
    assert format_quaternion(Quaternion.zero()) == "0"
    assert format_quaternion(q("-i+1/2")) == "1/2-i"
    assert format_quaternion(Quaternion(0, 0, -2)) == "-2j"


@pytest.mark.parametrize("text, offset", [
    ("1+", 2),
    ("", 0),
    ("i+i", 2),
    ("1/0", 0),
    ("2x", 1),
    ("1 2", 2),
])
def test_parse_errors_name_offset(text, offset):
    with pytest.raises(ParseError) as info:
        parse_quaternion(text)
    assert info.value.offset == offset
    assert f"offset {offset}" in str(info.value)
