import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperdet.fields import (
    QQ,
    GF,
    FieldError,
    PrimeField,
    PrimeFieldScalar,
    field_from_json,
    field_to_json,
    invert,
    is_prime,
    scalar_pow,
)
from hyperdet.rational_functions import RationalFunctionField


def test_invert_examples():
    assert invert(GF(7)(3)) == 5
    assert invert(Fraction(2, 3)) == Fraction(3, 2)
    assert invert(GF(2)(1)) == 1


def test_invert_zero_raises():
    with pytest.raises(ZeroDivisionError):
        invert(GF(7)(0))
    with pytest.raises(ZeroDivisionError):
        invert(Fraction(0))


def test_scalar_pow_examples():
    assert scalar_pow(GF(7)(2), 3) == 1
    assert scalar_pow(Fraction(2), -2) == Fraction(1, 4)
    assert scalar_pow(GF(11)(5), 0) == 1
    assert scalar_pow(Fraction(-3, 4), 0) == 1
    with pytest.raises(ZeroDivisionError):
        scalar_pow(Fraction(0), -1)
    with pytest.raises(ZeroDivisionError):
        scalar_pow(GF(5)(0), -2)


def test_prime_field_rejects_composites_and_huge():
    with pytest.raises(FieldError):
        PrimeField(12)
    with pytest.raises(FieldError):
        PrimeField(1)
    with pytest.raises(FieldError):
        PrimeField((1 << 89) - 1)  # prime but not word-sized
    assert PrimeField((1 << 61) - 1).p == (1 << 61) - 1


def test_is_prime_small_table():
    primes = [n for n in range(200) if all(n % d for d in range(2, n)) and n > 1]
    assert [n for n in range(200) if is_prime(n)] == primes


def test_scalar_residue_reduced():
    F = GF(7)
    x = F(-1)
    assert x.residue == 6
    assert int(F(100)) == 2
    assert str(F(3) * F(5)) == "1"


def test_mixing_fields_raises():
    with pytest.raises(FieldError):
        GF(5)(1) + GF(7)(1)


def test_prime_convert_from_strings_and_fractions():
    F = GF(7)
    assert F.convert("3") == 3
    assert F.convert("1/2") == 4
    assert F.convert(Fraction(-1, 3)) == 2


def test_rational_parse():
    assert QQ.parse("-2/7") == Fraction(-2, 7)
    assert QQ.parse("5") == 5
    with pytest.raises(FieldError):
        QQ.parse("1.5")
    with pytest.raises(FieldError):
        QQ.parse("abc")


def test_rational_normalized():
    x = QQ.convert("6/4")
    assert x.numerator == 3 and x.denominator == 2
    y = QQ.convert("-3/6")
    assert y.denominator > 0


def test_field_json_roundtrip():
    for F in (QQ, GF(10007)):
        assert field_from_json(field_to_json(F)) == F
    with pytest.raises(FieldError):
        field_from_json({"field": "fp"})
    with pytest.raises(FieldError):
        field_from_json({"field": "gf4"})


def _axioms(F, a, b, c):
    add, mul = F.add, F.mul
    assert add(a, b) == add(b, a)
    assert mul(a, b) == mul(b, a)
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    assert F.is_zero(add(a, F.neg(a)))
    if not F.is_zero(a):
        assert F.is_one(mul(a, F.inv(a)))
        assert F.inv(F.inv(a)) == a


@pytest.mark.parametrize("F", [GF(2), GF(3), GF(7), GF(10007), GF((1 << 61) - 1), QQ],
                         ids=lambda F: F.name)
def test_field_axioms_1000_random(F):
    rng = random.Random(1)
    for _ in range(1000):
        _axioms(F, F.random(rng), F.random(rng), F.random(rng))


@given(st.integers(), st.integers(), st.sampled_from([2, 3, 5, 7, 10007, 2**31 - 1]))
def test_prime_arithmetic_matches_integers(a, b, p):
    F = GF(p)
    x, y = F(a), F(b)
    assert (x + y).residue == (a + b) % p
    assert (x - y).residue == (a - b) % p
    assert (x * y).residue == (a * b) % p
    assert (-x).residue == (-a) % p


@given(st.integers(min_value=1, max_value=10006))
def test_prime_inverse(a):
    F = GF(10007)
    assert F(a) * F(a).inverse() == 1
    assert F(a) / F(a) == 1


@settings(max_examples=200)
@given(st.fractions(), st.fractions(), st.fractions())
def test_rational_axioms_hypothesis(a, b, c):
    _axioms(QQ, a, b, c)


def test_prime_scalar_hash_eq():
    F = GF(5)
    assert F(7) == F(2) == 2
    assert hash(F(7)) == hash(F(2))
    assert {F(1), F(6)} == {F(1)}
    assert isinstance(F(3), PrimeFieldScalar)


def test_rational_function_field_axioms():
    R = RationalFunctionField(3, ["x", "y", "z"])
    x, y, z = R.gens()
    rng = random.Random(4)
    pool = [x, y, z, x + y, x * y - 1, (x + 1) / (y - z), R.convert(3), z * z]
    for _ in range(100):
        a, b, c = (rng.choice(pool) for _ in range(3))
        _axioms(R, a, b, c)
