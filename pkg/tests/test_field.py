from fractions import Fraction

import pytest

from exactla.errors import DivisionByZero, InvalidInput
from exactla.field import GF2, GF3, QQ, PrimeField, Rationals
from exactla.rng import SplitMix64

GF5 = PrimeField(5)
GF7 = PrimeField(7)


def _axiom_check(F, a, b, c):
    assert F.eq(F.add(a, b), F.add(b, a))
    assert F.eq(F.mul(a, b), F.mul(b, a))
    assert F.eq(F.add(F.add(a, b), c), F.add(a, F.add(b, c)))
    assert F.eq(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)))
    assert F.eq(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)))
    assert F.eq(F.add(a, F.zero()), a)
    assert F.eq(F.mul(a, F.one()), a)
    assert F.is_zero(F.add(a, F.neg(a)))
    if not F.is_zero(a):
        assert F.is_one(F.mul(a, F.inv(a)))


@pytest.mark.parametrize("F", [GF2, GF3, GF5, GF7])
def test_prime_field_axioms_exhaustive(F):
    for a in F.elements():
        for b in F.elements():
            for c in F.elements():
                _axiom_check(F, a, b, c)


def test_rational_axioms_random():
    rng = SplitMix64(11)
    for _ in range(300):
        a, b, c = (Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                   for _ in range(3))
        _axiom_check(QQ, a, b, c)


def test_total_inverse_convention():
    assert QQ.inv(QQ.one()) == 1
    assert QQ.inv(QQ.zero()) == 0  # inv is total with inv(0) = 0
    assert GF3.inv(2) == 2
    for F in (GF2, GF3, GF5, GF7, QQ):
        assert F.is_zero(F.inv(F.zero()))


def test_checked_division():
    assert QQ.div(QQ.from_int(3), QQ.from_int(2)) == Fraction(3, 2)
    with pytest.raises(DivisionByZero):
        QQ.div(QQ.one(), QQ.zero())
    with pytest.raises(DivisionByZero):
        GF5.div(GF5.one(), GF5.zero())


def test_indicator():
    assert QQ.eq(QQ.indicator(True), QQ.one())
    assert QQ.eq(QQ.indicator(False), QQ.zero())
    assert GF2.eq(GF2.indicator(3 <= 5), GF2.one())


def test_from_int_and_char():
    assert GF3.is_zero(GF3.from_int(6))
    assert GF3.eq(GF3.from_int(-1), 2)
    assert QQ.from_int(-7) == Fraction(-7)


def test_prime_modulus_checked():
    with pytest.raises(InvalidInput):
        PrimeField(9)
    with pytest.raises(InvalidInput):
        PrimeField(1)
    assert PrimeField(2) == GF2


def test_parse_format_roundtrip():
    rng = SplitMix64(5)
    for _ in range(100):
        a = Fraction(rng.randint(-20, 20), rng.randint(1, 20))
        assert QQ.parse(QQ.format(a)) == a
    for F in (GF2, GF3, GF7):
        for a in F.elements():
            assert F.eq(F.parse(F.format(a)), a)
    with pytest.raises(InvalidInput):
        QQ.parse("1/0")
    with pytest.raises(InvalidInput):
        GF3.parse("two")


def test_field_equality_is_structural():
    assert PrimeField(7) == GF7
    assert PrimeField(7) != PrimeField(5)
    assert Rationals() == QQ
