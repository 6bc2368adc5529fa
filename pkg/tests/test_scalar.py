from fractions import Fraction

import pytest
from hypothesis import given

from strategies import laurent, nonzero_laurent, scalars
from uqtorus.cli import parse_element
from uqtorus.scalar import (ONE, ZERO, QScalar, ScalarError, q_binomial, q_factorial,
                            q_int, q_power, root_order, scalar, sqrt_monomial)


def test_q_power_exponents_add():
    assert q_power(Fraction(1, 2)) * q_power(Fraction(1, 4)) == q_power(Fraction(3, 4))
    assert q_power(1) * q_power(-1) == ONE


def test_unrepresentable_root_is_rejected():
    with pytest.raises(ScalarError):
        q_power(Fraction(1, 3))


def test_q_integers():
    q = q_power(1)
    assert q_int(2) == q + q ** -1
    assert q_int(3) == q ** 2 + 1 + q ** -2
    assert q_int(-2) == -q_int(2)
    assert q_int(5) * (q - q ** -1) == q ** 5 - q ** -5


def test_q_factorial_and_binomial():
    assert q_factorial(3) == q_int(2) * q_int(3)
    for n in range(7):
        for k in range(n + 1):
            assert q_binomial(n, k) * q_factorial(k) * q_factorial(n - k) == q_factorial(n)


def test_rational_functions_reduce():
    q = q_power(1)
    x = (q ** 2 - 1) / (q - 1)
    assert x == q + 1
    assert x.is_laurent()
    assert str((q - q ** -1) ** -1) == "q/(q^2 - 1)"


def test_printing():
    q = q_power(1)
    assert str(q_power(Fraction(-3, 4))) == "q^(-3/4)"
    assert str(q ** -1) == "q^-1"
    assert str(q - 2 * q ** -1 + q ** -3) == "q - 2*q^-1 + q^-3"
    assert str(ZERO) == "0"


def test_sqrt_monomial():
    assert sqrt_monomial(4 * q_power(1)) == 2 * q_power(Fraction(1, 2))
    for bad in (q_power(Fraction(1, 4)), -q_power(2), 2 * q_power(2), q_power(1) + 1):
        with pytest.raises(ScalarError):
            sqrt_monomial(bad)


def test_division_by_zero():
    with pytest.raises(ScalarError):
        ONE / ZERO


@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == ZERO


@given(scalars(), nonzero_laurent())
def test_division_inverts_multiplication(a, b):
    assert (a * b) / b == a
    assert b * b.inverse() == ONE


@given(scalars())
def test_hash_respects_equality(a):
    b = (a * 3 + 1 - 1) / 3
    assert a == b and hash(a) == hash(b)


@given(scalars())
def test_printed_scalars_parse_back(a):
    assert parse_element(str(a), "uq-sl2") == scalar(a) * parse_element("1", "uq-sl2")


@given(laurent())
def test_laurent_terms_round_trip(a):
    assert QScalar.laurent(a.laurent_terms()) == a


def test_default_root_order():
    assert root_order() == 4
