from fractions import Fraction

import pytest

from uqtorus import uq
from uqtorus.ncalg import (AlgebraError, Rule, RewriteSystem, SingularSystem, Tensor,
                           WithCentral, determinant, format_terms, solve_linear)
from uqtorus.scalar import ONE, ZERO, q_power
from uqtorus.uq import UQ

q = q_power(1)


def weyl_system():
    """Letters 'x', 'y' with y x -> q x y + 1."""
    rules = [Rule("yx", 2, lambda w: w == ("y", "x"), lambda w: {("x", "y"): q, (): ONE})]

    def order(word):
        inv = sum(1 for i in range(len(word)) for j in range(i + 1, len(word))
                  if word[i] > word[j])
        return (len(word), inv)
    return RewriteSystem("weyl", rules, order, ["x", "y"])


def test_rewriting_normal_form():
    sys = weyl_system()
    assert sys.normalize(("y", "x")) == {("x", "y"): q, (): ONE}
    nf = sys.normalize(("y", "y", "x"))
    assert nf == {("x", "y", "y"): q ** 2, ("y",): 1 + q}
    assert sys.is_normal(("x", "x", "y"))


def test_single_rule_system_is_confluent_and_terminating():
    sys = weyl_system()
    assert sys.check_confluence().confluent
    assert sys.check_termination().terminating


def test_confluence_detects_overlap_failure():
    # ab -> 1 and bc -> 0 disagree on abc
    rules = [Rule("ab", 2, lambda w: w == ("a", "b"), lambda w: {(): ONE}),
             Rule("bc", 2, lambda w: w == ("b", "c"), lambda w: {})]
    sys = RewriteSystem("bad", rules, lambda w: (len(w), w), ["a", "b", "c"])
    rep = sys.check_confluence()
    assert not rep.confluent
    assert rep.failures[0]["word"] == ("a", "b", "c")


def test_solve_linear():
    x = solve_linear([[1, q], [q, 1]], [1 + q, 1 + q])
    assert x == [ONE, ONE]
    assert solve_linear([[1, 1], [1, 1]], [1, 2]) is None
    with pytest.raises(SingularSystem):
        solve_linear([[1, 1], [2, 2]], [1, 2])


def test_determinant():
    assert determinant([[q, 1], [1, q ** -1]]) == ZERO
    assert determinant([[0, 1], [1, 0]]) == -ONE
    assert determinant([[q, 0, 0], [0, q, 0], [1, 2, q]]) == q ** 3


def test_tensor_operations():
    t = Tensor.pure(uq.E(), uq.F()) + Tensor.pure(uq.K(2), uq.E())
    assert t.flip() == Tensor.pure(uq.F(), uq.E()) + Tensor.pure(uq.E(), uq.K(2))
    assert t.contract(0, uq.counit_key) == Tensor.pure(uq.E())
    m = Tensor.pure(uq.F(), uq.E()).multiply_legs()
    assert m == uq.F() * uq.E()
    assert (t * t).arity == 2


def test_element_inverse_only_for_units():
    assert (uq.K(3) * uq.K(3).inverse()) == UQ.one()
    with pytest.raises(AlgebraError):
        (uq.E() + uq.F()).inverse()


def test_with_central():
    T = WithCentral(UQ, "t", 2)
    x = T.embed(uq.E(), 1) * T.t(Fraction(1, 2))
    assert str(x) == "E*t^(3/2)"
    assert T.coefficients(x + T.embed(uq.F(), 1)) == {Fraction(1): uq.F(), Fraction(3, 2): uq.E()}
    with pytest.raises(AlgebraError):
        T.t(Fraction(1, 3))
    assert T.t(2) * T.t(-2) == T.one()


def test_format_terms():
    assert format_terms([], str) == "0"
    assert str(uq.E() - uq.F().scale(q - 1)) == "E - (q - 1)*F"
