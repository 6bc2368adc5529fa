import random

import pytest
from hypothesis import given

from strategies import cqx_elements, dq_elements, heis_elements
from uqtorus import heis, oq, uq
from uqtorus.heis import HEIS, CQX, DQ
from uqtorus.ncalg import AlgebraError
from uqtorus.oq import OQ
from uqtorus.scalar import ONE, q_power
from uqtorus.suites import random_tminus_element, tminus_invariant_monomials
from uqtorus.uq import UQ

q = q_power(1)
E_ = heis.smash(uq.E(), UQ.one())
Fhat_ = heis.smash(UQ.one(), uq.Fhat())


def test_cross_relation():
    assert Fhat_ * E_ == heis.smash(uq.E(), uq.Fhat()) + heis.smash(uq.K(2), UQ.one())


def test_t_commutes_with_left_factor():
    assert heis.t(1) * E_ == E_ * heis.t(1)
    assert heis.t(1) * heis.t(-1) == HEIS.one()


def test_units():
    x = HEIS.monomial((0, 1, 0, 2))
    assert x * x.inverse() == HEIS.one()
    with pytest.raises(AlgebraError):
        E_.inverse()


@given(heis_elements, heis_elements, heis_elements)
def test_associativity(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(cqx_elements, cqx_elements, cqx_elements)
def test_cqx_associativity(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(dq_elements, dq_elements, dq_elements)
def test_dq_associativity(x, y, z):
    assert (x * y) * z == x * (y * z)


def test_smash_requires_correct_halves():
    with pytest.raises(AlgebraError):
        heis.smash(uq.F(), UQ.one())
    with pytest.raises(AlgebraError):
        heis.smash(UQ.one(), uq.E())
    with pytest.raises(AlgebraError):
        heis.smash_ou(OQ.one(), uq.E(), CQX)
    assert not heis.smash_ou(OQ.one(), uq.E(), DQ).is_zero()


def test_torus_closed_forms():
    for a in range(3):
        for b in range(3):
            for m in (-1, 0, 2):
                for n in (-1, 0, 1):
                    key = (a, m, b, n)
                    x = HEIS.monomial(key)
                    for lam in (1, -2):
                        assert heis.act_tminus(lam, x) == x.scale(heis.torus_scaling("T-", lam, key))
                        assert heis.act_tc(lam, x) == x.scale(heis.torus_scaling("Tc", lam, key))


def test_invariance_patterns():
    assert heis.invariant_membership(HEIS.monomial((1, -2, 1, 0)), "T-")
    assert heis.invariant_membership(HEIS.monomial((1, -1, 0, -1)), "Tc")
    assert heis.invariant_membership(HEIS.monomial((2, -2, 1, 0)), "T")
    assert heis.invariant_membership(E_, "Tc")
    assert not heis.invariant_membership(Fhat_, "Tc")
    assert not heis.invariant_membership(Fhat_, "T-")
    with pytest.raises(ValueError):
        heis.invariant_membership(E_, "T0")
    with pytest.raises(ValueError):
        heis.torus_scaling("T+", 1, (0, 0, 0, 0))


def test_torus_action_dispatch():
    assert heis.torus_action("T", (1, 0), E_) == heis.act_tplus(1, E_)
    assert heis.torus_action("T-", 1, Fhat_) == heis.act_tminus(1, Fhat_)
    with pytest.raises(ValueError):
        heis.torus_action("X", 1, E_)


def test_action_on_positive_part():
    assert heis.heis_act(E_, UQ.one()) == uq.E()
    assert heis.heis_act(Fhat_, uq.E()).is_zero() is False
    assert heis.heis_act(heis.t(1), uq.K(1)) == uq.K(1).scale(q_power(-heis.SL2.form(1, 1)))


def test_invariant_part_preserves_weight_spaces():
    for akey in tminus_invariant_monomials(3):
        A = HEIS.monomial(akey)
        for c in range(4):
            for lam in (-1, 0, 1):
                img = heis.heis_act(A, UQ.monomial((c, lam, 0)))
                assert all(k[1] == lam and k[2] == 0 for k in img.terms)


def test_factorization_multiplicative():
    rng = random.Random(7)
    for _ in range(25):
        A, B = random_tminus_element(rng), random_tminus_element(rng)
        assert heis.heis_factorize(A * B) == heis.heis_factorize(A) * heis.heis_factorize(B)
        assert heis.heis_unfactorize(heis.heis_factorize(A)) == A
    with pytest.raises(AlgebraError):
        heis.heis_factorize(Fhat_)


def test_lplus_tensor_id_multiplicative_on_generators():
    gens = [heis.smash_ou(OQ.gen(n), UQ.one()) for n in oq.GEN_NAMES]
    gens += [heis.smash_ou(OQ.one(), u) for u in (uq.F(), uq.K(1), uq.K(-1))]
    for a in gens:
        for b in gens:
            lhs = heis.lplus_tensor_id(a * b)
            assert lhs == heis.lplus_tensor_id(a) * heis.lplus_tensor_id(b)


def test_u_action_and_ideal_projection():
    one = heis.smash_ou(OQ.one(), UQ.one())
    for x in (uq.E(), uq.F(), uq.K(1)):
        assert heis.u_action(x, one) == one.scale(uq.counit(x))
    assert heis.u_action(UQ.one(), heis.smash_ou(OQ.gen("x12"), uq.F())) == \
        heis.smash_ou(OQ.gen("x12"), uq.F())
    assert heis.ideal_project(OQ.one(), OQ.gen("x11")) == heis.smash_ou(OQ.one(), uq.K(1))
    assert heis.ideal_project(OQ.one(), OQ.gen("x21")).is_zero()


def test_right_form_round_trip():
    assert heis.uq_to_right(heis.right_to_uq(2, 3)) == {(2, 3): ONE}
    with pytest.raises(AlgebraError):
        heis.uq_to_right(uq.E())
