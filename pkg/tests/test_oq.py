import itertools
from fractions import Fraction

import pytest
from hypothesis import given

import oracle
from strategies import oq_elements
from uqtorus import oq, uq
from uqtorus.oq import OQ, OQ_W0, OQ_W0W0
from uqtorus.scalar import ONE, ZERO, q_power
from uqtorus.suites import hopf_residuals

q = q_power(1)
x11, x12, x21, x22 = (OQ.gen(n) for n in oq.GEN_NAMES)

# r(x_ij, x_kl) from the independent matrix model (tests/oracle.py), keyed by (i, j, k, l)
R_VALUES = {
    (0, 0, 0, 0): q_power(Fraction(-1, 2)),
    (0, 0, 1, 1): q_power(Fraction(1, 2)),
    (1, 1, 0, 0): q_power(Fraction(1, 2)),
    (1, 1, 1, 1): q_power(Fraction(-1, 2)),
    (0, 1, 1, 0): q_power(Fraction(-1, 2)) - q_power(Fraction(3, 2)),
}


def test_printed_relations():
    assert x11 * x12 == (x12 * x11).scale(q)
    assert x12 * x22 == (x22 * x12).scale(q)
    assert x12 * x21 == x21 * x12
    assert x11 * x21 == (x21 * x11).scale(q)
    assert x21 * x22 == (x22 * x21).scale(q)
    assert x11 * x22 - x22 * x11 == (x12 * x21).scale(q - q ** -1)
    assert x11 * x22 - (x12 * x21).scale(q) == OQ.one()


def test_antipode_values():
    assert oq.antipode(x11) == x22 and oq.antipode(x22) == x11
    assert oq.antipode(x12) == x12.scale(-q ** -1)
    assert oq.antipode(x21) == x21.scale(-q)


def test_coproduct_and_counit():
    t = oq.coproduct(x12)
    assert t.terms == {((1, 0, 0, 0), (0, 1, 0, 0)): ONE, ((0, 1, 0, 0), (0, 0, 0, 1)): ONE}
    assert [oq.counit(g) for g in (x11, x12, x21, x22)] == [ONE, ZERO, ZERO, ONE]


def test_hopf_axioms_to_degree_four():
    res = hopf_residuals(oq.standard_keys(4), OQ, oq.coproduct_key, oq.counit_key,
                         oq.antipode_key, oq.antipode_inverse_key)
    for group in res:
        assert all(r.is_zero() for r in group)


def test_evaluation_on_fundamental_module():
    assert oq.evaluate(x12, uq.E()) == ONE
    assert oq.evaluate(x21, uq.F()) == ONE
    assert oq.evaluate(x11, uq.K(1)) == q_power(Fraction(1, 2))
    assert oq.evaluate(x11 * x22 - (x12 * x21).scale(q), uq.E() * uq.F()) == ZERO


@given(oq_elements(), oq_elements(), oq_elements())
def test_associativity(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(oq_elements(OQ_W0W0), oq_elements(OQ_W0W0), oq_elements(OQ_W0W0))
def test_associativity_localized(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(oq_elements(), oq_elements())
def test_coproduct_multiplicative(x, y):
    assert oq.coproduct(x * y) == oq.coproduct(x) * oq.coproduct(y)


def test_localizations():
    assert OQ_W0.gen("x21") * OQ_W0.gen("x21").inverse() == OQ_W0.one()
    y = OQ_W0W0.gen("x12") * OQ_W0W0.gen("x21")
    assert y * y.inverse() == OQ_W0W0.one()
    with pytest.raises(oq.AlgebraError):
        OQ_W0.gen("x12").inverse()
    with pytest.raises(oq.LocalizedInputError):
        oq.coproduct(OQ_W0.gen("x21").inverse())


def test_rewrite_systems_confluent():
    for alg in (OQ, OQ_W0, OQ_W0W0):
        sys = oq.oq_rewrite_system(alg)
        assert sys.check_confluence().confluent
        assert sys.check_termination().terminating


def test_mutated_determinant_breaks_confluence():
    rep = oq.oq_rewrite_system(OQ, mutated=True).check_confluence()
    assert not rep.confluent


def test_rewriting_matches_product():
    for w in itertools.product(range(4), repeat=3):
        assert oq.normalize_word([(g, 1) for g in w]) == oq.word_product(OQ, w)


def test_bigrade():
    assert oq.bigrade(x11).degree == (-1, 1)
    assert oq.bigrade(x22).degree == (1, -1)
    assert oq.bigrade(x12).degree == (-1, -1)
    assert oq.bigrade(x21).degree == (1, 1)
    assert not oq.bigrade(x11 + x22).homogeneous
    for key in oq.standard_keys(3):
        assert oq.bigrade(OQ.monomial(key)).degree == oq.bidegree_key(key)


def test_rform_matches_independent_model():
    for i, j, k, l in itertools.product((0, 1), repeat=4):
        expected = R_VALUES.get((i, j, k, l), ZERO)
        got = oq.rform(oq.matrix_coefficient((i,), (j,)), oq.matrix_coefficient((k,), (l,)))
        assert got == expected, (i, j, k, l)


def test_rform_oracle_values_are_frozen_correctly():
    for (i, j, k, l), v in R_VALUES.items():
        got = oracle.cocycle_value(i, j, k, l)
        want = oracle.to_sympy(v)
        assert oracle.sp.simplify(got - want) == 0


def test_rform_cutoff():
    with pytest.raises(oq.CutoffError):
        oq.rform(x12, x21, cutoff=0)
    assert oq.rform(x12, x21, cutoff=1) == R_VALUES[(0, 1, 1, 0)]


def test_theta_truncation():
    t = oq.theta_truncated(3)
    assert [n for n, _, _ in t.levels] == [0, 1, 2, 3]
    assert oq.theta_coefficient(1) == q ** -1 - q


def test_l_operators():
    assert oq.lplus(x11) == uq.K(-1)
    assert oq.lplus(x12).is_zero()
    assert oq.lminus_prime(x21).is_zero()
    assert oq.lminus_prime(x12) == uq.Fhat() * uq.K(1)
    assert oq.l_operator(x11, "l-") == oq.lminus_prime(oq.antipode(x11))
    with pytest.raises(ValueError):
        oq.l_operator(x11, "l0")


def test_l_operator_pairing_is_the_r_form():
    for a in (x11, x12, x21, x22):
        for b in (x11, x12, x21, x22):
            assert uq.hopf_pair(oq.lplus(a), oq.lminus_prime(b)) == oq.rform(b, a)


def test_twisted_products():
    assert oq.twisted_product(x11, x22, "F") == oq.bullet_f(x11, x22)
    assert oq.bullet_r(OQ.one(), x12) == x12
    with pytest.raises(ValueError):
        oq.twisted_product(x11, x22, "G")


def test_quantum_minors():
    assert oq.quantum_minor(1) == x11
    assert oq.quantum_minor(1, "s", "e") == x21
    assert oq.quantum_minor(1, "e", "s") == x12
    assert oq.quantum_minor(1, "s", "s") == x22
    assert oq.minor_from_definition(2) == x11 * x11
    assert oq.minor_from_definition(2, "s", "e") == x21 * x21


def test_quantum_trace_invariance():
    tau = oq.quantum_trace()
    assert tau == x11.scale(q) + x22.scale(q ** -1)
    for x in (uq.E(), uq.F(), uq.K(1)):
        assert oq.coadjoint_right(x, tau) == tau.scale(uq.counit(x))
    shifted = oq.quantum_trace(shift=1)
    assert oq.coadjoint_right(uq.E(), shifted) != 0
