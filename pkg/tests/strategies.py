"""Hypothesis strategies for scalars and elements of the shipped algebras."""
from fractions import Fraction

from hypothesis import strategies as st

from uqtorus import heis, oq, qtorus, uq
from uqtorus.scalar import QScalar, q_power

small = st.integers(-3, 3)


@st.composite
def laurent(draw, max_terms=3):
    terms = draw(st.dictionaries(st.integers(-8, 8), st.integers(-4, 4).filter(bool),
                                 max_size=max_terms))
    return QScalar.laurent(terms)


@st.composite
def nonzero_laurent(draw):
    return draw(laurent().filter(lambda x: not x.is_zero()))


@st.composite
def scalars(draw):
    num = draw(laurent())
    if draw(st.booleans()):
        return num
    return num / draw(nonzero_laurent())


def _element(alg, keys_strategy, max_terms=3):
    @st.composite
    def build(draw):
        out = alg.zero()
        for _ in range(draw(st.integers(0, max_terms))):
            out = out + alg.monomial(draw(keys_strategy), q_power(draw(small)) * draw(st.integers(-2, 2)))
        return out
    return build()


uq_keys = st.tuples(st.integers(0, 2), st.integers(-2, 2), st.integers(0, 2))
uq_elements = _element(uq.UQ, uq_keys)


@st.composite
def _oq_key(draw, alg=oq.OQ):
    a, d = draw(st.integers(0, 2)), draw(st.integers(0, 2))
    if draw(st.booleans()):
        a = 0
    else:
        d = 0
    lo12 = -2 if alg.inv12 else 0
    lo21 = -2 if alg.inv21 else 0
    return (a, draw(st.integers(lo12, 2)), draw(st.integers(lo21, 2)), d)


def oq_elements(alg=oq.OQ):
    return _element(alg, _oq_key(alg))


heis_keys = st.tuples(st.integers(0, 2), st.integers(-2, 2), st.integers(0, 2), st.integers(-2, 2))
heis_elements = _element(heis.HEIS, heis_keys)

cqx_keys = st.tuples(_oq_key(), st.tuples(st.just(0), st.integers(-2, 2), st.integers(0, 2)))
cqx_elements = _element(heis.CQX, cqx_keys, max_terms=2)
dq_keys = st.tuples(_oq_key(), st.tuples(st.integers(0, 1), st.integers(-2, 2), st.integers(0, 1)))
dq_elements = _element(heis.DQ, dq_keys, max_terms=2)


def torus_elements(alg):
    p = alg.presentation
    key = st.tuples(*[st.integers(-2 * d, 2 * d).map(lambda n, d=d: Fraction(n, d))
                      for d in p.denominators])
    return _element(alg, key)


torus_a = torus_elements(qtorus.TORUS_A)
torus_a_prime = torus_elements(qtorus.TORUS_A_PRIME)
