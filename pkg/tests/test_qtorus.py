from fractions import Fraction

import pytest
from hypothesis import given

from strategies import torus_a, torus_a_prime
from uqtorus import qtorus
from uqtorus.ncalg import AlgebraError
from uqtorus.qtorus import TORUS_A, TORUS_A_PRIME, TorusPresentation
from uqtorus.scalar import q_power

q = q_power(1)
half = Fraction(1, 2)


def test_commutation():
    u, v, z = (TORUS_A.gen(n) for n in "uvz")
    assert u * v == (v * u).scale(q ** 2)
    assert z * u == u * z and z * v == v * z


def test_half_powers_in_a_prime():
    u, vh = TORUS_A_PRIME.gen("u"), TORUS_A_PRIME.gen("v", half)
    assert vh * u == (u * vh).scale(q ** -1)
    assert vh * vh == TORUS_A_PRIME.gen("v")


def test_denominators_are_enforced():
    with pytest.raises(AlgebraError):
        TORUS_A.gen("v", half)
    with pytest.raises(AlgebraError):
        TORUS_A_PRIME.gen("u", half)


def test_center():
    assert qtorus.center_check(TORUS_A.gen("z"))
    assert not qtorus.center_check(TORUS_A.gen("u"))
    assert qtorus.center_check(TORUS_A_PRIME.gen("z", half))


def test_commutator_exponent():
    p = qtorus.A_PRESENTATION
    assert qtorus.commutator_exponent(p, (1, 0, 0), (0, 1, 0)) == 2
    assert qtorus.commutator_exponent(p, (1, 0, 0), (0, 0, 1)) == 0


def test_inverse_and_power():
    x = TORUS_A_PRIME.mono((1, half, -1), 4 * q)
    assert x * x.inverse() == TORUS_A_PRIME.one()
    y = TORUS_A_PRIME.mono((0, 1, -1), 4 * q)
    r = qtorus.torus_power(y, half)
    assert r * r == y
    assert qtorus.torus_power(y, -half) * r == TORUS_A_PRIME.one()
    assert qtorus.torus_power(x, 3) == x ** 3
    with pytest.raises(AlgebraError):
        qtorus.torus_inverse(x + TORUS_A_PRIME.one())


def test_presentation_validation():
    with pytest.raises(ValueError):
        TorusPresentation(("a", "b"), ((0, 1), (1, 0)), (1, 1))
    with pytest.raises(ValueError):
        TorusPresentation(("a",), ((1,),), (1,))


def test_presentation_file(tmp_path):
    path = tmp_path / "t.txt"
    path.write_text("# a torus\ngenerators: a b\ndenominators: 2 1\nskew:\n 0 1\n-1 0\n")
    alg = qtorus.load_presentation(path)
    a, b = alg.gen("a", half), alg.gen("b")
    assert (a * a) * b == (b * a * a).scale(q)
    assert qtorus.parse_presentation("generators: x y\nskew: 0 3\n-3 0").skew == ((0, 3), (-3, 0))
    with pytest.raises(ValueError):
        qtorus.parse_presentation("nonsense")


def test_rewrite_system_matches_cocycle():
    p = qtorus.A_PRESENTATION
    sys = qtorus.torus_rewrite_system(p)
    assert sys.check_confluence().confluent
    word = ((1, 1), (0, 1), (2, -1), (0, -1), (1, 1))
    expected = TORUS_A.one()
    for i, s in word:
        expected = expected * TORUS_A.gen(p.names[i], s)
    assert qtorus.normalize_torus_word(TORUS_A, word) == expected


@given(torus_a, torus_a, torus_a)
def test_associativity_a(x, y, w):
    assert (x * y) * w == x * (y * w)


@given(torus_a_prime, torus_a_prime, torus_a_prime)
def test_associativity_a_prime(x, y, w):
    assert (x * y) * w == x * (y * w)
