"""Quantum tori X_i X_j = q^(b_ij) X_j X_i with fractional exponents.

A monomial X^a (a a vector of rationals) stands for the ordered product
X_1^(a_1) ... X_r^(a_r) taken in registration order, so

    X^a X^b = q^(c(a, b)) X^(a + b),   c(a, b) = sum_{i > j} b_ij a_i b_j.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from pathlib import Path

from .ncalg import Algebra, AlgebraError, Element, Rule, RewriteSystem
from .scalar import ONE, q_power, sqrt_monomial


@dataclass(frozen=True)
class TorusPresentation:
    names: tuple
    skew: tuple          # skew[i][j] = b_ij
    denominators: tuple  # exponents of generator i live in (1/d_i) Z

    def __post_init__(self):
        r = len(self.names)
        if len(self.skew) != r or any(len(row) != r for row in self.skew):
            raise ValueError("skew matrix must be square of size rank")
        for i in range(r):
            if self.skew[i][i] != 0:
                raise ValueError("b_ii must vanish")
            for j in range(r):
                if self.skew[i][j] != -self.skew[j][i]:
                    raise ValueError("skew matrix must be antisymmetric")
        if len(self.denominators) != r or any(d < 1 for d in self.denominators):
            raise ValueError("one positive denominator per generator")

    @property
    def rank(self) -> int:
        return len(self.names)

    @property
    def D(self) -> int:
        return lcm(*self.denominators)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise AlgebraError(f"unknown torus generator {name!r}") from None

    def cocycle(self, a, b) -> Fraction:
        r = self.rank
        return sum((Fraction(self.skew[i][j]) * a[i] * b[j]
                    for i in range(r) for j in range(i)), Fraction(0))

    def check_exponent(self, i: int, e) -> Fraction:
        e = Fraction(e)
        if (e * self.denominators[i]).denominator != 1:
            raise AlgebraError(
                f"exponent {e} not allowed for {self.names[i]} "
                f"(denominator {self.denominators[i]})")
        return e


class TorusAlgebra(Algebra):
    def __init__(self, presentation: TorusPresentation, name: str):
        self.presentation = presentation
        self.name = name
        self._mul_cache = {}

    def __eq__(self, other):
        return isinstance(other, TorusAlgebra) and self.presentation == other.presentation

    def __hash__(self):
        return hash(self.presentation)

    def one_key(self):
        return (Fraction(0),) * self.presentation.rank

    def _mul_keys(self, a, b):
        hit = self._mul_cache.get((a, b))
        if hit is None:
            c = self.presentation.cocycle(a, b)
            hit = {tuple(x + y for x, y in zip(a, b)): q_power(c)}
            self._mul_cache[(a, b)] = hit
        return hit

    def sort_key(self, key):
        return (sum(abs(x) for x in key),) + tuple(key)

    def format_key(self, key):
        parts = []
        for name, e in zip(self.presentation.names, key):
            if e == 0:
                continue
            if e == 1:
                parts.append(name)
            elif e.denominator == 1:
                parts.append(f"{name}^{e.numerator}")
            else:
                parts.append(f"{name}^({e.numerator}/{e.denominator})")
        return "*".join(parts)

    def degree(self, key):
        return tuple(key)

    def inverse_key(self, key):
        neg = tuple(-x for x in key)
        c = self.presentation.cocycle(key, neg)
        return q_power(c), neg

    def gen(self, name: str, exponent=1) -> Element:
        i = self.presentation.index(name)
        e = self.presentation.check_exponent(i, exponent)
        key = [Fraction(0)] * self.presentation.rank
        key[i] = e
        return self.monomial(tuple(key))

    def mono(self, exponents, coeff=ONE) -> Element:
        key = tuple(self.presentation.check_exponent(i, e) for i, e in enumerate(exponents))
        return self.monomial(key, coeff)

    def generators(self):
        """The units X_i^(1/d_i)."""
        return [self.gen(n, Fraction(1, d))
                for n, d in zip(self.presentation.names, self.presentation.denominators)]

    def __repr__(self):
        return f"<torus {self.name}>"


def torus_inverse(x: Element) -> Element:
    if len(x.terms) != 1:
        raise AlgebraError("only single monomials are invertible in a quantum torus")
    return x.inverse()


def torus_power(x: Element, r) -> Element:
    """x^r for a monomial x = c X^a and r in Z or (1/2)Z, through the
    Weyl-ordered form x = c q^(-c(a,a)/2) W^a with (W^a)^r = W^(ra)."""
    if len(x.terms) != 1:
        raise AlgebraError("only single monomials have fractional powers")
    r = Fraction(r)
    if r.denominator not in (1, 2):
        raise AlgebraError("only integer and half-integer powers are supported")
    (a, c), = x.terms.items()
    p = x.alg.presentation
    base = c * q_power(-p.cocycle(a, a) / 2)
    if r.denominator == 2:
        base = sqrt_monomial(base)
    ra = tuple(r * e for e in a)
    return x.alg.mono(ra, base ** r.numerator * q_power(p.cocycle(ra, ra) / 2))


def center_check(x: Element) -> bool:
    return all(x * g == g * x for g in x.alg.generators())


def commutator_exponent(p: TorusPresentation, a, b) -> Fraction:
    """Exponent e with X^a X^b = q^e X^b X^a."""
    return p.cocycle(a, b) - p.cocycle(b, a)


# ---------------------------------------------------------------------------
# built-in tori


A_PRESENTATION = TorusPresentation(("u", "v", "z"), ((0, 2, 0), (-2, 0, 0), (0, 0, 0)), (1, 1, 1))
A_PRIME_PRESENTATION = TorusPresentation(("u", "v", "z"), A_PRESENTATION.skew, (1, 2, 2))

TORUS_A = TorusAlgebra(A_PRESENTATION, "qtorus:A")
TORUS_A_PRIME = TorusAlgebra(A_PRIME_PRESENTATION, "qtorus:A'")


# ---------------------------------------------------------------------------
# presentation files
#
#     # comment
#     generators: u v z
#     denominators: 1 2 2        (optional, default all 1)
#     skew:
#      0  2  0
#     -2  0  0
#      0  0  0


def parse_presentation(text: str) -> TorusPresentation:
    names = None
    dens = None
    rows = []
    in_skew = False
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        low = line.lower()
        if low.startswith("generators:"):
            names = tuple(line.split(":", 1)[1].split())
            in_skew = False
        elif low.startswith("denominators:"):
            dens = tuple(int(x) for x in line.split(":", 1)[1].split())
            in_skew = False
        elif low.startswith("skew:"):
            in_skew = True
            rest = line.split(":", 1)[1].split()
            if rest:
                rows.append(tuple(Fraction(x) for x in rest))
        elif in_skew:
            rows.append(tuple(Fraction(x) for x in line.split()))
        else:
            raise ValueError(f"unrecognized line in presentation: {raw!r}")
    if names is None:
        raise ValueError("presentation lacks a 'generators:' line")
    if dens is None:
        dens = (1,) * len(names)
    skew = tuple(tuple(int(x) if x.denominator == 1 else x for x in row) for row in rows)
    return TorusPresentation(names, skew, dens)


def load_presentation(path) -> TorusAlgebra:
    p = parse_presentation(Path(path).read_text())
    return TorusAlgebra(p, f"qtorus:{path}")


# ---------------------------------------------------------------------------
# word rewriting on integer exponents, used to cross-check the cocycle


def torus_rewrite_system(p: TorusPresentation) -> RewriteSystem:
    rules = []
    r = p.rank

    def swap(i, j):
        def match(w):
            return w[0][0] == j and w[1][0] == i

        def rhs(w):
            s, t = w[0][1], w[1][1]
            return {(w[1], w[0]): q_power(p.skew[j][i] * s * t)}
        return Rule(f"swap{j}{i}", 2, match, rhs)

    for i in range(r):
        for j in range(i + 1, r):
            rules.append(swap(i, j))
        rules.append(Rule(f"cancel{i}", 2,
                          lambda w, i=i: w[0][0] == i and w[1][0] == i and w[0][1] == -w[1][1],
                          lambda w: {(): ONE}))

    def order(word):
        inv = sum(1 for a in range(len(word)) for b in range(a + 1, len(word))
                  if word[a][0] > word[b][0])
        return (len(word), inv)

    alphabet = [(i, s) for i in range(r) for s in (1, -1)]
    return RewriteSystem(f"torus{p.names}", rules, order, alphabet)


def word_to_monomial(alg: TorusAlgebra, word) -> tuple:
    exps = [Fraction(0)] * alg.presentation.rank
    for i, s in word:
        exps[i] += s
    return tuple(exps)


@lru_cache(maxsize=None)
def _system_for(p: TorusPresentation) -> RewriteSystem:
    return torus_rewrite_system(p)


def normalize_torus_word(alg: TorusAlgebra, word) -> Element:
    sys = _system_for(alg.presentation)
    return alg.element({word_to_monomial(alg, w): c for w, c in sys.normalize(tuple(word)).items()})
