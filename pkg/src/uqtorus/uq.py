"""U_q(sl2) in simply connected form.

Weights are integers m standing for m*omega, so K^m below is K^(m omega);
the usual K equals K^2 and K^(1/2) equals K^1.  Basis keys (a, m, b) denote
the PBW monomial E^a K^m F^b.

Relations used:  K^m E = q^m E K^m,  F K^m = q^m K^m F,
EF - FE = (K^2 - K^-2)/(q - q^-1).
Hopf structure:  Delta(E) = E⊗1 + K^2⊗E,  Delta(F) = F⊗K^-2 + 1⊗F,
S(E) = -K^-2 E,  S(F) = -F K^2.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .ncalg import Algebra, AlgebraError, Element, Rule, RewriteSystem, Tensor, _add_into
from .scalar import ONE, ZERO, QScalar, q_factorial, q_power, register_cache, scalar


@dataclass(frozen=True)
class CartanData:
    """Root datum of sl2 with weights written in units of omega."""

    rank: int = 1
    cartan_matrix: tuple = ((2,),)
    symmetrizers: tuple = (1,)
    alpha: int = 2
    rho: int = 1

    def form(self, m, n) -> Fraction:
        """(m omega, n omega) = m n / 2."""
        return Fraction(m * n, 2)

    def theta(self, i: int) -> int:
        return i


SL2 = CartanData()


def qf(e) -> QScalar:
    return q_power(e)


def qdiff() -> QScalar:
    """q - q^-1."""
    return q_power(1) - q_power(-1)


class UqAlgebra(Algebra):
    name = "uq-sl2"

    def one_key(self):
        return (0, 0, 0)

    def _mul_keys(self, k1, k2):
        return _mul(k1, k2)

    def sort_key(self, key):
        a, m, b = key
        return (a + b, a, b, m)

    def format_key(self, key):
        a, m, b = key
        parts = []
        if a:
            parts.append("E" if a == 1 else f"E^{a}")
        if m:
            parts.append(format_k(m))
        if b:
            parts.append("F" if b == 1 else f"F^{b}")
        return "*".join(parts)

    def degree(self, key):
        a, _, b = key
        return (SL2.alpha * (a - b),)

    def inverse_key(self, key):
        a, m, b = key
        if a or b:
            raise AlgebraError("only K^m monomials are units in U_q")
        return ONE, (0, -m, 0)


def format_k(m: int) -> str:
    h = Fraction(m, 2)
    return f"K[{h.numerator}]" if h.denominator == 1 else f"K[{h.numerator}/{h.denominator}]"


UQ = UqAlgebra()


def E() -> Element:
    return UQ.monomial((1, 0, 0))


def F() -> Element:
    return UQ.monomial((0, 0, 1))


def K(m: int = 2) -> Element:
    """K^(m omega); the default is the Chevalley K = K^alpha."""
    return UQ.monomial((0, int(m), 0))


def Ehat() -> Element:
    return E().scale(q_power(-1) - q_power(1))


def Fhat() -> Element:
    return F().scale(q_power(-1) - q_power(1))


def pbw(a: int, m: int, b: int, coeff=ONE) -> Element:
    return UQ.monomial((a, m, b), coeff)


# ---------------------------------------------------------------------------
# product


@register_cache
@lru_cache(maxsize=None)
def _times_e(key) -> dict:
    """E^i K^k F^j * E, using F^j E = E F^j - A_j F^(j-1) with
    A_j = sum_t (q^(2t) K - q^(-2t) K^-1)/(q - q^-1)."""
    i, k, j = key
    out = {(i + 1, k, j): q_power(k)}
    if j:
        inv = qdiff().inverse()
        up = ZERO
        down = ZERO
        for t in range(j):
            up = up + q_power(2 * t)
            down = down + q_power(-2 * t)
        _add_into(out, (i, k + 2, j - 1), -(up * inv))
        _add_into(out, (i, k - 2, j - 1), down * inv)
    return out


@register_cache
@lru_cache(maxsize=None)
def _mul(k1, k2) -> dict:
    c, n, d = k2
    if c:
        out = {}
        for k, v in _mul(k1, (c - 1, 0, 0)).items():
            for k3, v3 in _times_e(k).items():
                for k4, v4 in _mul(k3, (0, n, d)).items():
                    _add_into(out, k4, v * v3 * v4)
        return out
    a, m, b = k1
    # F^b K^n = q^(n b) K^n F^b
    return {(a, m + n, b + d): q_power(n * b)}


# ---------------------------------------------------------------------------
# rewriting presentation (independent of the closed-form product above)


def _is_k(x):
    return isinstance(x, tuple) and x[0] == "K"


def _uq_rules():
    inv = None

    def rhs_fe(w):
        nonlocal inv
        if inv is None:
            inv = qdiff().inverse()
        return {("E", "F"): ONE, (("K", 2),): -inv, (("K", -2),): inv}

    return [
        Rule("FE", 2, lambda w: w == ("F", "E"), rhs_fe),
        Rule("FK", 2, lambda w: w[0] == "F" and _is_k(w[1]),
             lambda w: {(w[1], "F"): q_power(w[1][1])}),
        Rule("KE", 2, lambda w: _is_k(w[0]) and w[1] == "E",
             lambda w: {("E", w[0]): q_power(w[0][1])}),
        Rule("KK", 2, lambda w: _is_k(w[0]) and _is_k(w[1]),
             lambda w: {(("K", w[0][1] + w[1][1]),): ONE}),
        Rule("K0", 1, lambda w: w[0] == ("K", 0), lambda w: {(): ONE}),
    ]


def _uq_order(word):
    rank = {"E": 0, "F": 2}
    ranks = [1 if _is_k(x) else rank[x] for x in word]
    ef = sum(1 for x in word if not _is_k(x))
    inversions = sum(1 for i in range(len(ranks)) for j in range(i + 1, len(ranks))
                     if ranks[i] > ranks[j])
    return (ef, inversions, len(word))


def uq_rewrite_system(k_range: int = 2) -> RewriteSystem:
    alphabet = ["E", "F"] + [("K", m) for m in range(-k_range, k_range + 1)]
    return RewriteSystem("uq-sl2", _uq_rules(), _uq_order, alphabet)


def word_to_key(word) -> tuple:
    """Key of a normal word E..E K^m F..F."""
    a = sum(1 for x in word if x == "E")
    b = sum(1 for x in word if x == "F")
    m = sum(x[1] for x in word if _is_k(x))
    return (a, m, b)


def key_to_word(key) -> tuple:
    a, m, b = key
    return ("E",) * a + ((("K", m),) if m else ()) + ("F",) * b


def normalize_word(word, system: RewriteSystem | None = None) -> Element:
    system = system or _default_system()
    return UQ.element({word_to_key(w): c for w, c in system.normalize(word).items()})


@lru_cache(maxsize=1)
def _default_system():
    return uq_rewrite_system()


register_cache(_default_system)


# ---------------------------------------------------------------------------
# Hopf structure


@register_cache
@lru_cache(maxsize=None)
def _coproduct_key(key) -> Tensor:
    a, m, b = key
    if a:
        return _DE() * _coproduct_key((a - 1, m, b))
    if b:
        return _coproduct_key((0, m, b - 1)) * _DF()
    return Tensor._raw((UQ, UQ), {((0, m, 0), (0, m, 0)): ONE})


def _DE():
    return Tensor._raw((UQ, UQ), {((1, 0, 0), (0, 0, 0)): ONE, ((0, 2, 0), (1, 0, 0)): ONE})


def _DF():
    return Tensor._raw((UQ, UQ), {((0, 0, 1), (0, -2, 0)): ONE, ((0, 0, 0), (0, 0, 1)): ONE})


def coproduct(x: Element) -> Tensor:
    acc = {}
    for k, c in x.terms.items():
        for k2, c2 in _coproduct_key(k).terms.items():
            _add_into(acc, k2, c * c2)
    return Tensor._raw((UQ, UQ), acc)


def coproduct_key(key) -> Tensor:
    return _coproduct_key(key)


def counit_key(key) -> QScalar:
    a, _, b = key
    return ONE if a == 0 and b == 0 else ZERO


def counit(x: Element) -> QScalar:
    return x.map_scalar(counit_key)


@register_cache
@lru_cache(maxsize=None)
def antipode_key(key) -> Element:
    a, m, b = key
    # S(E^a K^m F^b) = S(F)^b K^-m S(E)^a
    s_e = K(-2) * E() * (-1)
    s_f = F() * K(2) * (-1)
    return s_f ** b * K(-m) * s_e ** a


def antipode(x: Element) -> Element:
    return x.map_keys(antipode_key)


@register_cache
@lru_cache(maxsize=None)
def antipode_inverse_key(key) -> Element:
    # S^2 is conjugation by K^(-2 rho), hence S^-1(u) = K^(2 rho) S(u) K^(-2 rho)
    r = 2 * SL2.rho
    return K(r) * antipode_key(key) * K(-r)


def antipode_inverse(x: Element) -> Element:
    return x.map_keys(antipode_inverse_key)


def ad_left(x: Element, y: Element) -> Element:
    """ad_l(x)(y) = x_1 y S(x_2)."""
    out = UQ.zero()
    for (k1, k2), c in coproduct(x).terms.items():
        out = out + (UQ.monomial(k1, c) * y * antipode_key(k2))
    return out


def ad_right(x: Element, y: Element) -> Element:
    """ad_r(x)(y) = S(x_1) y x_2."""
    out = UQ.zero()
    for (k1, k2), c in coproduct(x).terms.items():
        out = out + (antipode_key(k1).scale(c) * y * UQ.monomial(k2))
    return out


def divided_power(gen: str, n: int) -> Element:
    if gen not in ("E", "F"):
        raise AlgebraError("divided powers are defined for E and F")
    key = (n, 0, 0) if gen == "E" else (0, 0, n)
    return UQ.monomial(key, q_factorial(n).inverse())


def harish_chandra(u: Element) -> Element:
    """Projection onto U_0 along the triangular decomposition."""
    return UQ.element({k: c for k, c in u.terms.items() if k[0] == 0 and k[2] == 0})


def kappa(t: Element, inverse: bool = False) -> Element:
    """K^m -> q^((rho, m omega)) K^m, or its inverse."""
    sign = -1 if inverse else 1
    out = {}
    for (a, m, b), c in t.terms.items():
        if a or b:
            raise AlgebraError("kappa is defined on the torus part only")
        out[(0, m, 0)] = c * q_power(sign * SL2.form(SL2.rho, m))
    return UQ.element(out)


def is_torus(u: Element) -> bool:
    return all(a == 0 and b == 0 for a, _, b in u.terms)


def in_nonneg(u: Element) -> bool:
    return all(b == 0 for _, _, b in u.terms)


def in_nonpos(u: Element) -> bool:
    return all(a == 0 for a, _, _ in u.terms)


# ---------------------------------------------------------------------------
# Hopf pairing of U_{>=0} with (U_{<=0})^cop
#
#   <x x', y> = <x, y_2> <x', y_1>,   <x, y y'> = <x_1, y> <x_2, y'>
#
# with <E, F> = -1/(q - q^-1) and <K^m, K^n> = q^(-(m omega, n omega)).
# Letters: "E", "F", ("K", m); None stands for the unit.


def _letter_coproduct(g):
    if g == "E":
        return [(ONE, "E", None), (ONE, ("K", 2), "E")]
    if g == "F":
        return [(ONE, "F", ("K", -2)), (ONE, None, "F")]
    return [(ONE, g, g)]


def _letter_counit(g) -> QScalar:
    return ONE if g is None or _is_k(g) else ZERO


@register_cache
@lru_cache(maxsize=None)
def _pair_letters(g, h) -> QScalar:
    if g is None:
        return _letter_counit(h)
    if h is None:
        return _letter_counit(g)
    if g == "E" and h == "F":
        return -qdiff().inverse()
    if _is_k(g) and _is_k(h):
        return q_power(-SL2.form(g[1], h[1]))
    return ZERO


def _split_first(key):
    """Peel the first letter off the PBW word of a half-algebra monomial."""
    a, m, b = key
    if a:
        return "E", (a - 1, m, 0)
    if m:
        return ("K", m), (0, 0, b)
    if b:
        return "F", (0, 0, b - 1)
    return None, key


def _letter_key(g):
    if g is None:
        return (0, 0, 0)
    if g == "E":
        return (1, 0, 0)
    if g == "F":
        return (0, 0, 1)
    return (0, g[1], 0)


def _check_halves(xk, yk):
    if xk[2] != 0:
        raise AlgebraError("left pairing argument must lie in U_{>=0}")
    if yk[0] != 0:
        raise AlgebraError("right pairing argument must lie in U_{<=0}")


@register_cache
@lru_cache(maxsize=None)
def _pair_left(xk, yk) -> QScalar:
    """Recursion on the word of the left argument."""
    if xk == (0, 0, 0):
        return counit_key(yk)
    g, rest = _split_first(xk)
    total = ZERO
    for (y1, y2), c in _coproduct_key(yk).terms.items():
        v = _pair_letter_mono(g, y2)
        if v:
            w = _pair_left(rest, y1)
            if w:
                total = total + c * v * w
    return total


@register_cache
@lru_cache(maxsize=None)
def _pair_letter_mono(g, yk) -> QScalar:
    if yk == (0, 0, 0):
        return _letter_counit(g)
    h, rest = _split_first(yk)
    total = ZERO
    for c, g1, g2 in _letter_coproduct(g):
        v = _pair_letters(g1, h)
        if v:
            w = _pair_letter_mono(g2, rest)
            if w:
                total = total + c * v * w
    return total


@register_cache
@lru_cache(maxsize=None)
def _pair_right(xk, yk) -> QScalar:
    """Recursion on the word of the right argument."""
    if yk == (0, 0, 0):
        return counit_key(xk)
    h, rest = _split_first(yk)
    total = ZERO
    for (x1, x2), c in _coproduct_key(xk).terms.items():
        v = _pair_mono_letter(x1, h)
        if v:
            w = _pair_right(x2, rest)
            if w:
                total = total + c * v * w
    return total


@register_cache
@lru_cache(maxsize=None)
def _pair_mono_letter(xk, h) -> QScalar:
    if xk == (0, 0, 0):
        return _letter_counit(h)
    g, rest = _split_first(xk)
    total = ZERO
    for c, h1, h2 in _letter_coproduct(h):
        v = _pair_letters(g, h2)
        if v:
            w = _pair_mono_letter(rest, h1)
            if w:
                total = total + c * v * w
    return total


def pair_keys(xk, yk, route: str = "left") -> QScalar:
    _check_halves(xk, yk)
    if route == "left":
        return _pair_left(xk, yk)
    if route == "right":
        return _pair_right(xk, yk)
    raise ValueError(f"unknown route {route!r}")


def hopf_pair(x: Element, y: Element, route: str = "left") -> QScalar:
    total = ZERO
    for xk, xc in x.terms.items():
        for yk, yc in y.terms.items():
            v = pair_keys(xk, yk, route)
            if v:
                total = total + xc * yc * v
    return total


# ---------------------------------------------------------------------------
# representations on tensor powers of the fundamental module
#
# Basis tensors are tuples of 0/1 (0 = v1 of weight omega, 1 = v2 of weight
# -omega).  Generators act through the iterated coproduct.


def _wt(i: int) -> int:
    return 1 if i == 0 else -1


def _act_gen(g, vec: dict) -> dict:
    out = {}
    for idx, c in vec.items():
        if g == "E":
            pre = 0
            for pos, i in enumerate(idx):
                if i == 1:
                    _add_into(out, idx[:pos] + (0,) + idx[pos + 1:], c * q_power(pre))
                pre += _wt(i)
        elif g == "F":
            post = 0
            for pos in range(len(idx) - 1, -1, -1):
                i = idx[pos]
                if i == 0:
                    _add_into(out, idx[:pos] + (1,) + idx[pos + 1:], c * q_power(-post))
                post += _wt(i)
        else:
            w = sum(_wt(i) for i in idx)
            _add_into(out, idx, c * q_power(SL2.form(g[1], w)))
    return out


@register_cache
@lru_cache(maxsize=None)
def act_key(key, idx) -> dict:
    """E^a K^m F^b applied to one basis tensor, as {basis tensor: scalar}."""
    a, m, b = key
    vec = {idx: ONE}
    for _ in range(b):
        vec = _act_gen("F", vec)
    if m:
        vec = _act_gen(("K", m), vec)
    for _ in range(a):
        vec = _act_gen("E", vec)
    return vec


def act(u: Element, vec: dict) -> dict:
    out = {}
    for key, c in u.terms.items():
        for idx, v in vec.items():
            for idx2, w in act_key(key, idx).items():
                _add_into(out, idx2, c * v * w)
    return out


def basis(k: int) -> list:
    """Basis tensors of (C^2)^{⊗k} in lexicographic order."""
    out = [()]
    for _ in range(k):
        out = [b + (i,) for b in out for i in (0, 1)]
    return out


@dataclass(frozen=True)
class RepMatrix:
    rows: tuple
    weights: tuple

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        n = self.dim
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                s = ZERO
                for t in range(n):
                    a = self.rows[i][t]
                    if a:
                        b = other.rows[t][j]
                        if b:
                            s = s + a * b
                row.append(s)
            rows.append(tuple(row))
        return RepMatrix(tuple(rows), self.weights)

    def __eq__(self, other):
        return isinstance(other, RepMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def entry(self, i, j) -> QScalar:
        return self.rows[i][j]

    def __str__(self):
        return "[" + ",\n ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "]"


def representation(u: Element, k: int = 1) -> RepMatrix:
    if k < 1:
        raise ValueError("tensor power must be at least 1")
    b = basis(k)
    cols = [act(u, {idx: ONE}) for idx in b]
    rows = tuple(tuple(cols[j].get(b[i], ZERO) for j in range(len(b))) for i in range(len(b)))
    return RepMatrix(rows, tuple(sum(_wt(i) for i in idx) for idx in b))


def matrix_from_function(fn, k: int) -> RepMatrix:
    """RepMatrix of a linear operator given on basis tensors."""
    b = basis(k)
    cols = [fn(idx) for idx in b]
    rows = tuple(tuple(cols[j].get(b[i], ZERO) for j in range(len(b))) for i in range(len(b)))
    return RepMatrix(rows, tuple(sum(_wt(i) for i in idx) for idx in b))
