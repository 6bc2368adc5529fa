"""The Heisenberg double H_q = U_{>=0} # U_{<=0}, its torus actions, its
action on U_{>=0}, and the smash models O_q^op # U used for D_q and C_q[X].

Heisenberg keys (a, m, b, n) denote E^a K^m # F^b K^n (weights in units of
omega).  Product:  (a # x)(b # y) = <b_2, x_2> a b_1 # x_1 y.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import oq, uq
from .ncalg import Algebra, AlgebraError, Element, WithCentral, _add_into
from .scalar import ONE, ZERO, q_power, register_cache
from .uq import SL2, UQ


# ---------------------------------------------------------------------------
# conversion between F^b K^n and the PBW form K^n F^b


def right_to_uq(b: int, n: int, coeff=ONE) -> Element:
    """F^b K^n = q^(nb) K^n F^b."""
    return UQ.monomial((0, n, b), q_power(n * b) * coeff)


def uq_to_right(x: Element) -> dict:
    """{(b, n): coeff} with x = sum coeff F^b K^n; x must lie in U_{<=0}."""
    out = {}
    for (a, n, b), c in x.terms.items():
        if a:
            raise AlgebraError("element does not lie in U_{<=0}")
        _add_into(out, (b, n), c * q_power(-n * b))
    return out


def _left_key(key):
    a, m, b = key
    if b:
        raise AlgebraError("element does not lie in U_{>=0}")
    return (a, m)


class HeisAlgebra(Algebra):
    name = "heis-sl2"

    def __eq__(self, other):
        return isinstance(other, HeisAlgebra)

    def __hash__(self):
        return hash(self.name)

    def one_key(self):
        return (0, 0, 0, 0)

    def _mul_keys(self, k1, k2):
        return _heis_mul(k1, k2)

    def sort_key(self, key):
        a, m, b, n = key
        return (a + b, a, b, m, n)

    def format_key(self, key):
        a, m, b, n = key
        left = UQ.format_key((a, m, 0)) or "1"
        parts = []
        if b:
            parts.append("F" if b == 1 else f"F^{b}")
        if n:
            parts.append(uq.format_k(n))
        right = "*".join(parts) or "1"
        if left == "1" and right == "1":
            return ""
        return f"{left} # {right}"

    def degree(self, key):
        return key

    def inverse_key(self, key):
        a, m, b, n = key
        if a or b:
            raise AlgebraError("only K^m # K^n monomials are units in H_q")
        inv = (0, -m, 0, -n)
        (k, s), = _heis_mul(key, inv).items()
        return s, inv


HEIS = HeisAlgebra()


@register_cache
@lru_cache(maxsize=None)
def _heis_mul(k1, k2) -> dict:
    a1, m1, b1, n1 = k1
    a2, m2, b2, n2 = k2
    left = UQ.monomial((a1, m1, 0))
    x = right_to_uq(b1, n1)
    y = right_to_uq(b2, n2)
    out = {}
    dx = uq.coproduct(x).terms
    for (p1, p2), c in uq.coproduct_key((a2, m2, 0)).terms.items():
        for (s1, s2), d in dx.items():
            pv = uq.pair_keys(p2, s2)
            if not pv:
                continue
            lprod = left * UQ.monomial(p1)
            rprod = UQ.monomial(s1) * y
            coeff = c * d * pv
            for lk, lc in lprod.terms.items():
                la, lm = _left_key(lk)
                for (rb, rn), rc in uq_to_right(rprod).items():
                    _add_into(out, (la, lm, rb, rn), coeff * lc * rc)
    return out


def smash(left: Element, right: Element) -> Element:
    """left # right with left in U_{>=0}, right in U_{<=0}."""
    acc = {}
    r = uq_to_right(right)
    for lk, lc in left.terms.items():
        a, m = _left_key(lk)
        for (b, n), rc in r.items():
            _add_into(acc, (a, m, b, n), lc * rc)
    return Element._raw(HEIS, acc)


def split_key(key):
    """(left, right) UQ elements of a Heisenberg monomial."""
    a, m, b, n = key
    return UQ.monomial((a, m, 0)), right_to_uq(b, n)


def t(e: int = 1) -> Element:
    """t^e = 1 # K^(e omega)."""
    return HEIS.monomial((0, 0, 0, int(e)))


# ---------------------------------------------------------------------------
# torus actions
#
#   T_-:  (1 ⊗ K^l) ∘ A = (1 # K^l) A (1 # K^-l)
#   T_+:  (K^m ⊗ 1) ∘ (a # x) = <K^m, x_1> a # x_2
#   T_c:  K^l ⊗ K^-l, the image of U_0 under (1 ⊗ S)Delta


def act_tminus(lam: int, A: Element) -> Element:
    return t(lam) * A * t(-lam)


def act_tplus(mu: int, A: Element) -> Element:
    acc = {}
    for (a, m, b, n), c in A.terms.items():
        for (s1, s2), d in uq.coproduct(right_to_uq(b, n)).terms.items():
            pv = uq.pair_keys((0, mu, 0), s1)
            if not pv:
                continue
            for (rb, rn), rc in uq_to_right(UQ.monomial(s2)).items():
                _add_into(acc, (a, m, rb, rn), c * d * pv * rc)
    return Element._raw(HEIS, acc)


def act_tc(lam: int, A: Element) -> Element:
    return act_tplus(lam, act_tminus(-lam, A))


def torus_action(which: str, weight, A: Element) -> Element:
    if which == "T-":
        return act_tminus(weight, A)
    if which == "T+":
        return act_tplus(weight, A)
    if which == "Tc":
        return act_tc(weight, A)
    if which == "T":
        mu, lam = weight
        return act_tplus(mu, act_tminus(lam, A))
    raise ValueError(f"unknown torus {which!r}")


def torus_scaling(which: str, weight: int, key):
    """Closed-form eigenvalue of a torus element on a monomial, from the
    weights: E^a K^m # F^b K^n has U^+ weight 2a, U^- weight -2b."""
    a, m, b, n = key
    if which == "T-":
        return q_power(SL2.form(weight, -2 * b - m))
    if which == "Tc":
        return q_power(SL2.form(weight, m + 2 * b - n))
    raise ValueError(f"no closed form for {which!r}")


_PATTERNS = {
    "T-": lambda a, m, b, n: m == -2 * b,
    "Tc": lambda a, m, b, n: n == m + 2 * b,
    "T": lambda a, m, b, n: m == -2 * b and n == 0,
}


def invariant_membership(A: Element, which: str) -> bool:
    try:
        test = _PATTERNS[which]
    except KeyError:
        raise ValueError(f"unknown torus {which!r}") from None
    return all(test(*key) for key in A.terms)


# ---------------------------------------------------------------------------
# action on U_{>=0}:  (a # x) ∘ b = <b_2, x> a b_1


def heis_act(A: Element, b: Element) -> Element:
    out = UQ.zero()
    db = uq.coproduct(b).terms
    for key, c in A.terms.items():
        left, right = split_key(key)
        for (p1, p2), d in db.items():
            pv = ZERO
            for rk, rc in right.terms.items():
                v = uq.pair_keys(p2, rk)
                if v:
                    pv = pv + rc * v
            if pv:
                out = out + (left * UQ.monomial(p1)).scale(c * d * pv)
    return out


# ---------------------------------------------------------------------------
# H^{T_-} = H^{𝕋} ⊗ T


HEIS_T = WithCentral(HEIS, "t")


def heis_factorize(A: Element) -> Element:
    """a # x K^n  ->  (a # x) ⊗ t^n, on T_- invariant elements."""
    if not invariant_membership(A, "T-"):
        raise AlgebraError("element is not T_- invariant")
    return Element._raw(HEIS_T, {((a, m, b, 0), Fraction(n)): c
                                 for (a, m, b, n), c in A.terms.items()})


def heis_unfactorize(X: Element) -> Element:
    acc = {}
    for ((a, m, b, n), e), c in X.terms.items():
        if e.denominator != 1:
            raise AlgebraError("fractional powers of t are not elements of H_q")
        _add_into(acc, (a, m, b, n + int(e)), c)
    return Element._raw(HEIS, acc)


# ---------------------------------------------------------------------------
# smash models O_q^op # U:  (phi # u)(psi # v) = psi_2(u_2) psi_1 phi # u_1 v


class SmashOU(Algebra):
    def __init__(self, name: str, nonpositive: bool):
        self.name = name
        self.nonpositive = nonpositive

    def __eq__(self, other):
        return isinstance(other, SmashOU) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def one_key(self):
        return ((0, 0, 0, 0), (0, 0, 0))

    def _mul_keys(self, k1, k2):
        return _smash_mul(k1, k2)

    def sort_key(self, key):
        return (oq.OQ.sort_key(key[0]), UQ.sort_key(key[1]))

    def format_key(self, key):
        left = oq.OQ.format_key(key[0]) or "1"
        right = UQ.format_key(key[1]) or "1"
        if left == "1" and right == "1":
            return ""
        return f"{left} # {right}"

    def inverse_key(self, key):
        okey, (a, m, b) = key
        if okey != (0, 0, 0, 0) or a or b:
            raise AlgebraError("only 1 # K^m is a unit here")
        return ONE, (okey, (0, -m, 0))


CQX = SmashOU("cqx-sl2", True)
DQ = SmashOU("dq-sl2", False)


@register_cache
@lru_cache(maxsize=None)
def _smash_mul(k1, k2) -> dict:
    phi, u = k1
    psi, v = k2
    out = {}
    du = uq.coproduct_key(u).terms
    for (p1, p2), c in oq.coproduct_key(psi).terms.items():
        for (u1, u2), d in du.items():
            ev = oq.evaluate_keys(p2, u2)
            if not ev:
                continue
            left = oq.OQ.monomial(p1) * oq.OQ.monomial(phi)
            right = UQ.monomial(u1) * UQ.monomial(v)
            coeff = c * d * ev
            for lk, lc in left.terms.items():
                for rk, rc in right.terms.items():
                    _add_into(out, (lk, rk), coeff * lc * rc)
    return out


def smash_ou(phi: Element, u: Element, alg: SmashOU = CQX) -> Element:
    if alg.nonpositive and not uq.in_nonpos(u):
        raise AlgebraError(f"{alg.name} needs a U_{{<=0}} factor")
    acc = {}
    for ok, oc in phi.terms.items():
        for uk, uc in u.terms.items():
            _add_into(acc, (ok, uk), oc * uc)
    return Element._raw(alg, acc)


def cqx_mul(A: Element, B: Element) -> Element:
    return A * B


def dq_mul(A: Element, B: Element) -> Element:
    return A * B


def u_action(x: Element, A: Element) -> Element:
    """x ∘ (phi # u) = phi_2(x_3) phi_1 # x_2 u S^-1(x_1)."""
    d3 = uq.coproduct(x).expand(0, uq.coproduct_key).terms
    acc = {}
    for (phi, u), c in A.terms.items():
        dphi = oq.coproduct_key(phi).terms
        for (x1, x2, x3), d in d3.items():
            mid = UQ.monomial(x2) * UQ.monomial(u) * uq.antipode_inverse_key(x1)
            if mid.is_zero():
                continue
            for (p1, p2), e in dphi.items():
                ev = oq.evaluate_keys(p2, x3)
                if not ev:
                    continue
                for mk, mc in mid.terms.items():
                    _add_into(acc, (p1, mk), c * d * e * ev * mc)
    return Element._raw(A.alg, acc)


def ideal_project(phi: Element, rho: Element) -> Element:
    """phi # J'(rho) + I  ->  phi # 'l-(S^-1 rho)."""
    return smash_ou(phi, oq.lminus_prime(oq.antipode_inverse(rho)), CQX)


def lplus_tensor_id(A: Element) -> Element:
    """(l+ ⊗ id): C_q[X] -> H_q."""
    out = HEIS.zero()
    for (phi, u), c in A.terms.items():
        out = out + smash(oq.lplus(oq.OQ.monomial(phi)), UQ.monomial(u)).scale(c)
    return out
