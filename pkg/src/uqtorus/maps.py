"""The chain of maps from O_q(SL2) and U_q(sl2) into the Heisenberg double
and quantum tori, each computed from its Sweedler formula, plus a verifier
for generator assignments.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import heis, oq, qtorus, uq
from .heis import CQX, DQ, HEIS, HEIS_T
from .ncalg import AlgebraError, Element, SingularSystem, Tensor, WithCentral, _add_into, solve_linear
from .oq import OQ, OQ_W0
from .qtorus import TORUS_A, TORUS_A_PRIME, TorusAlgebra, TorusPresentation
from .scalar import ONE, ZERO, QScalar, q_power, register_cache, scalar, sqrt_monomial
from .uq import SL2, UQ


# ---------------------------------------------------------------------------
# J and J' = S J


@register_cache
@lru_cache(maxsize=None)
def _j_key(key) -> Element:
    out = UQ.zero()
    for (k1, k2), c in oq.coproduct_key(key).terms.items():
        out = out + (oq._lplus_key(k1) * oq._lminus_prime_key(k2)).scale(c)
    return out


def jmap(phi: Element) -> Element:
    """J(phi) = l+(phi_1) 'l-(phi_2)."""
    oq._require_plain(phi)
    return phi.map_keys(_j_key, UQ)


def jprime(phi: Element) -> Element:
    return uq.antipode(jmap(phi))


def _grade_pieces(u: Element) -> dict:
    pieces = {}
    for k, c in u.terms.items():
        pieces.setdefault(UQ.degree(k)[0], {})[k] = c
    return pieces


def _linear_preimage(target: dict, candidates: list, image_of, label: str) -> Element:
    """Solve sum x_k image_of(k) = target over the candidate keys."""
    images = [image_of(k) for k in candidates]
    basis = sorted({k for im in images for k in im.terms} | set(target), key=str)
    rows = [[im.coeff(b) for im in images] for b in basis]
    rhs = [target.get(b, ZERO) for b in basis]
    if not candidates:
        sol = None if any(rhs) else []
    else:
        sol = solve_linear(rows, rhs)
    if sol is None:
        raise AlgebraError(f"no preimage in the graded piece {label}")
    return OQ.element(dict(zip(candidates, sol)))


def j_inverse(u: Element, degree_cap: int = 4) -> Element:
    """The unique phi of degree <= degree_cap with J(phi) = u."""
    out = OQ.zero()
    cands = oq.standard_keys(degree_cap)
    for w, terms in sorted(_grade_pieces(u).items()):
        keys = [k for k in cands if sum(oq.bidegree_key(k)) == w]
        out = out + _linear_preimage(terms, keys, lambda k: _j_key(k), f"of weight {w} omega")
    return out


# ---------------------------------------------------------------------------
# xi, zeta and the D_q^fin model


def _sweedler3(phi: Element):
    for k, c in phi.terms.items():
        for (k1, k2, k3), d in oq.coproduct2_key(k).terms.items():
            yield k1, k2, k3, c * d


@register_cache
@lru_cache(maxsize=None)
def _xi_key(key) -> Element:
    out = CQX.zero()
    for k1, k2, k3, c in _sweedler3(OQ.monomial(key)):
        left = oq.antipode_inverse_key(k3) * OQ.monomial(k1)
        right = oq.lminus_prime(oq.antipode_inverse_key(k2))
        if left.is_zero() or right.is_zero():
            continue
        out = out + heis.smash_ou(left, right, CQX).scale(c)
    return out


def xi(phi: Element) -> Element:
    """xi(phi) = S^-1(phi_3) phi_1 # 'l-(S^-1 phi_2)."""
    oq._require_plain(phi)
    return phi.map_keys(_xi_key, CQX)


def xi_hat(u: Element, degree_cap: int = 4) -> Element:
    return xi(j_inverse(u, degree_cap))


@register_cache
@lru_cache(maxsize=None)
def _zeta_key(key) -> Element:
    out = HEIS.zero()
    for k1, k2, k3, c in _sweedler3(OQ.monomial(key)):
        right = oq.lminus_prime(oq.antipode_inverse_key(k2))
        if right.is_zero():
            continue
        left = oq.lplus(oq.antipode_inverse_key(k3) * OQ.monomial(k1))
        if left.is_zero():
            continue
        out = out + heis.smash(left, right).scale(c)
    return out


def zeta(phi: Element) -> Element:
    """zeta(phi) = l+(S^-1(phi_3) phi_1) # 'l-(S^-1 phi_2)."""
    oq._require_plain(phi)
    return phi.map_keys(_zeta_key, HEIS)


def zeta_hat(u: Element, degree_cap: int = 4) -> Element:
    return zeta(j_inverse(u, degree_cap))


def varrho(phi: Element) -> Tensor:
    """phi -> S^-1(phi_3) phi_1 # J'(phi_2), returned as the formal tensor
    sum (first leg) ⊗ (argument of J')."""
    acc = Tensor._raw((OQ, OQ), {})
    for k1, k2, k3, c in _sweedler3(phi):
        left = oq.antipode_inverse_key(k3) * OQ.monomial(k1)
        acc = acc + Tensor.pure(left, OQ.monomial(k2)).scale(c)
    return acc


def realize_dqfin(T: Tensor) -> Element:
    """Sum phi # J'(rho) as an element of O_q^op # U."""
    out = DQ.zero()
    for (k1, k2), c in T.terms.items():
        out = out + heis.smash_ou(OQ.monomial(k1), jprime(OQ.monomial(k2)), DQ).scale(c)
    return out


def project_dqfin(T: Tensor) -> Element:
    out = CQX.zero()
    for (k1, k2), c in T.terms.items():
        out = out + heis.ideal_project(OQ.monomial(k1), OQ.monomial(k2)).scale(c)
    return out


# ---------------------------------------------------------------------------
# Y = C T_w0 on tensor powers of the fundamental module


def _braid_vector(idx) -> dict:
    """T(v) = sum_{a - b + c = (wt v, alpha)} (-1)^b q^(ac - b) F^(a) E^(b) F^(c) v."""
    k = len(idx)
    w = sum(uq._wt(i) for i in idx)
    target = SL2.form(w, SL2.alpha)
    out = {}
    for a in range(k + 1):
        for b in range(k + 1):
            c = target - a + b
            if c < 0 or c > k or c.denominator != 1:
                continue
            c = int(c)
            op = (uq.divided_power("F", a) * uq.divided_power("E", b)
                  * uq.divided_power("F", c)).scale((-1) ** b * q_power(a * c - b))
            for j, v in uq.act(op, {idx: ONE}).items():
                _add_into(out, j, v)
    return out


def _c_vector(idx) -> dict:
    w = sum(uq._wt(i) for i in idx)
    return {idx: q_power(SL2.form(w, SL2.rho) - SL2.form(w, w) / 2)}


def _invert(mat: uq.RepMatrix) -> uq.RepMatrix:
    n = mat.dim
    cols = []
    for j in range(n):
        e = [ONE if i == j else ZERO for i in range(n)]
        sol = solve_linear([list(r) for r in mat.rows], e)
        if sol is None:
            raise SingularSystem("matrix is not invertible")
        cols.append(sol)
    return uq.RepMatrix(tuple(tuple(cols[j][i] for j in range(n)) for i in range(n)), mat.weights)


@dataclass(frozen=True)
class YFunctional:
    k: int
    c_part: uq.RepMatrix
    t_part: uq.RepMatrix
    y: uq.RepMatrix
    y_inv: uq.RepMatrix


@register_cache
@lru_cache(maxsize=None)
def y_functional(k: int) -> YFunctional:
    c = uq.matrix_from_function(_c_vector, k)
    t = uq.matrix_from_function(_braid_vector, k)
    y = c @ t
    return YFunctional(k, c, t, y, _invert(y))


def pair_y(phi: Element, inverse: bool = False) -> QScalar:
    """<Y, phi> with Y acting on the tensor power matching each monomial."""
    total = ZERO
    for key, c in phi.terms.items():
        I, J = oq.key_indices(key)
        if not I:
            total = total + c
            continue
        yf = y_functional(len(I))
        mat = yf.y_inv if inverse else yf.y
        b = uq.basis(len(I))
        total = total + c * mat.entry(b.index(I), b.index(J))
    return total


def _iota(phi: Element, inverse: bool) -> Element:
    oq._require_plain(phi)
    out = OQ.zero()
    for key, c in phi.terms.items():
        for (k1, k2), d in oq.coproduct_key(key).terms.items():
            v = pair_y(OQ.monomial(k1), inverse)
            if v:
                out = out + OQ.monomial(k2, c * d * v)
    return out


def iota_y(phi: Element) -> Element:
    """iota_Y(phi) = <Y, phi_1> phi_2."""
    return _iota(phi, False)


def iota_y_inverse(phi: Element) -> Element:
    return _iota(phi, True)


def cocycle_sides(i: int, j: int, k: int, l: int):
    """(r(x_ij, x_kl), (f_i ⊗ f_k)((Y^-1 ⊗ Y^-1) Y (v_j ⊗ v_l)))."""
    lhs = oq.rform(oq.matrix_coefficient((i,), (j,)), oq.matrix_coefficient((k,), (l,)))
    y2 = y_functional(2).y
    y1i = y_functional(1).y_inv
    b2 = uq.basis(2)
    col = b2.index((j, l))
    rhs = ZERO
    for m, (p, s) in enumerate(b2):
        y = y2.entry(m, col)
        if y:
            rhs = rhs + y1i.entry(i, p) * y1i.entry(k, s) * y
    return lhs, rhs


# ---------------------------------------------------------------------------
# I and its inverse on H^{T_c}


@register_cache
@lru_cache(maxsize=None)
def _imap_key(key) -> Element:
    out = HEIS.zero()
    for (k1, k2), c in oq.coproduct_key(key).terms.items():
        right = oq._lminus_prime_key(k2)
        if right.is_zero():
            continue
        left = oq._lplus_key(k1)
        if left.is_zero():
            continue
        out = out + heis.smash(left, right).scale(c)
    return out


def imap(phi: Element) -> Element:
    """I = (l+ ⊗ 'l-) Delta."""
    oq._require_plain(phi)
    return phi.map_keys(_imap_key, HEIS)


def imap_inverse(A: Element, degree_cap: int = 4) -> Element:
    """Preimage under I in O_q (no localization), by a graded linear solve."""
    if not heis.invariant_membership(A, "Tc"):
        raise AlgebraError("element is not T_c invariant")
    cands = oq.standard_keys(degree_cap)
    pieces = {}
    for k, c in A.terms.items():
        a, m, b, n = k
        pieces.setdefault(2 * (a - b), {})[k] = c
    out = OQ.zero()
    for w, terms in sorted(pieces.items()):
        keys = [k for k in cands if sum(oq.bidegree_key(k)) == w]
        out = out + _linear_preimage(terms, keys, _imap_key, f"of weight {w} omega")
    return out


@dataclass(frozen=True)
class PsiGenerators:
    """Images A = I(iota_Y x11), D = I(iota_Y x21), B = I(iota_Y x22)."""

    A: Element
    D: Element
    B: Element


@register_cache
@lru_cache(maxsize=None)
def psi_generators() -> PsiGenerators:
    gens = [imap(iota_y(oq.OQ.gen(n))) for n in ("x11", "x21", "x22")]
    for g in gens:
        if len(g.terms) != 1:
            raise AlgebraError("expected monomial generator images")
    return PsiGenerators(*gens)


@register_cache
@lru_cache(maxsize=None)
def _psi_key(key) -> Element:
    a, m, b, n = key
    if n != m + 2 * b:
        raise AlgebraError("monomial is not T_c invariant")
    g = psi_generators()
    k = -m - a - b
    prod = g.A ** a * g.D ** k * g.B ** b
    (pk, pc), = prod.terms.items()
    if pk != key:
        raise AlgebraError(f"generator factorization failed for {key}")
    return (oq.x11(OQ_W0) ** a * _x21_power(k) * oq.x22(OQ_W0) ** b).scale(pc.inverse())


def _x21_power(k: int) -> Element:
    return OQ_W0.monomial((0, 0, k, 0))


def psi(A: Element) -> Element:
    """(iota_Y^-1 ∘ I^-1) on H^{T_c}, landing in O_q[SL2][x21^-1]."""
    return A.map_keys(_psi_key, OQ_W0)


# ---------------------------------------------------------------------------
# Phi: F_l(U) -> O_q[SL2^{w0}] ⊗ T


OQ_W0_T = WithCentral(OQ_W0, "t")


def phi_map(u: Element, degree_cap: int = 4) -> Element:
    """psi ⊗ id after factorizing zeta_hat(u) through H^𝕋 ⊗ T."""
    fac = heis.heis_factorize(zeta_hat(u, degree_cap))
    out = OQ_W0_T.zero()
    for e, h in HEIS_T.coefficients(fac).items():
        out = out + OQ_W0_T.embed(psi(h), e)
    return out


def phi_generators() -> dict:
    """Sources K^-1, F^, E^K^-1 of the rank-one embedding."""
    return {"K^-1": uq.K(-2), "Fhat": uq.Fhat(), "EhatK^-1": uq.Ehat() * uq.K(-2)}


# ---------------------------------------------------------------------------
# quantum tori: O_q[SL2^{w0}] ⊗ T  ->  T4 <-  A


T4 = TorusAlgebra(TorusPresentation(
    ("x12", "x21", "x22", "t"),
    ((0, 0, 1, 0), (0, 0, 1, 0), (-1, -1, 0, 0), (0, 0, 0, 0)),
    (1, 1, 1, 1)), "qtorus:X")


def _t4(name, e=1):
    return T4.gen(name, e)


def _x11_in_t4() -> Element:
    # x22 x11 = 1 + q^-1 x12 x21
    return _t4("x22", -1) * (T4.one() + (_t4("x12") * _t4("x21")).scale(q_power(-1)))


def oq_to_t4(x: Element) -> Element:
    """O_q[SL2^{w0}] ⊗ T (or O_q[SL2^{w0}]) into the torus on x12, x21, x22, t."""
    x11i = _x11_in_t4()
    out = T4.zero()
    for key, c in x.terms.items():
        (a, b, cc, d), e = key if isinstance(x.alg, WithCentral) else (key, Fraction(0))
        term = (x11i ** a) * T4.mono((b, cc, d, e))
        out = out + term.scale(c)
    return out


def _a_images(alg: TorusAlgebra):
    del alg
    return {"u": (_t4("x22") * _t4("x21")).scale(-q_power(2)),
            "v": (_t4("x12", -1) * _t4("x21", -1)).scale(-q_power(-1)),
            "z": _t4("t")}


def a_to_t4(x: Element) -> Element:
    imgs = _a_images(x.alg)
    out = T4.zero()
    for (eu, ev, ez), c in x.terms.items():
        for e in (eu, ev, ez):
            if e.denominator != 1:
                raise AlgebraError("fractional exponents have no image in the x-torus")
        out = out + (imgs["u"] ** int(eu) * imgs["v"] ** int(ev) * imgs["z"] ** int(ez)).scale(c)
    return out


def t4_to_a(x: Element, target: TorusAlgebra = TORUS_A) -> Element:
    """Pull back along a_to_t4 (which is injective on monomials)."""
    out = target.zero()
    for (e12, e21, e22, et), c in x.terms.items():
        eu, ev, ez = e22, -e12, et
        if e21 != eu - ev:
            raise AlgebraError("monomial is not in the image of the u, v, z torus")
        mono = target.mono((eu, ev, ez))
        (k, s), = a_to_t4(mono).terms.items()
        out = out + mono.scale(c / s)
    return out


def retag_torus(x: Element, target: TorusAlgebra) -> Element:
    """A -> A' (same keys)."""
    return Element._raw(target, dict(x.terms))


def phi_in_a(u: Element) -> Element:
    return t4_to_a(oq_to_t4(phi_map(u)))


# ---------------------------------------------------------------------------
# generator assignments and the relation verifier


@dataclass
class GeneratorAssignment:
    source: str
    images: dict
    target: object
    name: str = ""

    def __post_init__(self):
        for g in ("Kh", "Khi", "Eh", "Fh"):
            if g not in self.images:
                raise AlgebraError(f"assignment lacks an image for {g}")
        for img in self.images.values():
            if img.alg != self.target:
                raise AlgebraError("images live in different algebras")


def uq_relations():
    """Relations of U_q(sl2) in Kh = K^(1/2), Khi = K^(-1/2), Eh = E^, Fh = F^."""
    qp = q_power
    return [
        ("Kh*Khi = 1", lambda g: g["Kh"] * g["Khi"] - 1),
        ("Khi*Kh = 1", lambda g: g["Khi"] * g["Kh"] - 1),
        ("Kh*Eh = q*Eh*Kh", lambda g: g["Kh"] * g["Eh"] - (g["Eh"] * g["Kh"]).scale(qp(1))),
        ("Kh*Fh = q^-1*Fh*Kh", lambda g: g["Kh"] * g["Fh"] - (g["Fh"] * g["Kh"]).scale(qp(-1))),
        ("Eh*Fh - Fh*Eh = (q - q^-1)*(Kh^2 - Khi^2)",
         lambda g: g["Eh"] * g["Fh"] - g["Fh"] * g["Eh"]
         - (g["Kh"] * g["Kh"] - g["Khi"] * g["Khi"]).scale(qp(1) - qp(-1))),
    ]


@dataclass
class HomReport:
    name: str
    residuals: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.is_zero() for _, r in self.residuals)

    def __str__(self):
        lines = [f"{self.name}: {'all residuals zero' if self.ok else 'FAILED'}"]
        for rel, r in self.residuals:
            lines.append(f"  {rel}: {r}")
        return "\n".join(lines)


def verify_homomorphism(assignment: GeneratorAssignment) -> HomReport:
    rep = HomReport(assignment.name or assignment.source)
    for name, rel in uq_relations():
        rep.residuals.append((name, rel(assignment.images)))
    return rep


def identity_assignment() -> GeneratorAssignment:
    return GeneratorAssignment("uq-sl2", {"Kh": uq.K(1), "Khi": uq.K(-1),
                                          "Eh": uq.Ehat(), "Fh": uq.Fhat()}, UQ, "identity")


def phi_prime() -> GeneratorAssignment:
    """Phi' into A' derived from Phi:
    K^(1/2) -> Phi(K^-1)^(-1/2),  F^ -> Phi(F^),  E^ -> Phi(E^ K^-1) Phi(K^-1)^-1."""
    g = phi_generators()
    kinv = retag_torus(phi_in_a(g["K^-1"]), TORUS_A_PRIME)
    fh = retag_torus(phi_in_a(g["Fhat"]), TORUS_A_PRIME)
    ehk = retag_torus(phi_in_a(g["EhatK^-1"]), TORUS_A_PRIME)
    kh = qtorus.torus_power(kinv, Fraction(-1, 2))
    khi = qtorus.torus_power(kinv, Fraction(1, 2))
    eh = ehk * kinv.inverse()
    return GeneratorAssignment("uq-sl2", {"Kh": kh, "Khi": khi, "Eh": eh, "Fh": fh},
                               TORUS_A_PRIME, "phiP")


def mutated_phi_prime() -> GeneratorAssignment:
    """Phi' with the z^-1 factor of Phi'(E^) dropped."""
    a = phi_prime()
    imgs = dict(a.images)
    imgs["Eh"] = imgs["Eh"] * TORUS_A_PRIME.gen("z")
    return GeneratorAssignment(a.source, imgs, a.target, "phiP (mutated)")


def assignment_apply(a: GeneratorAssignment, u: Element) -> Element:
    """Extend the assignment multiplicatively to an element of U_q (via
    E = E^/(q^-1 - q), F = F^/(q^-1 - q))."""
    inv = (q_power(-1) - q_power(1)).inverse()
    e_img = a.images["Eh"].scale(inv)
    f_img = a.images["Fh"].scale(inv)
    out = a.target.zero()
    for (ea, m, fb), c in u.terms.items():
        k_img = a.images["Kh"] ** m if m >= 0 else a.images["Khi"] ** (-m)
        out = out + (e_img ** ea * k_img * f_img ** fb).scale(c)
    return out


A_CHI = TorusAlgebra(TorusPresentation(("u", "v"), ((0, 2), (-2, 0)), (1, 2)), "qtorus:A'/chi")


def central_character_quotient(chi, assignment: GeneratorAssignment | None = None) -> GeneratorAssignment:
    """Specialize z = t to the value chi (a monomial c q^e with an exact square root)."""
    chi = scalar(chi)
    if chi.is_zero():
        raise AlgebraError("a character takes nonzero values")
    root = sqrt_monomial(chi)
    a = assignment or phi_prime()

    def spec(x):
        out = {}
        for (eu, ev, ez), c in x.terms.items():
            n = ez * 2
            if n.denominator != 1:
                raise AlgebraError("unexpected exponent of z")
            _add_into(out, (eu, ev), c * root ** int(n))
        return A_CHI.element(out)
    return GeneratorAssignment(a.source, {g: spec(x) for g, x in a.images.items()}, A_CHI,
                               f"{a.name} at t = {chi}")


# ---------------------------------------------------------------------------
# consistency checks


def harish_chandra_sides(phi: Element):
    """(vartheta(J(phi)), upsilon((eps ⊗ vartheta) xi(phi))) with
    upsilon(K^m) = K^(-2m)."""
    lhs = uq.harish_chandra(jmap(phi))
    acc = {}
    for (okey, ukey), c in xi(phi).terms.items():
        e = oq.counit_key(okey)
        a, m, b = ukey
        if e and a == 0 and b == 0:
            _add_into(acc, (0, -2 * m, 0), c * e)
    return lhs, UQ.element(acc)


def hc_spanning_set(max_degree: int = 2):
    keys = oq.standard_keys(max_degree)
    return [OQ.monomial(k) for k in keys] + [oq.quantum_trace()]


def harish_chandra_factorization(max_degree: int = 2) -> HomReport:
    rep = HomReport("hc-factorization")
    for phi in hc_spanning_set(max_degree):
        lhs, rhs = harish_chandra_sides(phi)
        rep.residuals.append((f"J({phi})", lhs - rhs))
    return rep


def induced_action_sides(psi_: Element, phi: Element):
    """zeta(psi) acting on l+(phi), against r(S^-1 psi_3, phi_1) l+(S^-1(psi_2) phi_2 psi_1)."""
    lhs = heis.heis_act(zeta(psi_), oq.lplus(phi))
    rhs = UQ.zero()
    for p1, p2, p3, c in _sweedler3(psi_):
        s3 = oq.antipode_inverse_key(p3)
        s2 = oq.antipode_inverse_key(p2)
        for (f1, f2), d in oq.coproduct(phi).terms.items():
            r = oq.rform(s3, OQ.monomial(f1))
            if r:
                rhs = rhs + oq.lplus(s2 * OQ.monomial(f2) * OQ.monomial(p1)).scale(c * d * r)
    return lhs, rhs


def induced_action_check() -> HomReport:
    rep = HomReport("induced-action")
    gens = [OQ.one()] + [OQ.gen(n) for n in oq.GEN_NAMES]
    for s in gens:
        for f in gens[1:]:
            lhs, rhs = induced_action_sides(s, f)
            rep.residuals.append((f"({s}, {f})", lhs - rhs))
    return rep


def phi_plus() -> Element:
    """(1 - q^-2)^-1 ad*_r(E)(x11)."""
    return oq.coadjoint_right(uq.E(), oq.x11()).scale((1 - q_power(-2)).inverse())


def phi_minus() -> Element:
    """(q^-1 - q)^-1 ad*_r(F)(x11)."""
    return oq.coadjoint_right(uq.F(), oq.x11()).scale((q_power(-1) - q_power(1)).inverse())


def chevalley_images():
    """Both sides of the three formulas for zeta_hat on K^-1, F, E K^-1 in
    terms of I, with t^l = 1 # K^(l omega)."""
    t = heis.t
    I = imap
    x11 = oq.x11()
    c = q_power(-SL2.form(1, 1))
    s_x11 = oq.antipode_inverse(x11)
    d_alpha_inv = I(oq.quantum_minor(2)).inverse()
    first = (zeta_hat(uq.K(-2)), (I(x11) * I(s_x11) * t(1)).scale(c))
    second = (zeta_hat(uq.F()),
              (I(x11) * I(oq.antipode_inverse(phi_minus())) * t(1)).scale(c * q_power(-1)))
    third = (zeta_hat(uq.E() * uq.K(-2)),
             ((I(phi_plus()) * I(s_x11) * t(1))
              + (I(x11) * d_alpha_inv * I(oq.antipode_inverse(phi_plus())) * t(1 - 2)).scale(q_power(1))
              ).scale(c))
    return {"K^-1": first, "F": second, "E*K^-1": third}


def iota_explicit_sides(sign_exponent: int):
    """Both sides of the five closed forms for iota_Y^-1 on minors, with
    (-1)^<2 omega, rho^vee> written as (-1)^sign_exponent."""
    s = (-1) ** sign_exponent
    pre = q_power(SL2.form(1, SL2.rho) + SL2.form(1, 1) / 2)
    qd = q_power(-1) - q_power(1)
    m = oq.quantum_minor
    x11 = oq.x11()
    php, phm = phi_plus(), phi_minus()
    sinv = oq.antipode_inverse
    return [
        ("Delta", iota_y_inverse(x11), m(1, "s", "e").scale(pre)),
        ("S^-1 Delta", iota_y_inverse(sinv(x11)), m(1, "e", "s").scale(s * pre)),
        ("phi+", iota_y_inverse(php).scale(qd), m(1, "e", "e").scale(-pre)),
        ("S^-1 phi+", iota_y_inverse(sinv(php)).scale(qd), m(1, "e", "e").scale(-s * q_power(-1) * pre)),
        ("S^-1 phi-", iota_y_inverse(sinv(phm)).scale(qd), m(1, "s", "s").scale(s * q_power(1) * pre)),
    ]


def infer_rho_vee_pairing() -> int | None:
    """The parity of <2 omega, rho^vee> that makes all five closed forms hold."""
    for s in (0, 1):
        if all(a == b for _, a, b in iota_explicit_sides(s)):
            return s
    return None
