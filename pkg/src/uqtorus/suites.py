"""Named verification suites.  Each check returns a residual; a check
passes iff the residual is zero (or the boolean True)."""
from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor

from . import golden, heis, maps, oq, qtorus, uq
from .ncalg import Element, Tensor
from .oq import OQ
from .scalar import QScalar
from .uq import UQ


def _is_zero(res) -> bool:
    if isinstance(res, bool):
        return res
    if isinstance(res, (Element, Tensor, QScalar)):
        return res.is_zero()
    if isinstance(res, maps.HomReport):
        return res.ok
    if isinstance(res, (list, tuple)):
        return all(_is_zero(r) for r in res)
    raise TypeError(f"unsupported residual {res!r}")


def _first_nonzero(res):
    if isinstance(res, (list, tuple)):
        for r in res:
            if not _is_zero(r):
                return _first_nonzero(r)
        return "0"
    if isinstance(res, bool):
        return "0" if res else "false"
    if isinstance(res, maps.HomReport):
        return "; ".join(f"{n}: {r}" for n, r in res.residuals if not r.is_zero()) or "0"
    return str(res)


def run_check(suite: str, name: str, fn) -> dict:
    t0 = time.perf_counter()
    try:
        res = fn()
        ok = _is_zero(res)
        residual = _first_nonzero(res) if not ok else "0"
    except Exception as exc:  # a crashing check is a failing check
        ok = False
        residual = f"{type(exc).__name__}: {exc}"
    millis = round((time.perf_counter() - t0) * 1000, 1)
    return {"suite": suite, "check": name, "status": "pass" if ok else "fail",
            "residual": residual, "millis": millis}


def run_suite(name: str, workers: int = 4) -> list:
    """Run the checks of one suite on a thread pool; results keep check order."""
    name = SUITE_ALIASES.get(name, name)
    checks = SUITES[name]()
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda c: run_check(name, *c), checks))


def _gens():
    return [OQ.gen(n) for n in oq.GEN_NAMES]


def _pairs():
    return [(a, b) for a in _gens() for b in _gens()]


def _parse(text, alg):
    from .cli import parse_element
    return parse_element(text, alg)


# ---------------------------------------------------------------------------
# Hopf axioms


def uq_monomials(max_degree: int = 4, k_values=(-2, -1, 0, 1, 2)):
    return [(a, m, b) for a in range(max_degree + 1) for b in range(max_degree + 1 - a)
            for m in k_values]


def hopf_residuals(keys, alg, coproduct_key, counit_key, antipode_key, antipode_inverse_key):
    """Residual lists for coassociativity, counit, antipode, S^-1 S = id."""
    coassoc, counit, antip, inv = [], [], [], []
    for k in keys:
        x = alg.monomial(k)
        d = coproduct_key(k)
        coassoc.append(d.expand(0, coproduct_key) - d.expand(1, coproduct_key))
        counit.append(d.contract(0, counit_key).to_element() - x)
        counit.append(d.contract(1, counit_key).to_element() - x)
        eps = alg.one().scale(counit_key(k))
        antip.append(d.apply(0, antipode_key).multiply_legs() - eps)
        antip.append(d.apply(1, antipode_key).multiply_legs() - eps)
        inv.append(antipode_key(k).map_keys(antipode_inverse_key) - x)
    return coassoc, counit, antip, inv


def multiplicativity_residuals(elements, coproduct, antipode, counit):
    dm, sm, em = [], [], []
    for x in elements:
        for y in elements:
            dm.append(coproduct(x * y) - coproduct(x) * coproduct(y))
            sm.append(antipode(x * y) - antipode(y) * antipode(x))
            em.append(counit(x * y) - counit(x) * counit(y))
    return dm, sm, em


def uq_hopf_suite():
    keys = uq_monomials()
    res = {}

    def axioms():
        if not res:
            res["v"] = hopf_residuals(keys, UQ, uq.coproduct_key, uq.counit_key,
                                      uq.antipode_key, uq.antipode_inverse_key)
        return res["v"]

    gens = [uq.E(), uq.F(), uq.K(1), uq.K(-1), uq.E() * uq.F()]
    mult = {}

    def mul():
        if not mult:
            mult["v"] = multiplicativity_residuals(gens, uq.coproduct, uq.antipode, uq.counit)
        return mult["v"]

    def s_squared():
        k2, k2i = uq.K(2), uq.K(-2)
        return [uq.antipode(uq.antipode(UQ.monomial(k))) - k2i * UQ.monomial(k) * k2 for k in keys]

    def pairing_routes():
        out = []
        for xk in uq_monomials(3, (-1, 0, 1)):
            if xk[2]:
                continue
            for yk in uq_monomials(3, (-1, 0, 1)):
                if yk[0]:
                    continue
                out.append(uq.pair_keys(xk, yk, "left") - uq.pair_keys(xk, yk, "right"))
        return out

    def pairing_duality():
        xs = [uq.E(), uq.K(1), uq.K(-2), uq.E() * uq.K(1)]
        ys = [uq.F(), uq.K(1), uq.K(-2), uq.F() * uq.K(-1)]
        out = []
        for x in xs:
            for x2 in xs:
                for y in ys:
                    lhs = uq.hopf_pair(x * x2, y)
                    rhs = uq.coproduct(y).contract(1, lambda k: uq.hopf_pair(x, UQ.monomial(k))) \
                        .contract(0, lambda k: uq.hopf_pair(x2, UQ.monomial(k))).scalar_value()
                    out.append(lhs - rhs)
        for x in xs:
            for y in ys:
                for y2 in ys:
                    lhs = uq.hopf_pair(x, y * y2)
                    rhs = uq.coproduct(x).contract(0, lambda k: uq.hopf_pair(UQ.monomial(k), y)) \
                        .contract(0, lambda k: uq.hopf_pair(UQ.monomial(k), y2)).scalar_value()
                    out.append(lhs - rhs)
        return out

    return [
        ("coassociativity to degree 4", lambda: axioms()[0]),
        ("counit to degree 4", lambda: axioms()[1]),
        ("antipode to degree 4", lambda: axioms()[2]),
        ("inverse antipode", lambda: axioms()[3]),
        ("coproduct is multiplicative", lambda: mul()[0]),
        ("antipode is antimultiplicative", lambda: mul()[1]),
        ("counit is multiplicative", lambda: mul()[2]),
        ("S^2 = Ad(K^-2)", s_squared),
        ("pairing routes agree", pairing_routes),
        ("pairing duality", pairing_duality),
        ("rewrite system confluent", lambda: uq.uq_rewrite_system().check_confluence().confluent),
        ("rewrite system terminating", lambda: uq.uq_rewrite_system().check_termination().terminating),
    ]


def oq_hopf_suite():
    keys = oq.standard_keys(4)
    res = {}

    def axioms():
        if not res:
            res["v"] = hopf_residuals(keys, OQ, oq.coproduct_key, oq.counit_key,
                                      oq.antipode_key, oq.antipode_inverse_key)
        return res["v"]

    mult = {}

    def mul():
        if not mult:
            mult["v"] = multiplicativity_residuals(_gens(), oq.coproduct, oq.antipode, oq.counit)
        return mult["v"]

    def evaluation_duality():
        us = [uq.E(), uq.F(), uq.K(1), uq.K(-2), uq.E() * uq.F()]
        out = []
        for a in _gens():
            for b in _gens():
                for u in us:
                    lhs = oq.evaluate(a * b, u)
                    rhs = uq.coproduct(u).contract(0, lambda k: oq.evaluate(a, UQ.monomial(k))) \
                        .contract(0, lambda k: oq.evaluate(b, UQ.monomial(k))).scalar_value()
                    out.append(lhs - rhs)
        return out

    def quantum_determinant():
        return oq.x11() * oq.x22() - (oq.x12() * oq.x21()).scale(uq.qf(1)) - 1

    def confluence():
        out = []
        for alg in (oq.OQ, oq.OQ_W0, oq.OQ_W0W0):
            out.append(oq.oq_rewrite_system(alg).check_confluence().confluent)
        return out

    def termination():
        return [oq.oq_rewrite_system(alg).check_termination().terminating
                for alg in (oq.OQ, oq.OQ_W0, oq.OQ_W0W0)]

    def rewriting_matches_product():
        out = []
        letters = [(g, 1) for g in range(4)]
        for w in [(a, b, c) for a in letters for b in letters for c in letters]:
            out.append(oq.normalize_word(w) - oq.word_product(OQ, [g for g, _ in w]))
        return out

    return [
        ("coassociativity to degree 4", lambda: axioms()[0]),
        ("counit to degree 4", lambda: axioms()[1]),
        ("antipode to degree 4", lambda: axioms()[2]),
        ("inverse antipode", lambda: axioms()[3]),
        ("coproduct is multiplicative", lambda: mul()[0]),
        ("antipode is antimultiplicative", lambda: mul()[1]),
        ("counit is multiplicative", lambda: mul()[2]),
        ("evaluation is a pairing", evaluation_duality),
        ("quantum determinant", quantum_determinant),
        ("rewrite systems confluent", confluence),
        ("rewrite systems terminating", termination),
        ("rewriting agrees with the product", rewriting_matches_product),
    ]


# ---------------------------------------------------------------------------
# r-form


def rform_suite():
    def cocycle():
        out = []
        for i in (0, 1):
            for j in (0, 1):
                for k in (0, 1):
                    for l in (0, 1):
                        lhs, rhs = maps.cocycle_sides(i, j, k, l)
                        out.append(lhs - rhs)
        return out

    def compatible():
        return [uq.hopf_pair(oq.lplus(a), oq.lminus_prime(b)) - oq.rform(b, a) for a, b in _pairs()]

    def multiplicative_slots():
        # r(phi psi, chi) = r(phi, chi_1) r(psi, chi_2),  r(phi, psi chi) = r(phi_1, chi) r(phi_2, psi)
        out = []
        for a, b in _pairs():
            for c in _gens():
                rhs = oq.coproduct(c).contract(0, lambda k: oq.rform(a, OQ.monomial(k))) \
                    .contract(0, lambda k: oq.rform(b, OQ.monomial(k))).scalar_value()
                out.append(oq.rform(a * b, c) - rhs)
                rhs = oq.coproduct(c).contract(0, lambda k: oq.rform(OQ.monomial(k), b)) \
                    .contract(0, lambda k: oq.rform(OQ.monomial(k), a)).scalar_value()
                out.append(oq.rform(c, a * b) - rhs)
        return out

    return [
        ("cocycle on 16 generator pairs", cocycle),
        ("l+/'l- pairing equals r on 16 pairs", compatible),
        ("r is multiplicative in each slot", multiplicative_slots),
        ("iota_Y closed forms with sign exponent 1", lambda: [a - b for _, a, b in maps.iota_explicit_sides(1)]),
    ]


# ---------------------------------------------------------------------------
# printed tables


def tables_suite():
    checks = []

    def table(label, mapping, fn, alg):
        for n, text in mapping.items():
            checks.append((f"{label}({n})", lambda n=n, text=text: fn(OQ.gen(n)) - _parse(text, alg)))

    table("l+", golden.LPLUS, oq.lplus, "uq-sl2")
    table("'l-", golden.LMINUS_PRIME, oq.lminus_prime, "uq-sl2")
    table("J", golden.J, maps.jmap, "uq-sl2")
    table("zeta", golden.ZETA, maps.zeta, "heis-sl2")
    table("iota_Y", golden.IOTA_Y, maps.iota_y, "oq-sl2")
    table("I", golden.IMAP, maps.imap, "heis-sl2")
    for src, text in golden.PHI.items():
        checks.append((f"Phi({src})", lambda src=src, text=text:
                       maps.phi_map(_parse(src, "uq-sl2")) - _parse(text, "oq-sl2-w0-t")))
    for g, text in golden.PHI_PRIME.items():
        checks.append((f"Phi'({g})", lambda g=g, text=text:
                       maps.phi_prime().images[g] - _parse(text, "qtorus:A'")))
    checks.append(("zeta images are T_- invariant",
                   lambda: [heis.invariant_membership(maps.zeta(g), "T-") for g in _gens()]))
    checks.append(("I images are T_c invariant",
                   lambda: [heis.invariant_membership(maps.imap(g), "Tc") for g in _gens()]))
    checks.append(("Phi' matches Phi under the substitution", phi_substitution_residuals))
    return checks


def phi_substitution_residuals():
    """Substituting u, v, z into Phi' reproduces Phi on K^-1, F^ and E^K^-1."""
    a = maps.phi_prime()
    kinv = a.images["Khi"] * a.images["Khi"]
    srcs = {"K^-1": kinv, "Fhat": a.images["Fh"], "Ehat*K^-1": a.images["Eh"] * kinv}
    out = []
    for src, img in srcs.items():
        img_a = maps.retag_torus(img, qtorus.TORUS_A)
        out.append(maps.a_to_t4(img_a) - maps.oq_to_t4(maps.phi_map(_parse(src, "uq-sl2"))))
    for name, img in maps._a_images(qtorus.TORUS_A).items():
        out.append(img - _parse(golden.A_SUBSTITUTION[name], maps.T4.name))
    return out


# ---------------------------------------------------------------------------
# the embedding into A'


def phi_prime_suite():
    checks = []
    for rel, fn in maps.uq_relations():
        checks.append((f"Phi': {rel}", lambda fn=fn: fn(maps.phi_prime().images)))
    checks.append(("mutated Phi' is rejected",
                   lambda: not maps.verify_homomorphism(maps.mutated_phi_prime()).ok))
    checks.append(("identity assignment", lambda: maps.verify_homomorphism(maps.identity_assignment())))
    for chi in (1, "q"):
        def quotient(chi=chi):
            value = uq.qf(1) if chi == "q" else chi
            return maps.verify_homomorphism(maps.central_character_quotient(value))
        checks.append((f"quotient at t = {chi}", quotient))
    return checks


def hc_suite():
    rep = {}

    def run():
        if not rep:
            rep["v"] = maps.harish_chandra_factorization(2)
        return rep["v"]

    checks = []
    for i, phi in enumerate(maps.hc_spanning_set(2)):
        checks.append((f"theta(J({phi})) = upsilon(xi({phi}))",
                       lambda i=i: run().residuals[i][1]))
    checks.append(("xi(tau) = 1 # 'l-(S^-1 tau)", lambda: maps.xi(oq.quantum_trace()) - heis.smash_ou(
        OQ.one(), oq.lminus_prime(oq.antipode_inverse(oq.quantum_trace())))))
    checks.append(("tau is ad*-invariant", lambda: [oq.coadjoint_right(x, oq.quantum_trace())
                                                    - oq.quantum_trace().scale(uq.counit(x))
                                                    for x in (uq.E(), uq.F(), uq.K(1))]))
    return checks


# ---------------------------------------------------------------------------
# Heisenberg double gradings and decompositions


def heis_monomials(max_degree: int, m_values, n_values):
    return [(a, m, b, n) for a in range(max_degree + 1) for b in range(max_degree + 1 - a)
            for m in m_values for n in n_values]


def tminus_invariant_monomials(max_degree: int = 2, n_values=(-1, 0, 1)):
    return [(a, -2 * b, b, n) for a in range(max_degree + 1)
            for b in range(max_degree + 1 - a) for n in n_values]


def random_tminus_element(rng: random.Random, terms: int = 2) -> Element:
    keys = tminus_invariant_monomials()
    out = heis.HEIS.zero()
    for _ in range(terms):
        out = out + heis.HEIS.monomial(rng.choice(keys), uq.qf(rng.randint(-2, 2)) * rng.choice([1, -1, 2]))
    return out


def heis_suite():
    def tminus_action():
        return [heis.act_tminus(lam, maps.zeta(g)) - maps.zeta(g) for g in _gens() for lam in (1, 2)]

    def tc_action():
        return [heis.act_tc(lam, maps.imap(g)) - maps.imap(g) for g in _gens() for lam in (1, 2)]

    def closed_forms():
        out = []
        for key in heis_monomials(2, (-1, 0, 1), (-1, 0, 1)):
            x = heis.HEIS.monomial(key)
            for lam in (1, -1):
                out.append(heis.act_tminus(lam, x) - x.scale(heis.torus_scaling("T-", lam, key)))
                out.append(heis.act_tc(lam, x) - x.scale(heis.torus_scaling("Tc", lam, key)))
        return out

    def patterns():
        out = []
        for key in heis_monomials(2, (-4, -2, -1, 0, 1), (-1, 0, 1, 2)):
            x = heis.HEIS.monomial(key)
            out.append(heis.invariant_membership(x, "T-") == (heis.act_tminus(1, x) == x))
            out.append(heis.invariant_membership(x, "Tc") == (heis.act_tc(1, x) == x))
        return out

    def decomposition_preserved():
        out = []
        for akey in tminus_invariant_monomials(3):
            A = heis.HEIS.monomial(akey)
            for c in range(4):
                for lam in (-1, 0, 1):
                    img = heis.heis_act(A, UQ.monomial((c, lam, 0)))
                    out.append(all(k[1] == lam and k[2] == 0 for k in img.terms))
        return out

    def factorization_multiplicative():
        rng = random.Random(20240611)
        out = []
        for _ in range(40):
            A = random_tminus_element(rng)
            B = random_tminus_element(rng)
            out.append(heis.heis_factorize(A * B) - heis.heis_factorize(A) * heis.heis_factorize(B))
            out.append(heis.heis_unfactorize(heis.heis_factorize(A)) - A)
        return out

    def t_commutes():
        return [heis.t(1) * A - A * heis.t(1) for A in (maps.zeta(g) for g in _gens())]

    return [
        ("zeta images fixed by T_-", tminus_action),
        ("I images fixed by T_c", tc_action),
        ("torus scalings match closed forms", closed_forms),
        ("invariance patterns match the actions", patterns),
        ("H^{T_-} preserves each U^+ K^l (degree 3)", decomposition_preserved),
        ("H^T ⊗ T factorization is multiplicative", factorization_multiplicative),
        ("t commutes with zeta images", t_commutes),
    ]


# ---------------------------------------------------------------------------
# homomorphism instances


def xi_suite():
    return [
        ("xi(phi •F psi) = xi(phi) xi(psi)",
         lambda: [maps.xi(oq.bullet_f(a, b)) - maps.xi(a) * maps.xi(b) for a, b in _pairs()]),
        ("zeta(phi •F psi) = zeta(phi) zeta(psi)",
         lambda: [maps.zeta(oq.bullet_f(a, b)) - maps.zeta(a) * maps.zeta(b) for a, b in _pairs()]),
        ("J(phi •F psi) = J(phi) J(psi)",
         lambda: [maps.jmap(oq.bullet_f(a, b)) - maps.jmap(a) * maps.jmap(b) for a, b in _pairs()]),
        ("I(phi •R psi) = I(phi) I(psi)",
         lambda: [maps.imap(oq.bullet_r(a, b)) - maps.imap(a) * maps.imap(b) for a, b in _pairs()]),
        ("zeta = (l+ ⊗ id) xi", lambda: [heis.lplus_tensor_id(maps.xi(g)) - maps.zeta(g) for g in _gens()]),
        ("(l+ ⊗ id) is multiplicative on xi images",
         lambda: [heis.lplus_tensor_id(maps.xi(a) * maps.xi(b))
                  - heis.lplus_tensor_id(maps.xi(a)) * heis.lplus_tensor_id(maps.xi(b)) for a, b in _pairs()]),
        ("xi agrees with the D_q model modulo the ideal",
         lambda: [maps.project_dqfin(maps.varrho(g)) - maps.xi(g) for g in _gens()]),
        ("induced action on U_{>=0}", maps.induced_action_check),
        ("zeta_hat on K^-1, F, E K^-1 via I",
         lambda: [l - r for l, r in maps.chevalley_images().values()]),
        ("J^-1 inverts J", lambda: [maps.j_inverse(maps.jmap(a * b)) - a * b for a, b in _pairs()]),
        ("I^-1 inverts I", lambda: [maps.imap_inverse(maps.imap(a * b)) - a * b for a, b in _pairs()]),
    ]


SUITES = {
    "uq-hopf": uq_hopf_suite,
    "oq-hopf": oq_hopf_suite,
    "rform-cocycle": rform_suite,
    "rank-one-tables": tables_suite,
    "phi-prime-relations": phi_prime_suite,
    "hc-factorization": hc_suite,
    "heis-gradings": heis_suite,
    "xi-homomorphism": xi_suite,
}

# older name of the table suite, still accepted on the command line
SUITE_ALIASES = {"section8-tables": "rank-one-tables"}
