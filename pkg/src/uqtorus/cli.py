"""Command-line front end: expression parsing, normal forms, maps and
verification suites.

Grammar (whitespace between atoms means multiplication):

    expr    := smash (('+' | '-') smash)*
    smash   := product ('#' product)?
    product := unary (('*' | '/')? unary)*
    unary   := '-' unary | power
    power   := atom ('^' exponent)?
    exponent:= ['-'] INT | '(' ['-'] INT ['/' INT] ')'
    atom    := INT | 'q' | NAME | 'K[' ['-'] INT ['/' INT] ']' | '(' expr ')'
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import heis, maps, oq, qtorus, uq
from .ncalg import AlgebraError, Element
from .scalar import QScalar, ScalarError, as_scalar, q_power, set_root_order


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        self.message = message
        self.pos = pos
        self.text = text
        super().__init__(self._render())

    def _render(self):
        out = f"{self.message} at column {self.pos + 1}"
        if self.text:
            out += f"\n  {self.text}\n  {' ' * self.pos}^"
        return out


# ---------------------------------------------------------------------------
# tokens and syntax tree


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<khalf>K\[\s*-?\d+\s*(?:/\s*\d+\s*)?\])
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<op>[-+*/^()#])
""", re.VERBOSE)


@dataclass(frozen=True)
class Tok:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        if m.lastgroup != "ws":
            out.append(Tok(m.lastgroup, m.group(), pos))
        pos = m.end()
    out.append(Tok("end", "", len(text)))
    return out


@dataclass(frozen=True)
class Num:
    value: int
    pos: int


@dataclass(frozen=True)
class Gen:
    name: str
    pos: int


@dataclass(frozen=True)
class KHalf:
    exponent: Fraction
    pos: int


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: Fraction
    pos: int


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: int


@dataclass(frozen=True)
class Smash:
    left: object
    right: object
    pos: int


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self) -> Tok:
        return self.toks[self.i]

    def take(self) -> Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Tok:
        t = self.take()
        if t.text != text:
            self.fail(f"expected {text!r}", t)
        return t

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok.pos, self.text)

    def parse(self):
        if self.peek().kind == "end":
            self.fail("empty expression")
        node = self.expr()
        if self.peek().kind != "end":
            self.fail(f"unexpected {self.peek().text!r}")
        return node

    def expr(self):
        node = self.smash()
        while self.peek().text in ("+", "-"):
            t = self.take()
            node = BinOp(t.text, node, self.smash(), t.pos)
        return node

    def smash(self):
        node = self.product()
        if self.peek().text == "#":
            t = self.take()
            node = Smash(node, self.product(), t.pos)
            if self.peek().text == "#":
                self.fail("a smash literal has exactly two sides")
        return node

    def _starts_atom(self, t: Tok) -> bool:
        return t.kind in ("int", "name", "khalf") or t.text == "("

    def product(self):
        node = self.unary()
        while True:
            t = self.peek()
            if t.text in ("*", "/"):
                self.take()
                node = BinOp(t.text, node, self.unary(), t.pos)
            elif self._starts_atom(t):
                node = BinOp("*", node, self.unary(), t.pos)
            else:
                return node

    def unary(self):
        if self.peek().text == "-":
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self):
        node = self.atom()
        if self.peek().text == "^":
            t = self.take()
            node = Pow(node, self.exponent(), t.pos)
            if self.peek().text == "^":
                self.fail("chained exponents are ambiguous; use parentheses")
        return node

    def _int(self) -> int:
        t = self.take()
        if t.kind != "int":
            self.fail("malformed exponent", t)
        return int(t.text)

    def _sign(self) -> int:
        if self.peek().text == "-":
            self.take()
            return -1
        return 1

    def exponent(self) -> Fraction:
        if self.peek().text == "(":
            self.take()
            sign = self._sign()
            num = self._int()
            den = 1
            if self.peek().text == "/":
                self.take()
                den = self._int()
                if den == 0:
                    self.fail("zero denominator in exponent")
            self.expect(")")
            return Fraction(sign * num, den)
        sign = self._sign()
        return Fraction(sign * self._int())

    def atom(self):
        t = self.take()
        if t.kind == "int":
            return Num(int(t.text), t.pos)
        if t.kind == "name":
            return Gen(t.text, t.pos)
        if t.kind == "khalf":
            body = t.text[2:-1].replace(" ", "")
            return KHalf(Fraction(body), t.pos)
        if t.text == "(":
            node = self.expr()
            self.expect(")")
            return node
        self.fail("expected a number, generator or '('", t)


def parse(text: str, algebra: str | None = None):
    """Syntax tree of text; with an algebra name, also checks that every
    identifier resolves there."""
    tree = _Parser(text).parse()
    if algebra is not None:
        evaluate(tree, algebra, text)
    return tree


# ---------------------------------------------------------------------------
# algebra registry and evaluation


@dataclass
class Side:
    """How identifiers evaluate inside one algebra."""

    alg: object
    resolve: object        # (name, exponent or None, pos) -> Element or None
    rational: bool = False  # whether rational exponents are meaningful


@dataclass
class AlgebraEntry:
    name: str
    description: str
    side: Side | None = None
    smash: tuple | None = None   # (left Side, right Side, combine)
    extra: object = None         # resolver for identifiers outside a smash


def _uq_resolve(name, e, pos):
    if name == "E":
        return uq.E()
    if name == "F":
        return uq.F()
    if name == "K":
        return uq.K(2)
    if name == "Ehat":
        return uq.Ehat()
    if name == "Fhat":
        return uq.Fhat()
    return None


def _oq_resolver(alg):
    def resolve(name, e, pos):
        if name in oq.GEN_NAMES:
            return alg.gen(name)
        return None
    return resolve


def _torus_side(alg):
    def resolve(name, e, pos):
        if name in alg.presentation.names:
            return alg.gen(name, 1 if e is None else e)
        return None
    return Side(alg, resolve, rational=True)


_OQ_W0_T = maps.OQ_W0_T


def _oq_w0_t_resolve(name, e, pos):
    if name == "t":
        return _OQ_W0_T.t(1 if e is None else e)
    if name in oq.GEN_NAMES:
        return _OQ_W0_T.embed(oq.OQ_W0.gen(name))
    return None


def _heis_outside(name, e, pos):
    if name == "t":
        return heis.t(1)
    return None


_UQ_SIDE = Side(uq.UQ, _uq_resolve)


def _heis_combine(left, right):
    return heis.smash(left, right)


def _smash_ou_combine(alg):
    return lambda left, right: heis.smash_ou(left, right, alg)


REGISTRY = {}


def register(entry: AlgebraEntry):
    REGISTRY[entry.name] = entry


register(AlgebraEntry("uq-sl2", "U_q(sl2) in PBW form E^a K[m/2] F^b", _UQ_SIDE))
for _alg, _desc in ((oq.OQ, "O_q(SL2)"),
                    (oq.OQ_W0, "O_q(SL2) localized at x21"),
                    (oq.OQ_W0W0, "O_q(SL2) localized at x12 and x21")):
    register(AlgebraEntry(_alg.name, _desc, Side(_alg, _oq_resolver(_alg))))
register(AlgebraEntry("oq-sl2-w0-t", "O_q(SL2)[x21^-1] with a central t",
                      Side(_OQ_W0_T, _oq_w0_t_resolve, rational=False)))
register(AlgebraEntry("heis-sl2", "Heisenberg double U_{>=0} # U_{<=0}; t = 1#K[1/2]",
                      smash=(_UQ_SIDE, _UQ_SIDE, _heis_combine), extra=_heis_outside))
register(AlgebraEntry("cqx-sl2", "O_q^op # U_{<=0}",
                      smash=(Side(oq.OQ, _oq_resolver(oq.OQ)), _UQ_SIDE,
                             _smash_ou_combine(heis.CQX))))
register(AlgebraEntry("dq-sl2", "O_q^op # U",
                      smash=(Side(oq.OQ, _oq_resolver(oq.OQ)), _UQ_SIDE,
                             _smash_ou_combine(heis.DQ))))
register(AlgebraEntry("qtorus:A", "quantum torus uv = q^2 vu, z central",
                      _torus_side(qtorus.TORUS_A)))
register(AlgebraEntry("qtorus:A'", "A with v^(1/2), z^(1/2) adjoined",
                      _torus_side(qtorus.TORUS_A_PRIME)))
register(AlgebraEntry(maps.T4.name, "torus on x12, x21, x22, t containing O_q(SL2^{w0,w0}) ⊗ T",
                      _torus_side(maps.T4)))


def algebra_entry(name: str) -> AlgebraEntry:
    if name in REGISTRY:
        return REGISTRY[name]
    if name.startswith("qtorus:"):
        alg = qtorus.load_presentation(name.split(":", 1)[1])
        entry = AlgebraEntry(name, "torus from file", _torus_side(alg))
        register(entry)
        return entry
    raise AlgebraError(f"unknown algebra {name!r}; see --list-algebras")


def _target_alg(entry: AlgebraEntry):
    if entry.side is not None:
        return entry.side.alg
    return entry.smash[2](entry.smash[0].alg.one(), entry.smash[1].alg.one()).alg


class _Evaluator:
    def __init__(self, entry: AlgebraEntry, text: str):
        self.entry = entry
        self.text = text

    def fail(self, msg, pos):
        raise ParseError(msg, pos, self.text)

    def run(self, node):
        if self.entry.side is not None:
            return self.lift(self.ev(node, self.entry.side), self.entry.side.alg, 0)
        val = self.ev(node, None)
        return self.lift(val, _target_alg(self.entry), 0)

    def lift(self, v, alg, pos):
        if isinstance(v, QScalar):
            return alg.one().scale(v)
        if v.alg != alg:
            self.fail(f"value lives in {v.alg.name}, expected {alg.name}", pos)
        return v

    def ev(self, node, side):
        try:
            return self._ev(node, side)
        except ParseError:
            raise
        except (AlgebraError, ScalarError, ZeroDivisionError) as exc:
            self.fail(str(exc), _pos(node))

    def _ev(self, node, side):
        if isinstance(node, Num):
            return as_scalar(node.value)
        if isinstance(node, Gen):
            return self.ident(node.name, None, node.pos, side)
        if isinstance(node, KHalf):
            return self.khalf(node.exponent, node.pos, side)
        if isinstance(node, Neg):
            return -self.ev(node.arg, side)
        if isinstance(node, Pow):
            return self.power(node, side)
        if isinstance(node, Smash):
            if side is not None or self.entry.smash is None:
                self.fail(f"'#' is not available in {self.entry.name}", node.pos)
            ls, rs, combine = self.entry.smash
            left = self.lift(self.ev(node.left, ls), ls.alg, node.pos)
            right = self.lift(self.ev(node.right, rs), rs.alg, node.pos)
            return combine(left, right)
        if isinstance(node, BinOp):
            a = self.ev(node.left, side)
            b = self.ev(node.right, side)
            if node.op == "+":
                return self.combine(a, b, node.pos, lambda x, y: x + y)
            if node.op == "-":
                return self.combine(a, b, node.pos, lambda x, y: x - y)
            if node.op == "*":
                return self.combine(a, b, node.pos, lambda x, y: x * y)
            if node.op == "/":
                if isinstance(b, Element):
                    if len(b.terms) == 1 and b.alg.one_key() in b.terms:
                        b = b.terms[b.alg.one_key()]
                    else:
                        self.fail("only division by scalars is supported", node.pos)
                if b.is_zero():
                    self.fail("division by zero", node.pos)
                return a / b
        raise AssertionError(node)

    def combine(self, a, b, pos, fn):
        if isinstance(a, Element) and isinstance(b, Element) and a.alg != b.alg:
            self.fail(f"cannot combine {a.alg.name} with {b.alg.name}", pos)
        if isinstance(a, QScalar) and isinstance(b, Element):
            a = b.alg.one().scale(a)
        if isinstance(b, QScalar) and isinstance(a, Element):
            b = a.alg.one().scale(b)
        return fn(a, b)

    def ident(self, name, e, pos, side):
        if name == "q":
            return q_power(1 if e is None else e)
        val = None
        if side is not None:
            val = side.resolve(name, e, pos)
        elif self.entry.extra is not None:
            val = self.entry.extra(name, e, pos)
        if val is None:
            where = self.entry.name if side is None or self.entry.side else f"a side of {self.entry.name}"
            if side is None and self.entry.smash is not None:
                self.fail(f"{name!r} needs a '#' literal in {self.entry.name}", pos)
            self.fail(f"unknown identifier {name!r} in {where}", pos)
        return val

    def khalf(self, h, pos, side):
        if side is None or side.alg != uq.UQ:
            self.fail("K[...] belongs to U_q", pos)
        m = h * 2
        if m.denominator != 1:
            self.fail("K exponents live in (1/2)Z", pos)
        return uq.K(int(m))

    def power(self, node, side):
        e = node.exponent
        base = node.base
        if isinstance(base, Gen) and (base.name == "q" or (side is not None and side.rational)
                                      or (side is not None and side.alg == maps.OQ_W0_T and base.name == "t")):
            try:
                return self.ident(base.name, e, base.pos, side)
            except ParseError as exc:
                raise ParseError(exc.message, node.pos, self.text) from None
        if isinstance(base, Gen) and base.name == "K" and side is not None and side.alg == uq.UQ:
            if e.denominator != 1:
                self.fail("write fractional K powers as K[a/2]", node.pos)
            return uq.K(2 * int(e))
        if isinstance(base, KHalf):
            return self.khalf(base.exponent * e, node.pos, side)
        if e.denominator != 1:
            self.fail("fractional exponents are only allowed on q and torus generators", node.pos)
        v = self.ev(base, side)
        n = int(e)
        if isinstance(v, QScalar):
            return v ** n
        if n < 0:
            try:
                return v.inverse() ** (-n)
            except AlgebraError as exc:
                self.fail(str(exc), node.pos)
        return v ** n


def _pos(node) -> int:
    if isinstance(node, Neg):
        return _pos(node.arg)
    return getattr(node, "pos", 0)


def evaluate(tree, algebra: str, text: str = "") -> Element:
    return _Evaluator(algebra_entry(algebra), text).run(tree)


def parse_element(text: str, algebra: str) -> Element:
    return evaluate(_Parser(text).parse(), algebra, text)


# ---------------------------------------------------------------------------
# maps


MAP_SOURCES = {
    "J": "oq-sl2", "Jinv": "uq-sl2", "xi": "oq-sl2", "zeta": "oq-sl2",
    "iotaY": "oq-sl2", "I": "oq-sl2", "phi": "uq-sl2", "phiP": "uq-sl2",
}


def apply_map(name: str, x: Element) -> Element:
    if name == "J":
        return maps.jmap(x)
    if name == "Jinv":
        return maps.j_inverse(x)
    if name == "xi":
        return maps.xi(x)
    if name == "zeta":
        return maps.zeta(x)
    if name == "iotaY":
        return maps.iota_y(x)
    if name == "I":
        return maps.imap(x)
    if name == "phi":
        return maps.phi_map(x)
    if name == "phiP":
        return maps.assignment_apply(maps.phi_prime(), x)
    raise AlgebraError(f"unknown map {name!r}")


# ---------------------------------------------------------------------------
# command line


def _read_expr(args_expr):
    if args_expr is None or args_expr == "-":
        return sys.stdin.read().strip()
    return args_expr


def _emit_checks(results, text_mode: bool, out) -> bool:
    ok = True
    for r in results:
        ok &= r["status"] == "pass"
        if text_mode:
            line = f"[{r['status'].upper()}] {r['suite']}: {r['check']} ({r['millis']} ms)"
            if r["status"] != "pass":
                line += f"\n    residual: {r['residual']}"
            print(line, file=out)
        else:
            print(json.dumps(r, ensure_ascii=False), file=out)
    return ok


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="uqtorus", description=__doc__.splitlines()[0])
    p.add_argument("--root-order", type=int, default=None,
                   help="scalars live in Z(q^(1/N)); default 4")
    p.add_argument("--list-algebras", action="store_true", help="list algebra names and exit")
    sub = p.add_subparsers(dest="command")

    s = sub.add_parser("normalize", help="print the normal form of an expression")
    s.add_argument("--algebra", default="uq-sl2")
    s.add_argument("expr", nargs="?")

    s = sub.add_parser("mul", help="multiply two expressions")
    s.add_argument("--algebra", default="uq-sl2")
    s.add_argument("left")
    s.add_argument("right")

    s = sub.add_parser("pair", help="Hopf pairing <x, y> (x in U_{>=0}, y in U_{<=0}) or, "
                                    "with --algebra oq-sl2, the r-form r(phi, psi)")
    s.add_argument("--algebra", default="uq-sl2", choices=["uq-sl2", "oq-sl2"])
    s.add_argument("left")
    s.add_argument("right")

    s = sub.add_parser("eval", help="evaluate phi in O_q(SL2) on u in U_q(sl2)")
    s.add_argument("phi")
    s.add_argument("u")

    s = sub.add_parser("map", help="apply one of the maps " + ", ".join(MAP_SOURCES))
    s.add_argument("--name", required=True, choices=list(MAP_SOURCES))
    s.add_argument("--algebra", default=None, help="source algebra (defaults per map)")
    s.add_argument("expr", nargs="?")

    s = sub.add_parser("verify", help="run verification suites")
    s.add_argument("--suite", action="append", default=None,
                   help="suite name (repeatable); default all")
    s.add_argument("--text", action="store_true", help="human-readable output")
    return p


def main(argv=None) -> int:
    from . import suites

    parser = build_parser()
    args = parser.parse_args(argv)
    if args.root_order is not None:
        try:
            set_root_order(args.root_order)
        except (ValueError, ScalarError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    if args.list_algebras:
        for name, entry in REGISTRY.items():
            print(f"{name}\t{entry.description}")
        return 0
    if args.command is None:
        parser.print_help()
        return 2
    try:
        if args.command == "normalize":
            print(parse_element(_read_expr(args.expr), args.algebra))
        elif args.command == "mul":
            print(parse_element(args.left, args.algebra) * parse_element(args.right, args.algebra))
        elif args.command == "pair":
            x = parse_element(args.left, args.algebra)
            y = parse_element(args.right, args.algebra)
            print(uq.hopf_pair(x, y) if args.algebra == "uq-sl2" else oq.rform(x, y))
        elif args.command == "eval":
            print(oq.evaluate(parse_element(args.phi, "oq-sl2"), parse_element(args.u, "uq-sl2")))
        elif args.command == "map":
            src = args.algebra or MAP_SOURCES[args.name]
            print(apply_map(args.name, parse_element(_read_expr(args.expr), src)))
        elif args.command == "verify":
            names = args.suite or list(suites.SUITES)
            for n in names:
                if n not in suites.SUITES and n not in suites.SUITE_ALIASES:
                    raise AlgebraError(f"unknown suite {n!r}; choose from {', '.join(suites.SUITES)}")
            ok = True
            for n in names:
                ok &= _emit_checks(suites.run_suite(n), args.text, sys.stdout)
            return 0 if ok else 1
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (AlgebraError, ScalarError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
