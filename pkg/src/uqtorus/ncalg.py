"""Linear combinations over basis monomials, tensors, and word rewriting.

Every concrete algebra subclasses ``Algebra`` and supplies a product on basis
keys.  ``Element`` and ``Tensor`` are immutable sparse maps from keys (or key
tuples) to scalars with zero coefficients purged.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .scalar import ONE, ZERO, QScalar, as_scalar, scalar


class AlgebraError(ValueError):
    pass


class Algebra:
    """Base class.  Subclasses implement ``_mul_keys`` and the key helpers."""

    name = "abstract"
    grading_names: tuple = ()

    def one_key(self):
        raise NotImplementedError

    def _mul_keys(self, a, b) -> dict:
        raise NotImplementedError

    def mul_keys(self, a, b) -> dict:
        return self._mul_keys(a, b)

    def sort_key(self, key):
        return key

    def format_key(self, key) -> str:
        return str(key)

    def degree(self, key):
        return None

    def inverse_key(self, key):
        """(scalar, key) with key * key' = scalar * 1, for unit monomials."""
        raise AlgebraError(f"{key!r} is not invertible in {self.name}")

    # element constructors

    def element(self, terms) -> "Element":
        return Element(self, terms)

    def monomial(self, key, coeff=ONE) -> "Element":
        return Element(self, {key: scalar(coeff)})

    def one(self) -> "Element":
        return self.monomial(self.one_key())

    def zero(self) -> "Element":
        return Element(self, {})

    def __repr__(self):
        return f"<algebra {self.name}>"


def _add_into(acc: dict, key, c: QScalar):
    v = acc.get(key)
    if v is None:
        acc[key] = c
    else:
        s = v + c
        if s.is_zero():
            del acc[key]
        else:
            acc[key] = s


class Element:
    """Finite linear combination of basis keys of one algebra."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: Algebra, terms=None):
        self.alg = alg
        if terms is None:
            terms = {}
        clean = {}
        for k, c in dict(terms).items():
            c = scalar(c)
            if not c.is_zero():
                clean[k] = c
        self.terms = clean

    @classmethod
    def _raw(cls, alg, terms):
        e = object.__new__(cls)
        e.alg = alg
        e.terms = terms
        return e

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, key) -> QScalar:
        return self.terms.get(key, ZERO)

    def keys(self):
        return sorted(self.terms, key=self.alg.sort_key, reverse=True)

    def items(self):
        return [(k, self.terms[k]) for k in self.keys()]

    def __iter__(self):
        return iter(self.items())

    def __len__(self):
        return len(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def single(self):
        """(key, coeff) of a one-term element."""
        if len(self.terms) != 1:
            raise AlgebraError("expected a single monomial")
        return next(iter(self.terms.items()))

    def scalar_part(self) -> QScalar:
        return self.coeff(self.alg.one_key())

    # arithmetic

    def _check(self, other):
        if other.alg is not self.alg and other.alg != self.alg:
            raise AlgebraError(f"algebra mismatch: {self.alg.name} vs {other.alg.name}")

    def _coerce(self, other):
        if isinstance(other, Element):
            self._check(other)
            return other
        s = as_scalar(other)
        if s is NotImplemented:
            return NotImplemented
        return Element._raw(self.alg, {self.alg.one_key(): s} if not s.is_zero() else {})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(acc, k, c)
        return Element._raw(self.alg, acc)

    __radd__ = __add__

    def __neg__(self):
        return Element._raw(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def scale(self, s) -> "Element":
        s = scalar(s)
        if s.is_zero():
            return Element._raw(self.alg, {})
        return Element._raw(self.alg, {k: c * s for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            acc = {}
            mul = self.alg.mul_keys
            for k1, c1 in self.terms.items():
                for k2, c2 in other.terms.items():
                    c12 = c1 * c2
                    for k, c in mul(k1, k2).items():
                        _add_into(acc, k, c12 * c)
            return Element._raw(self.alg, acc)
        s = as_scalar(other)
        if s is NotImplemented:
            return NotImplemented
        return self.scale(s)

    def __rmul__(self, other):
        s = as_scalar(other)
        if s is NotImplemented:
            return NotImplemented
        return self.scale(s)

    def __truediv__(self, other):
        s = as_scalar(other)
        if s is NotImplemented:
            return NotImplemented
        return self.scale(s.inverse())

    def __pow__(self, n: int):
        n = int(n)
        if n < 0:
            return self.inverse() ** (-n)
        out = self.alg.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def inverse(self) -> "Element":
        if len(self.terms) != 1:
            raise AlgebraError("only single monomials can be inverted")
        k, c = self.single()
        s, kinv = self.alg.inverse_key(k)
        return Element._raw(self.alg, {kinv: s.inverse() * c.inverse()})

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.alg == other.alg and self.terms == other.terms
        s = as_scalar(other)
        if s is NotImplemented:
            return NotImplemented
        return self.terms == ({self.alg.one_key(): s} if not s.is_zero() else {})

    def __hash__(self):
        return hash((self.alg.name, frozenset(self.terms.items())))

    def map_keys(self, fn: Callable, target: Algebra | None = None) -> "Element":
        """Linear extension of fn: key -> Element (in target)."""
        alg = target or self.alg
        acc = {}
        for k, c in self.terms.items():
            img = fn(k)
            for k2, c2 in img.terms.items():
                _add_into(acc, k2, c * c2)
        return Element._raw(alg, acc)

    def map_scalar(self, fn: Callable) -> QScalar:
        """Linear extension of fn: key -> scalar."""
        total = ZERO
        for k, c in self.terms.items():
            v = fn(k)
            if not v.is_zero():
                total = total + c * v
        return total

    def __str__(self):
        return format_terms(self.items(), self.alg.format_key)

    def __repr__(self):
        return f"<{self.alg.name}: {self}>"


def format_coeff_term(c: QScalar, mono: str) -> tuple[str, str]:
    """(sign, body) for coefficient c times monomial text (empty = unit)."""
    neg = c.num[c.num.degree()] < 0
    if neg:
        c = -c
    sign = "-" if neg else "+"
    text = str(c)
    if not mono:
        return sign, text if c.is_single_term() else f"({text})"
    if c == ONE:
        return sign, mono
    if not c.is_single_term():
        text = f"({text})"
    return sign, f"{text}*{mono}"


def format_terms(items, fmt) -> str:
    if not items:
        return "0"
    parts = [format_coeff_term(c, fmt(k)) for k, c in items]
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# tensors


class Tensor:
    """Sparse element of A_1 ⊗ ... ⊗ A_n keyed by tuples of basis keys."""

    __slots__ = ("algs", "terms")

    def __init__(self, algs, terms=None):
        self.algs = tuple(algs)
        clean = {}
        for k, c in dict(terms or {}).items():
            if len(k) != len(self.algs):
                raise AlgebraError("tensor key arity mismatch")
            c = scalar(c)
            if not c.is_zero():
                clean[k] = c
        self.terms = clean

    @classmethod
    def _raw(cls, algs, terms):
        t = object.__new__(cls)
        t.algs = algs
        t.terms = terms
        return t

    @classmethod
    def pure(cls, *elements: Element) -> "Tensor":
        algs = tuple(e.alg for e in elements)
        acc = {}
        for combo in itertools.product(*(e.terms.items() for e in elements)):
            c = ONE
            for _, ci in combo:
                c = c * ci
            _add_into(acc, tuple(k for k, _ in combo), c)
        return cls._raw(algs, acc)

    @property
    def arity(self) -> int:
        return len(self.algs)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other):
        if self.algs != other.algs:
            raise AlgebraError("tensor arity or algebra mismatch")

    def __add__(self, other):
        self._check(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(acc, k, c)
        return Tensor._raw(self.algs, acc)

    def __neg__(self):
        return Tensor._raw(self.algs, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "Tensor":
        s = scalar(s)
        return Tensor._raw(self.algs, {k: c * s for k, c in self.terms.items()} if s else {})

    def __rmul__(self, other):
        s = as_scalar(other)
        if s is NotImplemented:
            return NotImplemented
        return self.scale(s)

    def __mul__(self, other):
        """Leg-wise product."""
        if not isinstance(other, Tensor):
            s = as_scalar(other)
            if s is NotImplemented:
                return NotImplemented
            return self.scale(s)
        self._check(other)
        acc = {}
        muls = [a.mul_keys for a in self.algs]
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                pieces = [muls[i](k1[i], k2[i]).items() for i in range(len(muls))]
                c12 = c1 * c2
                for combo in itertools.product(*pieces):
                    c = c12
                    for _, ci in combo:
                        c = c * ci
                    _add_into(acc, tuple(k for k, _ in combo), c)
        return Tensor._raw(self.algs, acc)

    def tensor(self, other: "Tensor") -> "Tensor":
        acc = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                _add_into(acc, k1 + k2, c1 * c2)
        return Tensor._raw(self.algs + other.algs, acc)

    def permute(self, perm) -> "Tensor":
        """New leg i is old leg perm[i]."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.arity)):
            raise AlgebraError("not a permutation of the legs")
        return Tensor._raw(tuple(self.algs[p] for p in perm),
                           {tuple(k[p] for p in perm): c for k, c in self.terms.items()})

    def flip(self) -> "Tensor":
        if self.arity != 2:
            raise AlgebraError("flip needs arity 2")
        return self.permute((1, 0))

    def apply(self, leg: int, fn: Callable, target: Algebra | None = None) -> "Tensor":
        """Apply a linear map (fn: key -> Element) to one leg."""
        algs = list(self.algs)
        if target is not None:
            algs[leg] = target
        acc = {}
        for k, c in self.terms.items():
            for k2, c2 in fn(k[leg]).terms.items():
                _add_into(acc, k[:leg] + (k2,) + k[leg + 1:], c * c2)
        return Tensor._raw(tuple(algs), acc)

    def expand(self, leg: int, fn: Callable) -> "Tensor":
        """Replace one leg by several: fn(key) -> Tensor (e.g. a coproduct)."""
        acc = {}
        sample = fn(self.algs[leg].one_key())
        new_algs = self.algs[:leg] + sample.algs + self.algs[leg + 1:]
        for k, c in self.terms.items():
            for k2, c2 in fn(k[leg]).terms.items():
                _add_into(acc, k[:leg] + k2 + k[leg + 1:], c * c2)
        return Tensor._raw(new_algs, acc)

    def contract(self, leg: int, form: Callable) -> "Tensor":
        """Pair one leg against a functional (form: key -> scalar) and drop it."""
        acc = {}
        for k, c in self.terms.items():
            v = form(k[leg])
            if not v.is_zero():
                _add_into(acc, k[:leg] + k[leg + 1:], c * v)
        return Tensor._raw(self.algs[:leg] + self.algs[leg + 1:], acc)

    def contract_pair(self, i: int, j: int, form: Callable) -> "Tensor":
        """Pair legs i and j against a bilinear form on keys and drop both."""
        if i == j:
            raise AlgebraError("need two distinct legs")
        keep = [n for n in range(self.arity) if n not in (i, j)]
        acc = {}
        for k, c in self.terms.items():
            v = form(k[i], k[j])
            if not v.is_zero():
                _add_into(acc, tuple(k[n] for n in keep), c * v)
        return Tensor._raw(tuple(self.algs[n] for n in keep), acc)

    def to_element(self) -> Element:
        if self.arity != 1:
            raise AlgebraError("only arity-1 tensors convert to elements")
        return Element._raw(self.algs[0], {k[0]: c for k, c in self.terms.items()})

    def scalar_value(self) -> QScalar:
        if self.arity != 0:
            raise AlgebraError("tensor still has legs")
        return self.terms.get((), ZERO)

    def multiply_legs(self) -> Element:
        """m: A ⊗ ... ⊗ A -> A, product of the legs in order."""
        alg = self.algs[0]
        if any(a != alg for a in self.algs):
            raise AlgebraError("legs live in different algebras")
        acc = {}
        for k, c in self.terms.items():
            prod = {k[0]: c}
            for key in k[1:]:
                nxt = {}
                for k1, c1 in prod.items():
                    for k2, c2 in alg.mul_keys(k1, key).items():
                        _add_into(nxt, k2, c1 * c2)
                prod = nxt
            for k2, c2 in prod.items():
                _add_into(acc, k2, c2)
        return Element._raw(alg, acc)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.algs == other.algs and self.terms == other.terms

    def __hash__(self):
        return hash((self.algs, frozenset(self.terms.items())))

    def items(self):
        def order(k):
            return tuple(a.sort_key(x) for a, x in zip(self.algs, k))
        return [(k, self.terms[k]) for k in sorted(self.terms, key=order, reverse=True)]

    def __str__(self):
        fmts = [a.format_key for a in self.algs]

        def fmt(k):
            return " ⊗ ".join(f(x) or "1" for f, x in zip(fmts, k))
        return format_terms(self.items(), fmt)

    def __repr__(self):
        return f"<tensor {'⊗'.join(a.name for a in self.algs)}: {self}>"


def tensor_power_map(element: Element, fn: Callable) -> Tensor:
    """Linear extension of fn: key -> Tensor over an element."""
    acc = {}
    algs = None
    for k, c in element.terms.items():
        t = fn(k)
        algs = t.algs
        for k2, c2 in t.terms.items():
            _add_into(acc, k2, c * c2)
    if algs is None:
        algs = fn(element.alg.one_key()).algs
    return Tensor._raw(algs, acc)


# ---------------------------------------------------------------------------
# word rewriting


@dataclass(frozen=True)
class Rule:
    """A forbidden pattern of fixed length and its replacement.

    ``match(window)`` decides whether the letters form the pattern and
    ``rhs(window)`` returns {word: scalar} to substitute.
    """

    name: str
    length: int
    match: Callable
    rhs: Callable


@dataclass
class ConfluenceReport:
    system: str
    critical_words: int = 0
    failures: list = field(default_factory=list)

    @property
    def confluent(self) -> bool:
        return not self.failures

    def __str__(self):
        status = "joinable" if self.confluent else f"{len(self.failures)} non-joinable"
        return f"{self.system}: {self.critical_words} critical pairs checked, {status}"


@dataclass
class TerminationReport:
    system: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def terminating(self) -> bool:
        return not self.failures


class RewriteSystem:
    """String rewriting with a monomial order that every rule decreases.

    ``order_key(word)`` maps words into a well-ordered set of tuples;
    ``sample_alphabet`` is the finite letter set used when enumerating
    overlaps (parametric letters such as K^m are sampled over a range).
    """

    def __init__(self, name: str, rules: Iterable[Rule], order_key: Callable,
                 sample_alphabet: Iterable):
        self.name = name
        self.rules = tuple(rules)
        self.order_key = order_key
        self.sample_alphabet = tuple(sample_alphabet)
        self._memo = {}

    def find_redex(self, word: tuple):
        """Leftmost position and first rule that applies there."""
        for i in range(len(word)):
            for rule in self.rules:
                if i + rule.length <= len(word) and rule.match(word[i:i + rule.length]):
                    return i, rule
        return None

    def step(self, word: tuple, pos: int, rule: Rule) -> dict:
        out = {}
        for w, c in rule.rhs(word[pos:pos + rule.length]).items():
            _add_into(out, word[:pos] + tuple(w) + word[pos + rule.length:], scalar(c))
        return out

    def normalize(self, word) -> dict:
        """Normal form of a word as {normal word: scalar}."""
        word = tuple(word)
        hit = self._memo.get(word)
        if hit is not None:
            return hit
        red = self.find_redex(word)
        if red is None:
            result = {word: ONE}
        else:
            result = {}
            for w, c in self.step(word, *red).items():
                for w2, c2 in self.normalize(w).items():
                    _add_into(result, w2, c * c2)
        self._memo[word] = result
        return result

    def normalize_combination(self, combo: dict) -> dict:
        out = {}
        for w, c in combo.items():
            for w2, c2 in self.normalize(w).items():
                _add_into(out, w2, scalar(c) * c2)
        return out

    def is_normal(self, word) -> bool:
        return self.find_redex(tuple(word)) is None

    def check_termination(self) -> TerminationReport:
        rep = TerminationReport(self.name)
        for rule in self.rules:
            for window in itertools.product(self.sample_alphabet, repeat=rule.length):
                if not rule.match(window):
                    continue
                rep.checked += 1
                lhs = self.order_key(tuple(window))
                for w in rule.rhs(window):
                    if not self.order_key(tuple(w)) < lhs:
                        rep.failures.append((rule.name, window, tuple(w)))
        return rep

    def check_confluence(self) -> ConfluenceReport:
        """Reduce both sides of every overlap of two rule patterns."""
        rep = ConfluenceReport(self.name)
        alphabet = self.sample_alphabet
        seen = set()
        for r1 in self.rules:
            for r2 in self.rules:
                # r2 starts at offset d inside or after the start of r1
                for d in range(0, r1.length):
                    if d == 0 and r1 is r2:
                        continue
                    total = max(r1.length, d + r2.length)
                    for word in itertools.product(alphabet, repeat=total):
                        if not r1.match(word[:r1.length]):
                            continue
                        if not r2.match(word[d:d + r2.length]):
                            continue
                        tag = (word, r1.name, r2.name, d)
                        if tag in seen:
                            continue
                        seen.add(tag)
                        rep.critical_words += 1
                        left = self.normalize_combination(self.step(word, 0, r1))
                        right = self.normalize_combination(self.step(word, d, r2))
                        if left != right:
                            rep.failures.append({
                                "word": word, "rules": (r1.name, r2.name),
                                "left": left, "right": right})
        return rep


# ---------------------------------------------------------------------------
# exact linear algebra


class SingularSystem(ArithmeticError):
    pass


def solve_linear(rows: list, rhs: list) -> list | None:
    """Solve A x = b exactly over the scalar field.

    rows: list of equations, each a list of scalars (one per unknown).
    Returns the unique solution, or None if the system is inconsistent.
    Raises SingularSystem if the solution is not unique.
    """
    n = len(rows[0]) if rows else 0
    mat = [[scalar(v) for v in r] + [scalar(b)] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(mat)) if not mat[i][col].is_zero()), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = mat[r][col].inverse()
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and not mat[i][col].is_zero():
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
    for i in range(r, len(mat)):
        if not mat[i][n].is_zero():
            return None
    if len(pivots) < n:
        raise SingularSystem("solution is not unique")
    x = [ZERO] * n
    for i, col in enumerate(pivots):
        x[col] = mat[i][n]
    return x


def determinant(mat: list) -> QScalar:
    m = [[scalar(v) for v in row] for row in mat]
    n = len(m)
    det = ONE
    for col in range(n):
        piv = next((i for i in range(col, n) if not m[i][col].is_zero()), None)
        if piv is None:
            return ZERO
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det = det * m[col][col]
        inv = m[col][col].inverse()
        for i in range(col + 1, n):
            if not m[i][col].is_zero():
                f = m[i][col] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[col])]
    return det


# ---------------------------------------------------------------------------
# adjoining a central torus t^e, e rational


class WithCentral(Algebra):
    """Base ⊗ k[t^(±1/den)] with t central; keys (base key, exponent)."""

    def __init__(self, base: Algebra, symbol: str = "t", den: int = 1):
        self.base = base
        self.symbol = symbol
        self.den = den
        self.name = f"{base.name}[{symbol}]"

    def __eq__(self, other):
        return (isinstance(other, WithCentral) and self.base == other.base
                and self.symbol == other.symbol and self.den == other.den)

    def __hash__(self):
        return hash((self.base, self.symbol, self.den))

    def one_key(self):
        return (self.base.one_key(), Fraction(0))

    def _mul_keys(self, k1, k2):
        e = k1[1] + k2[1]
        return {(k, e): c for k, c in self.base.mul_keys(k1[0], k2[0]).items()}

    def sort_key(self, key):
        return (self.base.sort_key(key[0]), key[1])

    def format_key(self, key):
        base = self.base.format_key(key[0])
        e = key[1]
        if e == 0:
            return base
        if e == 1:
            t = self.symbol
        elif e.denominator == 1:
            t = f"{self.symbol}^{e.numerator}"
        else:
            t = f"{self.symbol}^({e.numerator}/{e.denominator})"
        return f"{base}*{t}" if base else t

    def inverse_key(self, key):
        s, k = self.base.inverse_key(key[0])
        return s, (k, -key[1])

    def t(self, e=1) -> "Element":
        e = Fraction(e)
        if (e * self.den).denominator != 1:
            raise AlgebraError(f"exponent {e} of {self.symbol} not allowed")
        return self.monomial((self.base.one_key(), e))

    def embed(self, x: Element, e=0) -> Element:
        e = Fraction(e)
        return Element._raw(self, {(k, e): c for k, c in x.terms.items()})

    def coefficients(self, x: Element) -> dict:
        """{exponent: base element}."""
        out = {}
        for (k, e), c in x.terms.items():
            out.setdefault(e, {})[k] = c
        return {e: self.base.element(t) for e, t in sorted(out.items())}
