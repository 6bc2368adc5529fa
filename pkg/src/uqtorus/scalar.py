"""Exact scalars in Q(s) with s = q^(1/N).

A scalar is stored as s^val * num / den where num and den are integer
polynomials in s with nonzero constant terms, gcd(num, den) = 1 in Z[s] and
den has a positive leading coefficient.  That form is unique, so equality and
hashing reduce to comparing coefficient tuples.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt

from flint import fmpz_poly

_ROOT_ORDER = 4
_cache_resetters = []


class ScalarError(ArithmeticError):
    pass


def root_order() -> int:
    return _ROOT_ORDER


def set_root_order(n: int) -> None:
    """Change N.  Existing scalars keep their s-exponents, so callers should
    only switch at session start; all registered caches are dropped."""
    global _ROOT_ORDER
    if int(n) != n or n < 1:
        raise ScalarError(f"root order must be a positive integer, got {n!r}")
    _ROOT_ORDER = int(n)
    for reset in _cache_resetters:
        reset()


def register_cache(fn):
    """Register an lru_cache'd function so set_root_order can clear it."""
    _cache_resetters.append(fn.cache_clear)
    return fn


_ZERO_POLY = fmpz_poly([])
_ONE_POLY = fmpz_poly([1])


def _strip(p: fmpz_poly):
    """Split p = s^k * p' with p'(0) != 0.  Returns (p', k)."""
    coeffs = p.coeffs()
    k = 0
    while k < len(coeffs) and coeffs[k] == 0:
        k += 1
    if k == 0:
        return p, 0
    return fmpz_poly(coeffs[k:]), k


class QScalar:
    __slots__ = ("num", "den", "val", "_hash")

    def __init__(self, num=0, den=None, val=0, _canonical=False):
        if not isinstance(num, fmpz_poly):
            num = fmpz_poly([int(num)])
        if den is None:
            den = _ONE_POLY
        elif not isinstance(den, fmpz_poly):
            den = fmpz_poly([int(den)])
        self._hash = None
        if _canonical:
            self.num, self.den, self.val = num, den, val
            return
        if den == 0:
            raise ScalarError("division by zero")
        if num == 0:
            self.num, self.den, self.val = _ZERO_POLY, _ONE_POLY, 0
            return
        num, k1 = _strip(num)
        den, k2 = _strip(den)
        val += k1 - k2
        if den.degree() > 0 or abs(int(den[0])) != 1:
            g = num.gcd(den)
            if g != 1:
                num = num // g
                den = den // g
        if den[den.degree()] < 0:
            num, den = -num, -den
        self.num, self.den, self.val = num, den, val

    # construction helpers -------------------------------------------------

    @staticmethod
    def monomial(coeff: int, s_exp: int) -> "QScalar":
        if coeff == 0:
            return ZERO
        return QScalar(fmpz_poly([int(coeff)]), _ONE_POLY, int(s_exp), _canonical=True)

    @staticmethod
    def laurent(terms: dict) -> "QScalar":
        """Build from a sparse {s-exponent: integer coefficient} map."""
        terms = {k: v for k, v in terms.items() if v}
        if not terms:
            return ZERO
        lo = min(terms)
        coeffs = [0] * (max(terms) - lo + 1)
        for k, v in terms.items():
            coeffs[k - lo] = int(v)
        return QScalar(fmpz_poly(coeffs), _ONE_POLY, lo, _canonical=True)

    # predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num == 0

    def is_laurent(self) -> bool:
        return self.den == 1

    def is_monomial(self) -> bool:
        return self.den == 1 and self.num.degree() == 0

    def laurent_terms(self) -> dict:
        """{s-exponent: coefficient} for Laurent scalars."""
        if self.den != 1:
            raise ScalarError("not a Laurent polynomial")
        return {self.val + i: int(c) for i, c in enumerate(self.num.coeffs()) if c != 0}

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num == 0:
            return other
        if other.num == 0:
            return self
        v = min(self.val, other.val)
        a = self.num * _shift(self.val - v)
        b = other.num * _shift(other.val - v)
        if self.den == other.den:
            return QScalar(a + b, self.den, v)
        return QScalar(a * other.den + b * self.den, self.den * other.den, v)

    __radd__ = __add__

    def __neg__(self):
        if self.num == 0:
            return self
        return QScalar(-self.num, self.den, self.val, _canonical=True)

    def __sub__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num == 0 or other.num == 0:
            return ZERO
        if self.den == 1 and other.den == 1:
            return QScalar(self.num * other.num, _ONE_POLY, self.val + other.val, _canonical=True)
        return QScalar(self.num * other.num, self.den * other.den, self.val + other.val)

    __rmul__ = __mul__

    def inverse(self) -> "QScalar":
        if self.num == 0:
            raise ScalarError("division by zero")
        return QScalar(self.den, self.num, -self.val)

    def __truediv__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if int(n) != n:
            raise ScalarError("scalar powers must be integers")
        n = int(n)
        if n < 0:
            return self.inverse() ** (-n)
        if self.den == 1 and self.num.degree() == 0:
            return QScalar(self.num ** n, _ONE_POLY, self.val * n, _canonical=True)
        return QScalar(self.num ** n, self.den ** n, self.val * n)

    # comparison -----------------------------------------------------------

    def _key(self):
        return (self.val, tuple(int(c) for c in self.num.coeffs()),
                tuple(int(c) for c in self.den.coeffs()))

    def __eq__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self.val == other.val and self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __bool__(self):
        return self.num != 0

    # printing -------------------------------------------------------------

    def __repr__(self):
        return f"QScalar({self})"

    def __str__(self):
        if self.num == 0:
            return "0"
        top = _poly_str(self.num, self.val)
        if self.den == 1:
            return top
        bottom = _poly_str(self.den, 0)
        if _term_count(self.num) > 1:
            top = f"({top})"
        if _term_count(self.den) > 1:
            bottom = f"({bottom})"
        return f"{top}/{bottom}"

    def is_single_term(self) -> bool:
        return self.den == 1 and _term_count(self.num) == 1


def _shift(k: int) -> fmpz_poly:
    if k == 0:
        return _ONE_POLY
    return fmpz_poly([0] * k + [1])


def _term_count(p: fmpz_poly) -> int:
    return sum(1 for c in p.coeffs() if c != 0)


def q_exponent_str(e: Fraction) -> str:
    if e == 1:
        return "q"
    if e.denominator == 1:
        return f"q^{e.numerator}"
    return f"q^({e.numerator}/{e.denominator})"


def _poly_str(p: fmpz_poly, shift: int) -> str:
    n = root_order()
    parts = []
    coeffs = p.coeffs()
    for i in range(len(coeffs) - 1, -1, -1):
        c = int(coeffs[i])
        if c == 0:
            continue
        e = Fraction(i + shift, n)
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if e == 0:
            body = str(c)
        elif c == 1:
            body = q_exponent_str(e)
        else:
            body = f"{c}*{q_exponent_str(e)}"
        parts.append((sign, body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


ZERO = QScalar(_ZERO_POLY, _ONE_POLY, 0, _canonical=True)
ONE = QScalar(_ONE_POLY, _ONE_POLY, 0, _canonical=True)


def as_scalar(x):
    if isinstance(x, QScalar):
        return x
    if isinstance(x, bool):
        return NotImplemented
    if isinstance(x, int):
        return QScalar(x)
    if isinstance(x, Fraction):
        return QScalar(x.numerator) / QScalar(x.denominator)
    return NotImplemented


def scalar(x) -> QScalar:
    s = as_scalar(x)
    if s is NotImplemented:
        raise TypeError(f"cannot convert {type(x).__name__} to a scalar")
    return s


def q_power(e) -> QScalar:
    """The monomial q^e; e must be a multiple of 1/N."""
    e = Fraction(e)
    k = e * root_order()
    if k.denominator != 1:
        raise ScalarError(f"q^{e} is not representable with root order {root_order()}")
    return QScalar.monomial(1, int(k))


def q() -> QScalar:
    return q_power(1)


def q_int(n: int) -> QScalar:
    """Balanced q-integer [n] = (q^n - q^-n)/(q - q^-1)."""
    if n == 0:
        return ZERO
    if n < 0:
        return -q_int(-n)
    return QScalar.laurent({(n - 1 - 2 * k) * root_order(): 1 for k in range(n)})


@register_cache
@lru_cache(maxsize=None)
def q_factorial(n: int) -> QScalar:
    if n < 0:
        raise ScalarError("factorial of a negative integer")
    out = ONE
    for k in range(2, n + 1):
        out = out * q_int(k)
    return out


@register_cache
@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QScalar:
    """Balanced q-binomial via the Pascal rule
    [n, k] = q^-k [n-1, k] + q^(n-k) [n-1, k-1]."""
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return q_power(-k) * q_binomial(n - 1, k) + q_power(n - k) * q_binomial(n - 1, k - 1)


def sqrt_monomial(x: QScalar) -> QScalar:
    """Exact square root of c*q^e when c is a perfect square and q^(e/2)
    is representable."""
    if not x.is_monomial():
        raise ScalarError(f"no exact square root available for {x}")
    c = int(x.num[0])
    if c <= 0:
        raise ScalarError(f"no exact square root available for {x}")
    r = isqrt(c)
    if r * r != c or x.val % 2:
        raise ScalarError(f"no exact square root available for {x}")
    return QScalar.monomial(r, x.val // 2)
