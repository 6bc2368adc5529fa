"""Independent sympy model of the fundamental module of U_q(sl2) and its
square, used to derive reference values (Y operator, r-form entries)."""
import itertools

import sympy as sp

s = sp.symbols("s", positive=True)   # s = q^(1/4)
q = s ** 4

E1 = sp.Matrix([[0, 1], [0, 0]])
F1 = sp.Matrix([[0, 0], [1, 0]])
I1 = sp.eye(2)


def khalf(m):
    """K^(m omega) on the fundamental module."""
    return sp.diag(s ** (2 * m), s ** (-2 * m))


def kron(a, b):
    return sp.kronecker_product(a, b)


def generators(k):
    """E, F and K^(m omega) (as a function of m) on V^{⊗k}."""
    if k == 1:
        return E1, F1, khalf
    E, F, K = generators(k - 1)
    # Delta E = E ⊗ 1 + K ⊗ E,  Delta F = F ⊗ K^-1 + 1 ⊗ F  (K = K^(2 omega))
    E2 = kron(E, I1) + kron(K(2), E1)
    F2 = kron(F, khalf(-2)) + kron(sp.eye(2 ** (k - 1)), F1)
    return E2, F2, lambda m: kron(K(m), khalf(m))


def qint(n):
    return sp.simplify((q ** n - q ** -n) / (q - q ** -1))


def divided(M, n):
    out = sp.eye(M.shape[0])
    for i in range(1, n + 1):
        out = out * M / qint(i)
    return out


def weights(k):
    return [sum(1 if i == 0 else -1 for i in idx) for idx in itertools.product((0, 1), repeat=k)]


def y_matrix(k):
    """Y = C T with T(v) = sum_{a-b+c = wt} (-1)^b q^(ac-b) F^(a) E^(b) F^(c) v
    and C(v) = q^(wt/2 - wt^2/4) v on weight vectors."""
    E, F, _ = generators(k)
    n = 2 ** k
    wts = weights(k)
    T = sp.zeros(n, n)
    for col, w in enumerate(wts):
        v = sp.zeros(n, 1)
        v[col] = 1
        for a in range(k + 1):
            for b in range(k + 1):
                c = w - a + b
                if 0 <= c <= k:
                    T[:, col] += (-1) ** b * q ** (a * c - b) * divided(F, a) * divided(E, b) * divided(F, c) * v
    C = sp.diag(*[q ** sp.Rational(w, 2) * q ** (-sp.Rational(w * w, 4)) for w in wts])
    return sp.simplify(C * T)


def cocycle_value(i, j, k, l):
    """(f_i ⊗ f_k)((Y^-1 ⊗ Y^-1) Y (v_j ⊗ v_l))."""
    y1 = y_matrix(1)
    y2 = y_matrix(2)
    m = kron(y1.inv(), y1.inv()) * y2
    return sp.simplify(m[2 * i + k, 2 * j + l])


def to_sympy(c):
    """A printed QScalar as a sympy expression in s."""
    return sp.sympify(str(c).replace("^", "**").replace("q", "(s**4)"), locals={"s": s})


if __name__ == "__main__":
    print("Y1 =", y_matrix(1))
    for i, j, k, l in itertools.product((0, 1), repeat=4):
        print((i, j, k, l), sp.factor(cocycle_value(i, j, k, l)))
