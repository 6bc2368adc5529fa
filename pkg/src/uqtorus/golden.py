"""Printed rank-one reference values, as expressions in the CLI grammar.

The engine never reads these; they are compared against computed values by
the verification suites and the tests.
"""

LPLUS = {
    "x11": "K[-1/2]",
    "x12": "0",
    "x21": "Ehat*K[-1/2]",
    "x22": "K[1/2]",
}

LMINUS_PRIME = {
    "x11": "K[-1/2]",
    "x12": "Fhat*K[1/2]",
    "x21": "0",
    "x22": "K[1/2]",
}

J = {
    "x11": "K^-1",
    "x12": "q*Fhat",
    "x21": "Ehat*K^-1",
    "x22": "K + q*Ehat*Fhat",
}

ZETA = {
    "x11": "(1 + q^-1*Ehat*K^-1 # Fhat)*t",
    "x12": "-q*(K^-1 # Fhat)*t",
    "x21": "(Ehat # 1 + q^-1*Ehat^2*K^-1 # Fhat)*t - (Ehat # 1)*t^-1",
    "x22": "-q*(Ehat*K^-1 # Fhat)*t + t^-1",
}

IOTA_Y = {
    "x11": "-q^(-3/4)*x21",
    "x21": "q^(-3/4)*x11",
    "x12": "-q^(-3/4)*x22",
    "x22": "q^(-3/4)*x12",
}

IMAP = {
    "x11": "K[-1/2] # K[-1/2]",
    "x21": "Ehat*K[-1/2] # K[-1/2]",
    "x12": "K[-1/2] # Fhat*K[1/2]",
    "x22": "K[1/2] # K[1/2] + Ehat*K[-1/2] # Fhat*K[1/2]",
}

# sources are U_q expressions, targets live in O_q(SL2)[x21^-1] with central t
PHI = {
    "K^-1": "-q*x12*x21*t",
    "Fhat": "-q^2*x22*x21*t",
    "Ehat*K^-1": "q*x11*x12*t + x11*x21^-1*t^-1",
}

# images of K^(1/2), Fhat, Ehat in A'
PHI_PRIME = {
    "Kh": "v^(1/2)*z^(-1/2)",
    "Fh": "u*z",
    "Eh": "z^-1*u^-1*(q*v^(1/2) - q^-1*v^(-1/2))*(v^(-1/2)*z - v^(1/2)*z^-1)",
}

# the substitution identifying A with a torus inside O_q(SL2)[x12^-1, x21^-1] ⊗ T
A_SUBSTITUTION = {
    "u": "-q^2*x22*x21",
    "v": "-q^-1*x12^-1*x21^-1",
    "z": "t",
}
