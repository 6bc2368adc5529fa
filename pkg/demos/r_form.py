"""The r-form on matrix coefficients of the fundamental module, compared with
the cocycle (Y^-1 (x) Y^-1) Delta(Y) built from the braid operator."""
import itertools

from uqtorus import maps, oq

print("Y on V =")
print(maps.y_functional(1).y)
print()
for idx in itertools.product((0, 1), repeat=4):
    lhs, rhs = maps.cocycle_sides(*idx)
    i, j, k, l = (n + 1 for n in idx)
    mark = "ok" if lhs == rhs else "MISMATCH"
    print(f"r(x{i}{j}, x{k}{l}) = {lhs}   cocycle = {rhs}   {mark}")
print()
print("sign exponent <2 omega, rho^vee> =", maps.infer_rho_vee_pairing())
print("quantum trace:", oq.quantum_trace())
print("xi(trace) =", maps.xi(oq.quantum_trace()))
