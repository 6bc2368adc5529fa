"""The rank-one embedding: Phi on K^-1, F^, E^K^-1, the derived Phi' into the
torus A', its relation residuals, and two central-character quotients."""
from uqtorus import maps
from uqtorus.scalar import q_power

for src, u in maps.phi_generators().items():
    print(f"Phi({src}) = {maps.phi_map(u)}")
print()

a = maps.phi_prime()
for g in ("Kh", "Fh", "Eh"):
    print(f"Phi'({g}) = {a.images[g]}")
print()

print(maps.verify_homomorphism(a))
print(maps.verify_homomorphism(maps.mutated_phi_prime()))
print()

for chi in (1, q_power(1)):
    b = maps.central_character_quotient(chi)
    print(f"t = {chi}: Kh -> {b.images['Kh']}, Fh -> {b.images['Fh']}, ok = {maps.verify_homomorphism(b).ok}")
