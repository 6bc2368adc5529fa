"""Compute the rank-one tables of l-operators, J, zeta, iota_Y and I from
their Sweedler formulas and print them."""
from uqtorus import maps, oq
from uqtorus.oq import OQ

TABLES = [
    ("l+", oq.lplus),
    ("'l-", oq.lminus_prime),
    ("J", maps.jmap),
    ("zeta", maps.zeta),
    ("iota_Y", maps.iota_y),
    ("I", maps.imap),
]

for label, fn in TABLES:
    print(label)
    for name in oq.GEN_NAMES:
        print(f"  {name:4s} -> {fn(OQ.gen(name))}")
    print()
