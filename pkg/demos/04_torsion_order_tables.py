"""
Torsion order tables
====================

Tabulate Ord and Ord' for the twisted family and for torus knots
T(p, p+1), the latter giving floor(p/2).
"""

from upsilon_torsion import Torus, Twisted, extract_orders, upsilon_of

print(" p  k  Ord  Ord'")
for p in range(2, 10):
    for k in (1, 2):
        o = extract_orders(upsilon_of(Twisted(p, k)))
        print(f"{p:2d} {k:2d} {o.ord:4d} {str(o.ord_prime):>5}")

print()
print("T(p,p+1):", [(p, str(extract_orders(upsilon_of(Torus(p, p + 1))).ord_prime)) for p in range(2, 9)])
