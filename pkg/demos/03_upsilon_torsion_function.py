"""
The Upsilon torsion function
============================

Compute the function exactly on [0, 2], compare it with the closed form,
and read off the two torsion orders.
"""

from upsilon_torsion import (
    Twisted,
    extract_orders,
    parse_knot,
    upsilon_closed_form,
    upsilon_of,
)

for p in (4, 5, 6, 7):
    u = upsilon_of(Twisted(p, 1))
    print(f"p={p}:", u.restrict(0, 1))
    print("   matches closed form:", u == upsilon_closed_form(p), "| orders:", extract_orders(u))

# The function does not change with k.
print("k-independent for p=6:", len({upsilon_of(Twisted(6, k)) for k in (1, 2, 3)}) == 1)

# Any L-space gap sequence works, not only the twisted family.
u = upsilon_of(parse_knot("gaps:1,3,2,2,3,1"))
print("gaps:1,3,2,2,3,1 ->", u.restrict(0, 1))

# Evaluation is exact; convert to float only for plotting.
samples = [(k / 50, float(u(f"{k}/50"))) for k in range(0, 101, 10)]
print(samples)
