"""
Alexander polynomials of twisted torus knots
============================================

Two independent routes to the Alexander polynomial of T(p, kp+1; 2, 1),
and the gap pattern of its exponents.
"""

from upsilon_torsion import (
    alexander_torus,
    alexander_twisted_closed,
    alexander_twisted_morton,
    expected_gap_pattern,
    gaps_from_alexander,
)

# The quotient of binomial products and the literal triple sum agree.
p, k = 5, 1
quotient = alexander_twisted_morton(p, k)
literal = alexander_twisted_closed(p, k)
print(f"T({p},{k * p + 1};2,1):", literal)
print("two derivations agree:", quotient == literal)
print("degree:", literal.degree, "= kp^2 - kp + 2 =", k * p * p - k * p + 2)

# Gaps of the exponents follow a block pattern.
print("gaps:         ", list(gaps_from_alexander(literal)))
print("block pattern:", list(expected_gap_pattern(p, k)))

# For p = 2 and p = 3 the knots are torus knots.
for k in range(1, 4):
    print(
        f"k={k}:",
        alexander_twisted_closed(2, k) == alexander_torus(2, 2 * k + 3),
        alexander_twisted_closed(3, k) == alexander_torus(3, 3 * k + 2),
    )
