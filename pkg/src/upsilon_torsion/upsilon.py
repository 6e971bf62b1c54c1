"""The Upsilon torsion function on ``[0, 2]`` and the two torsion orders.

The sweep splits ``[0, 2]`` at every ``t`` where two filtration lines
cross.  Inside such a cell the order of the filtration levels is fixed, so
the persistence pairing is fixed and every bar length is one affine
function of ``t``.  The function on the cell is the upper envelope of those
lines; cells are stitched with a continuity check at each junction.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ConsistencyError, NonzeroAtOrigin
from .persistence import pairing
from .pl import AffineFunction, PiecewiseLinearFunction, upper_envelope
from .staircase import StaircaseComplex, filtration_line

__all__ = [
    "TorsionOrders",
    "critical_values",
    "bar_lines_at",
    "upsilon_torsion",
    "extract_orders",
    "ord_from_longest_gap",
    "upper_envelope",
]

ZERO = Fraction(0)
TWO = Fraction(2)


@dataclass(frozen=True)
class TorsionOrders:
    ord: int
    ord_prime: Fraction

    @property
    def ord_prime_is_integral(self) -> bool:
        return self.ord_prime.denominator == 1


def critical_values(c: StaircaseComplex) -> list[Fraction]:
    """Every ``t`` in ``(0, 2)`` where two distinct filtration lines meet."""
    lines = sorted({(l.slope, l.intercept) for l in map(filtration_line, c.generators)})
    out = set()
    for i, (s1, b1) in enumerate(lines):
        for s2, b2 in lines[i + 1:]:
            if s1 == s2:
                continue
            t = (b2 - b1) / (s1 - s2)
            if ZERO < t < TWO:
                out.add(t)
    return sorted(out)


def bar_lines_at(c: StaircaseComplex, t) -> list[AffineFunction]:
    """Distinct bar-length lines at ``t``, from the pairing found at ``t``."""
    gens = c.generators
    lines = set()
    for b, d in pairing(c, t)[0]:
        gb, gd = gens[b], gens[d]
        lines.add(((gd.y - gd.x) - (gb.y - gb.x), 2 * (gd.x - gb.x)))
    return [AffineFunction(s, i) for s, i in sorted(lines)]


def upsilon_torsion(c: StaircaseComplex) -> PiecewiseLinearFunction:
    cuts = [ZERO, *critical_values(c), TWO]
    pieces = []
    for lo, hi in zip(cuts, cuts[1:]):
        lines = bar_lines_at(c, (lo + hi) / 2) or [AffineFunction(0, 0)]
        pieces += upper_envelope(lines, lo, hi)
    return PiecewiseLinearFunction.from_pieces(pieces)


def extract_orders(u: PiecewiseLinearFunction) -> TorsionOrders:
    """``Ord`` is the right derivative at 0, ``Ord'`` the value at 1."""
    if u(0) != 0:
        raise NonzeroAtOrigin(f"Upsilon torsion function is {u(0)} at t=0")
    slope = u.right_slope_at_start()
    if slope.denominator != 1:
        raise ConsistencyError(f"initial slope {slope} is not an integer")
    ord_prime = u(1)
    if ord_prime.denominator != 1:
        warnings.warn(f"value at t=1 is {ord_prime}, not an integer; input is not a knot")
    return TorsionOrders(int(slope), ord_prime)


def ord_from_longest_gap(gaps: Sequence[int]) -> int:
    return max(gaps, default=0)
