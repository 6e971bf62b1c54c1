"""Upsilon torsion function and torsion orders of L-space knots.

Typical use::

    >>> from upsilon_torsion import parse_knot, upsilon_of, extract_orders
    >>> u = upsilon_of(parse_knot("twisted:6,1"))
    >>> extract_orders(u)
    TorsionOrders(ord=5, ord_prime=Fraction(2, 1))
"""

from .alexander import (
    GapSequence,
    RawAlexander,
    RawGaps,
    Torus,
    Twisted,
    alexander_from_gaps,
    alexander_torus,
    alexander_twisted_closed,
    alexander_twisted_morton,
    expected_gap_pattern,
    gaps_from_alexander,
    genus_from_spec,
    parse_knot,
)
from .closedform import closed_orders, upsilon_closed_form
from .persistence import Bar, Barcode, barcode_at, barcode_by_ranks, max_finite_bar
from .pl import AffineFunction, PiecewiseLinearFunction, upper_envelope
from .poly import IntPolynomial, exact_div, one_minus_t_pow
from .staircase import Generator, StaircaseComplex, filtration_line, staircase_from_gaps, validate_staircase
from .upsilon import TorsionOrders, critical_values, extract_orders, ord_from_longest_gap, upsilon_torsion

__version__ = "0.1.0"


def staircase_of(spec) -> StaircaseComplex:
    return staircase_from_gaps(spec.gaps())


def upsilon_of(spec) -> PiecewiseLinearFunction:
    return upsilon_torsion(staircase_of(spec))
