from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from upsilon_torsion.errors import DiscontinuityDetected, InvalidInput
from upsilon_torsion.pl import AffineFunction as A
from upsilon_torsion.pl import PiecewiseLinearFunction, upper_envelope


def test_envelope_examples():
    pieces = upper_envelope([A(-1, 2), A(3, 0)], F(1, 3), F(2, 3))
    assert pieces == [(F(1, 3), F(1, 2), A(-1, 2)), (F(1, 2), F(2, 3), A(3, 0))]
    assert upper_envelope([A(1, 0)], 0, 1) == [(0, 1, A(1, 0))]
    assert upper_envelope([A(0, 0), A(1, -1)], 0, 2) == [(0, 1, A(0, 0)), (1, 2, A(1, -1))]


def test_envelope_ties_and_duplicates():
    pieces = upper_envelope([A(1, 0), A(1, 0), A(-1, 2), A(0, 1)], 0, 2)
    assert pieces == [(0, 1, A(-1, 2)), (1, 2, A(1, 0))]


def test_envelope_rejects_bad_input():
    with pytest.raises(InvalidInput):
        upper_envelope([], 0, 1)
    with pytest.raises(InvalidInput):
        upper_envelope([A(1, 0)], 1, 1)


lines = st.builds(A, st.integers(-6, 6), st.integers(-8, 8))


@given(st.lists(lines, min_size=1, max_size=8))
def test_envelope_matches_brute_force(fns):
    pieces = upper_envelope(fns, 0, 2)
    u = PiecewiseLinearFunction.from_pieces(pieces)
    for i in range(0, 97):
        t = F(2 * i, 96)
        assert u(t) == max(f(t) for f in fns)
    for b in u.breakpoints:
        assert u(b) == max(f(b) for f in fns)


def test_pl_minimal_and_eval():
    u = PiecewiseLinearFunction([0, 1, 2, 3], [0, 1, 2, 0])
    assert u.breakpoints == (0, 2, 3)
    assert u(F(1, 2)) == F(1, 2)
    assert u(F(5, 2)) == 1
    assert u.right_slope_at_start() == 1
    with pytest.raises(InvalidInput):
        u(4)


def test_pl_equality_ignores_redundant_points():
    assert PiecewiseLinearFunction([0, 1, 2], [0, 1, 2]) == PiecewiseLinearFunction([0, 2], [0, 2])


def test_from_pieces_detects_jump():
    with pytest.raises(DiscontinuityDetected):
        PiecewiseLinearFunction.from_pieces([(F(0), F(1), A(1, 0)), (F(1), F(2), A(0, 0))])


def test_floats_refused():
    with pytest.raises(TypeError):
        A(0.5, 0)
