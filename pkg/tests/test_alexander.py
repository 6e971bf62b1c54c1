import warnings

import pytest

from upsilon_torsion.alexander import (
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
from upsilon_torsion.errors import InvalidGaps, InvalidKnotSpec, NotLSpaceForm, OddGapSum
from upsilon_torsion.poly import IntPolynomial


def P(*coeffs):
    return IntPolynomial.from_dense(coeffs)


def from_exponents(exps):
    return IntPolynomial({e: (-1) ** i for i, e in enumerate(exps)})


def semigroup_alexander(p, q):
    """Oracle: Delta = (1 - t) * sum_{s in <p,q>, s < 2g} t^s + t^(2g)."""
    two_g = (p - 1) * (q - 1)
    members = {a * p + b * q for a in range(q) for b in range(p) if a * p + b * q < two_g}
    terms = {}
    for s in members:
        terms[s] = terms.get(s, 0) + 1
        terms[s + 1] = terms.get(s + 1, 0) - 1
    terms[two_g] = terms.get(two_g, 0) + 1
    return IntPolynomial(terms)


@pytest.mark.parametrize("p,q", [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5), (5, 6), (2, 7), (3, 7), (5, 8)])
def test_torus_against_semigroup_oracle(p, q):
    poly = alexander_torus(p, q)
    assert poly == semigroup_alexander(p, q)
    assert poly.degree == (p - 1) * (q - 1)


def test_torus_examples():
    assert alexander_torus(2, 3) == P(1, -1, 1)
    assert alexander_torus(2, 5) == P(1, -1, 1, -1, 1)
    assert alexander_torus(3, 4) == P(1, -1, 0, 1, 0, -1, 1)


def test_morton_examples():
    assert alexander_twisted_morton(3, 1) == from_exponents([0, 1, 3, 4, 5, 7, 8])
    assert alexander_twisted_morton(4, 1) == from_exponents([0, 1, 4, 5, 6, 7, 8, 9, 10, 13, 14])
    assert alexander_twisted_morton(5, 2).degree == 42
    with pytest.raises(InvalidKnotSpec):
        alexander_twisted_morton(2, 1)


def test_closed_examples():
    assert alexander_twisted_closed(2, 1) == P(1, -1, 1, -1, 1)
    assert alexander_twisted_closed(3, 1) == alexander_twisted_morton(3, 1)
    assert alexander_twisted_closed(6, 2) == alexander_twisted_morton(6, 2)


@pytest.mark.parametrize("p", range(3, 10))
@pytest.mark.parametrize("k", range(1, 5))
def test_two_derivations_agree(p, k):
    closed = alexander_twisted_closed(p, k)
    assert closed == alexander_twisted_morton(p, k)
    assert closed.degree == k * p * p - k * p + 2 == 2 * genus_from_spec(Twisted(p, k))


@pytest.mark.parametrize("p", range(2, 10))
@pytest.mark.parametrize("k", range(1, 5))
def test_gap_pattern_matches_polynomial(p, k):
    assert gaps_from_alexander(alexander_twisted_closed(p, k)) == expected_gap_pattern(p, k)


@pytest.mark.parametrize("k", range(1, 5))
def test_torus_identifications(k):
    assert alexander_twisted_closed(2, k) == alexander_torus(2, 2 * k + 3)
    assert alexander_twisted_closed(3, k) == alexander_torus(3, 3 * k + 2)


def test_gaps_from_alexander():
    assert gaps_from_alexander(P(1, -1, 1)) == (1, 1)
    assert gaps_from_alexander(alexander_twisted_closed(3, 1)) == (1, 2, 1, 1, 2, 1)
    with pytest.raises(NotLSpaceForm):
        gaps_from_alexander(P(1, 1, 1))
    with pytest.raises(NotLSpaceForm):
        gaps_from_alexander(P(1, -2, 1))
    with pytest.raises(NotLSpaceForm):
        gaps_from_alexander(from_exponents([0, 1, 3, 4]))  # not symmetric, even length
    with pytest.raises(NotLSpaceForm):
        gaps_from_alexander(from_exponents([0, 1, 2, 4, 5]))  # asymmetric
    with pytest.raises(NotLSpaceForm):
        gaps_from_alexander(P(-1, 1, -1))


def test_expected_gap_pattern_examples():
    assert expected_gap_pattern(2, 2) == (1, 1, 1, 1, 1, 1)
    assert expected_gap_pattern(3, 1) == (1, 2, 1, 1, 2, 1)
    assert expected_gap_pattern(4, 1) == (1, 3, 1, 1, 1, 1, 1, 1, 3, 1)


def test_genus():
    assert genus_from_spec(Twisted(4, 1)) == 7
    assert genus_from_spec(Torus(2, 3)) == 1
    assert genus_from_spec(Twisted(6, 2)) == 31
    with pytest.raises(OddGapSum):
        genus_from_spec([1, 2])


def test_gap_sequence_invariants():
    assert GapSequence([]) == ()
    with pytest.raises(InvalidGaps):
        GapSequence([1, 2, 1])
    with pytest.raises(InvalidGaps):
        GapSequence([1, 2])
    with pytest.raises(InvalidGaps):
        GapSequence([0, 0])


def test_alexander_from_gaps_round_trip():
    for p in range(2, 7):
        gaps = expected_gap_pattern(p, 2)
        assert gaps_from_alexander(alexander_from_gaps(gaps)) == gaps


def test_parse_knot():
    assert parse_knot("torus:2,3") == Torus(2, 3)
    assert parse_knot("twisted:6,1") == Twisted(6, 1)
    assert parse_knot("gaps:1,1").gaps() == (1, 1)
    assert parse_knot("alex:1,-1,1").alexander() == P(1, -1, 1)
    assert parse_knot("gaps:").gaps() == ()
    for bad in ["torus:3,6", "torus:3,2", "twisted:1,1", "twisted:3,0", "gaps:1,2",
                "alex:1,1,1", "foo:1", "torus", "torus:a,b", "torus:2,3,5"]:
        with pytest.raises(InvalidKnotSpec):
            parse_knot(bad)


def test_raw_alexander_normalization():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        spec = RawAlexander(P(-1, 1, -1))
    assert spec.alexander() == P(1, -1, 1)
    assert caught
    assert RawAlexander(P(0, 0, 1, -1, 1)).alexander() == P(1, -1, 1)


def test_spec_labels_round_trip():
    for text in ["torus:3,4", "twisted:5,2", "gaps:1,2,2,1", "alex:1,-1,0,1,0,-1,1"]:
        assert str(parse_knot(text)) == text
    assert RawGaps([1, 1]).alexander() == P(1, -1, 1)
