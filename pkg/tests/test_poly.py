import pytest
from hypothesis import given, strategies as st

from upsilon_torsion.errors import DivisionByZero, InvalidInput, NonZeroRemainder
from upsilon_torsion.poly import IntPolynomial, add, exact_div, mul, one_minus_t_pow


def P(*coeffs):
    return IntPolynomial.from_dense(coeffs)


ZERO = IntPolynomial()

small_polys = st.lists(st.integers(-5, 5), max_size=7).map(IntPolynomial.from_dense)


def test_add_examples():
    assert add(P(1, -1), P(0, 1)) == P(1)
    assert add(ZERO, P(3, 0, 1)) == P(3, 0, 1)
    assert add(P(1, 0, 1), P(1, 0, 1)) == P(2, 0, 2)


def test_mul_examples():
    assert mul(P(1, -1), P(1, 1)) == P(1, 0, -1)
    assert mul(P(1, -1), ZERO) == ZERO
    assert mul(P(1, -1), P(1, 1, 1)) == P(1, 0, 0, -1)


def test_exact_div_examples():
    assert exact_div(P(1, 0, 0, -1), P(1, -1)) == P(1, 1, 1)
    num = mul(one_minus_t_pow(1), one_minus_t_pow(10))
    den = mul(one_minus_t_pow(2), one_minus_t_pow(5))
    assert exact_div(num, den) == P(1, -1, 1, -1, 1)
    with pytest.raises(NonZeroRemainder):
        exact_div(P(1, 0, -1), P(1, 0, 0, -1))
    with pytest.raises(DivisionByZero):
        exact_div(P(1), ZERO)


def test_exact_div_non_monic_remainder():
    with pytest.raises(NonZeroRemainder):
        exact_div(P(1, 1), P(0, 2))
    assert exact_div(P(0, 6), P(0, 2)) == P(3)


def test_one_minus_t_pow():
    assert one_minus_t_pow(1) == P(1, -1)
    assert one_minus_t_pow(2) == P(1, 0, -1)
    assert one_minus_t_pow(12) == IntPolynomial({0: 1, 12: -1})
    with pytest.raises(InvalidInput):
        one_minus_t_pow(0)


def test_zero_representation():
    assert ZERO.terms == {}
    assert ZERO.degree == -1
    assert P(0, 0, 0) == ZERO
    assert (P(1, 2) - P(1, 2)).terms == {}


def test_parse_and_dump():
    p = IntPolynomial.parse("1, -1, 0, 1")
    assert p == IntPolynomial({0: 1, 1: -1, 3: 1})
    assert p.dumps() == "1,-1,0,1"
    with pytest.raises(InvalidInput):
        IntPolynomial.parse("1,,2")
    with pytest.raises(InvalidInput):
        IntPolynomial.parse("1,x")


def test_exponent_checks():
    with pytest.raises(InvalidInput):
        IntPolynomial({-1: 1})
    with pytest.raises(OverflowError):
        IntPolynomial({2**63: 1})


def test_str():
    assert str(P(1, -1, 1)) == "1 - t + t^2"
    assert str(P(0, -2)) == "-2t"


@given(small_polys, small_polys)
def test_div_round_trip(a, b):
    if b.is_zero():
        return
    assert exact_div(mul(a, b), b) == a


@given(small_polys, small_polys, small_polys)
def test_mul_commutative_associative(a, b, c):
    assert mul(a, b) == mul(b, a)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))


@given(small_polys, small_polys)
def test_canonical_terms(a, b):
    for r in (add(a, b), mul(a, b)):
        assert all(c != 0 for c in r.terms.values())
    if not a.is_zero() and not b.is_zero():
        assert mul(a, b).degree == a.degree + b.degree
