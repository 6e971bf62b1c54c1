"""Sparse integer polynomials in one variable ``t``.

Only what the Alexander-polynomial formulas need: ring operations, exact
division with a remainder check, and the dense ``"c0,c1,...,cn"`` text form.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import DivisionByZero, InvalidInput, NonZeroRemainder

__all__ = [
    "IntPolynomial",
    "add",
    "mul",
    "exact_div",
    "one_minus_t_pow",
    "monomial",
]

MAX_EXPONENT = 2**63 - 1


def _check_exponent(e: int) -> int:
    if not isinstance(e, int) or isinstance(e, bool):
        raise TypeError(f"exponent must be an int, got {e!r}")
    if e < 0:
        raise InvalidInput(f"negative exponent {e}")
    if e > MAX_EXPONENT:
        raise OverflowError(f"exponent {e} exceeds 64-bit range")
    return e


class IntPolynomial:
    """Immutable polynomial with integer coefficients.

    Stored sparsely as ``{exponent: coefficient}``; zero coefficients are
    never kept, so the zero polynomial has an empty term map.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            e = _check_exponent(e)
            acc[e] = acc.get(e, 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c != 0}
        self._hash = None

    @classmethod
    def from_dense(cls, coeffs: Iterable[int]) -> IntPolynomial:
        return cls(enumerate(coeffs))

    @classmethod
    def parse(cls, text: str) -> IntPolynomial:
        """Parse the dense form ``"c0,c1,...,cn"`` (lowest exponent first)."""
        parts = [s.strip() for s in text.split(",")]
        if not parts or any(s == "" for s in parts):
            raise InvalidInput(f"malformed coefficient list {text!r}")
        try:
            return cls.from_dense(int(s) for s in parts)
        except ValueError:
            raise InvalidInput(f"non-integer coefficient in {text!r}") from None

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def exponents(self) -> list[int]:
        return list(self._terms)

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Largest exponent; ``-1`` for the zero polynomial."""
        return max(self._terms) if self._terms else -1

    @property
    def low_degree(self) -> int:
        return min(self._terms) if self._terms else -1

    def leading_coeff(self) -> int:
        return self._terms[self.degree] if self._terms else 0

    def to_dense(self) -> list[int]:
        return [self._terms.get(e, 0) for e in range(self.degree + 1)]

    def dumps(self) -> str:
        return ",".join(str(c) for c in self.to_dense()) if self._terms else "0"

    def shift(self, n: int) -> IntPolynomial:
        """Multiply by ``t**n`` (``n`` may be negative if it stays a polynomial)."""
        return IntPolynomial({e + n: c for e, c in self._terms.items()})

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial({e: -c for e, c in self._terms.items()})

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return add(self, -other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __call__(self, t):
        return sum(c * t**e for e, c in self._terms.items())

    def __repr__(self) -> str:
        return f"IntPolynomial({self._terms!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for e, c in self._terms.items():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("t" if e == 1 else f"t^{e}")
            sign = "-" if c < 0 else "+"
            out.append((sign, body))
        first_sign, first_body = out[0]
        text = ("-" if first_sign == "-" else "") + first_body
        return text + "".join(f" {s} {b}" for s, b in out[1:])


def monomial(e: int, c: int = 1) -> IntPolynomial:
    return IntPolynomial({e: c})


def add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    terms = a.terms
    for e, c in b._terms.items():
        terms[e] = terms.get(e, 0) + c
    return IntPolynomial(terms)


def mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    terms: dict[int, int] = {}
    for ea, ca in a._terms.items():
        for eb, cb in b._terms.items():
            e = _check_exponent(ea + eb)
            terms[e] = terms.get(e, 0) + ca * cb
    return IntPolynomial(terms)


def exact_div(num: IntPolynomial, den: IntPolynomial) -> IntPolynomial:
    """Return ``q`` with ``q * den == num``.

    Raises :class:`NonZeroRemainder` when no such integer polynomial exists.
    """
    if den.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    rem = num.terms
    dterms = den.terms
    dlead_e = den.degree
    dlead_c = dterms[dlead_e]
    quot: dict[int, int] = {}
    while rem:
        top = max(rem)
        if top < dlead_e:
            break
        c = rem[top]
        if c % dlead_c:
            break
        qc = c // dlead_c
        shift = top - dlead_e
        quot[shift] = qc
        for e, dc in dterms.items():
            k = e + shift
            v = rem.get(k, 0) - qc * dc
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    if rem:
        raise NonZeroRemainder(
            f"({IntPolynomial(num.terms)}) is not divisible by ({den})"
        )
    return IntPolynomial(quot)


def one_minus_t_pow(n: int) -> IntPolynomial:
    """The binomial ``1 - t**n`` for ``n >= 1``."""
    if n < 1:
        raise InvalidInput(f"one_minus_t_pow needs n >= 1, got {n}")
    return IntPolynomial({0: 1, n: -1})
