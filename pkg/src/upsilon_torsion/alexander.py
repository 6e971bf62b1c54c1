"""Alexander polynomials and exponent-gap sequences.

Twisted torus knots ``T(p, kp+1; 2, 1)`` get two unrelated derivations of
their Alexander polynomial: a quotient of binomial products
(:func:`alexander_twisted_morton`) and a literal triple sum
(:func:`alexander_twisted_closed`).  Neither calls the other, so agreement
between them is evidence that both are transcribed correctly.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import InvalidGaps, InvalidKnotSpec, NotLSpaceForm, OddGapSum
from .poly import IntPolynomial, exact_div, mul, one_minus_t_pow

__all__ = [
    "GapSequence",
    "Torus",
    "Twisted",
    "RawGaps",
    "RawAlexander",
    "KnotSpec",
    "parse_knot",
    "alexander_torus",
    "alexander_twisted_morton",
    "alexander_twisted_closed",
    "alexander_from_gaps",
    "gaps_from_alexander",
    "expected_gap_pattern",
    "genus_from_spec",
]


class GapSequence(tuple):
    """Successive exponent differences of an L-space Alexander polynomial.

    A validated tuple: positive entries, even length, palindromic.
    """

    def __new__(cls, gaps: Iterable[int] = ()):
        gaps = tuple(gaps)
        for a in gaps:
            if not isinstance(a, int) or isinstance(a, bool) or a < 1:
                raise InvalidGaps(f"gap entries must be positive integers, got {a!r}")
        if len(gaps) % 2:
            raise InvalidGaps(f"gap sequence has odd length {len(gaps)}")
        if gaps != gaps[::-1]:
            raise InvalidGaps(f"gap sequence {list(gaps)} is not palindromic")
        return super().__new__(cls, gaps)

    def __repr__(self) -> str:
        return f"GapSequence({list(self)})"


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidKnotSpec(msg)


def _check_torus(p: int, q: int) -> None:
    _require(2 <= p < q, f"torus knot needs 2 <= p < q, got ({p}, {q})")
    _require(math.gcd(p, q) == 1, f"torus knot needs gcd(p, q) = 1, got ({p}, {q})")


def _check_twisted(p: int, k: int) -> None:
    _require(p >= 2 and k >= 1, f"twisted torus knot needs p >= 2, k >= 1, got ({p}, {k})")


# -- polynomials -----------------------------------------------------------


def alexander_torus(p: int, q: int) -> IntPolynomial:
    """``(1 - t)(1 - t^pq) / ((1 - t^p)(1 - t^q))``."""
    _check_torus(p, q)
    num = mul(one_minus_t_pow(1), one_minus_t_pow(p * q))
    den = mul(one_minus_t_pow(p), one_minus_t_pow(q))
    return exact_div(num, den)


def alexander_twisted_morton(p: int, k: int) -> IntPolynomial:
    """Quotient form for ``T(p, kp+1; 2, 1)``, valid for ``p >= 3``.

    ``(1-t) / ((1-t^p)(1-t^q)) * (1 - (1-t)(t^((p-1)q+1) + t^q) - t^(pq+2))``
    with ``q = kp + 1``.
    """
    _check_twisted(p, k)
    if p < 3:
        raise InvalidKnotSpec("the quotient form needs p >= 3")
    q = k * p + 1
    one = IntPolynomial({0: 1})
    inner = IntPolynomial({(p - 1) * q + 1: 1, q: 1})
    second = one - mul(one_minus_t_pow(1), inner) - IntPolynomial({p * q + 2: 1})
    num = mul(one_minus_t_pow(1), second)
    den = mul(one_minus_t_pow(p), one_minus_t_pow(q))
    return exact_div(num, den)


def alexander_twisted_closed(p: int, k: int) -> IntPolynomial:
    """Literal sum ``1 + A + B + C`` (``p >= 3``) or the alternating sum (``p = 2``)."""
    _check_twisted(p, k)
    terms: list[tuple[int, int]] = [(0, 1)]
    if p == 2:
        terms += [(e, (-1) ** e) for e in range(1, 2 * k + 3)]
        return IntPolynomial(terms)

    # A
    for i in range(1, k + 1):
        s = (i - 1) * p
        terms += [(1 + s, -1), (p + s, 1)]
    # B
    for i in range(1, p - 2):
        for j in range(1, k + 1):
            s = (j - 1) * p
            base = i * k * p
            terms += [
                (base + 1 + s, -1),
                (base + 2 + s, 1),
                (base + 2 + i + s, -1),
                ((i * k + 1) * p + s, 1),
            ]
    # C
    base = k * p * (p - 2)
    for i in range(1, k + 2):
        s = (i - 1) * p
        terms += [(base + 1 + s, -1), (base + 2 + s, 1)]
    return IntPolynomial(terms)


def alexander_from_gaps(gaps: Iterable[int]) -> IntPolynomial:
    """Rebuild the alternating polynomial whose exponent gaps are ``gaps``."""
    e, sign = 0, 1
    terms = {0: 1}
    for a in gaps:
        e += a
        sign = -sign
        terms[e] = sign
    return IntPolynomial(terms)


# -- gaps ------------------------------------------------------------------


def gaps_from_alexander(poly: IntPolynomial) -> GapSequence:
    """Exponent gaps of an L-space-form Alexander polynomial.

    Raises :class:`NotLSpaceForm` unless the coefficients are ``+1, -1, +1,
    ..., +1`` along increasing exponents, starting at a constant term ``+1``
    and ending at ``+1``, with a palindromic exponent set.
    """
    if poly.is_zero():
        raise NotLSpaceForm("zero polynomial")
    terms = poly.terms
    if terms.get(0) != 1:
        raise NotLSpaceForm(f"constant term must be +1 in {poly}")
    exps = sorted(terms)
    for idx, e in enumerate(exps):
        want = 1 if idx % 2 == 0 else -1
        if terms[e] != want:
            if abs(terms[e]) != 1:
                raise NotLSpaceForm(f"coefficient {terms[e]} of t^{e} is not +-1")
            raise NotLSpaceForm(f"coefficients do not alternate at t^{e} in {poly}")
    if len(exps) % 2 == 0:
        raise NotLSpaceForm(f"{poly} has an even number of terms (leading coefficient -1)")
    deg = exps[-1]
    if [deg - e for e in reversed(exps)] != exps:
        raise NotLSpaceForm(f"exponent set of {poly} is not symmetric")
    return GapSequence(b - a for a, b in zip(exps, exps[1:]))


def expected_gap_pattern(p: int, k: int) -> GapSequence:
    """Gap pattern of ``T(p, kp+1; 2, 1)``.

    ``(1,p-1)^k, (1,1,1,p-3)^k, ..., (1,1,p-3,1)^k, 1, 1, (p-1,1)^k`` for
    ``p >= 3`` and ``1^(2k+2)`` for ``p = 2``.
    """
    _check_twisted(p, k)
    if p == 2:
        return GapSequence([1] * (2 * k + 2))
    out = [1, p - 1] * k
    for j in range(1, p - 2):
        out += [1, 1, j, p - 2 - j] * k
    out += [1, 1]
    out += [p - 1, 1] * k
    return GapSequence(out)


# -- knot specs ------------------------------------------------------------


@dataclass(frozen=True)
class Torus:
    p: int
    q: int

    def __post_init__(self):
        _check_torus(self.p, self.q)

    def alexander(self) -> IntPolynomial:
        return alexander_torus(self.p, self.q)

    def gaps(self) -> GapSequence:
        return gaps_from_alexander(self.alexander())

    def __str__(self) -> str:
        return f"torus:{self.p},{self.q}"


@dataclass(frozen=True)
class Twisted:
    p: int
    k: int

    def __post_init__(self):
        _check_twisted(self.p, self.k)

    def alexander(self) -> IntPolynomial:
        return alexander_twisted_closed(self.p, self.k)

    def gaps(self) -> GapSequence:
        return gaps_from_alexander(self.alexander())

    def __str__(self) -> str:
        return f"twisted:{self.p},{self.k}"


@dataclass(frozen=True)
class RawGaps:
    gap_seq: GapSequence

    def __post_init__(self):
        if not isinstance(self.gap_seq, GapSequence):
            object.__setattr__(self, "gap_seq", GapSequence(self.gap_seq))

    def alexander(self) -> IntPolynomial:
        return alexander_from_gaps(self.gap_seq)

    def gaps(self) -> GapSequence:
        return self.gap_seq

    def __str__(self) -> str:
        return "gaps:" + ",".join(map(str, self.gap_seq))


@dataclass(frozen=True)
class RawAlexander:
    poly: IntPolynomial

    def __post_init__(self):
        poly = self.poly
        if poly.is_zero():
            raise InvalidKnotSpec("Alexander polynomial is zero")
        if poly.low_degree > 0:
            poly = poly.shift(-poly.low_degree)
        if poly.coeff(0) == -1:
            warnings.warn(f"negating Alexander polynomial {poly} to get constant term +1")
            poly = -poly
        object.__setattr__(self, "poly", poly)
        # L-space form is mandatory for the staircase model.
        gaps_from_alexander(poly)

    def alexander(self) -> IntPolynomial:
        return self.poly

    def gaps(self) -> GapSequence:
        return gaps_from_alexander(self.poly)

    def __str__(self) -> str:
        return "alex:" + self.poly.dumps()


KnotSpec = Union[Torus, Twisted, RawGaps, RawAlexander]


def _ints(body: str, field: str) -> list[int]:
    if body.strip() == "":
        return []
    try:
        return [int(s) for s in body.split(",")]
    except ValueError:
        raise InvalidKnotSpec(f"{field}: expected comma-separated integers, got {body!r}") from None


def parse_knot(text: str) -> KnotSpec:
    """Parse ``torus:p,q``, ``twisted:p,k``, ``gaps:a1,...`` or ``alex:c0,...``."""
    kind, sep, body = text.strip().partition(":")
    if not sep:
        raise InvalidKnotSpec(f"knot: missing ':' in {text!r}")
    kind = kind.lower()
    if kind in ("torus", "twisted"):
        vals = _ints(body, kind)
        if len(vals) != 2:
            raise InvalidKnotSpec(f"{kind}: expected two integers, got {body!r}")
        return Torus(*vals) if kind == "torus" else Twisted(*vals)
    if kind == "gaps":
        try:
            return RawGaps(GapSequence(_ints(body, kind)))
        except InvalidGaps as exc:
            raise InvalidKnotSpec(f"gaps: {exc}") from None
    if kind == "alex":
        try:
            return RawAlexander(IntPolynomial.from_dense(_ints(body, kind)))
        except NotLSpaceForm as exc:
            raise InvalidKnotSpec(f"alex: {exc}") from None
    raise InvalidKnotSpec(f"knot: unknown kind {kind!r}")


def genus_from_spec(spec: KnotSpec | Iterable[int]) -> int:
    """Half the gap sum; for ``Twisted(p, k)`` this is ``(kp^2 - kp + 2) / 2``."""
    gaps = spec.gaps() if hasattr(spec, "gaps") else list(spec)
    total = sum(gaps)
    if total % 2:
        raise OddGapSum(f"gap sum {total} is odd")
    return total // 2
