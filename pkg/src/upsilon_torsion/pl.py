"""Exact piecewise-linear functions over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DiscontinuityDetected, InvalidInput

__all__ = ["AffineFunction", "PiecewiseLinearFunction", "upper_envelope", "as_fraction"]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'a/b' string")
    return Fraction(x)


@dataclass(frozen=True)
class AffineFunction:
    """``intercept + slope * t`` with exact rational coefficients."""

    slope: Fraction
    intercept: Fraction

    def __post_init__(self):
        object.__setattr__(self, "slope", as_fraction(self.slope))
        object.__setattr__(self, "intercept", as_fraction(self.intercept))

    def __call__(self, t) -> Fraction:
        return self.intercept + self.slope * as_fraction(t)

    def __sub__(self, other: AffineFunction) -> AffineFunction:
        return AffineFunction(self.slope - other.slope, self.intercept - other.intercept)

    def __add__(self, other: AffineFunction) -> AffineFunction:
        return AffineFunction(self.slope + other.slope, self.intercept + other.intercept)

    def crossing(self, other: AffineFunction) -> Fraction | None:
        """The ``t`` where the two lines meet, or ``None`` if parallel."""
        ds = self.slope - other.slope
        if ds == 0:
            return None
        return (other.intercept - self.intercept) / ds

    def __str__(self) -> str:
        return _fmt_affine(self.slope, self.intercept)


def _fmt_affine(slope: Fraction, intercept: Fraction) -> str:
    if slope == 0:
        return str(intercept)
    s = "t" if slope == 1 else "-t" if slope == -1 else f"{slope}t"
    if intercept == 0:
        return s
    if s.startswith("-"):
        return f"{intercept} - {s[1:]}"
    return f"{intercept} + {s}"


def upper_envelope(fns: Sequence[AffineFunction], lo, hi) -> list[tuple[Fraction, Fraction, AffineFunction]]:
    """Pointwise maximum of ``fns`` on ``[lo, hi]``.

    Returns consecutive pieces ``(start, end, fn)`` covering the cell; the
    breakpoints are crossings of pairs of functions.
    """
    lo, hi = as_fraction(lo), as_fraction(hi)
    if not fns:
        raise InvalidInput("upper_envelope needs at least one function")
    if not lo < hi:
        raise InvalidInput(f"empty cell [{lo}, {hi}]")

    def top_at(t: Fraction, ahead: bool) -> AffineFunction:
        # Winner at t; ties broken by slope so the choice holds just past t.
        return max(fns, key=lambda f: (f(t), f.slope if ahead else -f.slope))

    pieces = []
    t = lo
    cur = top_at(t, ahead=True)
    while True:
        nxt = None
        for f in fns:
            if f.slope > cur.slope:
                c = cur.crossing(f)
                if t <= c < hi and (nxt is None or c < nxt[0] or (c == nxt[0] and f.slope > nxt[1].slope)):
                    nxt = (c, f)
        if nxt is None:
            pieces.append((t, hi, cur))
            break
        c, _ = nxt
        if c > t:
            pieces.append((t, c, cur))
        t = c
        cur = top_at(t, ahead=True)
    return pieces


class PiecewiseLinearFunction:
    """Continuous PL function given by breakpoints and values.

    Segments interpolate linearly between consecutive breakpoints.  The
    constructor drops breakpoints whose neighbours are collinear, so two
    equal functions always have identical breakpoint lists.
    """

    __slots__ = ("breakpoints", "values")

    def __init__(self, breakpoints: Iterable, values: Iterable):
        bps = [as_fraction(b) for b in breakpoints]
        vals = [as_fraction(v) for v in values]
        if len(bps) != len(vals) or len(bps) < 2:
            raise InvalidInput("need matching breakpoint/value lists of length >= 2")
        if any(b >= a for a, b in zip(bps[1:], bps)):
            raise InvalidInput("breakpoints must be strictly increasing")
        keep_b, keep_v = [bps[0]], [vals[0]]
        for i in range(1, len(bps) - 1):
            b0, v0 = keep_b[-1], keep_v[-1]
            b1, v1 = bps[i], vals[i]
            b2, v2 = bps[i + 1], vals[i + 1]
            if (v1 - v0) * (b2 - b1) != (v2 - v1) * (b1 - b0):
                keep_b.append(b1)
                keep_v.append(v1)
        keep_b.append(bps[-1])
        keep_v.append(vals[-1])
        self.breakpoints = tuple(keep_b)
        self.values = tuple(keep_v)

    @classmethod
    def from_pieces(cls, pieces: Sequence[tuple[Fraction, Fraction, AffineFunction]]) -> PiecewiseLinearFunction:
        """Stitch ``(start, end, fn)`` pieces, checking that they join up."""
        if not pieces:
            raise InvalidInput("no pieces")
        bps = [pieces[0][0]]
        vals = [pieces[0][2](pieces[0][0])]
        for start, end, fn in pieces:
            if start != bps[-1]:
                raise DiscontinuityDetected(f"gap in domain between {bps[-1]} and {start}")
            if fn(start) != vals[-1]:
                raise DiscontinuityDetected(
                    f"jump at t={start}: left value {vals[-1]}, right value {fn(start)}"
                )
            bps.append(end)
            vals.append(fn(end))
        return cls(bps, vals)

    @property
    def domain(self) -> tuple[Fraction, Fraction]:
        return self.breakpoints[0], self.breakpoints[-1]

    def segments(self) -> list[tuple[Fraction, Fraction, AffineFunction]]:
        out = []
        for (a, va), (b, vb) in zip(zip(self.breakpoints, self.values), zip(self.breakpoints[1:], self.values[1:])):
            slope = (vb - va) / (b - a)
            out.append((a, b, AffineFunction(slope, va - slope * a)))
        return out

    def __call__(self, t) -> Fraction:
        t = as_fraction(t)
        lo, hi = self.domain
        if not lo <= t <= hi:
            raise InvalidInput(f"t={t} outside [{lo}, {hi}]")
        for a, b, fn in self.segments():
            if t <= b:
                return fn(t)
        raise AssertionError("unreachable")

    def right_slope_at_start(self) -> Fraction:
        return self.segments()[0][2].slope

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PiecewiseLinearFunction):
            return NotImplemented
        return self.breakpoints == other.breakpoints and self.values == other.values

    def __hash__(self) -> int:
        return hash((self.breakpoints, self.values))

    def restrict(self, lo, hi) -> PiecewiseLinearFunction:
        lo, hi = as_fraction(lo), as_fraction(hi)
        inner = [b for b in self.breakpoints if lo < b < hi]
        pts = [lo, *inner, hi]
        return PiecewiseLinearFunction(pts, [self(b) for b in pts])

    def __repr__(self) -> str:
        pts = ", ".join(f"({b}, {v})" for b, v in zip(self.breakpoints, self.values))
        return f"PiecewiseLinearFunction([{pts}])"

    def __str__(self) -> str:
        return " | ".join(f"{fn} on [{a}, {b}]" for a, b, fn in self.segments())
