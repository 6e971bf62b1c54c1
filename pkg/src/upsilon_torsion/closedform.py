"""Published closed forms for ``T(p, kp+1; 2, 1)``, used as test oracles.

Nothing here touches staircases or barcodes; the pieces are typed in from
the known answer and assembled on ``[0, 1]``, then mirrored to ``[0, 2]``.
"""

from __future__ import annotations

from fractions import Fraction as F

from .errors import PieceMismatch, UnsupportedP
from .pl import AffineFunction, PiecewiseLinearFunction

__all__ = ["closed_form_pieces", "upsilon_closed_form", "closed_orders"]


def closed_form_pieces(p: int) -> list[tuple[F, F, AffineFunction]]:
    """Pieces ``(lo, hi, fn)`` on ``[0, 1]``, including degenerate ones."""
    if p == 2:
        return [(F(0), F(1), AffineFunction(1, 0))]
    if p < 4:
        raise UnsupportedP(f"no closed form for p = {p}")
    pieces = [
        (F(0), F(2, p), AffineFunction(p - 1, 0)),
        (F(2, p), F(2, p - 2), AffineFunction(-1, 2)),
        (F(2, p - 2), F(4, p), AffineFunction(p - 3, 0)),
    ]
    for m in range(2, (p - 1) // 2 + 1):
        pieces.append((F(2 * m, p), F(2 * m, p - 1), AffineFunction(-m - 1, 2 * m)))
    for m in range(2, p // 2):
        pieces.append((F(2 * m, p - 1), F(2 * (m + 1), p), AffineFunction(p - 2 - m, 0)))
    return sorted(pieces, key=lambda pc: (pc[0], pc[1]))


def upsilon_closed_form(p: int) -> PiecewiseLinearFunction:
    pieces = closed_form_pieces(p)
    # Degenerate intervals only constrain the value at their single point.
    proper = [pc for pc in pieces if pc[0] < pc[1]]
    if proper[0][0] != 0 or proper[-1][1] != 1:
        raise PieceMismatch(f"pieces for p={p} do not cover [0, 1]")
    for (lo1, hi1, f1), (lo2, hi2, f2) in zip(proper, proper[1:]):
        if hi1 != lo2:
            raise PieceMismatch(f"pieces for p={p} leave a gap or overlap at {hi1}/{lo2}")
        if f1(hi1) != f2(lo2):
            raise PieceMismatch(f"p={p}: {f1} and {f2} disagree at t={hi1}")
    for lo, hi, fn in pieces:
        if lo == hi:
            for plo, phi, pf in proper:
                if plo <= lo <= phi and pf(lo) != fn(lo):
                    raise PieceMismatch(f"p={p}: degenerate piece {fn} at t={lo} disagrees with {pf}")

    bps = [proper[0][0]] + [hi for _, hi, _ in proper]
    vals = [proper[0][2](bps[0])] + [fn(hi) for _, hi, fn in proper]
    mirror_b = [2 - b for b in reversed(bps[:-1])]
    mirror_v = list(reversed(vals[:-1]))
    return PiecewiseLinearFunction(bps + mirror_b, vals + mirror_v)


def closed_orders(p: int) -> tuple[int, F | None]:
    """``(Ord, Ord')`` of ``T(p, kp+1; 2, 1)``; ``Ord'`` is ``None`` for ``p = 3``."""
    if p < 2:
        raise UnsupportedP(f"p must be >= 2, got {p}")
    if p == 2:
        return 1, F(1)
    if p == 3:
        return 2, None
    return p - 1, F((p - 2) // 2)
