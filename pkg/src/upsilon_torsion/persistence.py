"""Filtered reduction of a staircase complex at a fixed ``t``.

At a fixed ``t`` the filtration levels order the generators, and splitting
the complex by filtered changes of basis into one isolated generator plus
separate arrows is exactly the persistence pairing of the sublevel
filtration.  :func:`barcode_at` computes it by the standard column
reduction over F2; :func:`barcode_by_ranks` recomputes the same bars from
ranks of inclusion-induced maps on homology and shares no code with it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, ParameterOutOfRange
from .pl import as_fraction
from .staircase import StaircaseComplex, filtration_line

__all__ = ["Bar", "Barcode", "pairing", "barcode_at", "barcode_by_ranks", "max_finite_bar", "check_t"]


@dataclass(frozen=True)
class Bar:
    birth: Fraction
    death: Fraction | None  # None for the infinite bar
    birth_gen: int | None = None
    death_gen: int | None = None

    @property
    def length(self) -> Fraction | None:
        return None if self.death is None else self.death - self.birth


@dataclass(frozen=True)
class Barcode:
    finite_bars: tuple[Bar, ...]
    survivor: Bar

    def multiset(self, drop_zero: bool = True) -> Counter:
        """``(birth, death)`` counts, infinite bar included with death ``None``.

        Zero-length bars are invisible to homology ranks, so they are dropped
        by default to make barcodes from the two routes comparable.
        """
        out = Counter()
        for b in self.finite_bars:
            if drop_zero and b.birth == b.death:
                continue
            out[(b.birth, b.death)] += 1
        out[(self.survivor.birth, None)] += 1
        return out


def check_t(t) -> Fraction:
    t = as_fraction(t)
    if not 0 <= t <= 2:
        raise ParameterOutOfRange(f"t={t} outside [0, 2]")
    return t


def _levels(c: StaircaseComplex, t: Fraction) -> list[Fraction]:
    return [filtration_line(g)(t) for g in c.generators]


def pairing(c: StaircaseComplex, t) -> tuple[list[tuple[int, int]], int]:
    """Return ``([(birth_gen, death_gen), ...], survivor_gen)`` at ``t``.

    Generators are ordered by ``(FL, grading, index)``; putting grading 0
    first on ties keeps every boundary ahead of its source, so the order is
    a valid filtration even where an arrow has length zero.
    """
    t = check_t(t)
    num, den = t.numerator, t.denominator
    gens = c.generators
    # FL scaled by den, so the sort runs on ints.
    keys = [(2 * g.x * den + (g.y - g.x) * num, g.grading, g.index) for g in gens]
    order = sorted(range(len(gens)), key=keys.__getitem__)
    pos = [0] * len(gens)
    for k, gi in enumerate(order):
        pos[gi] = k
    bnd: dict[int, set[int]] = {}
    for src, tgt in c.arrows:
        bnd.setdefault(src, set()).symmetric_difference_update({pos[tgt]})

    pivot_of: dict[int, int] = {}  # lowest row position -> owning column
    reduced: dict[int, set[int]] = {}
    pairs: list[tuple[int, int]] = []
    unpaired_cols = []
    for gi in order:
        if gens[gi].grading != 1:
            continue
        col = set(bnd.get(gi, ()))
        while col:
            other = pivot_of.get(max(col))
            if other is None:
                break
            col ^= reduced[other]
        if col:
            low = max(col)
            pivot_of[low] = gi
            reduced[gi] = col
            pairs.append((order[low], gi))
        else:
            unpaired_cols.append(gi)
    if unpaired_cols:
        raise ConsistencyError(f"grading-1 generators {unpaired_cols} are cycles; not a staircase")

    paired = {b for b, _ in pairs}
    survivors = [i for i in order if gens[i].grading == 0 and i not in paired]
    if len(survivors) != 1:
        raise ConsistencyError(f"expected one surviving generator, found {len(survivors)}")
    return pairs, survivors[0]


def barcode_at(c: StaircaseComplex, t) -> Barcode:
    """Persistence barcode of the sublevel filtration of FL at ``t``.

    Computed by filtration-ordered column reduction over F2; see
    :func:`pairing` for the tie-breaking rule.
    """
    t = check_t(t)
    pairs, s = pairing(c, t)
    fl = _levels(c, t)
    bars = tuple(Bar(fl[b], fl[d], b, d) for b, d in pairs)
    return Barcode(bars, Bar(fl[s], None, s, None))


def _gf2_rank(vectors) -> int:
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top in basis:
                v ^= basis[top]
            else:
                basis[top] = v
                break
    return len(basis)


def barcode_by_ranks(c: StaircaseComplex, t) -> Barcode:
    """Bars from ranks of ``H_0(F_a) -> H_0(F_b)`` by inclusion-exclusion.

    Generator attribution is not recoverable this way, so ``birth_gen`` and
    ``death_gen`` are ``None`` and zero-length bars do not appear.
    """
    t = check_t(t)
    fl = _levels(c, t)
    values = sorted(set(fl))
    m = len(values)
    gens = c.generators
    bdry_vec = {}
    for src, tgt in c.arrows:
        bdry_vec[src] = bdry_vec.get(src, 0) ^ (1 << tgt)

    def cycles(v):
        return [1 << g.index for g in gens if g.grading == 0 and fl[g.index] <= v]

    def boundaries(v):
        return [bdry_vec.get(g.index, 0) for g in gens if g.grading == 1 and fl[g.index] <= v]

    if _gf2_rank(boundaries(values[-1])) != sum(g.grading for g in gens):
        raise ConsistencyError("differential is not injective on grading 1")

    b_rank = [_gf2_rank(boundaries(v)) for v in values]
    z = [cycles(v) for v in values]
    bd = [boundaries(v) for v in values]

    # rank[i][j] for 1-based i <= j; index 0 means the empty sublevel set.
    rank = [[0] * (m + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            rank[i][j] = _gf2_rank(z[i - 1] + bd[j - 1]) - b_rank[j - 1]

    finite = []
    survivor = None
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            mult = rank[i][j - 1] - rank[i - 1][j - 1] - rank[i][j] + rank[i - 1][j]
            if mult < 0:
                raise ConsistencyError("negative bar multiplicity")
            finite += [Bar(values[i - 1], values[j - 1])] * mult
        inf_mult = rank[i][m] - rank[i - 1][m]
        if inf_mult:
            if survivor is not None or inf_mult != 1:
                raise ConsistencyError("more than one infinite bar")
            survivor = Bar(values[i - 1], None)
    if survivor is None:
        raise ConsistencyError("no infinite bar")
    return Barcode(tuple(finite), survivor)


def max_finite_bar(b: Barcode) -> Fraction:
    return max((bar.death - bar.birth for bar in b.finite_bars), default=Fraction(0))
