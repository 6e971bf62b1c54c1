"""Staircase complexes of L-space knots.

The walk starts at ``(0, g)``, alternately steps right and down by the gap
lengths, and ends at ``(g, 0)``.  Every vertex of the walk is a generator.
Even positions have grading 0; odd positions (the outer corners) have
grading 1 and carry two arrows, one horizontal to the previous vertex and
one vertical to the next.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .alexander import GapSequence
from .pl import AffineFunction

__all__ = [
    "Generator",
    "StaircaseComplex",
    "staircase_from_gaps",
    "gaps_from_staircase",
    "filtration_line",
    "validate_staircase",
    "from_coordinates",
]


@dataclass(frozen=True)
class Generator:
    index: int
    x: int
    y: int
    grading: int


@dataclass(frozen=True)
class StaircaseComplex:
    """Generators plus F2 differential arrows ``(source, target)`` by index."""

    generators: tuple[Generator, ...]
    arrows: tuple[tuple[int, int], ...]

    @property
    def genus(self) -> int:
        return self.generators[0].y if self.generators else 0

    def __len__(self) -> int:
        return len(self.generators)

    def boundary(self, index: int) -> tuple[int, ...]:
        return tuple(tgt for src, tgt in self.arrows if src == index)

    def as_dict(self) -> dict:
        return {
            "genus": self.genus,
            "generators": [
                {"index": g.index, "x": g.x, "y": g.y, "grading": g.grading}
                for g in self.generators
            ],
            "arrows": [{"source": s, "target": t} for s, t in self.arrows],
        }


def staircase_from_gaps(gaps: Sequence[int]) -> StaircaseComplex:
    """Build the staircase for a gap sequence (empty gaps give the unknot)."""
    if not isinstance(gaps, GapSequence):
        gaps = GapSequence(gaps)
    g = sum(gaps) // 2
    x, y = 0, g
    gens = [Generator(0, x, y, 0)]
    for i, a in enumerate(gaps):
        if i % 2 == 0:
            x += a
        else:
            y -= a
        j = i + 1
        gens.append(Generator(j, x, y, j % 2))
    arrows = []
    for gen in gens:
        if gen.grading == 1:
            arrows.append((gen.index, gen.index - 1))
            arrows.append((gen.index, gen.index + 1))
    return StaircaseComplex(tuple(gens), tuple(arrows))


def gaps_from_staircase(c: StaircaseComplex) -> list[int]:
    out = []
    for a, b in zip(c.generators, c.generators[1:]):
        out.append(abs(b.x - a.x) + abs(b.y - a.y))
    return out


def filtration_line(gen: Generator) -> AffineFunction:
    """Filtration level ``t*y + (2 - t)*x`` as the line ``2x + (y - x) t``."""
    return AffineFunction(gen.y - gen.x, 2 * gen.x)


def validate_staircase(c: StaircaseComplex, family: tuple[int, int] | None = None) -> list[str]:
    """List every violated staircase invariant; an empty list means valid.

    With ``family=(p, k)`` the complex is also checked against the first
    block of the twisted-torus-knot pattern: consecutive grading-0
    generators ``A_0, ..., A_k`` differ in filtration level by ``2 - p t``.
    """
    problems: list[str] = []
    gens = c.generators
    if not gens:
        return ["complex has no generators"]
    for pos, gen in enumerate(gens):
        if gen.index != pos:
            problems.append(f"generator at position {pos} has index {gen.index}")
        if gen.grading != pos % 2:
            problems.append(f"generator {pos} has grading {gen.grading}, expected {pos % 2}")

    g = gens[0].y
    if gens[0].x != 0:
        problems.append(f"first generator at ({gens[0].x}, {gens[0].y}), expected x = 0")
    if (gens[-1].x, gens[-1].y) != (g, 0):
        problems.append(
            f"endpoint asymmetry: walk starts at (0, {g}) but ends at ({gens[-1].x}, {gens[-1].y})"
        )
    for gen in gens:
        if not (0 <= gen.x <= g and 0 <= gen.y <= g):
            problems.append(f"generator {gen.index} at ({gen.x}, {gen.y}) outside [0, {g}]^2")

    coords = Counter((gen.x, gen.y) for gen in gens)
    if coords != Counter((y, x) for x, y in coords.elements()):
        problems.append("coordinate multiset is not symmetric under (x, y) -> (y, x)")

    n_odd = sum(1 for gen in gens if gen.grading == 1)
    n_even = len(gens) - n_odd
    if n_even != n_odd + 1:
        problems.append(f"{n_even} grading-0 vs {n_odd} grading-1 generators")

    out_count = Counter()
    for src, tgt in c.arrows:
        if not (0 <= src < len(gens) and 0 <= tgt < len(gens)):
            problems.append(f"arrow {src}->{tgt} refers to a missing generator")
            continue
        s, t = gens[src], gens[tgt]
        out_count[src] += 1
        if s.grading != 1 or t.grading != 0:
            problems.append(f"arrow {src}->{tgt} does not go from grading 1 to grading 0")
        if not (t.x <= s.x and t.y <= s.y):
            problems.append(f"arrow {src}->{tgt} increases a coordinate")
        if (t.x != s.x) + (t.y != s.y) != 1:
            problems.append(f"arrow {src}->{tgt} is not horizontal or vertical")
    for gen in gens:
        if gen.grading == 1 and out_count[gen.index] != 2:
            problems.append(f"grading-1 generator {gen.index} has {out_count[gen.index]} arrows")

    if family is not None:
        p, k = family
        want = AffineFunction(-p, 2)
        for i in range(1, k + 1):
            if 2 * i >= len(gens):
                problems.append(f"too few generators for block index {i}")
                break
            diff = filtration_line(gens[2 * i]) - filtration_line(gens[2 * i - 2])
            if diff != want:
                problems.append(f"FL(A_{i}) - FL(A_{i - 1}) = {diff}, expected {want}")
    return problems


def from_coordinates(points: Iterable[tuple[int, int]]) -> StaircaseComplex:
    """Build a zigzag complex from raw vertex coordinates without checks."""
    gens = tuple(Generator(i, x, y, i % 2) for i, (x, y) in enumerate(points))
    arrows = []
    for gen in gens:
        if gen.grading == 1:
            arrows.append((gen.index, gen.index - 1))
            if gen.index + 1 < len(gens):
                arrows.append((gen.index, gen.index + 1))
    return StaircaseComplex(gens, tuple(arrows))
