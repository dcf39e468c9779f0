"""Staircase diagrams of finite-colength monomial ideals in two variables.

A box ``(s, t)`` stands for the monomial ``x^s y^t`` where ``x, y`` are the
two ring variables in order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

from .algebra import PolyRing
from .ideals import Ideal

Point = tuple[int, int]


def plane_ring(names: Sequence[str] = ("a1", "a2")) -> PolyRing:
    return PolyRing(tuple(names))


@dataclass(frozen=True)
class StaircaseDiagram:
    """Box set of a monomial ideal of finite colength in two variables.

    ``generators`` are sorted by decreasing first exponent; consecutive
    generators ``(a_i, b_i), (a_{i+1}, b_{i+1})`` give the relation
    ``(a_i, b_{i+1})``.
    """

    boxes: frozenset[Point]
    generators: tuple[Point, ...] = field(init=False)
    relations: tuple[Point, ...] = field(init=False)

    def __post_init__(self):
        boxes = frozenset(self.boxes)
        for s, t in boxes:
            if s < 0 or t < 0:
                raise ValueError("negative box")
            if (s > 0 and (s - 1, t) not in boxes) or (t > 0 and (s, t - 1) not in boxes):
                raise ValueError("box set is not a staircase")
        if not boxes:
            raise ValueError("empty staircase corresponds to the unit ideal")
        object.__setattr__(self, "boxes", boxes)
        heights = self.column_heights
        gens = [(len(heights), 0)]
        for s in range(len(heights) - 1, -1, -1):
            if s == 0 or heights[s] < heights[s - 1]:
                gens.append((s, heights[s]))
        gens.sort(key=lambda p: -p[0])
        rels = tuple((gens[i][0], gens[i + 1][1]) for i in range(len(gens) - 1))
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "relations", rels)

    @classmethod
    def from_partition(cls, heights: Sequence[int]) -> "StaircaseDiagram":
        """Diagram whose column ``s`` holds ``heights[s]`` boxes."""
        if any(h <= 0 for h in heights) or any(a < b for a, b in zip(heights, heights[1:])):
            raise ValueError(f"{heights} is not a partition")
        return cls(frozenset((s, t) for s, h in enumerate(heights) for t in range(h)))

    @property
    def column_heights(self) -> tuple[int, ...]:
        width = 1 + max(s for s, _ in self.boxes)
        return tuple(sum(1 for (s, t) in self.boxes if s == c) for c in range(width))

    @property
    def colength(self) -> int:
        return len(self.boxes)

    @cached_property
    def _box_degrees(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for s, t in self.boxes:
            out[s + t] = out.get(s + t, 0) + 1
        return out

    def lam(self, a: int) -> int:
        return self._box_degrees.get(a, 0)

    def mu(self, a: int) -> int:
        return sum(1 for s, t in self.generators if s + t == a)

    def rho(self, a: int) -> int:
        return sum(1 for s, t in self.relations if s + t == a)

    def boxes_above(self, a: int) -> int:
        """Number of boxes of total degree strictly greater than ``a``."""
        return sum(v for deg, v in self._box_degrees.items() if deg > a)

    def hom_positive(self) -> int:
        """Positive-degree part of ``Hom(I, T/I)`` from generator and relation degrees."""
        gen_part = sum(self.boxes_above(s + t) for s, t in self.generators)
        rel_part = sum(self.boxes_above(s + t) for s, t in self.relations)
        return gen_part - rel_part

    def extended_tangent_dim(self) -> int:
        """Degree-zero tangent dimension of the ideal extended to three variables."""
        return 2 * self.colength - self.hom_positive()

    def ideal(self, ring: PolyRing | None = None) -> Ideal:
        ring = ring or plane_ring()
        if ring.nvars != 2:
            raise ValueError("staircase ideals live in two variables")
        return Ideal(ring, [ring.monomial(g) for g in self.generators])

    def extended_ideal(self, ring: PolyRing | None = None) -> Ideal:
        """Same generators in ``k[a0, a1, a2]``, the box variables being ``a1, a2``."""
        ring = ring or PolyRing.standard(3)
        if ring.nvars != 3:
            raise ValueError("extension target needs three variables")
        return Ideal(ring, [ring.monomial((0, s, t)) for s, t in self.generators])

    def render(self) -> str:
        """ASCII picture: ``#`` box, ``o`` generator, ``*`` relation, ``.`` empty.

        Rows are printed from the top, the first exponent runs left to right.
        """
        pts = list(self.boxes) + list(self.generators) + list(self.relations)
        width = 1 + max(s for s, _ in pts)
        height = 1 + max(t for _, t in pts)
        gens, rels = set(self.generators), set(self.relations)
        lines = []
        for t in range(height - 1, -1, -1):
            row = []
            for s in range(width):
                p = (s, t)
                row.append("#" if p in self.boxes else "o" if p in gens else "*" if p in rels else ".")
            lines.append(" ".join(row))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "boxes": sorted(self.boxes),
            "generators": list(self.generators),
            "relations": list(self.relations),
            "colength": self.colength,
            "hom_positive": self.hom_positive(),
            "extended_tangent_dim": self.extended_tangent_dim(),
        }


def staircase_from_ideal(I: Ideal) -> StaircaseDiagram:
    if I.ring.nvars != 2:
        raise ValueError("staircase needs a two-variable ring")
    if not I.is_monomial():
        raise ValueError("staircase needs a monomial ideal")
    gens = [next(iter(g.terms)) for g in I.minimal_monomial_generators()]
    if any(sum(g) == 0 for g in gens):
        raise ValueError("unit ideal has no staircase")
    xpow = min((s for s, t in gens if t == 0), default=None)
    ypow = min((t for s, t in gens if s == 0), default=None)
    if xpow is None or ypow is None:
        raise ValueError("ideal has infinite colength")
    boxes = frozenset(
        (s, t)
        for s in range(xpow)
        for t in range(ypow)
        if not any(s >= a and t >= b for a, b in gens)
    )
    return StaircaseDiagram(boxes)


def partitions(r: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``r`` as weakly decreasing tuples."""
    if r == 0:
        yield ()
        return
    largest = r if largest is None else largest
    for first in range(min(r, largest), 0, -1):
        for rest in partitions(r - first, first):
            yield (first,) + rest


def all_staircases(r: int) -> Iterator[StaircaseDiagram]:
    for p in partitions(r):
        yield StaircaseDiagram.from_partition(p)
