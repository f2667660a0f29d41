"""Index bookkeeping for Koszul matrices.

Rows and columns of the differentials are pairs (S, m): an l-subset S of
the lattice points of Delta^(1) and a lattice point m of some region.
Subsets are ranked in the combinatorial number system (colex order), so
ranks never have to be stored.
"""

from __future__ import annotations

from math import comb
from typing import Iterator, Sequence

from .geometry import Point, Region, region_lattice_points


class MonomialBasis:
    """Lattice points of a region in a fixed (lex in x, then y) order."""

    __slots__ = ("points", "index")

    def __init__(self, region: Region):
        self.points: list[Point] = region_lattice_points(region)
        self.index: dict[Point, int] = {p: i for i, p in enumerate(self.points)}

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p: Point) -> bool:
        return p in self.index


class ExteriorIndex:
    """Colex ranking of l-subsets of range(n)."""

    __slots__ = ("n", "l", "size")

    def __init__(self, n: int, l: int):
        if l < 0:
            raise ValueError("negative exterior degree")
        self.n = n
        self.l = l
        self.size = comb(n, l)

    def rank(self, subset: Sequence[int]) -> int:
        # subset must be strictly increasing
        return sum(comb(c, i + 1) for i, c in enumerate(subset))

    def unrank(self, r: int) -> tuple[int, ...]:
        out = [0] * self.l
        for i in range(self.l, 0, -1):
            # largest c with comb(c, i) <= r
            c = i - 1
            while comb(c + 1, i) <= r:
                c += 1
            out[i - 1] = c
            r -= comb(c, i)
        return tuple(out)

    def subsets(self) -> Iterator[tuple[int, ...]]:
        """All l-subsets in colex order (matching rank order)."""
        n, l = self.n, self.l
        if l == 0:
            yield ()
            return
        if l > n:
            return
        cur = list(range(l))
        while True:
            yield tuple(cur)
            # colex successor
            i = 0
            while i + 1 < l and cur[i] + 1 == cur[i + 1]:
                cur[i] = i
                i += 1
            cur[i] += 1
            if cur[i] >= n:
                return
