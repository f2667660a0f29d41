"""Desk-scale enumeration of small lattice polygons up to equivalence.

Polygons are grown inside a fixed [0, box]^2 grid: seeds are all lattice
triangles, and each step takes the convex hull with one more grid point.
Removing a vertex of any polygon with more than three vertices leaves a
convex subpolygon in the same box with no more lattice points, so the walk
reaches every polygon class that has a representative in the box. States
are deduplicated after translating the bounding box to the origin;
unimodular deduplication happens only on the results (renormalizing mid-walk
could move a needed continuation point outside the grid).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import BudgetExceededError
from .geometry import (LatticePolygon, Point, boundary_count, canonical_form,
                       convex_hull, lattice_width, move_out)

MAX_DESK_POINTS = 12
MAX_BOX = 8


def _hull_stats(vertices: list) -> tuple[int, int, int]:
    """(twice_area, boundary_points, total_points) via shoelace + Pick."""
    n = len(vertices)
    a2 = 0
    b = 0
    for i in range(n):
        x1, y1 = vertices[i]
        x2, y2 = vertices[(i + 1) % n]
        a2 += x1 * y2 - x2 * y1
        b += gcd(abs(x2 - x1), abs(y2 - y1))
    a2 = abs(a2)
    # Pick: points = interior + boundary = (A - b/2 + 1) + b
    return a2, b, (a2 - b) // 2 + 1 + b


def _normalize(vertices: list) -> tuple:
    xs = min(v[0] for v in vertices)
    ys = min(v[1] for v in vertices)
    return tuple(sorted((x - xs, y - ys) for x, y in vertices))


def enumerate_polygon_classes(max_points: int = MAX_DESK_POINTS,
                              box: int = MAX_BOX) -> list[LatticePolygon]:
    """All classes of lattice polygons with <= max_points lattice points
    that have a representative inside [0, box]^2, one canonical form each.
    """
    if max_points > MAX_DESK_POINTS or box > MAX_BOX:
        raise BudgetExceededError(max_points * box, MAX_DESK_POINTS * MAX_BOX,
                                  "polygon enumeration beyond desk scale")
    grid = [(x, y) for x in range(box + 1) for y in range(box + 1)]
    seen: set[tuple] = set()
    frontier: list[tuple] = []

    def visit(verts: list) -> bool:
        key = _normalize(verts)
        if key in seen:
            return False
        seen.add(key)
        frontier.append(tuple(verts))
        return True

    # triangle seeds
    ng = len(grid)
    for i in range(ng):
        p1 = grid[i]
        for j in range(i + 1, ng):
            p2 = grid[j]
            for k in range(j + 1, ng):
                p3 = grid[k]
                if (p2[0] - p1[0]) * (p3[1] - p1[1]) \
                        == (p2[1] - p1[1]) * (p3[0] - p1[0]):
                    continue
                if _hull_stats([p1, p2, p3])[2] <= max_points:
                    visit([p1, p2, p3])

    classes: dict[tuple, LatticePolygon] = {}
    while frontier:
        verts = frontier.pop()
        poly = LatticePolygon(verts)
        canon = canonical_form(poly)
        classes.setdefault(canon.vertices, canon)
        vset = set(verts)
        for q in grid:
            if q in vset:
                continue
            grown = convex_hull(list(verts) + [q])
            if len(grown) < 3 or q not in grown:
                continue
            if _hull_stats(grown)[2] <= max_points:
                visit(grown)
    return sorted(classes.values(), key=lambda P: P.vertices)


def interior_polygon_classes(max_points: int = MAX_DESK_POINTS,
                             box: int = MAX_BOX) -> list[LatticePolygon]:
    """Classes that arise as Delta^(1) of some Delta: move_out is integral."""
    return [P for P in enumerate_polygon_classes(max_points, box)
            if move_out(P) is not None]


@dataclass
class Lemma4Report:
    checked: int
    violators: tuple  # canonical forms violating |boundary| >= lw + 2

    @property
    def ok_except_upsilon(self) -> bool:
        from .geometry import upsilon
        return [P.vertices for P in self.violators] == \
            [canonical_form(upsilon(1)).vertices]


def lemma4_scan(max_points: int = MAX_DESK_POINTS,
                box: int = MAX_BOX) -> Lemma4Report:
    """Check |boundary points| >= lattice width + 2 on all small interior
    polygon classes; the lone expected violator is Upsilon."""
    violators = []
    classes = interior_polygon_classes(max_points, box)
    for P in classes:
        w, _ = lattice_width(P)
        if boundary_count(P) < w + 2:
            violators.append(P)
    return Lemma4Report(len(classes), tuple(violators))


def reflexive_classes(box: int = 5) -> list[LatticePolygon]:
    """The classes of reflexive polygons (expected: exactly 16).

    Every reflexive polygon has at most 9 boundary points plus the single
    interior one and fits a 5-box after normalization, so a 10-point scan
    suffices.
    """
    from .fans import is_reflexive
    out = []
    for P in enumerate_polygon_classes(max_points=10, box=box):
        interior = [q for q in _interior_points(P)]
        if len(interior) != 1:
            continue
        shifted = P.translate((-interior[0][0], -interior[0][1]))
        if is_reflexive(shifted):
            out.append(P)
    return out


def _interior_points(P: LatticePolygon):
    from .geometry import interior_lattice_points
    return interior_lattice_points(P)
