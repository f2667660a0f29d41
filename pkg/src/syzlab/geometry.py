"""Exact lattice-polygon combinatorics.

Conventions used throughout the package:

* points are ``(x, y)`` tuples of Python ints,
* polygon vertices are stored in counterclockwise order with no three
  consecutive vertices collinear,
* lattice-point enumerations are sorted lexicographically by ``(x, y)``,
* areas are kept as twice-area integers (shoelace) so everything stays exact.

Lower-dimensional results (the interior hull of a thin polygon, say) are
returned as :class:`Degenerate` values rather than invalid polygons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import PolygonInputError

Point = tuple[int, int]


def _sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def _add(a: Point, b: Point) -> Point:
    return (a[0] + b[0], a[1] + b[1])


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _det(u: Point, v: Point) -> int:
    return u[0] * v[1] - u[1] * v[0]


def _dot(u: Point, v: Point) -> int:
    return u[0] * v[0] + u[1] * v[1]


def primitive(v: Point) -> Point:
    """Divide a nonzero integer vector by the gcd of its coordinates."""
    g = math.gcd(v[0], v[1])
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return (v[0] // g, v[1] // g)


def convex_hull(points: Iterable[Point]) -> list[Point]:
    """Convex hull vertices in CCW order, collinear points dropped.

    Returns fewer than 3 points for degenerate inputs.
    """
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:  # all points collinear
        return [pts[0], pts[-1]]
    return hull


@dataclass(frozen=True)
class Degenerate:
    """Empty set, single point, or lattice segment (tagged, with its points)."""

    tag: str  # "empty" | "point" | "segment"
    points: tuple[Point, ...]

    @property
    def is_empty(self) -> bool:
        return self.tag == "empty"

    def lattice_points(self) -> list[Point]:
        return list(self.points)

    def contains(self, q: Point) -> bool:
        return q in self.points


EMPTY = Degenerate("empty", ())


def _segment_points(a: Point, b: Point) -> tuple[Point, ...]:
    d = _sub(b, a)
    g = math.gcd(d[0], d[1])
    step = (d[0] // g, d[1] // g)
    pts = [(a[0] + i * step[0], a[1] + i * step[1]) for i in range(g + 1)]
    return tuple(sorted(pts))


@dataclass(frozen=True)
class EdgeInequality:
    """Half-plane <x, normal> >= -offset with a primitive inner normal."""

    normal: Point
    offset: int

    def holds(self, q: Point) -> bool:
        return _dot(q, self.normal) >= -self.offset

    def tight(self, q: Point) -> bool:
        return _dot(q, self.normal) == -self.offset


@dataclass(frozen=True)
class UnimodularAffineMap:
    """Affine map (x y) -> (x y) A + b with A in GL_2(Z).

    ``matrix`` is ((a11, a12), (a21, a22)) acting on row vectors.
    """

    matrix: tuple[tuple[int, int], tuple[int, int]]
    shift: Point

    def __post_init__(self):
        (a, b), (c, d) = self.matrix
        if abs(a * d - b * c) != 1:
            raise ValueError("matrix is not unimodular")

    def apply(self, q: Point) -> Point:
        (a, b), (c, d) = self.matrix
        return (q[0] * a + q[1] * c + self.shift[0],
                q[0] * b + q[1] * d + self.shift[1])

    def __call__(self, q: Point) -> Point:
        return self.apply(q)


class LatticePolygon:
    """Two-dimensional convex lattice polygon with CCW vertices."""

    __slots__ = ("vertices",)

    def __init__(self, vertices: Sequence[Point]):
        verts = [(int(x), int(y)) for x, y in vertices]
        if len(verts) < 3:
            raise PolygonInputError("need at least 3 vertices")
        if len(set(verts)) != len(verts):
            raise PolygonInputError("duplicate vertices")
        n = len(verts)
        area2 = sum(_det(verts[i], verts[(i + 1) % n]) for i in range(n))
        if area2 == 0:
            raise PolygonInputError("degenerate (zero area) polygon")
        if area2 < 0:
            verts.reverse()
        n = len(verts)
        for i in range(n):
            c = _cross(verts[i - 1], verts[i], verts[(i + 1) % n])
            if c <= 0:
                raise PolygonInputError(
                    f"vertices not strictly convex at {verts[i]}")
        # rotate so the lexicographically smallest vertex comes first
        k = verts.index(min(verts))
        self.vertices: tuple[Point, ...] = tuple(verts[k:] + verts[:k])

    @staticmethod
    def hull_of(points: Iterable[Point]) -> Union["LatticePolygon", Degenerate]:
        """Convex hull as a polygon, or a tagged degenerate value."""
        hull = convex_hull(points)
        if len(hull) == 0:
            return EMPTY
        if len(hull) == 1:
            return Degenerate("point", (hull[0],))
        if len(hull) == 2:
            return Degenerate("segment", _segment_points(hull[0], hull[1]))
        return LatticePolygon(hull)

    def __eq__(self, other) -> bool:
        return isinstance(other, LatticePolygon) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return f"LatticePolygon({list(self.vertices)})"

    # -- basic invariants -------------------------------------------------

    def twice_area(self) -> int:
        v = self.vertices
        n = len(v)
        return sum(_det(v[i], v[(i + 1) % n]) for i in range(n))

    def edges(self) -> list[tuple[Point, Point]]:
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def translate(self, t: Point) -> "LatticePolygon":
        return LatticePolygon([_add(v, t) for v in self.vertices])

    def transform(self, T: UnimodularAffineMap) -> "LatticePolygon":
        return LatticePolygon([T(v) for v in self.vertices])

    def bounding_box(self) -> tuple[int, int, int, int]:
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return (min(xs), min(ys), max(xs), max(ys))

    def contains(self, q: Point) -> bool:
        v = self.vertices
        n = len(v)
        return all(_cross(v[i], v[(i + 1) % n], q) >= 0 for i in range(n))

    def strictly_contains(self, q: Point) -> bool:
        v = self.vertices
        n = len(v)
        return all(_cross(v[i], v[(i + 1) % n], q) > 0 for i in range(n))


Region = Union[LatticePolygon, Degenerate]


# -- enumeration -----------------------------------------------------------

def lattice_points(P: LatticePolygon) -> list[Point]:
    """All lattice points of the closed polygon, lexicographic by (x, y)."""
    ineqs = edge_inequalities(P)
    x0, y0, x1, y1 = P.bounding_box()
    out: list[Point] = []
    for x in range(x0, x1 + 1):
        lo, hi = y0, y1
        feasible = True
        for e in ineqs:
            a, b = e.normal
            c = -e.offset - a * x  # need b*y >= c
            if b > 0:
                lo = max(lo, -((-c) // b))  # ceil(c / b)
            elif b < 0:
                hi = min(hi, c // b)  # floor(c / b) with b negative -> floor(c/b)
            elif c > 0:
                feasible = False
                break
        if feasible and lo <= hi:
            out.extend((x, y) for y in range(lo, hi + 1))
    return out


def boundary_lattice_points(P: LatticePolygon) -> list[Point]:
    """Lattice points on the boundary, lexicographic; count = sum of edge gcds."""
    pts: set[Point] = set()
    for a, b in P.edges():
        pts.update(_segment_points(a, b))
    return sorted(pts)


def boundary_count(P: LatticePolygon) -> int:
    return sum(math.gcd(b[0] - a[0], b[1] - a[1]) for a, b in P.edges())


def interior_lattice_points(P: LatticePolygon) -> list[Point]:
    ineqs = edge_inequalities(P)
    return [q for q in lattice_points(P)
            if all(_dot(q, e.normal) > -e.offset for e in ineqs)]


def interior_hull(P: LatticePolygon) -> Region:
    """Convex hull of the strictly interior lattice points, tagged by dimension."""
    return LatticePolygon.hull_of(interior_lattice_points(P))


def region_lattice_points(R: Region) -> list[Point]:
    if isinstance(R, LatticePolygon):
        return lattice_points(R)
    return R.lattice_points()


def region_contains(R: Region, q: Point) -> bool:
    if isinstance(R, LatticePolygon):
        return R.contains(q)
    return R.contains(q)


def dilate(P: LatticePolygon, k: int) -> LatticePolygon:
    """Minkowski multiple kP (vertex scaling), k >= 1."""
    if k < 1:
        raise ValueError("dilation factor must be >= 1")
    return LatticePolygon([(k * x, k * y) for x, y in P.vertices])


def edge_inequalities(P: LatticePolygon) -> list[EdgeInequality]:
    """One primitive inner-normal half-plane per edge; P = their intersection."""
    out = []
    for a, b in P.edges():
        d = primitive(_sub(b, a))
        normal = (-d[1], d[0])  # rotate CCW edge direction left = inner normal
        out.append(EdgeInequality(normal, -_dot(a, normal)))
    return out


# -- lattice width ----------------------------------------------------------

def _width_in_direction(P: LatticePolygon, w: Point) -> int:
    vals = [_dot(v, w) for v in P.vertices]
    return max(vals) - min(vals)


def lattice_width(P: LatticePolygon) -> tuple[int, Point]:
    """Minimal integer span over primitive directions, with a witness.

    The candidate set is cut down by an upper bound W0 from four axis-ish
    directions: any direction w with width(w) <= W0 must pair against two
    non-parallel edge vectors with |<e_i, w>| <= W0 each, which leaves a
    finite box of candidates.
    """
    seeds = [(1, 0), (0, 1), (1, 1), (1, -1)]
    w0, best_dir = min(((_width_in_direction(P, w), w) for w in seeds))
    e1 = _sub(P.vertices[1], P.vertices[0])
    e2 = None
    for a, b in P.edges()[1:]:
        e = _sub(b, a)
        if _det(e1, e) != 0:
            e2 = e
            break
    assert e2 is not None
    best = w0
    # solve |<e1,w>| <= W0, |<e2,w>| <= W0 exactly: w = (s*e2^perp - t*e1^perp)/det
    d = _det(e1, e2)
    for s in range(-w0, w0 + 1):  # s = <e1, w>
        for t in range(-w0, w0 + 1):  # t = <e2, w>
            nx = s * e2[1] - t * e1[1]
            ny = t * e1[0] - s * e2[0]
            if (nx, ny) == (0, 0) or nx % d or ny % d:
                continue
            w = (nx // d, ny // d)
            if w < (0, 0) or math.gcd(w[0], w[1]) != 1:
                continue
            width = _width_in_direction(P, w)
            if width < best:
                best, best_dir = width, w
    return best, best_dir


# -- unimodular normal form ---------------------------------------------------

def _primitive_to_e1(d: Point) -> tuple[tuple[int, int], tuple[int, int]]:
    """A determinant-1 row-action matrix sending primitive d to (1, 0)."""
    # find (a, b) with a*dx + b*dy = 1; columns of the column-action matrix
    g, a, b = _xgcd(d[0], d[1])
    assert g == 1
    # column convention M @ d = (1,0): rows (a, b) and (-dy, dx)
    return ((a, b), (-d[1], d[0]))


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _mat_apply(M: tuple[tuple[int, int], tuple[int, int]], q: Point) -> Point:
    (a, b), (c, d) = M
    return (a * q[0] + b * q[1], c * q[0] + d * q[1])


def canonical_form(P: LatticePolygon) -> LatticePolygon:
    """Canonical representative of the unimodular-affine equivalence class.

    For every vertex, orientation (original or reflected) and incident edge,
    normalize so the vertex sits at the origin and the edge runs along the
    positive x-axis, fix the residual shear by reducing the other incident
    edge direction, and keep the lexicographically smallest vertex cycle.
    """
    best: Optional[tuple] = None
    for verts in (P.vertices, tuple((x, -y) for x, y in reversed(P.vertices))):
        n = len(verts)
        for i in range(n):
            v0 = verts[i]
            v1 = verts[(i + 1) % n]
            vprev = verts[(i - 1) % n]
            d = primitive(_sub(v1, v0))
            M = _primitive_to_e1(d)
            w = _mat_apply(M, _sub(vprev, v0))
            assert w[1] > 0  # strict convexity puts the interior above the x-axis
            # shear (x, y) -> (x + k*y, y); choose k so w.x lands in [0, w.y)
            k = (w[0] % w[1] - w[0]) // w[1]
            S = ((M[0][0] + k * M[1][0], M[0][1] + k * M[1][1]), M[1])
            cand = tuple(_mat_apply(S, _sub(verts[(i + j) % n], v0))
                         for j in range(n))
            if best is None or cand < best:
                best = cand
    assert best is not None
    return LatticePolygon(best)


def equivalent(P: LatticePolygon, Q: LatticePolygon) -> bool:
    """Unimodular-affine equivalence via canonical forms."""
    return canonical_form(P).vertices == canonical_form(Q).vertices


# -- named models and special-shape detection ---------------------------------

def sigma(k: int = 1) -> LatticePolygon:
    """k * conv{(0,0), (1,0), (0,1)}."""
    return LatticePolygon([(0, 0), (k, 0), (0, k)])


def upsilon(k: int = 1) -> LatticePolygon:
    """k * conv{(-1,-1), (1,0), (0,1)}."""
    return LatticePolygon([(-k, -k), (k, 0), (0, k)])


@dataclass(frozen=True)
class SpecialShape:
    kind: str  # "sigma" | "upsilon" | "two-upsilon"
    k: int = 1


def detect_special(P: LatticePolygon) -> Optional[SpecialShape]:
    """Detect P ~ k*Sigma, Upsilon or 2*Upsilon, else None."""
    area2 = P.twice_area()
    k = math.isqrt(area2)
    if k * k == area2 and equivalent(P, sigma(k)):
        return SpecialShape("sigma", k)
    if area2 == 3 and equivalent(P, upsilon(1)):
        return SpecialShape("upsilon")
    if area2 == 12 and equivalent(P, upsilon(2)):
        return SpecialShape("two-upsilon", 2)
    return None


# -- moving out / rational intersections --------------------------------------

FracPoint = tuple[Fraction, Fraction]


def halfplane_intersection(
        ineqs: Sequence[EdgeInequality]) -> list[FracPoint]:
    """Vertices (exact rationals, CCW) of the intersection of half-planes.

    The half-planes must cut out a bounded region; returns [] when empty,
    a single point or two points for lower-dimensional intersections.
    """
    cands: set[FracPoint] = set()
    n = len(ineqs)
    for i in range(n):
        for j in range(i + 1, n):
            vi, vj = ineqs[i].normal, ineqs[j].normal
            d = _det(vi, vj)
            if d == 0:
                continue
            # solve <x,vi> = -a_i, <x,vj> = -a_j
            x = Fraction(-ineqs[i].offset * vj[1] + ineqs[j].offset * vi[1], d)
            y = Fraction(ineqs[i].offset * vj[0] - ineqs[j].offset * vi[0], d)
            if all(x * e.normal[0] + y * e.normal[1] >= -e.offset for e in ineqs):
                cands.add((x, y))
    if not cands:
        return []
    if len(cands) <= 2:
        return sorted(cands)
    # rational convex hull (monotone chain works verbatim with Fractions)
    pts = sorted(cands)
    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    lower: list[FracPoint] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[FracPoint] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return hull if len(hull) >= 3 else sorted(set(hull))


def move_out(P: LatticePolygon) -> Optional[LatticePolygon]:
    """Push every edge outward by lattice distance 1.

    Returns the resulting polygon when all its vertices are integral (then
    ``interior_hull(result) == P``), or None when P is not the interior
    polygon of any lattice polygon via this construction.
    """
    shifted = [EdgeInequality(e.normal, e.offset + 1)
               for e in edge_inequalities(P)]
    verts = halfplane_intersection(shifted)
    if len(verts) < 3:
        return None
    if any(x.denominator != 1 or y.denominator != 1 for x, y in verts):
        return None
    return LatticePolygon([(int(x), int(y)) for x, y in verts])


# -- JSON interface ------------------------------------------------------------

def polygon_from_vertex_list(raw) -> LatticePolygon:
    """Validate {"vertices": [[x, y], ...]} content (any order) into a polygon."""
    if not isinstance(raw, list) or len(raw) < 3:
        raise PolygonInputError("vertices must be a list of at least 3 pairs")
    pts = []
    for item in raw:
        if (not isinstance(item, (list, tuple)) or len(item) != 2
                or not all(isinstance(c, int) for c in item)):
            raise PolygonInputError(f"bad vertex {item!r}: need integer pairs")
        pts.append((item[0], item[1]))
    hull = LatticePolygon.hull_of(pts)
    if not isinstance(hull, LatticePolygon):
        raise PolygonInputError("vertices are collinear or coincident")
    if set(pts) - set(hull.vertices):
        extra = sorted(set(pts) - set(hull.vertices))
        raise PolygonInputError(
            f"non-vertex (collinear or interior) input points: {extra}")
    return hull
