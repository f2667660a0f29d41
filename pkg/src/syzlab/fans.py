"""Inner normal fans, minimal resolutions, divisor polygons, Fano tests.

A fan here is always the complete fan of a projective toric surface: a
cyclic CCW list of primitive ray generators in which consecutive rays span
strictly less than a half-plane.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import ConsistencyFailureError
from .geometry import (
    Degenerate, EdgeInequality, FracPoint, LatticePolygon, Point, Region,
    _det, _dot, edge_inequalities, halfplane_intersection, interior_hull,
    interior_lattice_points, lattice_points, primitive, region_lattice_points,
)


class Fan:
    """Complete 2D fan given by its primitive ray generators, CCW."""

    __slots__ = ("rays",)

    def __init__(self, rays: Sequence[Point]):
        rs = [tuple(r) for r in rays]
        if len(rs) < 3:
            raise ValueError("a complete fan needs at least 3 rays")
        if len(set(rs)) != len(rs):
            raise ValueError("duplicate rays")
        for r in rs:
            if math.gcd(r[0], r[1]) != 1:
                raise ValueError(f"ray {r} is not primitive")
        rs = _sort_ccw(rs)
        n = len(rs)
        for i in range(n):
            if _det(rs[i], rs[(i + 1) % n]) <= 0:
                raise ValueError("consecutive rays do not span < half-plane; "
                                 "fan is not complete")
        # rotate so the angularly-first ray from the +x axis comes first
        self.rays: tuple[Point, ...] = tuple(rs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Fan) and self.rays == other.rays

    def __hash__(self) -> int:
        return hash(self.rays)

    def __repr__(self) -> str:
        return f"Fan({list(self.rays)})"

    def adjacent_pairs(self) -> list[tuple[Point, Point]]:
        n = len(self.rays)
        return [(self.rays[i], self.rays[(i + 1) % n]) for i in range(n)]

    def is_smooth(self) -> bool:
        return all(_det(u, v) == 1 for u, v in self.adjacent_pairs())


def _half_turn(v: Point) -> int:
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def _sort_ccw(rays: list[Point]) -> list[Point]:
    """Exact CCW angular order starting from the positive x-axis."""
    import functools

    def cmp(u: Point, v: Point) -> int:
        hu, hv = _half_turn(u), _half_turn(v)
        if hu != hv:
            return hu - hv
        return -_det(u, v)

    return sorted(rays, key=functools.cmp_to_key(cmp))


def normal_fan(P: LatticePolygon) -> Fan:
    """Fan of the primitive inner edge normals of P."""
    return Fan([e.normal for e in edge_inequalities(P)])


@dataclass(frozen=True)
class ToricDivisor:
    """Torus-invariant divisor sum(a_v D_v) on the surface of a fan."""

    fan: Fan
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if len(self.coefficients) != len(self.fan.rays):
            raise ValueError("need one coefficient per ray")

    def __add__(self, other: "ToricDivisor") -> "ToricDivisor":
        if other.fan is not self.fan and other.fan != self.fan:
            raise ValueError("divisors live on different fans")
        return ToricDivisor(self.fan, tuple(
            a + b for a, b in zip(self.coefficients, other.coefficients)))


def canonical_divisor(F: Fan) -> ToricDivisor:
    """Minus the sum of all torus-invariant prime divisors."""
    return ToricDivisor(F, tuple(-1 for _ in F.rays))


def anticanonical_divisor(F: Fan) -> ToricDivisor:
    return ToricDivisor(F, tuple(1 for _ in F.rays))


def polygon_divisor(F: Fan, P: LatticePolygon) -> ToricDivisor:
    """Divisor with a_v = -min <P, v>; its polygon is P when F refines P's fan."""
    return ToricDivisor(F, tuple(
        -min(_dot(m, v) for m in P.vertices) for v in F.rays))


@dataclass(frozen=True)
class RationalRegion:
    """Bounded half-plane intersection with exact rational vertices."""

    vertices: tuple[FracPoint, ...]
    integral: bool

    @property
    def dimension(self) -> int:
        return min(len(self.vertices), 3) - 1 if self.vertices else -1

    def as_lattice_polygon(self) -> LatticePolygon:
        if not self.integral or len(self.vertices) < 3:
            raise ValueError("region is not a lattice polygon")
        return LatticePolygon([(int(x), int(y)) for x, y in self.vertices])


def divisor_polygon(D: ToricDivisor) -> RationalRegion:
    """P_D = intersection of <x, v> >= -a_v over the rays."""
    ineqs = [EdgeInequality(v, a) for v, a in zip(D.fan.rays, D.coefficients)]
    verts = halfplane_intersection(ineqs)
    integral = all(x.denominator == 1 and y.denominator == 1 for x, y in verts)
    return RationalRegion(tuple(verts), integral)


def region_integral_points(R: RationalRegion, D: ToricDivisor) -> list[Point]:
    """Lattice points of the (possibly rational) divisor region."""
    if not R.vertices:
        return []
    xs = [v[0] for v in R.vertices]
    ys = [v[1] for v in R.vertices]
    x0, x1 = math.ceil(min(xs)), math.floor(max(xs))
    y0, y1 = math.ceil(min(ys)), math.floor(max(ys))
    rays, coeffs = D.fan.rays, D.coefficients
    out = []
    for x in range(x0, x1 + 1):
        for y in range(y0, y1 + 1):
            if all(x * v[0] + y * v[1] >= -a for v, a in zip(rays, coeffs)):
                out.append((x, y))
    return out


# -- Hirzebruch-Jung resolution -------------------------------------------------

def resolve_cone(u: Point, v: Point) -> list[Point]:
    """Minimal smooth subdivision of the cone spanned by primitive u, v.

    Walks the boundary of the convex hull of the nonzero cone lattice points:
    repeatedly picks the unique primitive w with det(u, w) = 1 closest to v,
    which reproduces the Hirzebruch-Jung continued-fraction insertion.
    """
    if math.gcd(*u) != 1 or math.gcd(*v) != 1:
        raise ValueError("cone generators must be primitive")
    if _det(u, v) <= 0:
        raise ValueError("need det(u, v) > 0")
    inserted: list[Point] = []
    while _det(u, v) > 1:
        # solutions of det(u, w) = 1 form the line w0 + t*u
        g, a, b = _xgcd(u[0], u[1])
        w0 = (-b, a)  # det(u, w0) = u.x*a + u.y*b = 1
        # pick minimal t with det(w, v) >= 1 (w inside the cone)
        num = _det(w0, v)
        d = _det(u, v)
        # det(w0 + t*u, v) = num + t*d ; smallest value >= 1
        t = -((num - 1) // d)
        w = (w0[0] + t * u[0], w0[1] + t * u[1])
        if not (_det(u, w) == 1 and _det(w, v) >= 1):
            raise ConsistencyFailureError("cone subdivision step failed")
        inserted.append(w)
        u = w
    return inserted


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


@dataclass(frozen=True)
class ResolutionResult:
    refined: Fan
    inserted: tuple[Point, ...]
    provenance: dict  # inserted ray -> (u, v) parent singular cone


def minimal_resolution(F: Fan) -> ResolutionResult:
    """Insert Hirzebruch-Jung rays into every singular cone of F."""
    rays = list(F.rays)
    inserted: list[Point] = []
    provenance: dict[Point, tuple[Point, Point]] = {}
    for u, v in F.adjacent_pairs():
        for w in resolve_cone(u, v):
            inserted.append(w)
            provenance[w] = (u, v)
    refined = Fan(rays + inserted)
    if not refined.is_smooth():
        raise ConsistencyFailureError("refined fan is not smooth")
    return ResolutionResult(refined, tuple(inserted), provenance)


# -- reflexivity / Gorenstein weak Fano ------------------------------------------

def is_reflexive(P: LatticePolygon) -> bool:
    """Unique interior lattice point at the origin, all edges at distance 1."""
    if interior_lattice_points(P) != [(0, 0)]:
        return False
    return all(e.offset == 1 for e in edge_inequalities(P))


def is_gorenstein_weak_fano(F: Fan) -> bool:
    """Hull of the primitive ray generators is a reflexive polygon."""
    hull = LatticePolygon.hull_of(F.rays)
    if not isinstance(hull, LatticePolygon):
        return False
    return is_reflexive(hull)


def anticanonical_lattice_points(F: Fan) -> int:
    """|P_{-K} /\\ Z^2| for the all-ones divisor (0 when the region is empty)."""
    D = anticanonical_divisor(F)
    return len(region_integral_points(divisor_polygon(D), D))


def minkowski_point_sum_surjective(A: Sequence[Point], B: Sequence[Point],
                                   C: Sequence[Point]) -> bool:
    """Whether {a + b | a in A, b in B} equals C as point sets."""
    sums = {(a[0] + b[0], a[1] + b[1]) for a in A for b in B}
    return sums == set(C)


# -- the Fujita-type adjoint check ------------------------------------------------

@dataclass
class FujitaReport:
    delta: LatticePolygon
    resolution: ResolutionResult
    df_polygon_is_delta: bool
    adjoint_polygon_is_interior_hull: bool
    df_base_point_free: bool
    adjoint_base_point_free: bool

    @property
    def ok(self) -> bool:
        return (self.df_polygon_is_delta and self.adjoint_polygon_is_interior_hull
                and self.df_base_point_free and self.adjoint_base_point_free)


def _base_point_free(D: ToricDivisor) -> bool:
    """Vertex criterion: every adjacent-ray line intersection lies in P_D."""
    rays, coeffs = D.fan.rays, D.coefficients
    n = len(rays)
    for i in range(n):
        v, av = rays[i], coeffs[i]
        w, aw = rays[(i + 1) % n], coeffs[(i + 1) % n]
        d = _det(v, w)
        mx = Fraction(-av * w[1] + aw * v[1], d)
        my = Fraction(av * w[0] - aw * v[0], d)
        if any(mx * u[0] + my * u[1] < -a for u, a in zip(rays, coeffs)):
            return False
    return True


def fujita_check(delta: LatticePolygon) -> FujitaReport:
    """Check P_{D_f} = Delta and P_{D_f + K} = Delta^(1) on the resolution."""
    hull1 = interior_hull(delta)
    if not isinstance(hull1, LatticePolygon):
        from .errors import DegenerateInteriorError
        raise DegenerateInteriorError("interior polygon is not two-dimensional")
    res = minimal_resolution(normal_fan(delta))
    X = res.refined
    df = polygon_divisor(X, delta)
    adjoint = df + canonical_divisor(X)
    p_df = divisor_polygon(df)
    p_l = divisor_polygon(adjoint)
    df_ok = (p_df.integral and len(p_df.vertices) >= 3
             and p_df.as_lattice_polygon() == delta)
    l_ok = (p_l.integral and len(p_l.vertices) >= 3
            and p_l.as_lattice_polygon() == hull1)
    return FujitaReport(
        delta=delta,
        resolution=res,
        df_polygon_is_delta=df_ok,
        adjoint_polygon_is_interior_hull=l_ok,
        df_base_point_free=_base_point_free(df),
        adjoint_base_point_free=_base_point_free(adjoint),
    )
