import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from syzlab import (LatticePolygon, PolygonInputError, UnimodularAffineMap,
                    boundary_count, canonical_form, detect_special, dilate,
                    equivalent, interior_hull, lattice_points, lattice_width,
                    move_out, polygon_from_vertex_list, sigma, upsilon)
from syzlab.geometry import Degenerate, convex_hull, interior_lattice_points

from conftest import random_polygon, random_unimodular


def test_convex_hull_drops_collinear():
    assert convex_hull([(0, 0), (1, 0), (2, 0), (2, 2), (0, 2), (1, 1)]) \
        == [(0, 0), (2, 0), (2, 2), (0, 2)]


def test_polygon_validation():
    with pytest.raises(PolygonInputError):
        polygon_from_vertex_list([[0, 0], [1, 0], [2, 0]])
    with pytest.raises(PolygonInputError):
        polygon_from_vertex_list([[0, 0], [1, 0]])
    with pytest.raises(PolygonInputError):
        polygon_from_vertex_list([[0, 0], [1, 0], [0, 1.5]])
    # clockwise input is accepted and reoriented
    p = polygon_from_vertex_list([[0, 1], [1, 0], [0, 0]])
    assert p.twice_area() == 1


def test_lattice_points_order_and_count():
    pts = lattice_points(sigma(2))
    assert pts == sorted(pts)
    assert len(pts) == 6
    assert len(lattice_points(sigma(5))) == 21


def test_interior_hull_genus12():
    H = interior_hull(LatticePolygon([(0, 2), (6, 0), (2, 6)]))
    assert isinstance(H, LatticePolygon)
    assert set(H.vertices) == {(4, 1), (5, 1), (3, 4), (2, 5), (1, 3), (1, 2)}
    assert len(lattice_points(H)) == 12
    assert boundary_count(H) == 6


def test_interior_hull_degenerate():
    seg = interior_hull(LatticePolygon([(0, 0), (4, 0), (4, 2), (0, 2)]))
    assert isinstance(seg, Degenerate) and seg.tag == "segment"
    empty = interior_hull(sigma(1))
    assert isinstance(empty, Degenerate) and empty.tag == "empty"


def test_lattice_width_oracles():
    assert lattice_width(sigma(5))[0] == 5
    H = interior_hull(LatticePolygon([(0, 2), (6, 0), (2, 6)]))
    assert lattice_width(H)[0] == 4
    assert lattice_width(LatticePolygon([(1, 1), (3, 1), (3, 3), (1, 3)]))[0] == 2
    assert lattice_width(upsilon(1))[0] == 2
    # Remark 5 interior hull
    H36 = interior_hull(LatticePolygon([(4, 0), (0, 10), (10, 4)]))
    assert lattice_width(H36)[0] == 8
    assert boundary_count(H36) == 9


def test_width_direction_is_achieved():
    rng = random.Random(5)
    for _ in range(40):
        P = random_polygon(rng)
        w, d = lattice_width(P)
        vals = [v[0] * d[0] + v[1] * d[1] for v in P.vertices]
        assert max(vals) - min(vals) == w


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6)),
                min_size=3, max_size=8))
def test_pick_and_ehrhart(pts):
    hull = convex_hull(pts)
    if len(hull) < 3:
        return
    P = LatticePolygon(hull)
    a2 = P.twice_area()
    b = boundary_count(P)
    i = len(interior_lattice_points(P))
    assert len(lattice_points(P)) == i + b
    # Pick
    assert a2 == 2 * i + b - 2
    # Ehrhart at k = 2, 3
    for k in (2, 3):
        assert len(lattice_points(dilate(P, k))) == \
            (a2 * k * k + b * k) // 2 + 1


def test_canonical_form_invariance():
    rng = random.Random(11)
    for _ in range(30):
        P = random_polygon(rng)
        canon = canonical_form(P)
        for _ in range(5):
            Q = P.transform(random_unimodular(rng))
            assert canonical_form(Q).vertices == canon.vertices
        assert canonical_form(canon).vertices == canon.vertices


def test_equivalent():
    assert equivalent(sigma(2), LatticePolygon([(1, 1), (3, 1), (1, 3)]))
    assert not equivalent(sigma(2), upsilon(1))


def test_detect_special():
    s = detect_special(sigma(3))
    assert s is not None and s.kind == "sigma" and s.k == 3
    assert detect_special(LatticePolygon([(1, 1), (3, 1), (1, 3)])).kind == "sigma"
    u = detect_special(upsilon(1))
    assert u is not None and u.kind == "upsilon"
    u2 = detect_special(upsilon(2))
    assert u2 is not None and u2.kind == "two-upsilon"
    assert detect_special(LatticePolygon([(0, 0), (2, 0), (2, 2), (0, 2)])) is None


def test_move_out():
    mo = move_out(upsilon(1))
    assert mo is not None and equivalent(mo, upsilon(2))
    assert move_out(sigma(1)) is not None
    # interior hull of move_out comes back to the original
    P = LatticePolygon([(1, 1), (3, 1), (1, 3)])
    out = move_out(P)
    assert out is not None
    back = interior_hull(out)
    assert isinstance(back, LatticePolygon) and back.vertices == P.vertices


def test_move_out_interior_roundtrip_on_corpus(polygon_corpus):
    for P in polygon_corpus:
        out = move_out(P)
        if out is None:
            continue
        back = interior_hull(out)
        assert isinstance(back, LatticePolygon)
        assert set(lattice_points(back)) == set(lattice_points(P))


def test_dilate_and_transform():
    P = sigma(2)
    assert dilate(P, 3).vertices == sigma(6).vertices
    M = UnimodularAffineMap(((0, 1), (1, 0)), (2, -1))
    Q = P.transform(M)
    assert Q.twice_area() == P.twice_area()
