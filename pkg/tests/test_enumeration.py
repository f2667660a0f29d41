import pytest

from syzlab import (BudgetExceededError, LatticePolygon, boundary_count,
                    canonical_form, equivalent, lattice_points, lattice_width,
                    move_out, sigma, upsilon)
from syzlab.enumeration import (enumerate_polygon_classes,
                                interior_polygon_classes, lemma4_scan,
                                reflexive_classes)


def test_small_enumeration_contains_known_classes():
    classes = enumerate_polygon_classes(max_points=5, box=3)
    keys = {P.vertices for P in classes}
    assert canonical_form(sigma(1)).vertices in keys
    assert canonical_form(LatticePolygon([(0, 0), (1, 0), (1, 1), (0, 1)])).vertices in keys
    assert canonical_form(upsilon(1)).vertices in keys  # 4 lattice points
    for P in classes:
        assert len(lattice_points(P)) <= 5


def test_enumeration_deduplicates():
    classes = enumerate_polygon_classes(max_points=4, box=2)
    keys = [P.vertices for P in classes]
    assert len(keys) == len(set(keys))
    # exactly: unit triangle, unit square, and the 4-point triangles
    assert canonical_form(sigma(1)).vertices in keys


def test_enumeration_budget_guard():
    with pytest.raises(BudgetExceededError):
        enumerate_polygon_classes(max_points=13, box=8)
    with pytest.raises(BudgetExceededError):
        enumerate_polygon_classes(max_points=12, box=9)


def test_interior_polygon_filter():
    classes = interior_polygon_classes(max_points=6, box=4)
    keys = {P.vertices for P in classes}
    assert canonical_form(sigma(1)).vertices in keys
    assert canonical_form(upsilon(1)).vertices in keys
    for P in classes:
        assert move_out(P) is not None


def test_upsilon_is_a_violator():
    U = upsilon(1)
    w, _ = lattice_width(U)
    assert boundary_count(U) == 3 and w == 2
    assert boundary_count(U) < w + 2


def test_remark5_interior_hull_would_violate():
    from syzlab import interior_hull
    H = interior_hull(LatticePolygon([(4, 0), (0, 10), (10, 4)]))
    assert len(H.vertices) == 9
    assert boundary_count(H) == 9
    assert lattice_width(H)[0] == 8
    assert boundary_count(H) < lattice_width(H)[0] + 2


def test_lemma4_small_scan():
    rep = lemma4_scan(max_points=6, box=4)
    assert [P.vertices for P in rep.violators] == \
        [canonical_form(upsilon(1)).vertices]


def test_reflexive_classes_are_reflexive():
    from syzlab import is_reflexive
    from syzlab.geometry import interior_lattice_points
    classes = reflexive_classes(box=4)
    for P in classes:
        (ip,) = interior_lattice_points(P)
        assert is_reflexive(P.translate((-ip[0], -ip[1])))
    keys = [P.vertices for P in classes]
    assert len(keys) == len(set(keys))
