import pytest

from syzlab import (DegenerateInteriorError, LatticePolygon,
                    clifford_prediction, conjecture2_check,
                    duality_identity_check, genus, green_check,
                    hering_schenck_check, interior_hull, sigma,
                    six_term_exactness_check, theorem2_hypotheses, upsilon)


def test_genus_examples():
    assert genus(sigma(5)) == 6
    assert genus(LatticePolygon([(0, 2), (6, 0), (2, 6)])) == 12
    assert genus(LatticePolygon([(4, 0), (0, 10), (10, 4)])) == 36
    assert genus(sigma(1)) == 0


def test_clifford_examples():
    ci = clifford_prediction(sigma(5))
    assert (ci.value, ci.exceptional, ci.reason) == (1, True, "sigma-multiple")
    sq = clifford_prediction(LatticePolygon([(0, 0), (4, 0), (4, 4), (0, 4)]))
    assert (sq.value, sq.exceptional) == (2, False)
    g12 = clifford_prediction(LatticePolygon([(0, 2), (6, 0), (2, 6)]))
    assert (g12.value, g12.exceptional) == (4, False)


def test_clifford_requires_interior():
    with pytest.raises(DegenerateInteriorError):
        clifford_prediction(LatticePolygon([(0, 0), (4, 0), (4, 2), (0, 2)]))


def test_green_check():
    a12 = (45, 231, 550, 693, 399, 69, 0, 0, 0)
    rep = green_check(a12, 12, 4)
    assert rep.passed and rep.witness["measured_min"] == 6
    rep6 = green_check((6, 8, 3), 6, 1)
    assert rep6.passed and rep6.witness["measured_min"] == 3
    # fabricated table violating the bound
    bad = green_check((6, 8, 0), 6, 1)
    assert not bad.passed
    assert bad.witness["measured_min"] == 4
    assert not bad.witness["upper_bound_holds"]


def test_conjecture2():
    H = interior_hull(LatticePolygon([(0, 2), (6, 0), (2, 6)]))
    b12 = (39, 186, 414, 504, 295, 69, 0, 0, 0)
    rep = conjecture2_check(b12, H)
    assert rep.passed and rep.witness == {"measured_min": 6, "predicted": 6}
    rep_v = conjecture2_check((6, 8, 3), interior_hull(sigma(5)))
    assert rep_v.passed and rep_v.witness["predicted"] == 3  # lw + 1 exception
    rep_u = conjecture2_check((0,), upsilon(1))
    assert rep_u.skipped


def test_hering_schenck():
    H = interior_hull(LatticePolygon([(0, 2), (6, 0), (2, 6)]))
    c12 = (6, 45, 136, 189, 105, 1, 0, 0, 0)
    rep = hering_schenck_check(c12, H)
    assert rep.passed and rep.witness["measured_min"] == 6
    sq = LatticePolygon([(1, 1), (3, 1), (3, 3), (1, 3)])
    rep2 = hering_schenck_check((1, 0, 0, 0, 0, 0), sq)
    assert rep2.passed and rep2.witness["measured_min"] == 8
    # boundary >= g: all-zero convention
    rep3 = hering_schenck_check((0, 0, 0), interior_hull(sigma(5)))
    assert rep3.passed
    assert not hering_schenck_check((0, 1, 0), interior_hull(sigma(5))).passed


def test_duality_identity():
    b12 = (39, 186, 414, 504, 295, 69, 0, 0, 0)
    c12 = (6, 45, 136, 189, 105, 1, 0, 0, 0)
    assert duality_identity_check(b12, c12, 12).passed
    # genus 12, l=5: both sides 330 = 399 - 69
    assert b12[4] + c12[4] - c12[5] - b12[5] == 330
    assert duality_identity_check((6, 8, 3), (0, 0, 0), 6).passed
    assert not duality_identity_check((7, 8, 3), (0, 0, 0), 6).passed


def test_six_term_exactness_negative():
    rep = six_term_exactness_check((1,), (1,), (1,), 4)
    assert not rep.passed


def test_theorem2_hypotheses():
    rep = theorem2_hypotheses(sigma(5))
    assert rep.passed and rep.witness["gwf"]
    g12 = theorem2_hypotheses(LatticePolygon([(0, 2), (6, 0), (2, 6)]))
    assert not g12.passed
    assert not g12.witness["gwf"]
    assert not g12.witness["boundary_hypothesis"]  # 6 < 12/2 + 1
    rect = theorem2_hypotheses(LatticePolygon([(0, 0), (3, 0), (3, 4), (0, 4)]))
    assert rect.passed and rect.witness["gwf"]
