import random

import pytest

from syzlab import CurveContext, LatticePolygon, curve_betti
from syzlab.geometry import convex_hull

GENUS12_VERTICES = [(0, 2), (6, 0), (2, 6)]
GENUS12_F = {(6, 0): 1, (0, 2): 1, (2, 6): 1}

GWF_DELTAS = {
    "5sigma": [(0, 0), (5, 0), (0, 5)],
    "square4": [(0, 0), (4, 0), (4, 4), (0, 4)],
    "rect34": [(0, 0), (3, 0), (3, 4), (0, 4)],
    "triangle63": [(0, 0), (6, 0), (0, 3)],
}


@pytest.fixture(scope="session")
def g12_delta():
    return LatticePolygon(GENUS12_VERTICES)


@pytest.fixture(scope="session")
def g12_ctx(g12_delta):
    return CurveContext(g12_delta)


@pytest.fixture(scope="session")
def g12_curve(g12_delta, g12_ctx):
    return curve_betti(g12_delta, explicit_f=GENUS12_F, seed=1, ctx=g12_ctx)


@pytest.fixture(scope="session")
def gwf_curves():
    out = {}
    for name, verts in GWF_DELTAS.items():
        out[name] = curve_betti(LatticePolygon(verts), trials=3, seed=5)
    return out


def random_polygon(rng: random.Random, box: int = 6, tries: int = 50):
    """A random lattice polygon with vertices in [-box, box]^2."""
    for _ in range(tries):
        pts = [(rng.randint(-box, box), rng.randint(-box, box))
               for _ in range(rng.randint(3, 8))]
        hull = convex_hull(pts)
        if len(hull) >= 3:
            return LatticePolygon(hull)
    raise RuntimeError("could not build a random polygon")


@pytest.fixture(scope="session")
def polygon_corpus():
    rng = random.Random(20260826)
    return [random_polygon(rng) for _ in range(200)]


def random_unimodular(rng: random.Random):
    """Random GL2(Z) map plus shift, built from shears and swaps."""
    from syzlab import UnimodularAffineMap
    m = [[1, 0], [0, 1]]
    for _ in range(rng.randint(1, 6)):
        k = rng.randint(-3, 3)
        if rng.random() < 0.5:
            m = [[m[0][0] + k * m[1][0], m[0][1] + k * m[1][1]], m[1]]
        else:
            m = [m[0], [m[1][0] + k * m[0][0], m[1][1] + k * m[0][1]]]
        if rng.random() < 0.3:
            m = [m[1], m[0]]
    return UnimodularAffineMap((tuple(m[0]), tuple(m[1])),
                               (rng.randint(-8, 8), rng.randint(-8, 8)))
