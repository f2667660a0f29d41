"""Koszul differentials and the surface Betti rows b and c.

For the embedding X = X_{Delta^(1)} in P^{g-1}, with V the g-dimensional
space spanned by the lattice points of Delta^(1):

  b_l = dim K_{l,1}(X, L)
      = nullity(d: wedge^l V (x) V_{D1} -> wedge^{l-1} V (x) V_{2 D1})
        - rank(d: wedge^{l+1} V (x) V_{{0}} -> wedge^l V (x) V_{D1})

  c_l = dim K_{l-1,1}(X; K, L)
      = nullity(d: wedge^{l-1} V (x) V_{D1^(1)} -> wedge^{l-2} V (x) V_{(2 D1)^(1)})

The c row is a pure kernel (the twisted complex has nothing incoming since
H^0 of the canonical sheaf of the surface vanishes).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb

from .basis import ExteriorIndex, MonomialBasis
from .errors import (BudgetExceededError, DegenerateInteriorError,
                     RegionMismatchError)
from .geometry import Degenerate, LatticePolygon, dilate, interior_hull
from .linalg import DEFAULT_PRIMES, KoszulMatrix, rank_mod_p

DEFAULT_BUDGET = 600_000_000  # rows * cols cells for any single matrix


def koszul_structure(ell: int, V: MonomialBasis, src: MonomialBasis,
                     dst: MonomialBasis) -> tuple[int, int, list]:
    """Sign pattern of d: wedge^ell V (x) V_src -> wedge^{ell-1} V (x) V_dst.

    Returns (rows, cols, entries) with entries (row, col, sign), sign +-1.
    The structure is independent of the prime.
    """
    n = len(V)
    cols = comb(n, ell) * len(src)
    if ell == 0:
        return 0, cols, []
    rows = comb(n, ell - 1) * len(dst)
    src_n, dst_n = len(src), len(dst)
    sub_index = ExteriorIndex(n, ell - 1)
    entries = []
    col_base = 0
    for S in ExteriorIndex(n, ell).subsets():
        # subsets() yields in colex order, so col_base tracks rank(S)*src_n
        row_sub = []
        for t in range(ell):
            Ssub = S[:t] + S[t + 1:]
            row_sub.append((sub_index.rank(Ssub) * dst_n, V.points[S[t]],
                            1 if t % 2 == 0 else -1))
        for mi, m in enumerate(src.points):
            col = col_base + mi
            for base, v, sign in row_sub:
                target = (m[0] + v[0], m[1] + v[1])
                ti = dst.index.get(target)
                if ti is None:
                    raise RegionMismatchError(
                        f"product monomial {target} outside target region")
                entries.append((base + ti, col, sign))
        col_base += src_n
    return rows, cols, entries


class SurfaceContext:
    """Shared, prime-independent data for one Delta^(1).

    Caches monomial bases and differential sign structures; per-prime
    matrices are cheap views onto the cached structures.
    """

    REGION_TAGS = ("D1", "2D1", "3D1", "D2", "i2D1", "0")

    def __init__(self, delta1: LatticePolygon, budget: int = DEFAULT_BUDGET):
        if not isinstance(delta1, LatticePolygon):
            raise DegenerateInteriorError(
                "interior polygon is not two-dimensional")
        self.delta1 = delta1
        self.budget = budget
        self._bases: dict[str, MonomialBasis] = {}
        self._structures: dict[tuple, tuple] = {}
        self.g = len(self.basis("D1"))
        if self.g < 4:
            raise DegenerateInteriorError(f"need genus >= 4, got {self.g}")

    def _region(self, tag: str):
        d1 = self.delta1
        if tag == "D1":
            return d1
        if tag == "2D1":
            return dilate(d1, 2)
        if tag == "3D1":
            return dilate(d1, 3)
        if tag == "D2":
            return interior_hull(d1)
        if tag == "i2D1":
            return interior_hull(dilate(d1, 2))
        if tag == "0":
            return Degenerate("point", ((0, 0),))
        raise KeyError(tag)

    def basis(self, tag: str) -> MonomialBasis:
        if tag not in self._bases:
            self._bases[tag] = MonomialBasis(self._region(tag))
        return self._bases[tag]

    def dims(self, ell: int, src_tag: str, dst_tag: str) -> tuple[int, int]:
        cols = comb(self.g, ell) * len(self.basis(src_tag))
        rows = 0 if ell == 0 else comb(self.g, ell - 1) * len(self.basis(dst_tag))
        return rows, cols

    def check_budget(self, ell: int, src_tag: str, dst_tag: str, what: str):
        rows, cols = self.dims(ell, src_tag, dst_tag)
        if rows * cols > self.budget:
            raise BudgetExceededError(rows * cols, self.budget, what)

    def structure(self, ell: int, src_tag: str, dst_tag: str) -> tuple:
        key = (ell, src_tag, dst_tag)
        if key not in self._structures:
            self.check_budget(ell, src_tag, dst_tag,
                              f"differential l={ell} {src_tag}->{dst_tag}")
            self._structures[key] = koszul_structure(
                ell, self.basis("D1"), self.basis(src_tag), self.basis(dst_tag))
        return self._structures[key]

    def differential(self, ell: int, src_tag: str, dst_tag: str,
                     prime: int) -> KoszulMatrix:
        rows, cols, entries = self.structure(ell, src_tag, dst_tag)
        return KoszulMatrix(rows, cols, prime, [
            (r, c, 1 if s > 0 else prime - 1) for r, c, s in entries])


def koszul_differential(ell: int, V: MonomialBasis, src: MonomialBasis,
                        dst: MonomialBasis, prime: int) -> KoszulMatrix:
    rows, cols, entries = koszul_structure(ell, V, src, dst)
    return KoszulMatrix(rows, cols, prime, [
        (r, c, 1 if s > 0 else prime - 1) for r, c, s in entries])


@dataclass
class SurfaceBetti:
    g: int
    b: tuple  # index l-1 holds b_l, l = 1..g-3
    c: tuple
    primes: tuple
    per_prime: dict  # prime -> (b vector, c vector)
    agree: bool

    def as_dict(self) -> dict:
        return {"g": self.g, "b": list(self.b), "c": list(self.c),
                "primes": list(self.primes), "prime_agreement": self.agree}


def _surface_pair(ctx: SurfaceContext, ell: int, prime: int) -> tuple[int, int]:
    """(b_l, c_l) for a single l and prime."""
    top = ctx.differential(ell, "D1", "2D1", prime)
    nullity = top.cols - rank_mod_p(top)
    incoming = ctx.differential(ell + 1, "0", "D1", prime)
    b = nullity - rank_mod_p(incoming)
    if len(ctx.basis("D2")) == 0:
        c = 0
    else:
        twisted = ctx.differential(ell - 1, "D2", "i2D1", prime)
        c = twisted.cols - rank_mod_p(twisted)
    return b, c


def surface_betti(delta1: LatticePolygon, primes=DEFAULT_PRIMES,
                  budget: int = DEFAULT_BUDGET, jobs: int = 1,
                  ctx: SurfaceContext | None = None) -> SurfaceBetti:
    if ctx is None:
        ctx = SurfaceContext(delta1, budget)
    g = ctx.g
    ells = range(1, g - 2)
    # refuse oversized runs before assembling anything
    for ell in ells:
        ctx.check_budget(ell, "D1", "2D1", f"surface differential l={ell}")
        ctx.check_budget(ell + 1, "0", "D1", f"incoming differential l={ell}")
        if len(ctx.basis("D2")):
            ctx.check_budget(ell - 1, "D2", "i2D1", f"twisted differential l={ell}")
    tasks = [(ell, p) for ell in ells for p in primes]
    results: dict[tuple, tuple] = {}
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            futs = {t: ex.submit(_surface_pair, ctx, *t) for t in tasks}
            results = {t: f.result() for t, f in futs.items()}
    else:
        for t in tasks:
            results[t] = _surface_pair(ctx, *t)
    per_prime = {}
    for p in primes:
        bv = tuple(results[(ell, p)][0] for ell in ells)
        cv = tuple(results[(ell, p)][1] for ell in ells)
        per_prime[p] = (bv, cv)
    first = per_prime[primes[0]]
    agree = all(per_prime[p] == first for p in primes)
    return SurfaceBetti(g, first[0], first[1], tuple(primes), per_prime, agree)
