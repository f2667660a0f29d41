"""Generic curves C_f on X_Delta and their canonical Betti row a.

The six-term sequence

  0 -> b_l -> a_l -> c_l --mu_f--> c_{g-1-l} -> a_{g-1-l} -> b_{g-1-l} -> 0

reduces the curve row a to the surface rows b, c plus the rank r_l of the
multiplication map mu_f on Koszul cohomology. r_l is computed for
l <= (g-1)//2 and reused at the mirror index.

Genericity is handled by sampling: rank can only drop on special
coefficient choices, so the generic value is the max over independent
samples, with disagreement surfaced as a warning rather than averaged away.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Optional, Sequence

import numpy as np

from .errors import ConsistencyFailureError, DegenerateInteriorError, \
    RegionMismatchError
from .geometry import LatticePolygon, Point, boundary_lattice_points, \
    interior_hull, lattice_points
from .koszul import DEFAULT_BUDGET, SurfaceContext, SurfaceBetti, surface_betti
from .linalg import DEFAULT_PRIMES, CokernelBasis, KoszulMatrix, \
    cokernel_basis, nullspace_mod_p


@dataclass(frozen=True)
class CoefficientAssignment:
    """Coefficients of f = sum c_{i,j} x^i y^j mod a prime."""

    support: tuple  # lattice points of Delta (or its boundary)
    values: tuple  # nonzero residues, parallel to support
    prime: int
    seed: object = None
    mode: str = "full"

    def __post_init__(self):
        if len(self.support) != len(self.values):
            raise ValueError("support/values length mismatch")
        if any(v % self.prime == 0 for v in self.values):
            raise ValueError("zero coefficient in assignment")

    def items(self):
        return zip(self.support, self.values)


def sample_f(delta: LatticePolygon, prime: int, seed, mode: str = "full"
             ) -> CoefficientAssignment:
    """Uniform nonzero coefficients on Delta's points (or boundary points).

    Deterministic in (seed, prime, mode); the stream is keyed by all three
    so different primes get independent samples.
    """
    if mode == "full":
        support = lattice_points(delta)
    elif mode == "boundary":
        support = boundary_lattice_points(delta)
    else:
        raise ValueError(f"unknown sampling mode {mode!r}")
    rng = random.Random(f"{seed}:{prime}:{mode}")
    values = tuple(rng.randrange(1, prime) for _ in support)
    return CoefficientAssignment(tuple(support), values, prime, seed, mode)


def explicit_assignment(coeffs: dict, delta: LatticePolygon, prime: int
                        ) -> CoefficientAssignment:
    """Assignment from user-supplied integer coefficients."""
    pts = set(lattice_points(delta))
    support, values = [], []
    for m, c in sorted(coeffs.items()):
        if tuple(m) not in pts:
            raise RegionMismatchError(f"monomial {m} outside Delta")
        cv = c % prime
        if cv:
            support.append(tuple(m))
            values.append(cv)
    return CoefficientAssignment(tuple(support), tuple(values), prime,
                                 seed=None, mode="explicit")


class CurveContext:
    """Per-Delta caches shared by every sample and prime.

    Kernel bases N (cocycles of the twisted row) and cokernel bases C of
    the untwisted row are the expensive pieces; both depend only on
    (l, prime) and are reused across coefficient samples.
    """

    def __init__(self, delta: LatticePolygon, budget: int = DEFAULT_BUDGET):
        self.delta = delta
        hull = interior_hull(delta)
        if not isinstance(hull, LatticePolygon):
            raise DegenerateInteriorError(
                "interior polygon is not two-dimensional")
        self.sctx = SurfaceContext(hull, budget)
        self.g = self.sctx.g
        self._row_maps: dict[Point, np.ndarray] = {}
        self._nullspaces: dict = {}
        self._cokernels: dict = {}
        self._bottom_right: dict = {}
        self._c_dims: dict = {}

    def mu_row_map(self, m: Point) -> np.ndarray:
        """Index map V_{D2} -> V_{2D1} of multiplication by x^m."""
        if m not in self._row_maps:
            d2 = self.sctx.basis("D2")
            t2 = self.sctx.basis("2D1")
            out = np.empty(len(d2.points), dtype=np.intp)
            for k, w in enumerate(d2.points):
                target = (w[0] + m[0], w[1] + m[1])
                ti = t2.index.get(target)
                if ti is None:
                    raise RegionMismatchError(
                        f"{w} + {m} = {target} outside 2*Delta^(1)")
                out[k] = ti
            self._row_maps[m] = out
        return self._row_maps[m]

    def nullspace_c(self, ell: int, prime: int) -> np.ndarray:
        """Kernel basis N of the twisted top row at level l."""
        key = (ell, prime)
        if key not in self._nullspaces:
            twisted = self.sctx.differential(ell - 1, "D2", "i2D1", prime)
            self._nullspaces[key] = nullspace_mod_p(twisted)
        return self._nullspaces[key]

    def cokernel(self, ell: int, prime: int) -> CokernelBasis:
        """Cokernel basis of the untwisted left map at level l."""
        key = (ell, prime)
        if key not in self._cokernels:
            bottom_left = self.sctx.differential(ell, "D1", "2D1", prime)
            self._cokernels[key] = cokernel_basis(bottom_left)
        return self._cokernels[key]

    def bottom_right_signed(self, ell: int, prime: int):
        key = (ell, prime)
        if key not in self._bottom_right:
            d = self.sctx.differential(ell - 1, "2D1", "3D1", prime)
            self._bottom_right[key] = d.to_signed_csr()
        return self._bottom_right[key]

    def c_dim(self, ell: int, prime: int) -> int:
        """dim K_{l-1,1}(X;K,L) = c_l, cached (0 outside 1..g-3)."""
        if not 1 <= ell <= self.g - 3:
            return 0
        key = (ell, prime)
        if key not in self._c_dims:
            self._c_dims[key] = self.nullspace_c(ell, prime).shape[1]
        return self._c_dims[key]


def mu_matrix(m_or_f, ell: int, ctx: CurveContext, prime: int) -> KoszulMatrix:
    """Matrix of mu: wedge^{l-1}V (x) V_{D2} -> wedge^{l-1}V (x) V_{2D1}.

    The wedge factor is untouched; the monomial factor is multiplied by
    x^m (or by f for a CoefficientAssignment).
    """
    if isinstance(m_or_f, CoefficientAssignment):
        terms = list(m_or_f.items())
    else:
        terms = [(tuple(m_or_f), 1)]
    d2n = len(ctx.sctx.basis("D2"))
    t2n = len(ctx.sctx.basis("2D1"))
    n_sub = comb(ctx.g, ell - 1)
    entries = []
    for m, cval in terms:
        rmap = ctx.mu_row_map(m)
        v = cval % prime
        for s in range(n_sub):
            rb, cb = s * t2n, s * d2n
            for k in range(d2n):
                entries.append((rb + int(rmap[k]), cb + k, v))
    return KoszulMatrix(n_sub * t2n, n_sub * d2n, prime, entries)


def _mu_apply(ctx: CurveContext, ell: int, f: CoefficientAssignment,
              N: np.ndarray, prime: int) -> np.ndarray:
    """M = mu_f . N as a dense array over the bottom middle space."""
    t2n = len(ctx.sctx.basis("2D1"))
    d2n = len(ctx.sctx.basis("D2"))
    n_sub = comb(ctx.g, ell - 1)
    M = np.zeros((n_sub * t2n, N.shape[1]), dtype=np.int64)
    base = np.arange(n_sub, dtype=np.intp) * t2n
    for m, cval in f.items():
        perm = (base[:, None] + ctx.mu_row_map(m)[None, :]).ravel()
        M[perm] = (M[perm] + (cval % prime) * N) % prime
    return M


def induced_mu_rank(ell: int, f: CoefficientAssignment, ctx: CurveContext,
                    prime: int) -> int:
    """rank of mu_f: K_{l-1,1}(X;K,L) -> K_{l-1,2}(X,L) on cohomology."""
    g = ctx.g
    if ctx.c_dim(ell, prime) == 0 or ctx.c_dim(g - 1 - ell, prime) == 0:
        return 0
    N = ctx.nullspace_c(ell, prime)
    M = _mu_apply(ctx, ell, f, N, prime)
    check = ctx.bottom_right_signed(ell, prime) @ M
    if np.any(check % prime):
        raise ConsistencyFailureError(
            "mu_f image is not a cocycle of the bottom row")
    return ctx.cokernel(ell, prime).rank_rel(M)


def interior_mu_vanishing(ell: int, m: Point, ctx: CurveContext,
                          prime: int) -> bool:
    """Multiplication by an interior monomial is zero on cohomology."""
    f = CoefficientAssignment((tuple(m),), (1,), prime, mode="monomial")
    return induced_mu_rank(ell, f, ctx, prime) == 0


@dataclass
class InducedRankResult:
    ell: int
    r: int
    sample_ranks: dict = field(default_factory=dict)  # (trial, prime) -> rank
    skipped: bool = False

    @property
    def constant(self) -> bool:
        vals = set(self.sample_ranks.values())
        return len(vals) <= 1


@dataclass
class CurveBetti:
    g: int
    a: tuple
    b: tuple
    c: tuple
    r: dict  # ell -> InducedRankResult, ell = 1..(g-1)//2
    primes: tuple
    seed: object
    trials: int
    warnings: tuple
    surface: SurfaceBetti

    def as_dict(self) -> dict:
        return {
            "g": self.g,
            "a": list(self.a), "b": list(self.b), "c": list(self.c),
            "r": {str(ell): res.r for ell, res in sorted(self.r.items())},
            "primes": list(self.primes),
            "seeds": [str(self.seed)],
            "trials": self.trials,
            "warnings": list(self.warnings),
            "prime_agreement": self.surface.agree,
        }


def _sample_plan(delta, primes, trials, seed, mode, explicit_f):
    """(trial, prime) -> CoefficientAssignment for every scheduled sample."""
    plan = {}
    if explicit_f is not None:
        for p in primes:
            plan[(0, p)] = explicit_assignment(explicit_f, delta, p)
        return plan, 1
    for t in range(trials):
        for p in primes:
            plan[(t, p)] = sample_f(delta, p, f"{seed}:{t}", mode)
    return plan, trials


def curve_betti(delta: LatticePolygon, trials: int = 3,
                primes=DEFAULT_PRIMES, seed=None,
                budget: int = DEFAULT_BUDGET, boundary_only: bool = False,
                explicit_f: Optional[dict] = None, jobs: int = 1,
                ctx: Optional[CurveContext] = None) -> CurveBetti:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if ctx is None:
        ctx = CurveContext(delta, budget)
    if seed is None:
        seed = random.randrange(2 ** 48)
    g = ctx.g
    surface = surface_betti(ctx.sctx.delta1, primes, budget, jobs=jobs,
                            ctx=ctx.sctx)
    b, c = surface.b, surface.c

    def cval(ell: int) -> int:
        return c[ell - 1] if 1 <= ell <= g - 3 else 0

    def bval(ell: int) -> int:
        return b[ell - 1] if 1 <= ell <= g - 3 else 0

    mode = "boundary" if boundary_only else "full"
    plan, trials = _sample_plan(delta, primes, trials, seed, mode, explicit_f)
    warnings: list[str] = []
    results: dict[int, InducedRankResult] = {}
    active = [ell for ell in range(1, (g - 1) // 2 + 1)
              if cval(ell) and cval(g - 1 - ell)]
    for ell in active:
        # budget the per-sample pieces before any heavy assembly
        ctx.sctx.check_budget(ell - 1, "2D1", "3D1",
                              f"bottom-right differential l={ell}")

    def one_sample(ell, key):
        return induced_mu_rank(ell, plan[key], ctx, key[1])

    tasks = [(ell, key) for ell in active for key in plan]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            futs = {t: ex.submit(one_sample, *t) for t in tasks}
            ranks = {t: f.result() for t, f in futs.items()}
    else:
        ranks = {t: one_sample(*t) for t in tasks}

    for ell in range(1, (g - 1) // 2 + 1):
        if ell not in active:
            results[ell] = InducedRankResult(ell, 0, {}, skipped=True)
            continue
        samples = {key: ranks[(ell, key)] for key in plan}
        r = max(samples.values())
        res = InducedRankResult(ell, r, samples)
        if not res.constant:
            warnings.append(
                f"non-generic sample at l={ell}: ranks {sorted(set(samples.values()))}")
        results[ell] = res

    a = [0] * (g - 3)
    for ell in range(1, (g - 1) // 2 + 1):
        r = results[ell].r
        if 1 <= ell <= g - 3:
            a[ell - 1] = bval(ell) + cval(ell) - r
        mirror = g - 1 - ell
        if 1 <= mirror <= g - 3:
            a[mirror - 1] = bval(mirror) + cval(mirror) - r
    if any(x < 0 for x in a):
        raise ConsistencyFailureError(f"negative curve Betti number: {a}")
    if not surface.agree:
        warnings.append("prime disagreement in surface Betti numbers")
    return CurveBetti(g, tuple(a), b, c, results, tuple(primes), seed,
                      trials, tuple(warnings), surface)


@dataclass
class ConstancyReport:
    g: int
    histograms: dict  # ell -> {rank: count}
    varied: tuple  # ells whose samples disagree

    @property
    def constant(self) -> bool:
        return not self.varied


def constancy_experiment(delta: LatticePolygon, trials: int = 5,
                         primes=DEFAULT_PRIMES, seed=None,
                         budget: int = DEFAULT_BUDGET,
                         boundary_only: bool = False,
                         jobs: int = 1) -> ConstancyReport:
    """Histogram r_l over independent samples; flags any variation."""
    cb = curve_betti(delta, trials, primes, seed, budget, boundary_only,
                     jobs=jobs)
    histograms = {}
    varied = []
    for ell, res in sorted(cb.r.items()):
        hist: dict[int, int] = {}
        values = res.sample_ranks.values() if res.sample_ranks else [0]
        for v in values:
            hist[v] = hist.get(v, 0) + 1
        histograms[ell] = hist
        if len(hist) > 1:
            varied.append(ell)
    return ConstancyReport(cb.g, histograms, tuple(varied))
