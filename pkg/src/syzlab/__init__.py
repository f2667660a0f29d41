"""Graded Betti tables of toric surfaces and of the canonical curves on
them, computed by exact Koszul-cohomology linear algebra modulo primes,
plus the combinatorial invariants and theorem-level checks around them."""

__version__ = "0.1.0"

from .checks import (CliffordPrediction, PredicateReport, clifford_prediction,
                     conjecture2_check, duality_identity_check, genus,
                     green_check, hering_schenck_check,
                     six_term_exactness_check, theorem2_hypotheses)
from .curves import (CoefficientAssignment, CurveBetti, CurveContext,
                     constancy_experiment, curve_betti, induced_mu_rank,
                     interior_mu_vanishing, mu_matrix, sample_f)
from .enumeration import (enumerate_polygon_classes, interior_polygon_classes,
                          lemma4_scan, reflexive_classes)
from .errors import (BudgetExceededError, ConsistencyFailureError,
                     DegenerateInteriorError, PolygonInputError,
                     RegionMismatchError, SyzlabError)
from .fans import (Fan, ResolutionResult, ToricDivisor,
                   anticanonical_lattice_points, divisor_polygon,
                   fujita_check, is_gorenstein_weak_fano, is_reflexive,
                   minimal_resolution, minkowski_point_sum_surjective,
                   normal_fan, polygon_divisor, resolve_cone)
from .geometry import (LatticePolygon, UnimodularAffineMap, boundary_count,
                       canonical_form, detect_special, dilate, equivalent,
                       interior_hull, lattice_points, lattice_width, move_out,
                       polygon_from_vertex_list, sigma, upsilon)
from .koszul import (DEFAULT_BUDGET, SurfaceBetti, SurfaceContext,
                     koszul_differential, surface_betti)
from .laurent import LaurentParseError, parse_laurent
from .linalg import BACKEND, DEFAULT_PRIMES, KoszulMatrix, rank_mod_p
