"""zonolat: exact-arithmetic toolkit for primitive lattice zonotopes.

Counts primitive lattice points of q-norm balls (by direct enumeration and
by Moebius sieve), builds primitive zonotopes and their exact metrics,
certifies that zonotope graph diameters equal generator counts, searches
for the largest zonotope diameter in a box, and evaluates the asymptotic
constants the normalized counts converge to.
"""

from .asymptotics import (
    ConvergenceRow,
    DiameterBounds,
    TableKind,
    ball_volume,
    box_ratio_limit,
    convergence_table,
    diameter_ratio_limit,
    growth_constant,
    known_diameter_bounds,
    orthant_ratio_limit,
)
from .errors import (
    DomainError,
    InvariantViolationError,
    ResourceLimitError,
    UnsupportedRegionError,
)
from .extremal import ExtremalResult, brute_force_max_diameter, special_box_optimum
from .graph import ZonotopeGraph, build_graph, feasible_sign_vectors, graph_diameter
from .number_theory import MobiusTable, faulhaber_sum, gamma_pos, mobius_sieve, zeta
from .primitive import (
    INF,
    CountReport,
    Region,
    canonical_sign,
    count_by_enumeration,
    count_orthant_interior,
    count_primitive,
    count_primitive_sieve,
    enumerate_primitive,
    is_primitive,
    lattice_count_ball,
)
from .zonotope import (
    Dominance,
    GeneratorSet,
    ZonotopeMetrics,
    counted_metrics,
    dominance_check,
    metrics,
    norm_sum_identity,
    positive_primitive_zonotope,
    primitive_zonotope,
)

__version__ = "0.1.0"
