"""Exact toolkit for balanced, maximum and minimum weighted biclique problems.

Solvers, feasible-set enumeration, 1-skeleton and cone-graph construction with
exact LP adjacency oracles, the explicit clique families with their
certificate weights, and the hardness reductions as instance transformers.
"""

from .core import (
    INF,
    Biclique,
    BicliqueError,
    BipartiteGraph,
    FeasibleSet,
    InstanceError,
    InvalidBicliqueError,
    Kind,
    ParameterError,
    Sense,
    characteristic_vector,
    enumerate_balanced,
    enumerate_unbalanced,
    weight_of,
)
from .families import (
    cert_common_part,
    cert_disjoint_parts,
    cert_min_family,
    certify_family,
    family_balanced,
    family_max,
    family_min,
    nonadjacency_witness,
)
from .matching import (
    UnweightedBipartiteGraph,
    max_independent_set,
    max_matching,
    max_unbalanced_biclique_unweighted,
    min_vertex_cover,
)
from .reductions import bcbs_to_maxwcbs, bcbs_to_wbcbs, minwcbs_to_qcover, normalize_weights
from .skeleton import (
    Domain,
    Method,
    adjacent_balanced_criterion,
    adjacent_midpoint_lp,
    build_skeleton,
    cone_adjacent_margin,
    max_clique,
)
from .solvers import Solution, brute_force_oracle, solve_maxwcbs, solve_minwcbs, solve_wbcbs

__version__ = "0.1.0"
