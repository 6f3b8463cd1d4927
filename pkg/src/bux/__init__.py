"""Exact GF(2) and integer characteristic-map invariants of simplicial complexes."""

__version__ = "0.1.0"

from .budget import Budget, SearchExhausted, default_budget
from .coloring import Bounds, chromatic_bounds, chromatic_number, is_proper_coloring, is_q_regular
from .complex import (
    SimplicialComplex,
    VertexMap,
    boundary_of_simplex,
    build_complex,
    complete_graph,
    cycle_graph,
    dimension,
    exists_nondegenerate_map,
    grotzsch_graph,
    is_nondegenerate_map,
    join,
    link,
    path_graph,
    petersen_graph,
    points,
    simplex,
    simplex_skeleton,
    skeleton,
)
from .gf2 import GF2Field, enumerate_nonzero, gf2q_mul, in_hyperplane, is_independent, rank, scalar_action
from .goodpairs import (
    GoodPair,
    double_shift,
    double_shift_literal,
    is_good_pair,
    push_into_hyperplane,
    shadow,
    t_mix,
    t_one,
    verify_complete_join_additivity,
)
from .invariants import (
    CharMapGF2,
    CharMapInt,
    LiftError,
    certify_int_upper,
    gamma_q,
    gamma_q_bounds,
    gamma_q_universal,
    invariant_report,
    is_characteristic_gf2,
    is_characteristic_int,
    is_optimal,
    obstruction_lower_bound,
    r_bounds,
    r_real,
    s_real,
    search_char_map_gf2,
    spread_coloring,
    verify_counterexample,
)
from .lattice import is_primitive, is_unimodular_set, lift_01, max_abs_det_01, mod2_reduce
from .universal import (
    is_simplex_int,
    is_simplex_real,
    join_embedding,
    link_equivalence_maps,
    real_universal_skeleton,
    reduction_map,
)
