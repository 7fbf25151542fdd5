"""Exact lattice geometry of LDP polygons and the number 12.

Builds duals, spanning fans, sails, Dedekind sums and reduction chains with
exact integer/rational arithmetic, and checks

    12 * sum_{n in P} (kappa_P(n) + 1)^2 = nvol(P) + nvol(P*)

together with its cone-by-cone refinement.
"""

from .corpus import normal_form, random_cone, random_ldp, reflexive_catalogue
from .dedekind import cone_lhs_closed_form, dedekind_sum, dedekind_sum_fast, sawtooth
from .fan import (
    CompleteUnimodularFan,
    Cone,
    Sail,
    cone_params,
    normal_form_cone,
    parallelogram_points,
    refined_fan,
    sail_complement_volume,
    sail_of,
    spanning_fan,
)
from .identity import (
    cone_lhs_direct,
    cone_rhs,
    dual_chain_sum,
    global_lhs,
    global_rhs,
    twelve_theorem_sum,
    verify_cone,
    verify_decomposition,
    verify_global,
)
from .lattice import apply_unimodular, det2, is_primitive, primitive_of
from .polygon import (
    Polygon,
    dual,
    is_ldp,
    is_reflexive,
    kappa,
    lattice_points,
    normalized_volume,
    polygon_from_points,
)
from .reduction import (
    ReductionStep,
    delta_lhs_formula,
    reduce_once,
    reduction_chain,
    verify_step,
)

__version__ = "0.1.0"
