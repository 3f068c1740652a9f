"""Exact computation of the compatible-automorphism group of the degree-5
Whitehead sequence of a 2-connected, 6-dimensional CW complex."""

from .errors import (
    BudgetExceeded,
    HypothesisViolation,
    NotAChainComplex,
    NotAutomorphism,
    NotInducible,
    NotWellDefined,
    ShapeMismatch,
    UnsupportedRank,
    Wes6Error,
)
from .backend import BACKEND, HAVE_COMPILED
from .matrices import IntMatrix, SnfResult, snf, unimodular_inverse
from .groups import (
    DirectSum,
    Element,
    FgAbGroup,
    Homomorphism,
    TRIVIAL,
    aut_group,
    cokernel,
    compose,
    direct_sum,
    group_from_relations,
    image,
    inverse_hom,
    is_automorphism,
    kernel,
    solve_mod,
    subgroup_from_columns,
)
from .functors import (
    ExtClass,
    classify_extension,
    ext_classes,
    ext_group,
    ext_pullback,
    ext_pushforward,
    extension_group_from_class,
    h2_integral,
    h2_integral_map,
    lambda2,
    lambda2_map,
    tensor_z2,
    tensor_z2_map,
    tor_z2,
)
from .wes import (
    GammaTuple,
    WesData,
    build_wes_data,
    coker_b6,
    gamma5,
    gamma5_decomposition,
    gamma_of,
    gamma_tilde,
    homology_of_complex,
    identity_tuple,
    is_gamma_automorphism,
    validate,
    validate_ok,
    wes_report,
)
from .enumeration import (
    GroupTable,
    OracleReport,
    abelian_structure_from_orders,
    all_tuples,
    gamma_s_group,
    oracle_compare,
    oracle_membership,
)

__version__ = "0.1.0"
