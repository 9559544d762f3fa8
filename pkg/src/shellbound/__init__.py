"""Graded face lattices of regular CW spheres and balls: shelling search
and verification, and exact face-number lower bounds."""

from .errors import (
    BudgetExceeded,
    CyclicCovers,
    EmptyInput,
    HypothesisNotMet,
    IndexOutOfRange,
    InputError,
    InternalContradiction,
    InvalidFace,
    InvalidSplit,
    LatticeBuildError,
    MixedDimensions,
    NoBottom,
    NoSuchAtom,
    NoTop,
    NotAShelling,
    NotDiamond,
    NotGraded,
    NotPseudomanifold,
    NotShellable,
    NotSimplicial,
    PreconditionViolated,
    RangeError,
    RankOutOfRange,
    ShellboundError,
)
from .lattice import (
    BOTTOM_ID,
    TOP_ID,
    FaceLattice,
    FaceSet,
    FVector,
    Subcomplex,
    atom_avoiding_coatom,
    boundary_complex,
    build_lattice,
    closure,
    dualize,
    f_vector,
    from_facets,
    interior,
    is_diamond,
    is_lattice,
    is_pseudomanifold,
    is_pure,
    lattice_from_json_dict,
    lattice_to_json_dict,
    parse_facet_text,
    sub_lattice,
    upper_interval_count,
)
from .shelling import (
    DEFAULT_BUDGET,
    EMPTY_INTERSECTION,
    NO_PREFIX_SHELLING,
    NOT_PURE,
    SearchBudget,
    Shape,
    ShellingCertificate,
    ShellingFailure,
    ShellingOrder,
    ShellingStep,
    boundary_intersection,
    classify,
    clear_search_memo,
    find_shelling,
    is_cl_shellable,
    is_dual_cl_shellable,
    is_shelling,
)
from .bounds import (
    BoundsReport,
    CorollaryReport,
    FacetSplit,
    PerFacetBound,
    RhoCoefficient,
    SplitCountResult,
    SplitDecomposition,
    SplitPair,
    WitnessPair,
    barany_check,
    binomial_split_lb,
    check_split_count,
    corollary_bounds,
    facet_decomposition,
    find_witness_pair,
    is_simplicial,
    rho,
    simplicial_equality_identity,
    split_complexes,
    vandermonde_check,
    verify_lower_bound,
)
from .generators import (
    GubtReport,
    GubtRow,
    cross_polytope,
    cyclic_boundary,
    gubt_compare,
    hypercube_boundary,
    ngon,
    punctured,
    simplex_boundary,
)

__version__ = "0.1.0"

__all__ = [
    "BOTTOM_ID",
    "TOP_ID",
    "DEFAULT_BUDGET",
    "EMPTY_INTERSECTION",
    "NOT_PURE",
    "NO_PREFIX_SHELLING",
    "BoundsReport",
    "BudgetExceeded",
    "CorollaryReport",
    "CyclicCovers",
    "EmptyInput",
    "FVector",
    "FaceLattice",
    "FaceSet",
    "FacetSplit",
    "GubtReport",
    "GubtRow",
    "HypothesisNotMet",
    "IndexOutOfRange",
    "InputError",
    "InternalContradiction",
    "InvalidFace",
    "InvalidSplit",
    "LatticeBuildError",
    "MixedDimensions",
    "NoBottom",
    "NoSuchAtom",
    "NoTop",
    "NotAShelling",
    "NotDiamond",
    "NotGraded",
    "NotPseudomanifold",
    "NotShellable",
    "NotSimplicial",
    "PerFacetBound",
    "PreconditionViolated",
    "RangeError",
    "RankOutOfRange",
    "RhoCoefficient",
    "SearchBudget",
    "Shape",
    "ShellboundError",
    "ShellingCertificate",
    "ShellingFailure",
    "ShellingOrder",
    "ShellingStep",
    "SplitCountResult",
    "SplitDecomposition",
    "SplitPair",
    "Subcomplex",
    "WitnessPair",
    "atom_avoiding_coatom",
    "barany_check",
    "binomial_split_lb",
    "boundary_complex",
    "boundary_intersection",
    "build_lattice",
    "check_split_count",
    "classify",
    "clear_search_memo",
    "closure",
    "corollary_bounds",
    "cross_polytope",
    "cyclic_boundary",
    "dualize",
    "f_vector",
    "facet_decomposition",
    "find_shelling",
    "find_witness_pair",
    "from_facets",
    "gubt_compare",
    "hypercube_boundary",
    "interior",
    "is_cl_shellable",
    "is_diamond",
    "is_dual_cl_shellable",
    "is_lattice",
    "is_pseudomanifold",
    "is_pure",
    "is_shelling",
    "is_simplicial",
    "lattice_from_json_dict",
    "lattice_to_json_dict",
    "ngon",
    "parse_facet_text",
    "punctured",
    "rho",
    "simplex_boundary",
    "simplicial_equality_identity",
    "split_complexes",
    "sub_lattice",
    "upper_interval_count",
    "vandermonde_check",
    "verify_lower_bound",
]
