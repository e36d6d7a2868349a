"""Exact lattice volumes and degrees for claw-tree group-based models.

The package builds the 0/1 model polytopes for the groups Z2, Z2xZ2, and
Z3 on an n-claw tree, and computes their normalized lattice volume three
independent ways: closed-form formulas, arithmetic assembly from cut-piece
volumes, and brute-force exact geometry (vertex enumeration plus placing
triangulation over the rationals).
"""

from .clawpoly import (
    MINUS,
    PLUS,
    OddSubsetCut,
    ambient,
    ambient_dim,
    cut_halfspace,
    facet_cuts,
    facets,
    lattice,
    model_lattice_index,
    subset_cut,
    tuple_cut,
    vertices,
)
from .cuts import (
    CutSpec,
    LEMMA_IDS,
    LemmaClaim,
    assemble,
    check_lemma,
    cut_piece,
    lemma_claims,
    piece_volume,
    run_lemma,
)
from .formulas import FORMULA_TAGS, FormulaError, cut_formula, degree, degree_table
from .geometry import (
    GeometryError,
    GuardRailError,
    HPolytope,
    HalfSpace,
    LatticeBasis,
    RankDeficientError,
    UnboundedError,
    VPolytope,
    affine_dim,
    lattice_index,
    point_in_hull,
    vertex_enumeration,
    vh_consistent,
)
from .groups import (
    GROUPS,
    Group,
    SymmetryAction,
    Z2,
    Z2xZ2,
    Z3,
    apply_action,
    group_by_name,
    random_action,
    zero_sum_tuples,
)
from .verify import METHODS, degree_by_method, verify_degree
from .volume import (
    Triangulation,
    join_product,
    join_product_many,
    lattice_volume,
    triangulate,
)

__version__ = "0.1.0"

__all__ = [
    "MINUS", "PLUS", "OddSubsetCut", "ambient", "ambient_dim",
    "cut_halfspace", "facet_cuts", "facets", "lattice",
    "model_lattice_index", "subset_cut", "tuple_cut", "vertices",
    "CutSpec", "LEMMA_IDS", "LemmaClaim", "assemble", "check_lemma",
    "cut_piece", "lemma_claims", "piece_volume", "run_lemma",
    "FORMULA_TAGS", "FormulaError", "cut_formula", "degree", "degree_table",
    "GeometryError", "GuardRailError", "HPolytope", "HalfSpace",
    "LatticeBasis", "RankDeficientError", "UnboundedError", "VPolytope",
    "affine_dim", "lattice_index", "point_in_hull", "vertex_enumeration",
    "vh_consistent",
    "GROUPS", "Group", "SymmetryAction", "Z2", "Z2xZ2", "Z3",
    "apply_action", "group_by_name", "random_action", "zero_sum_tuples",
    "METHODS", "degree_by_method", "verify_degree",
    "Triangulation", "join_product", "join_product_many",
    "lattice_volume", "triangulate",
    "__version__",
]
