"""Exact eigenstructure of polynomial matrices and row-completion feasibility.

Computes Smith forms, multiplicities at infinity and minimal indices over Q
or GF(p), decides whether a prescribed (partial) eigenstructure is
achievable by adding rows, and constructs witnesses where the theory is
constructive.
"""

from .fields import GF, QQ, FieldMismatchError, FieldTag, same_field
from .poly import Poly, poly_divides, poly_gcd, poly_lcm, poly_one, poly_s, poly_zero
from .homog import (
    HOMOG_ONE,
    HOMOG_ZERO,
    HomogPoly,
    chain_at,
    homog_deg,
    homog_divides,
    homog_lcm,
    homog_one,
    is_divisibility_chain,
)
from .sequences import gen_majorizes, majorizes, union_desc
from .matrix import (
    Eigenstructure,
    MinimalBasis,
    PolyMatrix,
    ZeroMatrixError,
    companion_form,
    companion_transform,
    degree_of,
    eigenstructure,
    infinite_multiplicities,
    minimal_indices,
    rank_of,
    reversal,
    smith_form,
    stack_rows,
)
from .feasibility import (
    CompletionTarget,
    ConstantMatrixError,
    FeasibilityReport,
    InvalidTargetError,
    build_gaps_col_form,
    build_gaps_row_form,
    check_existence,
    check_finite_only,
    check_full,
    check_hom_only,
    check_hom_plus_cols,
    check_hom_plus_rows,
    check_infinite_only,
    construct_d,
)
from .realize import (
    BudgetExceededError,
    ColumnSingular,
    Companion,
    InfinityBlock,
    RowSingular,
    SearchBudget,
    enumerate_targets,
    kronecker_block,
    realize_low_degree,
    search_completion,
)

__version__ = "1.0.0"

__all__ = [
    "GF",
    "QQ",
    "FieldMismatchError",
    "FieldTag",
    "same_field",
    "Poly",
    "poly_divides",
    "poly_gcd",
    "poly_lcm",
    "poly_one",
    "poly_s",
    "poly_zero",
    "HOMOG_ONE",
    "HOMOG_ZERO",
    "HomogPoly",
    "chain_at",
    "homog_deg",
    "homog_divides",
    "homog_lcm",
    "homog_one",
    "is_divisibility_chain",
    "gen_majorizes",
    "majorizes",
    "union_desc",
    "Eigenstructure",
    "MinimalBasis",
    "PolyMatrix",
    "ZeroMatrixError",
    "companion_form",
    "companion_transform",
    "degree_of",
    "eigenstructure",
    "infinite_multiplicities",
    "minimal_indices",
    "rank_of",
    "reversal",
    "smith_form",
    "stack_rows",
    "CompletionTarget",
    "ConstantMatrixError",
    "FeasibilityReport",
    "InvalidTargetError",
    "build_gaps_col_form",
    "build_gaps_row_form",
    "check_existence",
    "check_finite_only",
    "check_full",
    "check_hom_only",
    "check_hom_plus_cols",
    "check_hom_plus_rows",
    "check_infinite_only",
    "construct_d",
    "BudgetExceededError",
    "ColumnSingular",
    "Companion",
    "InfinityBlock",
    "RowSingular",
    "SearchBudget",
    "enumerate_targets",
    "kronecker_block",
    "realize_low_degree",
    "search_completion",
]
