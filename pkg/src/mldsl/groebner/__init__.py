from .buchberger import Engine, buchberger, normal_form, s_polynomial
from .context import Budget, BudgetExceeded, GBStats, computation, current_stats
from .ideal import Ideal, groebner_basis
from .ops import (
    NotZeroDimensional, dimension, eliminate, intersect, projective_dimension, quotient_basis_size,
    radical_membership, same_variety, saturate, saturate_by_ideal, saturate_by_variables, standard_monomials,
    variety_contains,
)

__all__ = [
    "Budget", "BudgetExceeded", "Engine", "GBStats", "Ideal", "NotZeroDimensional", "buchberger", "computation",
    "current_stats", "dimension", "eliminate", "groebner_basis", "intersect", "normal_form",
    "projective_dimension", "quotient_basis_size", "radical_membership", "s_polynomial", "same_variety",
    "saturate", "saturate_by_ideal", "saturate_by_variables", "standard_monomials", "variety_contains",
]
