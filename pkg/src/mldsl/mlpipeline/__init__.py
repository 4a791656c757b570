from .geometry import (
    GeometryContext, MLDegreeError, PipelineError, build_context, codimension, codimension_of, conormal,
    conormal_ideal, data_singular_locus, dual_variety, extended_likelihood, hadamard_minors, hadamard_product,
    jacobian, minors, ml_degree, ml_degree_stable, point_ideal, raw_conormal, raw_dual, singular_ideal,
    singular_locus,
)
from .model import LikelihoodRing, ModelError, ModelSpec, primal_ring
from .theorem import (
    TheoremReport, TheoremViolation, expected_hadamard_dimension, lower_bound, theorem_check, upper_bound,
)

__all__ = [
    "GeometryContext", "LikelihoodRing", "MLDegreeError", "ModelError", "ModelSpec", "PipelineError",
    "TheoremReport", "TheoremViolation", "build_context", "codimension", "codimension_of", "conormal",
    "conormal_ideal", "data_singular_locus", "dual_variety", "expected_hadamard_dimension",
    "extended_likelihood", "hadamard_minors", "hadamard_product", "jacobian", "lower_bound", "minors",
    "ml_degree", "ml_degree_stable", "point_ideal", "primal_ring", "raw_conormal", "raw_dual",
    "singular_ideal", "singular_locus", "theorem_check", "upper_bound",
]
