"""Exact computations on character varieties of punctured spheres: trace
coordinates, compactified representation varieties, GIT stability and
boundary complexes."""

from .algebra import Matrix, Polynomial, poly_equal, poly_eval, smith_normal_form
from .compactified import (
    CompactifiedMatrix,
    Configuration,
    EigenvalueData,
    P1P1Point,
    is_generic,
    matrix_to_p1p1,
    p1p1_to_matrix,
    star_product,
    trace_condition,
)
from .complexes import build_complex, certify_sphere, homology, boundary_complex, suspension
from .invariants import PartitionTuple, dimension, fit_sl3_relation, fk_coordinates, fk_cubic
from .stability import classify_stability, hm_mu, one_ps_limit, stability_oracle

__all__ = [
    "CompactifiedMatrix", "Configuration", "EigenvalueData", "Matrix", "P1P1Point",
    "PartitionTuple", "Polynomial", "build_complex", "certify_sphere", "classify_stability",
    "dimension", "fit_sl3_relation", "fk_coordinates", "fk_cubic", "hm_mu", "homology",
    "is_generic", "matrix_to_p1p1", "one_ps_limit", "p1p1_to_matrix", "boundary_complex",
    "poly_equal", "poly_eval", "smith_normal_form", "stability_oracle", "star_product",
    "suspension", "trace_condition",
]
