"""Exact verification of twisted Frobenius extension structure on
finite-dimensional graded superalgebras."""

from ._kernels import BACKEND
from .fields import QQ, PrimeField, RationalField, field_from_string
from .gsalg import (Degree, GradedLinearMap, GradedSuperAlgebra, Report,
                    SubalgebraEmbedding, centralizer, check_automorphism,
                    ground_field_algebra, homogeneous_invertibles_are_scalars,
                    validate_algebra)
from .frobenius import (FrobeniusAlgebraData, check_frobenius, make_trace,
                        nakayama_automorphism, right_dual_basis)
from .extension import (TraceMap, check_left_trace, check_right_trace,
                        data_uniqueness_witness, find_dual_generators,
                        find_projective_basis, induced_trace,
                        is_twisted_frobenius, nakayama_explicit,
                        nakayama_isomorphism, trace_uniqueness_witness,
                        verify_dual_generators)
from .adjunction import (build_t1, build_t2, check_counit,
                         check_triangle_identities, check_unit)

__all__ = [
    "BACKEND", "QQ", "PrimeField", "RationalField", "field_from_string",
    "Degree", "GradedLinearMap", "GradedSuperAlgebra", "Report",
    "SubalgebraEmbedding", "centralizer", "check_automorphism",
    "ground_field_algebra", "homogeneous_invertibles_are_scalars",
    "validate_algebra", "FrobeniusAlgebraData", "check_frobenius",
    "make_trace", "nakayama_automorphism", "right_dual_basis", "TraceMap",
    "check_left_trace", "check_right_trace", "data_uniqueness_witness",
    "find_dual_generators", "find_projective_basis", "induced_trace",
    "is_twisted_frobenius", "nakayama_explicit", "nakayama_isomorphism",
    "trace_uniqueness_witness", "verify_dual_generators", "build_t1",
    "build_t2", "check_counit", "check_triangle_identities", "check_unit",
]

__version__ = "0.1.0"
