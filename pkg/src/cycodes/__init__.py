"""Cyclic constant dimension subspace codes from subspace polynomials."""

from ._backend import active_backend
from .errors import (
    CapExceeded,
    CompositeCharacteristic,
    ConditionViolated,
    CycodesError,
    DivisionByZero,
    GcdViolation,
    IncompatibleFields,
    NotMonic,
    ReduciblePolynomial,
    SplittingFieldNotContained,
    ZeroCoefficient,
    ZeroShift,
)
from .ffield import (
    FieldContext,
    FieldElement,
    context_from_spec,
    context_to_spec,
    embed,
    extend,
    prime_field,
)
from .linalg import MatrixFq, kernel, matrix_of_linear_map, rank, rref
from .linpoly import (
    LinearizedPoly,
    SkewQuotRem,
    annihilator,
    binomial_splitting_degree,
    evaluate,
    is_subspace_polynomial,
    root_space,
    skew_divmod,
    skew_mul,
    splitting_degree,
)
from .subspace import Subspace, cyclic_shift, distance, intersect, shift_polynomial
from .codes import (
    CertReport,
    CodeSpec,
    OrbitCode,
    SplitMix64,
    build_code,
    build_combined_code,
    build_spread_code,
    build_trinomial_code,
    certify_exact,
    certify_sampled,
    check_union_condition,
    enumerate_orbit,
)

__version__ = "0.1.0"

__all__ = [
    "active_backend",
    "CycodesError", "CompositeCharacteristic", "ReduciblePolynomial",
    "IncompatibleFields", "DivisionByZero", "NotMonic", "ZeroCoefficient",
    "ZeroShift", "GcdViolation", "SplittingFieldNotContained",
    "ConditionViolated", "CapExceeded",
    "FieldContext", "FieldElement", "prime_field", "extend", "embed",
    "context_from_spec", "context_to_spec",
    "MatrixFq", "rref", "rank", "kernel", "matrix_of_linear_map",
    "LinearizedPoly", "SkewQuotRem", "evaluate", "skew_mul", "skew_divmod",
    "is_subspace_polynomial", "splitting_degree", "binomial_splitting_degree",
    "root_space", "annihilator",
    "Subspace", "intersect", "distance", "cyclic_shift", "shift_polynomial",
    "CodeSpec", "OrbitCode", "CertReport", "SplitMix64",
    "check_union_condition", "build_trinomial_code", "build_spread_code",
    "build_combined_code", "build_code", "enumerate_orbit",
    "certify_exact", "certify_sampled",
]
