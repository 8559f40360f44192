"""Exact coefficient fields, q-combinatorics and linear algebra."""
from .linalg import Matrix, kernel, rank, row_space_basis
from .qcomb import (
    q_binomial,
    q_binomial_a,
    q_binomial_a_product,
    q_bracket_a,
    q_factorial,
    q_factorial_a,
    q_int,
    zeta_sqrt,
)
from .render import render_scalar, scalar_from_json, scalar_to_json
from .scalars import (
    GENERIC,
    CyclotomicField,
    CyclotomicNumber,
    Field,
    FieldMismatch,
    GenericField,
    RationalFunction,
    Scalar,
    cyclotomic_field,
    cyclotomic_polynomial,
    field_for,
)
from .sqrt import field_sqrt

__all__ = [
    "GENERIC",
    "CyclotomicField",
    "CyclotomicNumber",
    "Field",
    "FieldMismatch",
    "GenericField",
    "Matrix",
    "RationalFunction",
    "Scalar",
    "cyclotomic_field",
    "cyclotomic_polynomial",
    "field_for",
    "field_sqrt",
    "kernel",
    "q_binomial",
    "q_binomial_a",
    "q_binomial_a_product",
    "q_bracket_a",
    "q_factorial",
    "q_factorial_a",
    "q_int",
    "rank",
    "render_scalar",
    "row_space_basis",
    "scalar_from_json",
    "scalar_to_json",
    "zeta_sqrt",
]
