"""Idempotents of the small quantum groups and the decomposition of u1."""
from .core import (
    CONGRUENCE_MATRIX,
    DEFAULT_MAX_L,
    IdempotentSolution,
    QuadraticSystem,
    build_system,
    congruence_holds,
    congruence_solve,
    e_K1,
    e_K2,
    flip,
    group_idempotents,
    idempotent_element,
    k_inverse_bracket,
    fe_commutation_rhs,
    solve_idempotents,
    structure_constant,
)
from .regular import (
    Decomposition,
    RegularData,
    Summand,
    decompose_regular_u1,
    head_of,
    is_primitive,
    left_ideal_dimension,
    left_matrix,
    radical_trace_form,
    regular_representation,
    semisimple_dimension,
    simple_modules_check,
    simple_u1_module,
)

__all__ = [
    "CONGRUENCE_MATRIX",
    "DEFAULT_MAX_L",
    "Decomposition",
    "IdempotentSolution",
    "QuadraticSystem",
    "RegularData",
    "Summand",
    "build_system",
    "congruence_holds",
    "congruence_solve",
    "decompose_regular_u1",
    "e_K1",
    "e_K2",
    "flip",
    "group_idempotents",
    "head_of",
    "idempotent_element",
    "is_primitive",
    "k_inverse_bracket",
    "fe_commutation_rhs",
    "left_ideal_dimension",
    "left_matrix",
    "radical_trace_form",
    "regular_representation",
    "semisimple_dimension",
    "simple_modules_check",
    "simple_u1_module",
    "solve_idempotents",
    "structure_constant",
]
