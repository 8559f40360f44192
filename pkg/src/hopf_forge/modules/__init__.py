"""Verma modules, simple modules, tensor products and pullbacks."""
from .character import Character, signed_q_power, weight_character
from .module import (
    DecompositionReport,
    MatrixModule,
    ModuleError,
    build_L,
    build_V_u,
    build_verma_u,
    cg_weights,
    classify_highest_weight_module,
    clebsch_gordan,
    example_module,
    find_hw_vectors,
    generated_submodule,
    is_simple,
    module_axiom_check,
    module_from_json,
    module_to_json,
    one_dim_module,
    pullback_z,
    tensor,
    twist_check,
    weight_spaces,
)
from .verma import (
    FreeVermaVector,
    check_filtration_component,
    check_highest_weight,
    filtration_character,
    hw_vector_vn,
    in_maximal_submodule,
    is_weight_vector,
    kernel_of_E1_in_verma,
    v_reducibility_witness,
    verma_act,
    verma_act_word,
    weight_of_index,
    weight_space_basis_vectors,
    weight_space_dimension,
    weight_space_monomials,
    window_intertwiners,
)

__all__ = [
    "Character",
    "DecompositionReport",
    "FreeVermaVector",
    "MatrixModule",
    "ModuleError",
    "build_L",
    "build_V_u",
    "build_verma_u",
    "cg_weights",
    "classify_highest_weight_module",
    "check_filtration_component",
    "check_highest_weight",
    "clebsch_gordan",
    "example_module",
    "filtration_character",
    "find_hw_vectors",
    "generated_submodule",
    "hw_vector_vn",
    "in_maximal_submodule",
    "is_simple",
    "is_weight_vector",
    "kernel_of_E1_in_verma",
    "module_axiom_check",
    "module_from_json",
    "module_to_json",
    "one_dim_module",
    "pullback_z",
    "signed_q_power",
    "tensor",
    "twist_check",
    "v_reducibility_witness",
    "verma_act",
    "verma_act_word",
    "weight_character",
    "weight_of_index",
    "weight_space_basis_vectors",
    "weight_space_dimension",
    "weight_space_monomials",
    "window_intertwiners",
    "weight_spaces",
]
