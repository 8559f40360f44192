"""Coalgebra structure, skew pairing and the double crossproduct."""
from .coproduct import (
    antipode,
    antipode_on_leg,
    comultiply,
    counit,
    counit_on_leg,
    delta_on_leg,
    multiply_legs,
)
from .tensor import TensorElement, tensor_multiply
from .axioms import hopf_axiom_failures, pair_axiom_failures, random_elements, single_axiom_failures
from .double import (
    CentralParameter,
    double_multiply,
    double_pair,
    eps_z,
    eps_z_relation_failures,
    eps_z_value,
    pi_z,
    pi_z_relation_failures,
    presentation_mismatches,
    project_pi,
    to_dphi,
)
from .pairing import NORMALIZATIONS, SkewPairing, axiom_failures, get_pairing, pairing, pairing_inverse

__all__ = [
    "single_axiom_failures",
    "random_elements",
    "pair_axiom_failures",
    "hopf_axiom_failures",
    "NORMALIZATIONS",
    "CentralParameter",
    "SkewPairing",
    "TensorElement",
    "antipode",
    "antipode_on_leg",
    "axiom_failures",
    "comultiply",
    "counit",
    "counit_on_leg",
    "delta_on_leg",
    "double_multiply",
    "double_pair",
    "eps_z",
    "eps_z_relation_failures",
    "eps_z_value",
    "get_pairing",
    "multiply_legs",
    "pairing",
    "pairing_inverse",
    "pi_z",
    "pi_z_relation_failures",
    "presentation_mismatches",
    "project_pi",
    "tensor_multiply",
    "to_dphi",
]
