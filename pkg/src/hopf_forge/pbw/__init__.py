"""Presentations, PBW normal forms and multiplication."""
from .algebra import (
    KINDS,
    ONE_MONO,
    SYMBOLS,
    Algebra,
    AlgebraError,
    Element,
    Mono,
    get_algebra,
    linear_combination,
    mono,
    mono_parts,
    multiply,
    normal_form,
)
from .checks import (
    braiding_exponent,
    central_check,
    defining_relations,
    derived_relations,
    element_grades,
    enumerate_basis,
    grade,
    qcommutator_check,
    relation_words,
    serre_elements,
)
from .oracle import OracleError, all_words, oracle_normal_form
from .render import render_element, render_mono
from .serialize import element_from_json, element_to_json, mono_from_json, mono_to_json

__all__ = [
    "KINDS",
    "ONE_MONO",
    "SYMBOLS",
    "Algebra",
    "AlgebraError",
    "Element",
    "Mono",
    "OracleError",
    "all_words",
    "braiding_exponent",
    "central_check",
    "defining_relations",
    "derived_relations",
    "element_from_json",
    "element_grades",
    "element_to_json",
    "enumerate_basis",
    "get_algebra",
    "grade",
    "linear_combination",
    "mono",
    "mono_from_json",
    "mono_parts",
    "mono_to_json",
    "multiply",
    "normal_form",
    "oracle_normal_form",
    "qcommutator_check",
    "relation_words",
    "render_element",
    "render_mono",
    "serre_elements",
]
