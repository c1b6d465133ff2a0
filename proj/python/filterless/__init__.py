"""Interference graphs of requests on bidirected trees."""

from ._core import (
    Coloring,
    FilterlessError,
    Instance,
    chi_bound_root,
    color_2approx,
    color_2omega,
    decide,
    digraph_arcs,
    generate,
    greedy_mis_color,
    interferes,
    is_proper,
    max_clique,
    max_independent_set,
    oracle_alpha,
    oracle_chi,
    oracle_omega,
    parse_instance,
    reduce,
    serialize_instance,
)

__all__ = [
    "Coloring",
    "FilterlessError",
    "Instance",
    "chi_bound_root",
    "color_2approx",
    "color_2omega",
    "decide",
    "digraph_arcs",
    "generate",
    "greedy_mis_color",
    "interferes",
    "is_proper",
    "max_clique",
    "max_independent_set",
    "oracle_alpha",
    "oracle_chi",
    "oracle_omega",
    "parse_instance",
    "reduce",
    "serialize_instance",
]
