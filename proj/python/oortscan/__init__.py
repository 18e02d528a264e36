"""Oort group classification for cyclic-by-p groups."""

from ._oortscan import (
    BadParameters,
    CapExceeded,
    OortscanError,
    ParseError,
    UnknownScenario,
    artin_schreier_genus,
    classify,
    classify_spec,
    corpus,
    different_exponent,
    forbidden_fixture,
    group_order,
    hasse_arf_check,
    make,
    recognize,
    scenario,
    scenario_names,
    subgroup_count,
    tame_genus,
    upper_jumps,
    wild_genus,
)

__all__ = [
    "BadParameters",
    "CapExceeded",
    "OortscanError",
    "ParseError",
    "UnknownScenario",
    "artin_schreier_genus",
    "classify",
    "classify_spec",
    "corpus",
    "different_exponent",
    "forbidden_fixture",
    "group_order",
    "hasse_arf_check",
    "make",
    "recognize",
    "scenario",
    "scenario_names",
    "subgroup_count",
    "tame_genus",
    "upper_jumps",
    "wild_genus",
]
