"""Saxl graphs of finite transitive permutation groups with a base of size two."""

from __future__ import annotations

from importlib.metadata import PackageNotFoundError, version as _version

try:
    __version__ = _version("artifact")
except PackageNotFoundError:  # running from a source tree
    __version__ = "0.0.0"

from .actions import (GroupAction, PrimeOrderProfile, coset_action, direct_product_action, distinguishing_number,
                      minimal_block_systems, natural_action, prime_order_profile, suborbits, wreath_product_action)
from .constructions import FAMILIES, FamilyInstance, construct
from .fields import GF, FiniteField
from .graphs import Graph, ReferenceGraph, are_isomorphic, find_isomorphism
from .invariants import (InvariantReport, chromatic_number, clique_number, common_neighbour_verify,
                         compute_invariants, connected_components, diameter, find_hamiltonian_cycle,
                         independence_number, is_eulerian, matches_reference, max_minimal_base,
                         self_complementary_check, total_domination_number)
from .perm import Permutation, PermutationGroup, Subgroup, parse_permutation
from .probability import ProbabilityReport, probability_report, q2_exact, q2_threshold_t, qhat, star_criterion
from .saxl import SaxlGraph, base_profile, build_saxl, is_base, wreath_base_check

__all__ = [
    "__version__",
    "Permutation", "PermutationGroup", "Subgroup", "parse_permutation",
    "GroupAction", "natural_action", "coset_action", "direct_product_action", "wreath_product_action",
    "suborbits", "minimal_block_systems", "distinguishing_number", "PrimeOrderProfile", "prime_order_profile",
    "SaxlGraph", "build_saxl", "is_base", "base_profile", "wreath_base_check",
    "Graph", "ReferenceGraph", "find_isomorphism", "are_isomorphic",
    "InvariantReport", "compute_invariants", "connected_components", "diameter", "is_eulerian",
    "find_hamiltonian_cycle", "common_neighbour_verify", "clique_number", "independence_number",
    "chromatic_number", "total_domination_number", "max_minimal_base", "matches_reference",
    "self_complementary_check",
    "ProbabilityReport", "probability_report", "q2_exact", "qhat", "q2_threshold_t", "star_criterion",
    "FamilyInstance", "FAMILIES", "construct",
    "FiniteField", "GF",
]
