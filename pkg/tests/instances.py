"""Small bundled instances shared by the oracle tests (all with |G| small enough to enumerate)."""

from __future__ import annotations

from saxlgraph.catalog import load_group, load_subgroup
from saxlgraph.constructions import (FamilyInstance, agl1_on_cosets, cp_wr_c2, cyclic_regular, extraspecial_example,
                                     gl2_on_unipotent_cosets, gl2_vectors, l2p_mod_a4, paley_affine, pgl2_pairs,
                                     regular_times_frobenius, sharply_2transitive_agl1, symmetric_natural,
                                     wreath_graph_example, wreath_unique_regular)
from saxlgraph.actions import coset_action


def s7_agl17() -> FamilyInstance:
    act = coset_action(load_group("S7"), load_subgroup("S7", "AGL1(7)"))
    return FamilyInstance("catalog", {"group": "S7", "subgroup": "AGL1(7)"}, act, None, 42, 1)


SMALL = {
    "C5 regular": lambda: cyclic_regular(5),
    "S3 natural": lambda: symmetric_natural(3),
    "S5 natural": lambda: symmetric_natural(5),
    "GL2(3) vectors": lambda: gl2_vectors(3),
    "GL2(5) vectors": lambda: gl2_vectors(5),
    "GL2(3) unipotent cosets": lambda: gl2_on_unipotent_cosets(3),
    "F9:D4": lambda: paley_affine(3),
    "F25:D6": lambda: paley_affine(5),
    "PGL2(7) pairs": lambda: pgl2_pairs(7),
    "PGL2(8) pairs": lambda: pgl2_pairs(8),
    "C3 wr C2": lambda: cp_wr_c2(3),
    "C5 wr C2": lambda: cp_wr_c2(5),
    "AGL1(4)": lambda: sharply_2transitive_agl1(4),
    "AGL1(8)": lambda: sharply_2transitive_agl1(8),
    "AGL1(7)/C2": lambda: agl1_on_cosets(7, 3),
    "AGL1(7)/C3": lambda: agl1_on_cosets(7, 2),
    "C4 x D10": lambda: regular_times_frobenius(4, 5),
    "extraspecial p=3": lambda: extraspecial_example(3),
    "W:<g> n=2 p=3": lambda: wreath_graph_example(2, 3),
    "W:<g> n=3 p=2": lambda: wreath_graph_example(3, 2),
    "D10 wr S2": lambda: wreath_unique_regular(5, "S"),
    "D10 wr C3": lambda: wreath_unique_regular(5, "C"),
    "L2(13)/A4": lambda: l2p_mod_a4(13),
    "S7/AGL1(7)": s7_agl17,
}
