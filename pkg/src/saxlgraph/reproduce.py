"""Reproduction suites: each claim pairs an embedded expected value with a fresh computation."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .actions import coset_action, direct_product_action, minimal_block_systems
from .catalog import load_group, load_subgroup
from .constructions import (FamilyInstance, agl1_on_cosets, catalog_sporadic, cp_wr_c2, extraspecial_example,
                            gl2_on_unipotent_cosets, gl2_vectors, l2p_mod_a4, paley_affine, pgl2_pairs,
                            regular_times_frobenius, sharply_2transitive_agl1, symmetric_natural, cyclic_regular,
                            wreath_graph_example, wreath_subspace_checks, wreath_unique_regular)
from .graphs import Graph, complete_multipartite, direct_product_graph, paley_graph
from .invariants import (chromatic_number, clique_number, common_neighbour_verify, connected_components, diameter,
                         find_hamiltonian_cycle, independence_number, is_eulerian, matches_reference,
                         max_minimal_base, self_complementary_check, total_domination_number)
from .io import decimal3, fraction_str
from .perm import Permutation, PermutationGroup, orbits_array
from .probability import q2_exact, q2_threshold_t, qhat_from_action, star_criterion
from .saxl import SaxlGraph, build_saxl, is_base, wreath_base_check

__all__ = ["Claim", "SUITES", "run_suite", "basic_properties", "BASIC_INSTANCES"]


@dataclass
class Claim:
    suite: str
    name: str
    expected: object
    computed: object
    passed: bool
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {"suite": self.suite, "claim": self.name, "expected": _plain(self.expected),
                "computed": _plain(self.computed), "pass": self.passed, "seconds": round(self.seconds, 3)}


def _plain(x):
    if isinstance(x, Fraction):
        return fraction_str(x)
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    return x


class _Recorder:
    def __init__(self, suite: str):
        self.suite = suite
        self.claims: list[Claim] = []
        self._t = time.perf_counter()

    def check(self, name: str, expected, computed, passed: bool | None = None) -> bool:
        now = time.perf_counter()
        ok = bool(expected == computed) if passed is None else bool(passed)
        self.claims.append(Claim(self.suite, name, expected, computed, ok, now - self._t))
        self._t = now
        return ok


# -- structural properties of a Saxl graph -------------------------------------------------


def _pair_orbit_count(gen_images, n: int, ordered: bool, pairs: np.ndarray) -> int:
    """Number of G-orbits on the given pairs (rows of ``pairs``), ordered or unordered."""
    code = pairs[:, 0] * n + pairs[:, 1]
    index = np.full(n * n, -1, dtype=np.int64)
    index[code] = np.arange(len(pairs))
    images = []
    for g in gen_images:
        a, b = g[pairs[:, 0]], g[pairs[:, 1]]
        if not ordered:
            a, b = np.minimum(a, b), np.maximum(a, b)
        img = index[a * n + b]
        if (img < 0).any():
            raise ValueError("pair set is not invariant")
        images.append(img)
    return len(np.unique(orbits_array(images, len(pairs))))


def _transitive_subgroup(graph: SaxlGraph, seed: int) -> tuple[list[np.ndarray], int]:
    """Generators (on the domain) of a proper transitive subgroup if one turns up, else the point stabiliser."""
    act = graph.action
    rng = np.random.default_rng(seed)
    for _ in range(40):
        gens = [act.image_of(act.group.random_element(rng)) for _ in range(2)]
        if len(np.unique(orbits_array(gens, act.n))) != 1:
            continue
        k = PermutationGroup([Permutation(g, check=False) for g in gens], act.n)
        if k.order < act.order:
            return gens, k.order
    return list(act.stab_images), act.stabiliser_order


def basic_properties(graph: SaxlGraph, seed: int = 0, samples: int = 200) -> dict[str, bool]:
    """Check the eight basic properties of a Saxl graph on a materialised instance."""
    act = graph.action
    adj = graph.adjacency_matrix()
    n = graph.n
    rng = np.random.default_rng(seed)
    out = {}
    # (i) G acts by automorphisms and the graph is regular of positive degree
    invariant = all(np.array_equal(adj[np.ix_(g, g)], adj) for g in act.gen_images)
    out["i_vertex_transitive"] = invariant and bool((adj.sum(axis=1) == graph.valency).all()) and graph.valency > 0
    # (ii) primitive implies connected; components always form a block system
    comps = connected_components(Graph(adj))
    primitive = not minimal_block_systems(act)
    blocks_ok = True
    if len(comps) > 1:
        label = np.empty(n, dtype=np.int64)
        for i, c in enumerate(comps):
            label[c] = i
        blocks_ok = all(len(np.unique(label[g[c]])) == 1 for g in act.gen_images for c in comps)
    out["ii_primitive_connected"] = (not primitive or len(comps) == 1) and blocks_ok
    # (iii) complete iff Frobenius (every two-point stabiliser trivial), tested from alpha by transitivity
    frobenius = act.stabiliser_order > 1 and all(is_base(act, act.alpha, b) for b in range(n) if b != act.alpha)
    complete = bool(adj.sum() == n * (n - 1))
    out["iii_complete_iff_frobenius"] = complete == frobenius
    # (iv) 2-transitive implies arc-transitive; 2-homogeneous implies edge-transitive
    off = np.argwhere(~np.eye(n, dtype=bool))
    two_trans = _pair_orbit_count(act.gen_images, n, True, off) == 1
    upper = off[off[:, 0] < off[:, 1]]
    two_hom = _pair_orbit_count(act.gen_images, n, False, upper) == 1
    arcs = np.argwhere(adj)
    edges = arcs[arcs[:, 0] < arcs[:, 1]]
    arc_orbits = _pair_orbit_count(act.gen_images, n, True, arcs)
    edge_orbits = _pair_orbit_count(act.gen_images, n, False, edges)
    out["iv_transitivity_on_arcs_edges"] = (not two_trans or arc_orbits == 1) and (not two_hom or edge_orbits == 1)
    # (v) valency r|H|
    out["v_valency"] = graph.valency == graph.r * act.stabiliser_order == int(adj[act.alpha].sum())
    # (vi) every edge of Sigma(G) is an edge of Sigma(K) for a subgroup K
    kgens, korder = _transitive_subgroup(graph, seed)
    sample = edges[rng.choice(len(edges), size=min(samples, len(edges)), replace=False)]
    kgroup = PermutationGroup([Permutation(g, check=False) for g in kgens], n, order=korder)
    out["vi_subgroup_edges"] = all(kgroup.pointwise_stabiliser_order([int(a), int(b)]) == 1 for a, b in sample)
    # (vii) arc stabilisers are trivial
    ggroup = PermutationGroup([Permutation(g, check=False) for g in act.gen_images], n, order=act.order)
    out["vii_arc_semiregular"] = all(ggroup.pointwise_stabiliser_order([int(a), int(b)]) == 1
                                     for a, b in arcs[rng.choice(len(arcs), size=min(samples, len(arcs)),
                                                                 replace=False)])
    # (viii) points with the same stabiliser have the same neighbours
    same = [b for b in range(n) if all(g[b] == b for g in act.stab_images)]
    out["viii_equal_stabilisers"] = all(np.array_equal(adj[b], adj[act.alpha]) for b in same)
    return out


def _s7_agl17() -> FamilyInstance:
    act = coset_action(load_group("S7"), load_subgroup("S7", "AGL1(7)"), name="S7/AGL1(7)")
    return FamilyInstance("catalog", {"group": "S7", "subgroup": "AGL1(7)"}, act, None, 42, 1)


# ten instances of mixed type: primitive, imprimitive, Frobenius, disconnected
BASIC_INSTANCES: list[tuple[str, Callable[[], FamilyInstance]]] = [
    ("GL2(5) on vectors", lambda: gl2_vectors(5)),
    ("PGL2(7) on pairs", lambda: pgl2_pairs(7)),
    ("F25:D6", lambda: paley_affine(5)),
    ("C3 wr C2", lambda: cp_wr_c2(3)),
    ("AGL1(8)", lambda: sharply_2transitive_agl1(8)),
    ("extraspecial p=3", lambda: extraspecial_example(3)),
    ("W:<g> n=2 p=3", lambda: wreath_graph_example(2, 3)),
    ("AGL1(7) on cosets of C2", lambda: agl1_on_cosets(7, 3)),
    ("C4 x D10", lambda: regular_times_frobenius(4, 5)),
    ("S7 on cosets of AGL1(7)", _s7_agl17),
]


# -- suites ---------------------------------------------------------------------------------


def suite_basic_properties(rec: _Recorder, *, seed: int = 0, **_) -> None:
    for label, make in BASIC_INSTANCES:
        g = build_saxl(make().action)
        for prop, ok in basic_properties(g, seed).items():
            rec.check(f"{label}: {prop}", True, ok)
    # direct products: Sigma(G x K) = Sigma(G) x Sigma(K)
    for a, b in [(cp_wr_c2(3), sharply_2transitive_agl1(4)), (gl2_vectors(3), cp_wr_c2(2))]:
        prod = build_saxl(direct_product_action(a.action, b.action))
        want = direct_product_graph(Graph(build_saxl(a.action).adjacency_matrix()),
                                    Graph(build_saxl(b.action).adjacency_matrix()))
        rec.check(f"product {a.label} x {b.label}", True, bool(np.array_equal(prod.adjacency_matrix(), want.adj)))


def suite_prime_valency(rec: _Recorder, **_) -> None:
    cases = [cp_wr_c2(2), cp_wr_c2(3), cp_wr_c2(5), symmetric_natural(3),
             sharply_2transitive_agl1(4), sharply_2transitive_agl1(8), sharply_2transitive_agl1(32)]
    for fi in cases:
        g = build_saxl(fi.action)
        rec.check(f"{fi.label}: {fi.expected.name}", True, matches_reference(g, fi.expected))
        rec.check(f"{fi.label}: valency", fi.expected_valency, g.valency)


def suite_constructions(rec: _Recorder, *, slow: bool = False, **_) -> None:
    for q in (5, 7):
        fi = gl2_vectors(q)
        g = build_saxl(fi.action)
        rec.check(f"GL2({q}) on vectors is multipartite {q + 1}x{q - 1}", True, matches_reference(g, fi.expected))
    for fi in (gl2_on_unipotent_cosets(3), agl1_on_cosets(7, 3), agl1_on_cosets(7, 2), regular_times_frobenius(4, 5)):
        g = build_saxl(fi.action)
        rec.check(f"{fi.label}: {fi.expected.name}", True, matches_reference(g, fi.expected))
    # Paley
    fi = paley_affine(5)
    g = build_saxl(fi.action)
    rec.check("F25:D6 valency", 12, g.valency)
    rec.check("F25:D6 self-complementary", True, self_complementary_check(g))
    comp = Graph(g.adjacency_matrix()).complement()
    rec.check("F25:D6 complement is the Paley graph on F25", True, matches_reference(comp, paley_graph(25)))
    other = build_saxl(paley_affine(5, xi_choice=1).action)
    rec.check("F25:D6 graph independent of the choice of xi", True,
              bool(np.array_equal(other.adjacency_matrix(), g.adjacency_matrix())))
    fi3 = paley_affine(3)
    rec.check("F9:D4 valency", 4, build_saxl(fi3.action).valency)
    # Johnson graphs
    for q in (7, 8, 9):
        fi = pgl2_pairs(q)
        g = build_saxl(fi.action)
        rec.check(f"PGL2({q}) pairs r", 1, g.r)
        rec.check(f"PGL2({q}) pairs is J({q + 1},2)", True, matches_reference(g, fi.expected))
        rec.check(f"PGL2({q}) pairs Q(G,2)", 1 - Fraction(4 * (q - 1), q * (q + 1)), q2_exact(g))
        rec.check(f"PGL2({q}) pairs common neighbours", True, common_neighbour_verify(g).holds)
    # disconnected example
    for p in (3, 5):
        fi = extraspecial_example(p)
        g = build_saxl(fi.action)
        comps = connected_components(g)
        rec.check(f"extraspecial p={p} points", p ** 3, g.n)
        rec.check(f"extraspecial p={p} components", p, len(comps))
        rec.check(f"extraspecial p={p} valency", p * p - p, g.valency)
        rec.check(f"extraspecial p={p} faithful", True, fi.action.faithful)
        block = complete_multipartite(p, p)
        adj = g.adjacency_matrix()
        each = all(matches_reference(Graph(adj[np.ix_(c, c)]), block) for c in comps)
        rec.check(f"extraspecial p={p} components are multipartite {p}x{p}", True, each)
    # wreath graphs
    for n, p in ((2, 3), (3, 2)):
        fi = wreath_graph_example(n, p)
        g = build_saxl(fi.action)
        rec.check(f"W:<g> n={n} p={p} is {fi.expected.name}", True, matches_reference(g, fi.expected))
        rec.check(f"W:<g> n={n} p={p} diameter", n, diameter(g))
        chk = wreath_subspace_checks(n, p)
        rec.check(f"W:<g> n={n} p={p} subspaces distinct, U meets U_1 trivially", True,
                  chk["pairwise_distinct"] and chk["u_meet_u1_trivial"])
    # product action wreath products
    fi = wreath_unique_regular(5, "S")
    g = build_saxl(fi.action)
    rec.check("D10 wr S2: regular suborbits", 1, g.r)
    rec.check("D10 wr S2: valency", 8, g.valency)
    l, top = fi.notes["base_action"], fi.notes["top_group"]
    agree = all(wreath_base_check(l, top, divmod(a, 5), divmod(b, 5)) == is_base(fi.action, a, b)
                for a in range(25) for b in range(25))
    rec.check("D10 wr S2: coordinate base test agrees on all pairs", True, agree)
    rec.check("D10 wr C3: valency", 48, build_saxl(wreath_unique_regular(5, "C").action).valency)
    rec.check("D14 wr S3: valency", 48, build_saxl(wreath_unique_regular(7, "S").action).valency)
    # L2(p) on cosets of A4
    fi = l2p_mod_a4(13)
    g = build_saxl(fi.action)
    rec.check("L2(13)/A4 degree", 91, g.n)
    rec.check("L2(13)/A4 regular suborbits", (13 ** 3 - 51 * 13 + 194) // 288, g.r)
    lengths = sorted(length for _, length in g.suborbits)
    rec.check("L2(13)/A4 suborbit lengths", [1, 4, 4, 4, 6] + [12] * 6, lengths)
    if slow:
        g = build_saxl(l2p_mod_a4(37).action, materialise=False)
        rec.check("L2(37)/A4 regular suborbits", (37 ** 3 - 51 * 37 + 194) // 288, g.r)


def suite_probabilistic(rec: _Recorder, **_) -> None:
    s7 = build_saxl(_s7_agl17().action)
    rec.check("S7/AGL1(7) n", 120, s7.n)
    rec.check("S7/AGL1(7) r", 1, s7.r)
    rec.check("S7/AGL1(7) valency", 42, s7.valency)
    rec.check("S7/AGL1(7) Q(G,2)", Fraction(13, 20), q2_exact(s7))
    rec.check("S7/AGL1(7) Q-hat", Fraction(73, 60), qhat_from_action(s7.action))
    rec.check("S7/AGL1(7) t", 1, q2_threshold_t(q2_exact(s7)))
    a9h = load_subgroup("A9", "3^2:2A4")
    a9 = build_saxl(coset_action(load_group("A9"), a9h), materialise=False)
    rec.check("A9/3^2:2A4 r", 2, a9.r)
    rec.check("A9/3^2:2A4 Q(G,2)", Fraction(17, 35), q2_exact(a9))
    rec.check("A9/3^2:2A4 Q-hat > 1/2", True, qhat_from_action(a9.action) > Fraction(1, 2))
    rec.check("A9/3^2:2A4 star criterion", False, star_criterion(load_group("A9"), a9h))
    m10 = load_subgroup("A10", "M10")
    rec.check("A10 subgroup order", 720, m10.order)
    a10 = build_saxl(coset_action(load_group("A10"), m10), materialise=False)
    rec.check("A10/M10 index", 2520, a10.n)
    rec.check("A10/M10 r", 2, a10.r)
    rec.check("A10/M10 Q(G,2)", Fraction(3, 7), q2_exact(a10))
    rec.check("A10/M10 t", 2, q2_threshold_t(q2_exact(a10)))
    for q in (5, 9):
        g = build_saxl(paley_affine(q).action)
        rec.check(f"F{q * q}:D{q + 1} Q(G,2)", Fraction(q * q + 1, 2 * q * q), q2_exact(g))
    c5 = cyclic_regular(5).action
    rec.check("C5 star criterion (H = 1)", True, star_criterion(c5.group, c5.stabiliser))
    s3 = symmetric_natural(3).action
    rec.check("S3 star criterion", False, star_criterion(s3.group, s3.stabiliser))
    rec.check("complete graph threshold sentinel", 7, q2_threshold_t(Fraction(0), 8))
    for fi in (wreath_unique_regular(5, "S"), wreath_unique_regular(7, "S")):
        p = fi.params["p"]
        k = (p - 1) // 2
        rec.check(f"D{2 * p} wr S{k} valency", 2 ** k * math.factorial(k), build_saxl(fi.action).valency)


def suite_sporadic_small(rec: _Recorder, *, slow: bool = False, **_) -> None:
    rows = [("M11", "2.S4", 165, 1, 48, "1.169"), ("M12", "A4xS3", 1320, 13, 936, "0.540"),
            ("J1", "2^3.7.3", 1045, 5, 840, "0.661")]
    for name, sub, n, r, val, qh in rows:
        fi = catalog_sporadic(name, sub)
        g = build_saxl(fi.action, materialise=False)
        rec.check(f"{name}/{sub} n", n, g.n)
        rec.check(f"{name}/{sub} r", r, g.r)
        rec.check(f"{name}/{sub} valency", val, g.valency)
        exact = qhat_from_action(g.action)
        # compared after rounding half-to-even; the exact rational is shown alongside
        rec.check(f"{name}/{sub} Q-hat (3 d.p.)", qh, f"{decimal3(exact)} ({fraction_str(exact)})",
                  passed=decimal3(exact) == qh)
        rec.check(f"{name}/{sub} common neighbours", True, common_neighbour_verify(g).holds)
        if name == "M12":
            rec.check("M12/A4xS3 Eulerian", True, is_eulerian(g))
    if slow:
        g = build_saxl(coset_action(load_group("M23"), load_subgroup("M23", "23:11")), materialise=False)
        rec.check("M23/23:11 n", 40320, g.n)
        rec.check("M23/23:11 r", 159, g.r)
        rec.check("M23/23:11 Eulerian", False, is_eulerian(g))


def suite_conjecture(rec: _Recorder, **_) -> None:
    cases = [("S7/AGL1(7)", _s7_agl17().action), ("PGL2(7) pairs", pgl2_pairs(7).action),
             ("F25:D6", paley_affine(5).action), ("AGL1(8)", sharply_2transitive_agl1(8).action),
             ("L2(13)/A4", l2p_mod_a4(13).action)]
    for name, sub in (("M11", "2.S4"), ("M12", "A4xS3"), ("J1", "2^3.7.3"), ("A9", "3^2:2A4"), ("A10", "M10")):
        cases.append((f"{name}/{sub}", coset_action(load_group(name), load_subgroup(name, sub))))
    for name, act in cases:
        g = build_saxl(act, materialise=False)
        rec.check(f"{name}: primitive", True, not minimal_block_systems(act))
        rec.check(f"{name}: common neighbours", True, common_neighbour_verify(g).holds)
    s7 = build_saxl(_s7_agl17().action)
    rec.check("S7/AGL1(7): Hamiltonian cycle", True, find_hamiltonian_cycle(s7).found)


def suite_hard_invariants(rec: _Recorder, *, budget_ms: float | None = 60_000, **_) -> None:
    g = build_saxl(gl2_vectors(5).action)
    rec.check("GL2(5) vectors total domination", 2, total_domination_number(g, budget_ms).value)
    rec.check("GL2(5) vectors largest minimal base", 2, max_minimal_base(g.action, budget_ms).value)
    rec.check("GL2(5) vectors independence", 4, independence_number(g, budget_ms).value)
    j = build_saxl(pgl2_pairs(7).action)
    rec.check("J(8,2) clique", 7, clique_number(j, budget_ms).value)
    rec.check("J(8,2) independence", 4, independence_number(j, budget_ms).value)
    rec.check("F25:D6 clique", 5, clique_number(build_saxl(paley_affine(5).action), budget_ms).value)
    rec.check("regular C5 largest minimal base", 1, max_minimal_base(cyclic_regular(5).action, budget_ms).value)
    rec.check("Frobenius AGL1(8) largest minimal base", 2,
              max_minimal_base(sharply_2transitive_agl1(8).action, budget_ms).value)
    # the inequalities hold for brackets too, so a shorter budget per instance is enough
    per = 10_000 if budget_ms is None else min(budget_ms, 10_000)
    for label, make in BASIC_INSTANCES:
        g = build_saxl(make().action)
        w = clique_number(g, per)
        chi = chromatic_number(g, per)
        gam = total_domination_number(g, per)
        b = max_minimal_base(g.action, per)
        rec.check(f"{label}: clique <= chromatic", True, w.lower <= chi.upper and w.upper <= chi.upper)
        rec.check(f"{label}: total domination x valency >= n", True, gam.lower * g.valency >= g.n)
        rec.check(f"{label}: largest minimal base <= 2 log2 n", True, b.upper <= 2 * math.log2(g.n))


SUITES: dict[str, Callable] = {
    "lemma1": suite_basic_properties,
    "prime-valency": suite_prime_valency,
    "constructions": suite_constructions,
    "probabilistic": suite_probabilistic,
    "sporadic-small": suite_sporadic_small,
    "conjecture": suite_conjecture,
    "problems7": suite_hard_invariants,
}


def run_suite(name: str, *, slow: bool = False, seed: int = 0, budget_ms: float | None = 60_000) -> list[Claim]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    rec = _Recorder(name)
    SUITES[name](rec, slow=slow, seed=seed, budget_ms=budget_ms)
    return rec.claims
