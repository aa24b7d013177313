from __future__ import annotations

import math
from itertools import combinations, permutations

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from instances import SMALL
from oracles import brute_chromatic, brute_clique, brute_total_domination, closure, nx_graph
from saxlgraph.graphs import Graph
from saxlgraph.invariants import (Bracket, check_clique, check_colouring, check_hamiltonian_cycle,
                                  check_independent, check_total_dominating, chromatic_number, clique_number,
                                  common_neighbour_verify, connected_components, diameter, find_hamiltonian_cycle,
                                  independence_number, is_eulerian, is_minimal_base, max_minimal_base,
                                  total_domination_number)
from saxlgraph.saxl import build_saxl


def _colours(parts, n: int) -> np.ndarray:
    col = np.full(n, -1, dtype=np.int64)
    for c, part in enumerate(parts):
        col[part] = c
    return col


def _random_graph(seed: int, n: int, p: float) -> np.ndarray:
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < p, 1)
    return upper | upper.T


graphs = st.builds(_random_graph, st.integers(0, 10 ** 6), st.integers(1, 12), st.floats(0.15, 0.85))
tiny = st.builds(_random_graph, st.integers(0, 10 ** 6), st.integers(1, 7), st.floats(0.2, 0.8))


@settings(max_examples=80, deadline=None)
@given(graphs)
def test_clique_and_independence_against_networkx(adj):
    w = clique_number(Graph(adj), None)
    assert w.exact and w.value == brute_clique(adj)
    assert check_clique(adj, [v - 1 for v in w.to_json()["certificate"]])
    a = independence_number(Graph(adj), None)
    assert a.exact and a.value == brute_clique(~adj & ~np.eye(len(adj), dtype=bool))
    assert check_independent(adj, [v - 1 for v in a.to_json()["certificate"]])


@settings(max_examples=60, deadline=None)
@given(tiny)
def test_chromatic_number_against_exhaustive_colouring(adj):
    chi = chromatic_number(Graph(adj), None)
    assert chi.exact and chi.value == brute_chromatic(adj)
    assert len(chi.certificate) == chi.value
    assert check_colouring(adj, _colours(chi.certificate, len(adj)))


@settings(max_examples=60, deadline=None)
@given(graphs)
def test_total_domination_against_subset_search(adj):
    if (adj.sum(axis=1) == 0).any():
        with pytest.raises(ValueError):
            total_domination_number(Graph(adj), None)
        return
    g = total_domination_number(Graph(adj), None)
    assert g.exact and g.value == brute_total_domination(adj)
    assert check_total_dominating(adj, g.certificate)


def _brute_hamiltonian(adj) -> bool:
    n = len(adj)
    if n < 3:
        return False
    return any(all(adj[c[i], c[(i + 1) % n]] for i in range(n))
               for c in ((0,) + p for p in permutations(range(1, n))))


@settings(max_examples=60, deadline=None)
@given(st.builds(_random_graph, st.integers(0, 10 ** 6), st.integers(3, 8), st.floats(0.3, 0.9)))
def test_hamiltonian_search_is_exact_on_small_graphs(adj):
    res = find_hamiltonian_cycle(Graph(adj), None, seed=1)
    assert res.found == _brute_hamiltonian(adj)
    if res.found:
        assert check_hamiltonian_cycle(adj, res.cycle)


@settings(max_examples=60, deadline=None)
@given(graphs)
def test_connectivity_distance_and_euler_against_networkx(adj):
    g = nx_graph(adj)
    comps = connected_components(Graph(adj))
    assert sorted(map(sorted, comps)) == sorted(map(sorted, nx.connected_components(g)))
    d = diameter(Graph(adj))
    assert d == (nx.diameter(g) if nx.is_connected(g) else math.inf)
    assert is_eulerian(Graph(adj)) == (nx.is_connected(g) and all(deg % 2 == 0 for _, deg in g.degree()))


@settings(max_examples=40, deadline=None)
@given(graphs)
def test_common_neighbour_against_pairs(adj):
    n = len(adj)
    want = all((adj[a] & adj[b]).any() for a in range(n) for b in range(n))
    assert common_neighbour_verify(Graph(adj)).holds == want


@pytest.mark.parametrize("name", list(SMALL))
def test_saxl_graph_shortcuts_agree_with_general_code(name):
    act = SMALL[name]().action
    lazy = build_saxl(act, materialise=False)
    adj = build_saxl(act).adjacency_matrix()
    plain = Graph(adj)
    assert sorted(map(tuple, connected_components(lazy))) == sorted(map(tuple, connected_components(plain)))
    assert diameter(lazy) == diameter(plain)
    assert common_neighbour_verify(lazy).holds == common_neighbour_verify(plain).holds
    assert is_eulerian(lazy) == is_eulerian(plain)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["GL2(5) vectors", "PGL2(7) pairs", "extraspecial p=3", "W:<g> n=2 p=3"]), st.data())
def test_diameter_is_the_same_from_every_vertex(name, data):
    g = build_saxl(SMALL[name]().action)
    v = data.draw(st.integers(0, g.n - 1))
    assert diameter(g, source=v) == diameter(g)


def _brute_max_minimal_base(elems: np.ndarray) -> int:
    n = elems.shape[1]
    best = 0
    for k in range(1, n + 1):
        for s in combinations(range(n), k):
            if is_minimal_base(elems, list(s)):
                best = k
                break
    return best


@pytest.mark.parametrize("name", ["S3 natural", "S5 natural", "GL2(3) vectors", "AGL1(8)", "C3 wr C2",
                                  "AGL1(4)", "C5 regular", "AGL1(7)/C3"])
def test_largest_minimal_base_against_subsets(name):
    act = SMALL[name]().action
    b = max_minimal_base(act, None)
    assert b.exact
    elems = closure(act.gen_images)
    assert b.value == _brute_max_minimal_base(elems)
    assert is_minimal_base(elems, b.certificate)


def test_bracket_json_is_one_indexed():
    b = Bracket(2, 3, [0, 4])
    assert b.to_json()["certificate"] == [1, 5]
    assert not b.exact and b.value is None
    assert Bracket(3, 3, [[0], [1, 2]]).to_json()["certificate"] == [[1], [2, 3]]


def test_budget_gives_a_valid_bracket():
    # a tiny budget on a larger graph must still return a certified bracket
    g = build_saxl(SMALL["S7/AGL1(7)"]().action)
    chi = chromatic_number(g, 1)
    assert chi.lower <= chi.upper
    assert len(chi.certificate) == chi.upper
    assert check_colouring(g.adjacency_matrix(), _colours(chi.certificate, g.n))
    w = clique_number(g, 1)
    assert check_clique(g.adjacency_matrix(), w.certificate) and len(w.certificate) == w.lower
