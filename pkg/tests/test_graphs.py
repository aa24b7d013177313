from __future__ import annotations

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import isomorphic
from saxlgraph.fields import GF
from saxlgraph.graphs import (Graph, complete_graph, complete_multipartite, cycle_graph, direct_product_graph,
                              find_isomorphism, johnson_graph, paley_graph, wreath_graph)


def _nx_adj(g: nx.Graph) -> np.ndarray:
    return nx.to_numpy_array(g, dtype=bool)


@pytest.mark.parametrize("ref,oracle", [
    (complete_graph(6), nx.complete_graph(6)),
    (complete_multipartite(4, 3), nx.complete_multipartite_graph(3, 3, 3, 3)),
    (johnson_graph(7), nx.line_graph(nx.complete_graph(7))),
    (wreath_graph(5, 3), nx.lexicographic_product(nx.cycle_graph(5), nx.empty_graph(3))),
    (cycle_graph(9), nx.cycle_graph(9)),
    (paley_graph(13), nx.paley_graph(13).to_undirected()),
    (paley_graph(17), nx.paley_graph(17).to_undirected()),
])
def test_reference_graphs_match_networkx(ref, oracle):
    assert isomorphic(ref.adj, _nx_adj(oracle))
    assert ref.satisfies_rule(ref)
    assert find_isomorphism(ref, Graph(_nx_adj(oracle))).found


def test_paley_25_adjacency_rule():
    F = GF(25)
    sq = set(F.squares().tolist())
    ref = paley_graph(25)
    for a in range(25):
        for b in range(25):
            assert ref.adj[a, b] == (int(F.sub(a, b)) in sq)
    # self-complementary, as every Paley graph is
    assert find_isomorphism(ref, ref.complement()).found


def test_direct_product_matches_tensor_product():
    a, b = complete_graph(3), cycle_graph(4)
    prod = direct_product_graph(a, b)
    want = nx.tensor_product(nx.complete_graph(3), nx.cycle_graph(4))
    assert isomorphic(prod.adj, _nx_adj(want))


def test_rules_reject_wrong_graphs():
    assert not complete_multipartite(3, 4).satisfies_rule(complete_multipartite(4, 3))
    assert not johnson_graph(6).satisfies_rule(complete_graph(15))
    assert not wreath_graph(5, 2).satisfies_rule(cycle_graph(10))


def _random_graph(seed: int, n: int, p: float) -> np.ndarray:
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < p, 1)
    return upper | upper.T


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 14), st.floats(0.1, 0.9), st.permutations(range(14)))
def test_isomorphism_finds_relabelling(seed, n, p, perm):
    a = _random_graph(seed, n, p)
    perm = np.array([x for x in perm if x < n])
    b = np.empty_like(a)
    b[np.ix_(perm, perm)] = a
    res = find_isomorphism(Graph(a), Graph(b))
    assert res.found and res.conclusive
    m = res.mapping
    assert np.array_equal(a, b[np.ix_(m, m)])


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(0, 10 ** 6), st.integers(2, 10))
def test_isomorphism_verdict_matches_networkx(s1, s2, n):
    a, b = _random_graph(s1, n, 0.5), _random_graph(s2, n, 0.5)
    res = find_isomorphism(Graph(a), Graph(b))
    assert res.conclusive
    assert res.found == isomorphic(a, b)


def test_regular_non_isomorphic_pair():
    # two 3-regular graphs on 8 vertices that colour refinement cannot split
    cube = _nx_adj(nx.hypercube_graph(3))
    other = _nx_adj(nx.circulant_graph(8, [1, 4]))
    res = find_isomorphism(Graph(cube), Graph(other))
    assert res.conclusive and res.found == isomorphic(cube, other)
    assert find_isomorphism(Graph(cube), Graph(cube)).found
