from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from instances import SMALL
from oracles import closure, saxl_adjacency
from saxlgraph.actions import coset_action
from saxlgraph.catalog import load_group, load_subgroup
from saxlgraph.constructions import cyclic_regular, dihedral_action, symmetric_natural, wreath_unique_regular
from saxlgraph.perm import Permutation, PermutationGroup
from saxlgraph.saxl import (build_saxl, count_regular_suborbits_wreath, is_base, regular_suborbits_product,
                            wreath_base_check)

_CACHE: dict = {}


def _instance(name):
    if name not in _CACHE:
        act = SMALL[name]().action
        _CACHE[name] = (act, build_saxl(act), closure(act.gen_images))
    return _CACHE[name]


@pytest.mark.parametrize("name", list(SMALL))
def test_adjacency_matches_element_count(name):
    act, g, elems = _instance(name)
    want = saxl_adjacency(elems)
    if act.stabiliser_order == 1:
        # regular action: every pair is a base; the graph is complete
        assert g.valency == act.n - 1
    assert np.array_equal(g.adjacency_matrix(), want)


@pytest.mark.parametrize("name", list(SMALL))
def test_structural_invariants(name):
    act, g, _ = _instance(name)
    adj = g.adjacency_matrix()
    assert np.array_equal(adj, adj.T)
    assert not adj.diagonal().any()
    assert g.valency == g.r * act.stabiliser_order
    assert (adj.sum(axis=1) == g.valency).all()
    for x in act.gen_images:
        # x is an automorphism: a ~ b iff a^x ~ b^x
        assert np.array_equal(adj[np.ix_(x, x)], adj)


@pytest.mark.parametrize("name", ["GL2(5) vectors", "PGL2(7) pairs", "extraspecial p=3", "L2(13)/A4"])
def test_lazy_neighbourhoods_equal_materialised(name):
    act = SMALL[name]().action
    lazy = build_saxl(act, materialise=False)
    dense = build_saxl(act).adjacency_matrix()
    for v in range(act.n):
        assert np.array_equal(lazy.neighbourhood(v), np.flatnonzero(dense[v]))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["GL2(5) vectors", "F25:D6", "W:<g> n=2 p=3", "C4 x D10"]), st.data())
def test_is_base_matches_element_count(name, data):
    act, _, elems = _instance(name)
    a = data.draw(st.integers(0, act.n - 1))
    b = data.draw(st.integers(0, act.n - 1))
    want = int(((elems[:, a] == a) & (elems[:, b] == b)).sum()) == 1
    assert is_base(act, a, b) == want


def test_regular_and_trivial_cases():
    g = build_saxl(cyclic_regular(6).action)
    assert g.base_profile.base_size_verdict == "b(G)=1" and g.is_complete()
    s4 = build_saxl(symmetric_natural(4).action)
    assert s4.r == 0 and s4.valency == 0
    assert s4.base_profile.base_size_verdict == "b(G)>2"
    assert build_saxl(symmetric_natural(3).action).base_profile.base_size_verdict == "b(G)=2"


def test_lazy_graph_on_large_domain():
    m12 = load_group("M12")
    act = coset_action(m12, load_subgroup("M12", "A4xS3"))
    g = build_saxl(act, materialise=False)
    assert not g.has_adjacency
    rng = np.random.default_rng(5)
    for v in rng.integers(0, g.n, size=5):
        nb = g.neighbourhood(int(v))
        assert len(nb) == g.valency == 936
        for b in nb[:10]:
            assert is_base(act, int(v), int(b))
            assert v in g.neighbourhood(int(b))


@pytest.mark.parametrize("top", ["S", "C"])
def test_wreath_base_check_agrees_with_direct_test(top):
    fi = wreath_unique_regular(5, top)
    l, top_group = fi.notes["base_action"], fi.notes["top_group"]
    k = top_group.degree
    act = fi.action
    rng = np.random.default_rng(0)
    pairs = [(a, b) for a in range(act.n) for b in range(act.n)] if k == 2 else \
        [tuple(rng.integers(0, act.n, size=2)) for _ in range(400)]
    for a, b in pairs:
        da = np.unravel_index(a, (5,) * k)
        db = np.unravel_index(b, (5,) * k)
        assert wreath_base_check(l, top_group, da, db) == is_base(act, int(a), int(b))


def test_regular_suborbits_of_wreath_products():
    d10 = dihedral_action(5)
    assert count_regular_suborbits_wreath(d10, 2) == 1
    c3 = PermutationGroup([Permutation([1, 2, 0])], 3)
    # D10 wr C3: 2^3 maps, minus the 2 constant ones, in orbits of size 3
    assert regular_suborbits_product(d10, c3) == 2
    assert build_saxl(wreath_unique_regular(5, "C").action).r == 2
    with pytest.raises(ValueError):
        count_regular_suborbits_wreath(d10, 3)


def test_non_transitive_is_rejected():
    g = PermutationGroup([Permutation([1, 0, 2, 3])], 4)
    from saxlgraph.actions import natural_action
    with pytest.raises(ValueError):
        build_saxl(natural_action(g))
