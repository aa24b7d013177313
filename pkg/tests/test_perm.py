from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import closure
from saxlgraph.catalog import load_group
from saxlgraph.perm import Permutation, PermutationGroup, parse_permutation


def perms(n: int):
    return st.permutations(range(n)).map(lambda p: Permutation(list(p)))


@given(perms(7), perms(7), perms(7))
def test_multiplication_is_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(perms(8))
def test_inverse_and_identity(a):
    e = Permutation.identity(8)
    assert a * ~a == e and ~a * a == e
    assert a ** a.order() == e
    assert a ** -1 == ~a


@given(perms(6), perms(6), st.integers(0, 5))
def test_right_action(a, b, x):
    # x^(ab) = (x^a)^b
    assert (a * b)(x) == b(a(x))


@given(perms(9))
def test_cycle_string_round_trip(a):
    assert parse_permutation(a.to_cycle_string(), 9) == a
    assert parse_permutation(a.to_image_string(), 9) == a


@given(perms(8))
def test_sign_and_cycle_type(a):
    assert sum(a.cycle_type()) == 8
    assert a.sign() == (-1) ** sum(len(c) - 1 for c in a.cycles())


def test_parse_rejects_bad_input():
    for text in ["(1,2,2)", "(1,9)", "[1,1,2]", "(1,2", "[1,2]"]:
        with pytest.raises(ValueError):
            parse_permutation(text, 3)


@settings(max_examples=30, deadline=None)
@given(st.lists(perms(6), min_size=1, max_size=3))
def test_order_matches_closure(gens):
    g = PermutationGroup(gens, 6)
    elems = closure([p.images for p in gens])
    assert g.order == len(elems)
    assert g.verify()
    for row in elems[:50]:
        assert Permutation(row) in g
    rows = g.elements_array()
    assert {r.tobytes() for r in rows} == {r.tobytes() for r in elems}


@settings(max_examples=30, deadline=None)
@given(st.lists(perms(7), min_size=1, max_size=3), perms(7))
def test_membership_agrees_with_closure(gens, x):
    g = PermutationGroup(gens, 7)
    elems = {r.tobytes() for r in closure([p.images for p in gens])}
    assert (x in g) == (x.images.tobytes() in elems)


@settings(max_examples=20, deadline=None)
@given(st.lists(perms(6), min_size=1, max_size=3), st.integers(0, 5), st.integers(0, 5))
def test_pointwise_stabiliser_order(gens, a, b):
    g = PermutationGroup(gens, 6)
    elems = closure([p.images for p in gens])
    want = int(((elems[:, a] == a) & (elems[:, b] == b)).sum())
    assert g.pointwise_stabiliser_order([a, b]) == want


@pytest.mark.parametrize("name,order", [("M11", 7920), ("M12", 95040), ("J1", 175560), ("S7", 5040),
                                        ("A9", 181440), ("A10", 1814400), ("M23", 10200960)])
def test_catalog_orders(name, order):
    assert load_group(name).order == order


def test_random_schreier_sims_with_known_order():
    m12 = load_group("M12")
    again = PermutationGroup(m12.generators, 12, order=95040, seed=3)
    assert again.order == 95040
    rng = np.random.default_rng(1)
    for _ in range(20):
        assert again.random_element(rng) in m12


def test_stabiliser_index():
    m11 = load_group("M11")
    st_ = m11.stabiliser(0)
    assert st_.order == 720 and st_.index == 11
