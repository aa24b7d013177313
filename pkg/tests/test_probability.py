from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from instances import SMALL
from oracles import closure, q2_by_pairs, qhat_by_elements
from saxlgraph.actions import prime_order_profile
from saxlgraph.probability import (max_centraliser_order, probability_report, q2_exact, q2_threshold_t, qhat,
                                   star_criterion)
from saxlgraph.saxl import build_saxl


@pytest.mark.parametrize("name", list(SMALL))
def test_q2_and_qhat_against_enumeration(name):
    act = SMALL[name]().action
    g = build_saxl(act, materialise=False)
    elems = closure(act.gen_images)
    q2 = q2_exact(g)
    assert q2 == q2_by_pairs(elems)
    qh = qhat(prime_order_profile(act))
    assert qh == qhat_by_elements(elems)
    assert q2 <= qh


@pytest.mark.parametrize("name", list(SMALL))
def test_qhat_needs_only_the_stabiliser(name):
    # fixed-point-free elements contribute 0, so the sum over fixing elements is already Q-hat
    act = SMALL[name]().action
    full = prime_order_profile(act)
    fixing = sum(m * f * f for (p, f), m in full.entries.items() if f > 0)
    assert Fraction(fixing, act.n ** 2) == qhat(full)


def _brute_max_centraliser(elems: np.ndarray, alpha: int) -> int:
    stab = elems[elems[:, alpha] == alpha]
    best = 0
    ident = np.arange(elems.shape[1])
    for x in stab:
        if (x == ident).all():
            continue
        best = max(best, int((x[elems] == elems[:, x]).all(axis=1).sum()))
    return best


@pytest.mark.parametrize("name", ["S3 natural", "S5 natural", "GL2(3) vectors", "GL2(5) vectors", "F25:D6",
                                  "PGL2(7) pairs", "AGL1(8)", "C4 x D10", "extraspecial p=3", "C5 regular"])
def test_star_criterion_against_all_centralisers(name):
    act = SMALL[name]().action
    # centraliser orders do not depend on the (faithful) representation, so the image group serves
    elems = closure(act.gen_images)
    c = _brute_max_centraliser(elems, act.alpha)
    assert max_centraliser_order(act.group, act.stabiliser) == c
    want = 2 * act.stabiliser_order ** 2 * c < act.order
    assert star_criterion(act.group, act.stabiliser) == want
    if want:
        assert qhat(prime_order_profile(act)) < Fraction(1, 2)


@given(st.fractions(min_value=0, max_value=1, max_denominator=500), st.integers(2, 60))
def test_threshold_is_the_largest_m(q2, n):
    t = q2_threshold_t(q2, n)
    if q2 == 0:
        assert t == n - 1
        return
    if q2 >= 1:
        assert t == 0
        return
    assert q2 < Fraction(1, t)
    assert not q2 < Fraction(1, t + 1)


def test_threshold_edge_cases():
    assert q2_threshold_t(Fraction(1, 2)) == 1
    assert q2_threshold_t(Fraction(49, 100)) == 2
    with pytest.raises(ValueError):
        q2_threshold_t(Fraction(0))
    with pytest.raises(ValueError):
        q2_threshold_t(Fraction(3, 2))


def test_report_fields():
    g = build_saxl(SMALL["S7/AGL1(7)"]().action, materialise=False)
    rep = probability_report(g).to_json()
    assert rep["q2"] == "13/20" and rep["q2_3dp"] == "0.650"
    assert rep["qhat"] == "73/60" and rep["t"] == 1
    assert rep["star"] is False
