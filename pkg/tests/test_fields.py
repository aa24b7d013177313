from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from saxlgraph.fields import GF, MAX_ORDER, find_primitive_polynomial, prime_power

ORDERS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128, 243, 256, 512, 1024]


@pytest.mark.parametrize("q", ORDERS)
def test_multiplicative_group_is_cyclic(q):
    F = GF(q)
    assert sorted(F.exp_table.tolist()) == list(range(1, q))
    assert F.element_order(F.primitive_element if q > 2 else 1) == q - 1


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ORDERS), st.data())
def test_field_axioms(q, data):
    F = GF(q)
    el = st.integers(0, q - 1)
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    assert F.add(a, F.add(b, c)) == F.add(F.add(a, b), c)
    assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0 and F.sub(a, b) == F.add(a, F.neg(b))
    if a:
        assert F.mul(a, F.inv(a)) == 1


@pytest.mark.parametrize("q", [4, 8, 9, 25, 27, 64])
def test_frobenius_is_an_automorphism(q):
    F = GF(q)
    x = F.elements()
    fr = F.frobenius(x)
    assert sorted(fr.tolist()) == x.tolist()
    y = x[::-1]
    assert np.array_equal(F.frobenius(F.mul(x, y)), F.mul(fr, F.frobenius(y)))
    assert np.array_equal(F.frobenius(F.add(x[:, None], y[None, :])),
                          F.add(fr[:, None], F.frobenius(y)[None, :]))
    # fixed points form the prime subfield
    assert int((fr == x).sum()) == F.p


@pytest.mark.parametrize("q", [3, 5, 7, 9, 25, 27, 49, 81])
def test_squares_have_half_the_units(q):
    assert len(GF(q).squares()) == (q - 1) // 2


def test_rejects_non_prime_powers_and_large_orders():
    for q in (1, 6, 12, 100):
        with pytest.raises(ValueError):
            GF(q)
    with pytest.raises(ValueError):
        GF(2048)
    assert MAX_ORDER == 1024


def test_prime_power():
    assert prime_power(81) == (3, 4)
    assert prime_power(1024) == (2, 10)
    assert prime_power(10) is None


def test_found_polynomial_matches_shipped():
    assert find_primitive_polynomial(3, 3) == GF(27).polynomial
