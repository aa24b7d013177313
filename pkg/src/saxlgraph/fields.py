"""Small finite fields GF(p^f) via log/antilog tables.

An element is stored as the integer ``c_0 + c_1 p + ... + c_{f-1} p^{f-1}``
where ``c_0 + c_1 x + ...`` is its residue modulo a fixed primitive polynomial.
The polynomials are shipped in ``data/primitive_polynomials.json`` (the first
primitive polynomial of each degree in lexicographic order of the coefficient
list) and are re-validated whenever a field is built.
"""

from __future__ import annotations

import json
from functools import lru_cache
from itertools import product as iproduct
from pathlib import Path
from typing import Sequence

import numpy as np

MAX_ORDER = 1024
_DATA = Path(__file__).resolve().parent / "data" / "primitive_polynomials.json"

__all__ = ["FiniteField", "GF", "prime_power", "find_primitive_polynomial", "MAX_ORDER"]


def prime_power(q: int) -> tuple[int, int] | None:
    """``(p, f)`` with ``q = p^f``, or None."""
    if q < 2:
        return None
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    f, m = 0, q
    while m % p == 0:
        m //= p
        f += 1
    return (p, f) if m == 1 else None


def _poly_mulmod_x(state: list[int], low: list[int], p: int) -> list[int]:
    """Multiply a residue by x modulo the monic polynomial ``x^f + low``."""
    f = len(low)
    top = state[-1]
    shifted = [0] + state[:-1]
    return [(shifted[i] - top * low[i]) % p for i in range(f)]


def _is_primitive(low: Sequence, p: int) -> bool:
    f = len(low)
    q = p ** f
    if f == 1:
        # x + c: the root -c must generate the multiplicative group
        g = (-low[0]) % p
        return _multiplicative_order(g, p) == p - 1
    state = [1] + [0] * (f - 1)
    seen_one_at = None
    for i in range(1, q):
        state = _poly_mulmod_x(state, list(low), p)
        if state == [1] + [0] * (f - 1):
            seen_one_at = i
            break
    return seen_one_at == q - 1


def _multiplicative_order(g: int, p: int) -> int:
    if g % p == 0:
        return 0
    k, x = 1, g % p
    while x != 1:
        x = x * g % p
        k += 1
    return k


def find_primitive_polynomial(p: int, f: int) -> list[int]:
    """Lowest coefficients ``[c_0, ..., c_{f-1}]`` of the first primitive ``x^f + ... + c_0``."""
    for low in iproduct(range(p), repeat=f):
        low = list(low[::-1])  # vary the constant term slowest
        if low[0] == 0:
            continue
        if _is_primitive(low, p):
            return low
    raise ValueError(f"no primitive polynomial of degree {f} over GF({p})")


@lru_cache(maxsize=1)
def _shipped() -> dict:
    if _DATA.exists():
        return json.loads(_DATA.read_text(encoding="utf-8"))
    return {}


class FiniteField:
    """GF(q) with ``q = p^f <= MAX_ORDER``; arithmetic is vectorised over numpy arrays."""

    def __init__(self, q: int):
        pf = prime_power(q)
        if pf is None:
            raise ValueError(f"{q} is not a prime power")
        if q > MAX_ORDER:
            raise ValueError(f"field order {q} exceeds {MAX_ORDER}")
        self.q = q
        self.p, self.f = pf
        key = f"{self.p}^{self.f}"
        low = _shipped().get(key)
        if low is None:
            low = find_primitive_polynomial(self.p, self.f)
        if not _is_primitive(low, self.p):
            raise ValueError(f"shipped polynomial for GF({q}) is not primitive")
        self.polynomial = list(low)
        self._build_tables()

    def _build_tables(self) -> None:
        p, f, q = self.p, self.f, self.q
        weights = p ** np.arange(f)
        digits = np.array(list(iproduct(range(p), repeat=f)), dtype=np.int64)[:, ::-1] if f > 1 else \
            np.arange(p)[:, None]
        # digits[i] are the coefficients of element i, lowest first
        self.digits = digits
        self.add_table = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        self.neg_table = ((-digits) % p) @ weights
        exp = np.zeros(q - 1, dtype=np.int64)
        if f == 1:
            g = (-self.polynomial[0]) % p
            x = 1
            for i in range(q - 1):
                exp[i] = x
                x = x * g % p
        else:
            state = [1] + [0] * (f - 1)
            for i in range(q - 1):
                exp[i] = int(np.dot(state, weights))
                state = _poly_mulmod_x(state, self.polynomial, p)
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        if (log[1:] < 0).any():
            raise ValueError("the chosen generator does not generate the multiplicative group")
        self.exp_table = exp
        self.log_table = log
        self.primitive_element = int(exp[1 % (q - 1)]) if q > 2 else 1

    # -- arithmetic ------------------------------------------------------------------

    def add(self, a, b):
        return self.add_table[a, b]

    def sub(self, a, b):
        return self.add_table[a, self.neg_table[b]]

    def neg(self, a):
        return self.neg_table[a]

    def mul(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        out = self.exp_table[(self.log_table[a] + self.log_table[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a):
        a = np.asarray(a)
        if (a == 0).any():
            raise ZeroDivisionError("0 has no inverse")
        return self.exp_table[(-self.log_table[a]) % (self.q - 1)]

    def power(self, a, k: int):
        a = np.asarray(a)
        out = self.exp_table[(self.log_table[a] * k) % (self.q - 1)]
        if k == 0:
            return np.ones_like(a)
        return np.where(a == 0, 0, out)

    def frobenius(self, a, times: int = 1):
        return self.power(a, self.p ** times)

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        from math import gcd
        return (self.q - 1) // gcd(int(self.log_table[a]), self.q - 1)

    def elements(self) -> np.ndarray:
        return np.arange(self.q)

    def nonzero(self) -> np.ndarray:
        return np.arange(1, self.q)

    def squares(self) -> np.ndarray:
        """Non-zero squares."""
        return np.unique(self.mul(self.nonzero(), self.nonzero()))

    def from_int(self, k: int) -> int:
        """The image of the integer ``k`` (an element of the prime subfield)."""
        return int(k % self.p)

    def check_axioms(self, rng: np.random.Generator, samples: int = 200) -> bool:
        a, b, c = rng.integers(self.q, size=(3, samples))
        ok = np.array_equal(self.add(a, self.add(b, c)), self.add(self.add(a, b), c))
        ok &= np.array_equal(self.mul(a, self.mul(b, c)), self.mul(self.mul(a, b), c))
        ok &= np.array_equal(self.mul(a, self.add(b, c)), self.add(self.mul(a, b), self.mul(a, c)))
        ok &= np.array_equal(self.add(a, b), self.add(b, a)) and np.array_equal(self.mul(a, b), self.mul(b, a))
        nz = a[a != 0]
        ok &= bool((self.mul(nz, self.inv(nz)) == 1).all())
        return bool(ok)

    def __repr__(self) -> str:
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def GF(q: int) -> FiniteField:
    return FiniteField(q)
