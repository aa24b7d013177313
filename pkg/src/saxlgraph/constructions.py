"""Constructors for the explicit group families, each with its expected Saxl graph data."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .actions import GroupAction, coset_action, natural_action, wreath_product_action
from .fields import GF, prime_power
from .graphs import (ReferenceGraph, complete_graph, complete_multipartite, johnson_graph, paley_graph,
                     wreath_graph)
from .perm import Permutation, PermutationGroup, Subgroup

__all__ = [
    "FamilyInstance",
    "FAMILIES",
    "construct",
    "symmetric_natural",
    "gl2_vectors",
    "paley_affine",
    "pgl2_pairs",
    "cp_wr_c2",
    "sharply_2transitive_agl1",
    "agl1_on_cosets",
    "regular_times_frobenius",
    "gl2_on_unipotent_cosets",
    "extraspecial_example",
    "ExtraspecialGroup",
    "wreath_graph_example",
    "wreath_unique_regular",
    "dihedral_action",
    "l2p_mod_a4",
    "catalog_sporadic",
    "cyclic_regular",
]


@dataclass
class FamilyInstance:
    family: str
    params: dict
    action: GroupAction
    expected: ReferenceGraph | None = None
    expected_valency: int | None = None
    expected_r: int | None = None
    notes: dict = field(default_factory=dict)

    @property
    def label(self) -> str:
        args = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.family}({args})"


def _is_prime(m: int) -> bool:
    return m >= 2 and all(m % d for d in range(2, int(math.isqrt(m)) + 1))


def _natural(arrays, name: str, alpha: int = 0, order: int | None = None, labels=None) -> GroupAction:
    gens = [Permutation(a) for a in arrays]
    group = PermutationGroup(gens, len(arrays[0]), base=[alpha], order=order)
    act = natural_action(group, alpha, name=name)
    if labels is not None:
        act.with_labels(labels)
    return act


# -- small classical families -------------------------------------------------------------


def cyclic_regular(m: int) -> FamilyInstance:
    """``C_m`` acting regularly on ``m`` points."""
    act = _natural([np.roll(np.arange(m), -1)], f"C{m}", order=m)
    return FamilyInstance("cyclic_regular", {"m": m}, act, complete_graph(m), m - 1, m - 1)


def symmetric_natural(m: int) -> FamilyInstance:
    """``S_m`` on ``m`` points; base-two only for ``m <= 3``."""
    if m < 2:
        raise ValueError("need m >= 2")
    gens = [np.roll(np.arange(m), -1), np.r_[[1, 0], np.arange(2, m)]]
    act = _natural(gens, f"S{m}", order=math.factorial(m))
    exp = complete_graph(m) if m <= 3 else None
    return FamilyInstance("symmetric_natural", {"m": m}, act, exp, m - 1 if m <= 3 else 0,
                          1 if m == 3 else (m - 1 if m == 2 else 0))


def dihedral_action(m: int) -> GroupAction:
    """``D_{2m}`` on the vertices of an ``m``-gon."""
    x = np.arange(m)
    return _natural([(x + 1) % m, (-x) % m], f"D{2 * m}", order=2 * m if m > 2 else m * 2)


def _gl2_generators(F) -> list[np.ndarray]:
    """2x2 matrices generating GL_2(F) (diagonal by a primitive element, and transvections by a basis)."""
    w = F.primitive_element
    mats = [np.array([[w, 0], [0, 1]])]
    for j in range(F.f):
        t = F.p ** j
        mats.append(np.array([[1, t], [0, 1]]))
        mats.append(np.array([[1, 0], [t, 1]]))
    return mats


def _vector_action(F, mats, vectors: np.ndarray) -> list[np.ndarray]:
    """Images of row vectors ``v -> v M``, as index arrays into ``vectors``."""
    index = {tuple(int(x) for x in v): i for i, v in enumerate(vectors)}
    out = []
    for m in mats:
        a = F.add(F.mul(vectors[:, 0], m[0, 0]), F.mul(vectors[:, 1], m[1, 0]))
        b = F.add(F.mul(vectors[:, 0], m[0, 1]), F.mul(vectors[:, 1], m[1, 1]))
        out.append(np.array([index[(int(x), int(y))] for x, y in zip(a, b)], dtype=np.int64))
    return out


def gl2_vectors(q: int) -> FamilyInstance:
    """``GL_2(q)`` on the ``q^2 - 1`` non-zero vectors; the Saxl graph is complete multipartite ``(q+1) x (q-1)``."""
    if prime_power(q) is None or q > 32:
        raise ValueError("q must be a prime power <= 32")
    F = GF(q)
    vecs = np.array([(a, b) for a in range(q) for b in range(q) if (a, b) != (0, 0)], dtype=np.int64)
    # put (1, 0) first so that alpha = e1
    order_idx = sorted(range(len(vecs)), key=lambda i: (tuple(vecs[i]) != (1, 0), i))
    vecs = vecs[order_idx]
    gens = _vector_action(F, _gl2_generators(F), vecs)
    order = (q * q - 1) * (q * q - q)
    act = _natural(gens, f"GL2({q})", order=order, labels=[tuple(int(x) for x in v) for v in vecs])
    return FamilyInstance("gl2_vectors", {"q": q}, act, complete_multipartite(q + 1, q - 1),
                          (q + 1) * (q - 1) - (q - 1), None, {"field_polynomial": F.polynomial})


def gl2_on_unipotent_cosets(p: int = 3) -> FamilyInstance:
    """``GL_2(p)`` on the cosets of the unipotent subgroup of order ``p``."""
    if not _is_prime(p):
        raise ValueError("p must be prime")
    base = gl2_vectors(p).action
    group = base.group
    F = GF(p)
    vecs = np.array(base.labels)
    u = _vector_action(F, [np.array([[1, 1], [0, 1]])], vecs)[0]
    sub = Subgroup(group, [Permutation(u)])
    act = coset_action(group, sub, name=f"GL2({p})/C{p}")
    m = p + 1
    ell = (p - 1) * (p - 1)
    return FamilyInstance("gl2_unipotent_cosets", {"p": p}, act, complete_multipartite(m, ell), (m - 1) * ell)


def paley_affine(q: int, xi_choice: int = 0) -> FamilyInstance:
    """``V:D_{q+1}`` with ``V = GF(q^2)`` and ``H = <xi, x -> x^q>``, ``xi`` of order ``(q+1)/2``.

    ``xi_choice`` picks which element of that order is used (they give the same graph).
    """
    pf = prime_power(q)
    if pf is None or q % 2 == 0 or q > 27:
        raise ValueError("q must be an odd prime power <= 27")
    F = GF(q * q)
    k = (q + 1) // 2
    cands = [a for a in range(1, F.q) if F.element_order(a) == k]
    xi = cands[xi_choice % len(cands)]
    x = np.arange(F.q)
    gens = [F.add(x, F.p ** j) for j in range(F.f)]
    gens.append(F.mul(x, xi))
    gens.append(F.frobenius(x, pf[1]))
    order = q * q * (q + 1)
    act = _natural([np.asarray(g, dtype=np.int64) for g in gens], f"F{q}^2:D{q + 1}", order=order)
    # the Saxl graph is the complement of the Paley graph, itself a Paley graph
    comp = paley_graph(q * q).complement()
    expected = ReferenceGraph("paley_complement", {"order": q * q}, comp.adj)
    return FamilyInstance("paley_affine", {"q": q, "xi_choice": xi_choice}, act, expected, (q * q - 1) // 2, None,
                          {"xi": int(xi), "field_polynomial": F.polynomial})


def _projective_line_maps(F) -> tuple[list[np.ndarray], int]:
    """Generators of PGL_2(q) on the ``q + 1`` points of the projective line (``q`` is infinity)."""
    q = F.q
    inf = q
    x = np.arange(q)
    maps = []
    for j in range(F.f):
        maps.append(np.r_[F.add(x, F.p ** j), inf])
    maps.append(np.r_[F.mul(x, F.primitive_element), inf])
    inv = np.empty(q + 1, dtype=np.int64)
    inv[0], inv[inf] = inf, 0
    inv[1:q] = F.inv(np.arange(1, q))
    maps.append(inv)
    return [np.asarray(m, dtype=np.int64) for m in maps], inf


def pgl2_pairs(q: int) -> FamilyInstance:
    """``PGL_2(q)`` on unordered pairs of projective points; the Saxl graph is ``J(q+1, 2)``."""
    if prime_power(q) is None or not 5 < q <= 32:
        raise ValueError("q must be a prime power with 5 < q <= 32")
    F = GF(q)
    maps, _ = _projective_line_maps(F)
    pairs = list(itertools.combinations(range(q + 1), 2))
    index = {pr: i for i, pr in enumerate(pairs)}
    gens = []
    for m in maps:
        gens.append(np.array([index[tuple(sorted((int(m[a]), int(m[b]))))] for a, b in pairs], dtype=np.int64))
    act = _natural(gens, f"PGL2({q}) on pairs", order=q * (q * q - 1), labels=pairs)
    return FamilyInstance("pgl2_pairs", {"q": q}, act, johnson_graph(q + 1), 2 * (q - 1), 1)


def cp_wr_c2(p: int) -> FamilyInstance:
    """``C_p wr C_2`` on ``2p`` points; the Saxl graph is ``K_{p,p}``."""
    if not _is_prime(p) or p > 31:
        raise ValueError("p must be a prime <= 31")
    x = np.arange(2 * p)
    c = np.where(x < p, (x + 1) % p, x)
    swap = (x + p) % (2 * p)
    act = _natural([c, swap], f"C{p} wr C2", order=2 * p * p)
    return FamilyInstance("cp_wr_c2", {"p": p}, act, complete_multipartite(2, p), p, 1)


def sharply_2transitive_agl1(q: int) -> FamilyInstance:
    """``AGL_1(q)`` on ``GF(q)``, ``q = 2^f``; Frobenius, so the Saxl graph is complete."""
    pf = prime_power(q)
    if pf is None or pf[0] != 2 or pf[1] not in (2, 3, 5):
        raise ValueError("q must be 2^f with f in {2, 3, 5}")
    return _agl1_natural(q, "sharply_2transitive_agl1")


def _agl1_natural(q: int, family: str) -> FamilyInstance:
    F = GF(q)
    x = np.arange(q)
    gens = [F.add(x, F.p ** j) for j in range(F.f)] + [F.mul(x, F.primitive_element)]
    act = _natural([np.asarray(g, dtype=np.int64) for g in gens], f"AGL1({q})", order=q * (q - 1))
    return FamilyInstance(family, {"q": q}, act, complete_graph(q), q - 1, 1)


def agl1_on_cosets(q: int, r: int) -> FamilyInstance:
    """``AGL_1(q)`` on the cosets of ``C_{(q-1)/r}``; complete multipartite with ``q`` parts of size ``r``."""
    if (q - 1) % r or r <= 1 or r >= q - 1:
        raise ValueError("r must be a proper divisor of q - 1 greater than 1")
    base = _agl1_natural(q, "agl1").action
    F = GF(q)
    x = np.arange(q)
    k = (q - 1) // r
    mult = F.mul(x, F.power(F.primitive_element, r))
    sub = Subgroup(base.group, [Permutation(np.asarray(mult, dtype=np.int64))])
    assert sub.order == k
    act = coset_action(base.group, sub, name=f"AGL1({q})/C{k}")
    return FamilyInstance("agl1_on_cosets", {"q": q, "r": r}, act, complete_multipartite(q, r), (q - 1) * r)


def regular_times_frobenius(n: int, m: int) -> FamilyInstance:
    """``C_n x D_{2m}`` (``m`` odd prime) on ``n m`` points: complete multipartite, ``m`` parts of size ``n``."""
    from .actions import direct_product_action

    act = direct_product_action(cyclic_regular(n).action, dihedral_action(m))
    # vertex (i, j) is i*m + j; parts are indexed by j
    return FamilyInstance("regular_times_frobenius", {"n": n, "m": m}, act, complete_multipartite(m, n),
                          (m - 1) * n)


# -- extraspecial example -------------------------------------------------------------


class ExtraspecialGroup:
    """``P:(C_p x C_2)`` with ``P`` extraspecial of order ``p^3`` and exponent ``p``.

    Elements of ``P`` are ``(u1, u2, c)`` with product
    ``(u + u', c + c' + (u1 u2' - u2 u1') / 2)``; in these coordinates ``x1 = (1,0,0)``,
    ``x2 = (0,1,0)``, ``z = (0,0,1)`` and ``SL_2(p)`` acts on ``u`` fixing ``c``.
    ``phi`` is the matrix ``[[1,1],[0,1]]`` (so ``x1 -> x1 x2 z^((p-1)/2)``) and ``tau = -1``.
    An element of ``G`` is ``(u1, u2, c, d, e)`` meaning ``x * phi^d * tau^e``.
    """

    def __init__(self, p: int):
        if not _is_prime(p) or p == 2:
            raise ValueError("p must be an odd prime")
        self.p = p
        self.half = (p + 1) // 2

    def _auto(self, d: int, e: int, u1: int, u2: int) -> tuple[int, int]:
        p = self.p
        # row vector times [[1,1],[0,1]]^d, then times (-1)^e
        v1, v2 = u1, (u2 + d * u1) % p
        if e:
            v1, v2 = (-v1) % p, (-v2) % p
        return v1, v2

    def mul(self, g, h):
        p = self.p
        a1, a2, c, d, e = g
        b1, b2, c2, d2, e2 = h
        # (x a)(y b) = x a(y) ab
        y1, y2 = self._auto(d, e, b1, b2)
        cc = (c + c2 + self.half * (a1 * y2 - a2 * y1)) % p
        return ((a1 + y1) % p, (a2 + y2) % p, cc, (d + d2) % p, (e + e2) % 2)

    def identity(self):
        return (0, 0, 0, 0, 0)

    def elements(self) -> list[tuple]:
        p = self.p
        return list(itertools.product(range(p), range(p), range(p), range(p), range(2)))

    @property
    def x1(self):
        return (1, 0, 0, 0, 0)

    @property
    def x2(self):
        return (0, 1, 0, 0, 0)

    @property
    def z(self):
        return (0, 0, 1, 0, 0)

    @property
    def phi(self):
        return (0, 0, 0, 1, 0)

    @property
    def tau(self):
        return (0, 0, 0, 0, 1)

    def power(self, g, k: int):
        out = self.identity()
        for _ in range(k):
            out = self.mul(out, g)
        return out

    def regular_representation(self, gens) -> tuple[list[np.ndarray], list[tuple]]:
        """Right multiplication by each generator, on the element list."""
        elems = self.elements()
        index = {g: i for i, g in enumerate(elems)}
        return [np.array([index[self.mul(g, s)] for g in elems], dtype=np.int64) for s in gens], elems


def extraspecial_example(p: int) -> FamilyInstance:
    """The group ``P:(C_p x C_2)`` on the ``p^3`` cosets of ``<x1, tau>``: ``p`` components, each multipartite ``p x p``."""
    if p > 7:
        raise ValueError("p must be an odd prime <= 7")
    E = ExtraspecialGroup(p)
    gens = [E.x1, E.x2, E.phi, E.tau]
    reg, elems = E.regular_representation(gens)
    group = PermutationGroup([Permutation(a) for a in reg], order=2 * p ** 4)
    sub = Subgroup(group, [group.generators[0], group.generators[3]])
    act = coset_action(group, sub, name=f"extraspecial p={p}")
    # p disjoint copies of the complete multipartite graph with p parts of size p
    block = complete_multipartite(p, p).adj
    adj = np.kron(np.eye(p, dtype=np.int8), block.astype(np.int8)).astype(bool)
    expected = ReferenceGraph("copies_of_multipartite", {"copies": p, "parts": p, "size": p}, adj)
    return FamilyInstance("extraspecial_example", {"p": p}, act, expected, p * p - p, (p - 1) // 2,
                          {"components": p})


# -- wreath graph example -----------------------------------------------------------------


def _span(vectors: np.ndarray, p: int) -> np.ndarray:
    """All F_p-combinations of the rows of ``vectors``."""
    k, m = vectors.shape
    coeffs = np.array(list(itertools.product(range(p), repeat=k)), dtype=np.int64).reshape(-1, k)
    return (coeffs @ vectors) % p


def _rank_mod_p(m: np.ndarray, p: int) -> int:
    a = np.array(m, dtype=np.int64) % p
    rank = 0
    rows, cols = a.shape
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if a[r, c]), None)
        if piv is None:
            continue
        a[[rank, piv]] = a[[piv, rank]]
        a[rank] = a[rank] * pow(int(a[rank, c]), -1, p) % p
        for r in range(rows):
            if r != rank and a[r, c]:
                a[r] = (a[r] - a[r, c] * a[rank]) % p
        rank += 1
    return rank


def wreath_graph_subspaces(n: int, p: int) -> list[np.ndarray]:
    """Spanning sets of ``U_i = U^{g^i}``, ``i = 0..2n``, inside the sum-zero module ``W``."""
    m = 2 * n + 1
    e = np.ones((m, m), dtype=np.int64)
    e[np.arange(m), np.arange(m)] = (1 - m) % p
    e %= p
    # e[i-1] holds e_i; U = <e_1, e_3, ..., e_{2n-3}, e_{2n}>
    idx = list(range(1, 2 * n - 2, 2)) + [2 * n]
    u = e[[i - 1 for i in idx]]
    return [np.roll(u, i, axis=1) for i in range(m)]


def wreath_graph_example(n: int, p: int) -> FamilyInstance:
    """``W:<g>`` on the translates of the ``U_i``; the Saxl graph is ``W(2n+1, p^n)``."""
    m = 2 * n + 1
    if n < 2 or not _is_prime(p) or math.gcd(p, m) != 1 or m * p ** n > 10_000:
        raise ValueError("need n >= 2, p prime, gcd(p, 2n+1) = 1 and (2n+1) p^n <= 10^4")
    subspaces = wreath_graph_subspaces(n, p)
    # W = sum-zero vectors, enumerated via the first 2n coordinates
    free = np.array(list(itertools.product(range(p), repeat=m - 1)), dtype=np.int64).reshape(-1, m - 1)
    w = np.concatenate([free, (-free.sum(axis=1, keepdims=True)) % p], axis=1)
    weights = p ** np.arange(m - 1, -1, -1, dtype=np.int64)
    code = {int(c): i for i, c in enumerate(w @ weights)}
    points = []
    label = {}
    coset_of = []  # coset_of[i][vector index] -> point
    for i, u in enumerate(subspaces):
        span = _span(u, p)
        if len(np.unique(span @ weights)) != p ** n:
            raise ArithmeticError(f"U_{i} does not have dimension {n}")
        # coset label: smallest code in v + U_i
        codes = ((w[:, None, :] + span[None, :, :]) % p) @ weights
        key = codes.min(axis=1)
        cmap = np.empty(len(w), dtype=np.int64)
        for vi, kcode in enumerate(key):
            kk = (i, int(kcode))
            if kk not in label:
                label[kk] = len(points)
                points.append(kk)
            cmap[vi] = label[kk]
        coset_of.append((cmap, key))
    npts = len(points)
    assert npts == m * p ** n
    rep = {}
    for i in range(m):
        cmap, _ = coset_of[i]
        for vi in range(len(w)):
            rep.setdefault(int(cmap[vi]), (i, vi))
    gens = []
    # translations by a basis of W: delta_j - delta_m
    for j in range(m - 1):
        t = np.zeros(m, dtype=np.int64)
        t[j], t[m - 1] = 1, p - 1
        img = np.empty(npts, dtype=np.int64)
        for pt in range(npts):
            i, vi = rep[pt]
            v = (w[vi] + t) % p
            img[pt] = coset_of[i][0][code[int(v @ weights)]]
        gens.append(img)
    # g: coordinate cycle, taking U_i to U_{i+1}
    img = np.empty(npts, dtype=np.int64)
    for pt in range(npts):
        i, vi = rep[pt]
        v = np.roll(w[vi], 1)
        img[pt] = coset_of[(i + 1) % m][0][code[int(v @ weights)]]
    gens.append(img)
    act = _natural(gens, f"W:<g> n={n} p={p}", order=p ** (2 * n) * m, labels=points)
    return FamilyInstance("wreath_graph_example", {"n": n, "p": p}, act, wreath_graph(m, p ** n),
                          2 * p ** n, None, {"diameter": n})


def wreath_subspace_checks(n: int, p: int) -> dict:
    """The claims about the ``U_i``: pairwise distinct and ``U ∩ U_1 = 0`` (by rank)."""
    subs = wreath_graph_subspaces(n, p)
    ranks = [_rank_mod_p(u, p) for u in subs]
    distinct = all(_rank_mod_p(np.vstack([a, b]), p) > n for a, b in itertools.combinations(subs, 2))
    meet_trivial = _rank_mod_p(np.vstack([subs[0], subs[1]]), p) == 2 * n
    return {"ranks": ranks, "pairwise_distinct": distinct, "u_meet_u1_trivial": meet_trivial}


# -- wreath products in product action -----------------------------------------------------


def wreath_unique_regular(p: int, top: str = "S") -> FamilyInstance:
    """``D_{2p}`` on ``p`` points, wreathed with ``S_k`` (``k = (p-1)/2``) or with ``C_k`` for ``k`` prime.

    ``D_{2p}`` has ``k = (p-1)/2`` regular suborbits. With top group ``S_k`` there is a
    unique regular suborbit, so the valency is ``2^k k!``. With top group ``C_k``
    (``k`` prime) the valency is ``|L_delta|^k (r^k - r)`` where ``r`` is the number of
    regular suborbits of ``L``.
    """
    from .saxl import symmetric_group

    if not _is_prime(p) or p < 5:
        raise ValueError("p must be a prime >= 5")
    l = dihedral_action(p)
    r = (p - 1) // 2
    if top == "S":
        k = r
        topg = symmetric_group(k)
        val = 2 ** k * math.factorial(k)
        exp_r = 1
    elif top == "C":
        k = 3 if p == 5 else r
        if not _is_prime(k):
            raise ValueError("cyclic top group needs a prime number of coordinates")
        topg = PermutationGroup([Permutation(np.roll(np.arange(k), -1))])
        val = 2 ** k * (r ** k - r)
        exp_r = (r ** k - r) // k
    else:
        raise ValueError("top must be 'S' or 'C'")
    act = wreath_product_action(l, topg)
    return FamilyInstance("wreath_unique_regular", {"p": p, "top": top, "k": k}, act, None, val, exp_r,
                          {"base_action": l, "top_group": topg})


# -- L2(p) on the cosets of A4 -----------------------------------------------------------------


def _psl2_line(p: int) -> PermutationGroup:
    F = GF(p)
    x = np.arange(p)
    inf = p
    trans = np.r_[(x + 1) % p, inf]
    sq = F.power(F.primitive_element, 2)
    scale = np.r_[F.mul(x, sq), inf]
    inv = np.empty(p + 1, dtype=np.int64)
    inv[0], inv[inf] = inf, 0
    inv[1:p] = F.neg(F.inv(np.arange(1, p)))
    gens = [Permutation(np.asarray(g, dtype=np.int64)) for g in (trans, scale, inv)]
    return PermutationGroup(gens, order=p * (p * p - 1) // 2)


def find_a4(group: PermutationGroup, seed: int = 0, tries: int = 100_000) -> Subgroup:
    """An ``A_4``: random involution and element of order 3 generating a group of order 12 with no element of order 6."""
    rng = np.random.default_rng(seed)

    def of_order(k):
        while True:
            g = group.random_element(rng)
            o = g.order()
            if o % k == 0:
                return g ** (o // k)

    for _ in range(tries):
        t, s = of_order(2), of_order(3)
        h = PermutationGroup([t, s], group.degree)
        if h.order != 12:
            continue
        elems = h.elements_array()
        if any(Permutation(e, check=False).order() == 6 for e in elems):
            continue
        return Subgroup(group, [t, s], order=12)
    raise RuntimeError("no A4 found")


def l2p_mod_a4(p: int) -> FamilyInstance:
    """``L_2(p)`` on the cosets of a maximal ``A_4``; ``(p^3 - 51p + 194)/288`` regular suborbits."""
    if p not in (13, 37):
        raise ValueError("p must be 13 or 37")
    group = _psl2_line(p)
    a4 = find_a4(group)
    act = coset_action(group, a4, name=f"L2({p})/A4")
    k = (p ** 3 - 51 * p + 194) // 288
    return FamilyInstance("l2p_mod_a4", {"p": p}, act, None, 12 * k, k)


# -- catalog rows -------------------------------------------------------------------------------


SPORADIC_TABLE = {
    # group, subgroup: n, r, valency, qhat to three places
    ("M11", "2.S4"): (165, 1, 48, "1.169"),
    ("M12", "A4xS3"): (1320, 13, 936, "0.540"),
    ("J1", "2^3.7.3"): (1045, 5, 840, "0.661"),
}


def catalog_sporadic(name: str, subgroup: str) -> FamilyInstance:
    from .catalog import load_group, load_subgroup

    group = load_group(name)
    sub = load_subgroup(name, subgroup)
    act = coset_action(group, sub, name=f"{name}/{subgroup}")
    row = SPORADIC_TABLE.get((name, subgroup))
    if row is None:
        return FamilyInstance("catalog", {"group": name, "subgroup": subgroup}, act)
    n, r, val, qhat = row
    if act.n != n:
        raise ValueError(f"{name}/{subgroup}: degree {act.n}, expected {n}")
    return FamilyInstance("catalog_sporadic", {"group": name, "subgroup": subgroup}, act, None, val, r,
                          {"qhat_3dp": qhat})


def catalog_coset(name: str, subgroup: str) -> FamilyInstance:
    from .catalog import load_group, load_subgroup

    act = coset_action(load_group(name), load_subgroup(name, subgroup), name=f"{name}/{subgroup}")
    return FamilyInstance("catalog", {"group": name, "subgroup": subgroup}, act)


# -- registry -----------------------------------------------------------------------------------


FAMILIES: dict[str, tuple[Callable, str]] = {
    "cyclic_regular": (cyclic_regular, "m: C_m acting regularly"),
    "symmetric_natural": (symmetric_natural, "m: S_m on m points"),
    "gl2_vectors": (gl2_vectors, "q: GL_2(q) on non-zero vectors"),
    "gl2_unipotent_cosets": (gl2_on_unipotent_cosets, "p: GL_2(p) on cosets of a unipotent C_p"),
    "paley_affine": (paley_affine, "q [xi_choice]: GF(q^2):D_{q+1}"),
    "pgl2_pairs": (pgl2_pairs, "q: PGL_2(q) on pairs of projective points"),
    "cp_wr_c2": (cp_wr_c2, "p: C_p wr C_2 on 2p points"),
    "sharply_2transitive_agl1": (sharply_2transitive_agl1, "q: AGL_1(2^f), f in {2,3,5}"),
    "agl1_on_cosets": (agl1_on_cosets, "q r: AGL_1(q) on cosets of C_{(q-1)/r}"),
    "regular_times_frobenius": (regular_times_frobenius, "n m: C_n x D_2m on nm points"),
    "extraspecial_example": (extraspecial_example, "p: P:(C_p x C_2) on p^3 points"),
    "wreath_graph_example": (wreath_graph_example, "n p: W:<g> with Saxl graph W(2n+1, p^n)"),
    "wreath_unique_regular": (wreath_unique_regular, "p [top S|C]: D_2p in product action"),
    "l2p_mod_a4": (l2p_mod_a4, "p: L_2(p) on cosets of A_4, p in {13, 37}"),
    "catalog_sporadic": (catalog_sporadic, "name subgroup: catalog coset action"),
    "catalog": (catalog_coset, "name subgroup: any catalog coset action"),
}


def construct(family: str, *params) -> FamilyInstance:
    if family not in FAMILIES:
        raise KeyError(f"unknown family {family!r}; use one of {', '.join(FAMILIES)}")
    fn, _ = FAMILIES[family]
    return fn(*params)
