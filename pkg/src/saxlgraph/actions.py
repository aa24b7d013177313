"""Transitive group actions: natural and coset actions, suborbits, blocks, products.

A :class:`GroupAction` keeps the abstract group in whatever permutation
representation it was built from (``group``), and records how each generator
acts on the domain ``Omega = {0, ..., n-1}`` (``gen_images``). The image group
on Omega is only materialised on request, because for large coset actions its
stabiliser chain would be much bigger than the one for ``group``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from itertools import product as iproduct
from typing import Sequence

import numpy as np

from .perm import Permutation, PermutationGroup, Subgroup, _inverse, orbit_array, orbits_array

log = logging.getLogger(__name__)

DEFAULT_DOMAIN_LIMIT = 1_000_000
DEFAULT_ENUM_LIMIT = 200_000

__all__ = [
    "GroupAction",
    "PrimeOrderProfile",
    "natural_action",
    "coset_action",
    "point_stabiliser",
    "suborbits",
    "prime_order_profile",
    "direct_product_action",
    "wreath_product_action",
    "minimal_block_systems",
    "block_containing",
    "distinguishing_number",
    "DomainLimitError",
    "EnumerationLimitError",
]


class DomainLimitError(ValueError):
    """The requested domain is larger than the configured limit."""


class EnumerationLimitError(ValueError):
    """A computation would need to enumerate more group elements than allowed."""


class GroupAction:
    """A group acting on ``{0, ..., n-1}`` with a distinguished point ``alpha``.

    Parameters
    ----------
    group
        The acting group, in any faithful permutation representation.
    gen_images
        For each generator of ``group``, its action on the domain as an array.
    alpha
        Base point.
    stab_gens
        Generators of ``G_alpha`` in the representation of ``group``. When
        omitted, the action must be the natural one (``gen_images`` equal to the
        generator arrays) and the stabiliser is read from the chain.
    coset_reps
        Optional list of elements of ``group`` with ``alpha^rep[i] = i``.
    """

    def __init__(self, group: PermutationGroup, gen_images: Sequence[np.ndarray], alpha: int = 0, *,
                 stab_gens: Sequence[Permutation] | None = None,
                 coset_reps: Sequence[np.ndarray] | None = None,
                 stab_images: Sequence[np.ndarray] | None = None,
                 name: str = "", labels: Sequence | None = None):
        if len(gen_images) != len(group.generators):
            raise ValueError("need one image per generator")
        self.group = group
        self.gen_images = [np.asarray(g, dtype=np.int64) for g in gen_images]
        self.n = len(self.gen_images[0]) if self.gen_images else 1
        self.alpha = alpha
        self.name = name
        self.labels = list(labels) if labels is not None else None
        self._coset_reps = coset_reps
        self._tree = None
        orb = orbit_array(self.gen_images, alpha) if self.gen_images else [alpha]
        self.transitive = len(orb) == self.n
        if stab_gens is None:
            stab = group.stabiliser(alpha)
            self.stabiliser = stab
        else:
            self.stabiliser = Subgroup(group, list(stab_gens), order=group.order // len(orb), check=False)
        self.stabiliser_order = self.stabiliser.order
        if self.transitive and self.n * self.stabiliser_order != group.order:
            raise ValueError("orbit-stabiliser check failed for the supplied stabiliser")
        if stab_images is None:
            if stab_gens is None:
                stab_images = [g.images for g in self.stabiliser.generators]
            else:
                stab_images = [self.image_of(h) for h in self.stabiliser.generators]
        self.stab_images = [np.asarray(h, dtype=np.int64) for h in stab_images]
        self._faithful = None
        self._suborbits = None
        self._image_group = None

    # -- basic data -------------------------------------------------------------

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def is_natural(self) -> bool:
        return self._coset_reps is None and self.n == self.group.degree and all(
            np.array_equal(a, g.images) for a, g in zip(self.gen_images, self.group.generators))

    def suborbit_labels(self) -> np.ndarray:
        """Label of the ``G_alpha``-orbit of every point (its smallest member)."""
        if self._suborbits is None:
            self._suborbits = orbits_array(self.stab_images, self.n)
        return self._suborbits

    @property
    def faithful(self) -> bool:
        """Whether only the identity acts trivially.

        The kernel lies in ``G_alpha``, so it is enough that ``G_alpha`` acts
        faithfully; a regular ``G_alpha``-orbit settles that immediately.
        """
        if self._faithful is None:
            if self.stabiliser_order == 1 or self.is_natural:
                self._faithful = True
            else:
                lengths = np.bincount(self.suborbit_labels())
                if lengths.max() == self.stabiliser_order:
                    self._faithful = True
                else:
                    img = PermutationGroup([Permutation(h, check=False) for h in self.stab_images], self.n)
                    self._faithful = img.order == self.stabiliser_order
        return self._faithful

    # -- moving between representations ----------------------------------------------

    def image_of(self, g: Permutation) -> np.ndarray:
        """Action of an element of ``group`` on the domain."""
        if self.is_natural:
            return g.images
        if self._coset_reps is None:
            raise ValueError("cannot map arbitrary elements for this action")
        return self._coset_image(g.images)

    def _coset_image(self, g: np.ndarray) -> np.ndarray:
        return np.array([self._coset_index(g[r]) for r in self._coset_reps], dtype=np.int64)

    def _schreier_tree(self):
        if self._tree is None:
            parent = np.full(self.n, -1, dtype=np.int64)
            pgen = np.full(self.n, -1, dtype=np.int64)
            depth = np.zeros(self.n, dtype=np.int64)
            parent[self.alpha] = self.alpha
            order = [self.alpha]
            for x in order:
                for k, s in enumerate(self.gen_images):
                    y = int(s[x])
                    if parent[y] < 0:
                        parent[y] = x
                        pgen[y] = k
                        depth[y] = depth[x] + 1
                        order.append(y)
            self._tree = (parent, pgen, depth, order)
        return self._tree

    def transversal_word(self, point: int) -> list[int]:
        """Generator indices ``[k1, k2, ...]`` with ``alpha^(g_k1 g_k2 ...) = point``."""
        parent, pgen, _, _ = self._schreier_tree()
        if parent[point] < 0:
            raise ValueError(f"point {point} is not in the orbit of alpha")
        word = []
        while point != self.alpha:
            word.append(int(pgen[point]))
            point = int(parent[point])
        return word[::-1]

    def transversal_image(self, point: int) -> np.ndarray:
        """An element mapping ``alpha`` to ``point``, as it acts on the domain."""
        t = np.arange(self.n)
        for k in self.transversal_word(point):
            t = self.gen_images[k][t]
        return t

    def transversal_element(self, point: int) -> Permutation:
        """An element of ``group`` mapping ``alpha`` to ``point``."""
        if self._coset_reps is not None:
            return Permutation(self._coset_reps[point], check=False)
        t = np.arange(self.group.degree)
        for k in self.transversal_word(point):
            t = self.group.generators[k].images[t]
        return Permutation(t, check=False)

    def stabiliser_images_at(self, point: int) -> list[np.ndarray]:
        """Generators of ``G_point`` acting on the domain (conjugates of ``G_alpha``)."""
        t = self.transversal_image(point)
        tinv = _inverse(t)
        return [t[h[tinv]] for h in self.stab_images]

    def image_group(self, limit: int = 5000) -> PermutationGroup:
        """The permutation group induced on the domain (small domains only)."""
        if self._image_group is None:
            if self.n > limit:
                raise DomainLimitError(f"image group on {self.n} points exceeds limit {limit}")
            gens = [Permutation(g, check=False) for g in self.gen_images]
            try:
                self._image_group = PermutationGroup(gens, self.n, base=[self.alpha], order=self.group.order)
            except ValueError:
                self._image_group = PermutationGroup(gens, self.n, base=[self.alpha])
        return self._image_group

    def check_homomorphism(self, rng: np.random.Generator, words: int = 5, length: int = 6) -> bool:
        """Spot-check that images of random words multiply like the words."""
        if self._coset_reps is None and not self.is_natural:
            return True
        k = len(self.gen_images)
        if k == 0:
            return True
        for _ in range(words):
            w = rng.integers(k, size=length)
            g = np.arange(self.group.degree)
            img = np.arange(self.n)
            for i in w:
                g = self.group.generators[i].images[g]
                img = self.gen_images[i][img]
            if not np.array_equal(self.image_of(Permutation(g, check=False)), img):
                return False
        return True

    def with_labels(self, labels) -> "GroupAction":
        self.labels = list(labels)
        return self

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<GroupAction{label} n={self.n} |G|={self.order} |H|={self.stabiliser_order}>"

    # coset bookkeeping is attached by coset_action
    _coset_index = None


def natural_action(group: PermutationGroup, alpha: int = 0, name: str = "") -> GroupAction:
    return GroupAction(group, [g.images for g in group.generators], alpha, name=name)


class _CosetKeyer:
    """Canonical keys for right cosets ``Hg``: the least image of a base of G under the elements of ``Hg``."""

    def __init__(self, group: PermutationGroup, subgroup_elements: np.ndarray):
        base = group.base or [0]
        self.hb = subgroup_elements[:, base]  # |H| x k
        self.deg = group.degree
        k = len(base)
        self.use_int = self.deg ** k < 2 ** 62
        self.weights = np.array([self.deg ** (k - 1 - i) for i in range(k)], dtype=np.int64) if self.use_int else None

    def key(self, g: np.ndarray):
        rows = g[self.hb]
        if self.use_int:
            return int((rows @ self.weights).min())
        idx = np.lexsort(rows.T[::-1])[0]
        return rows[idx].tobytes()


def coset_action(group: PermutationGroup, subgroup: Subgroup, *, domain_limit: int = DEFAULT_DOMAIN_LIMIT,
                 name: str = "", enum_limit: int = DEFAULT_ENUM_LIMIT) -> GroupAction:
    """Action of ``group`` by right multiplication on the right cosets of ``subgroup``."""
    index = group.order // subgroup.order
    if index > domain_limit:
        raise DomainLimitError(f"index {index} exceeds the domain limit {domain_limit}")
    if subgroup.order > enum_limit:
        raise EnumerationLimitError(f"subgroup of order {subgroup.order} is too large to enumerate")
    h_elems = subgroup.group.elements_array(limit=enum_limit)
    keyer = _CosetKeyer(group, h_elems)
    ident = np.arange(group.degree)
    reps = [ident]
    keys = {keyer.key(ident): 0}
    gens = [g.images for g in group.generators]
    images = [np.empty(index, dtype=np.int64) for _ in gens]
    i = 0
    while i < len(reps):
        r = reps[i]
        for k, s in enumerate(gens):
            rs = s[r]
            key = keyer.key(rs)
            j = keys.get(key)
            if j is None:
                j = len(reps)
                if j >= index:
                    raise ValueError("more cosets than the index allows; the subgroup data is inconsistent")
                keys[key] = j
                reps.append(rs)
            images[k][i] = j
        i += 1
    if len(reps) != index:
        raise ValueError(f"found {len(reps)} cosets, expected {index}")

    def coset_index(g: np.ndarray) -> int:
        return keys[keyer.key(g)]

    # the stabiliser of the trivial coset is the subgroup itself
    stab_images = [np.array([coset_index(h.images[r]) for r in reps], dtype=np.int64)
                   for h in subgroup.generators]
    action = GroupAction.__new__(GroupAction)
    action._coset_index = coset_index
    GroupAction.__init__(action, group, images, 0, stab_gens=subgroup.generators, coset_reps=reps,
                         stab_images=stab_images, name=name or (subgroup.name or ""))
    action.stabiliser = subgroup
    return action


def point_stabiliser(action: GroupAction, point: int) -> Subgroup:
    """``G_point`` as a subgroup of ``action.group``."""
    if not action.transitive:
        raise ValueError("point_stabiliser expects a transitive action")
    t = action.transversal_element(point)
    tinv = ~t
    gens = [tinv * h * t for h in action.stabiliser.generators]
    return Subgroup(action.group, gens, order=action.stabiliser_order, check=True)


def suborbits(action: GroupAction) -> list[tuple[int, int]]:
    """``(representative, length)`` for each orbit of ``G_alpha``, in order of representative."""
    labels = action.suborbit_labels()
    counts = np.bincount(labels, minlength=action.n)
    reps = np.flatnonzero(counts)
    return [(int(r), int(counts[r])) for r in reps]


# -- prime order profile ---------------------------------------------------------


def _primes_dividing(m: int) -> list[int]:
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def _prime_order_of_rows(rows: np.ndarray, base: Sequence[int], primes: Sequence[int]) -> np.ndarray:
    """For each row, the prime ``p`` with ``x^p = 1`` if ``x`` has prime order, else 0.

    An element is determined by the images of a base, so ``x^p`` is tested only on base points.
    """
    base = np.asarray(base, dtype=np.int64)
    m = len(rows)
    out = np.zeros(m, dtype=np.int64)
    if len(base) == 0:
        return out
    nontrivial = (rows[:, base] != base).any(axis=1)
    ridx = np.arange(m)[:, None]
    for p in primes:
        cur = np.broadcast_to(base, (m, len(base))).copy()
        for _ in range(p):
            cur = rows[ridx, cur]
        hit = (cur == base).all(axis=1) & nontrivial & (out == 0)
        out[hit] = p
    return out


@dataclass(frozen=True)
class PrimeOrderProfile:
    """Counts of prime-order elements of G keyed by ``(p, fixed points on the domain)``.

    ``entries`` maps ``(p, f)`` to a count. Entries with ``f = 0`` are present only
    when ``fixed_point_free_known`` is true.
    """

    n: int
    entries: dict
    fixed_point_free_known: bool

    def rows(self) -> list[tuple[int, int, int]]:
        return [(p, f, m) for (p, f), m in sorted(self.entries.items())]

    def total(self) -> int:
        return sum(self.entries.values())

    def fix_square_sum(self) -> int:
        """``sum fix(x)^2`` over prime-order ``x`` in G."""
        return sum(m * f * f for (p, f), m in self.entries.items())


def stabiliser_prime_profile(action: GroupAction, enum_limit: int = DEFAULT_ENUM_LIMIT) -> dict:
    """``{(p, f): count}`` over prime-order elements of ``G_alpha`` (each fixes ``f >= 1`` points)."""
    h = action.stabiliser.group
    if h.order > enum_limit:
        raise EnumerationLimitError(f"stabiliser of order {h.order} is too large to enumerate")
    primes = _primes_dividing(h.order) if h.order > 1 else []
    prof: dict = {}
    if not primes:
        return prof
    omega_gens = action.stab_images
    img_group = PermutationGroup([Permutation(x, check=False) for x in omega_gens], action.n,
                                 order=h.order) if not action.is_natural else None
    src = img_group if img_group is not None else h
    for rows in src.element_blocks():
        pr = _prime_order_of_rows(rows, src.base, primes)
        sel = np.flatnonzero(pr)
        if len(sel) == 0:
            continue
        fix = (rows[sel] == np.arange(rows.shape[1])).sum(axis=1)
        for p, f in zip(pr[sel], fix):
            prof[(int(p), int(f))] = prof.get((int(p), int(f)), 0) + 1
    return prof


def prime_order_profile(action: GroupAction, enum_limit: int = DEFAULT_ENUM_LIMIT, *,
                        require_complete: bool = False) -> PrimeOrderProfile:
    """Aggregate ``(p, fix(x), count)`` over the prime-order elements of G.

    Elements fixing some point are counted through ``G_alpha``: by a double count
    over pairs (x, fixed point), ``m_G(p, f) = n * m_H(p, f) / f``. Elements with
    no fixed point need the total number of order-``p`` elements of G, which is
    found by enumerating G when ``|G| <= enum_limit``.
    """
    if not action.transitive:
        raise ValueError("prime_order_profile expects a transitive action")
    if not action.faithful:
        raise ValueError("prime_order_profile expects a faithful action")
    n = action.n
    h_prof = stabiliser_prime_profile(action, enum_limit)
    entries = {}
    for (p, f), m in h_prof.items():
        if (n * m) % f:
            raise ArithmeticError("fixed-point double count is not integral")
        entries[(p, f)] = n * m // f
    known = action.order <= enum_limit
    if known:
        totals = prime_element_counts(action.group, enum_limit)
        for p, tot in totals.items():
            rest = tot - sum(m for (q, f), m in entries.items() if q == p)
            if rest < 0:
                raise ArithmeticError("prime-order counts are inconsistent")
            if rest:
                entries[(p, 0)] = rest
    elif require_complete:
        raise EnumerationLimitError(f"|G| = {action.order} exceeds the enumeration limit {enum_limit}")
    return PrimeOrderProfile(n, entries, known)


def prime_element_counts(group: PermutationGroup, enum_limit: int = DEFAULT_ENUM_LIMIT) -> dict:
    """``{p: number of elements of order p}``, by enumeration."""
    if group.order > enum_limit:
        raise EnumerationLimitError(f"|G| = {group.order} exceeds the enumeration limit {enum_limit}")
    primes = _primes_dividing(group.order) if group.order > 1 else []
    counts = {p: 0 for p in primes}
    for rows in group.element_blocks():
        pr = _prime_order_of_rows(rows, group.base, primes)
        for p in primes:
            counts[p] += int((pr == p).sum())
    return counts


# -- products ---------------------------------------------------------------------


def direct_product_action(a: GroupAction, b: GroupAction, *, domain_limit: int = DEFAULT_DOMAIN_LIMIT) -> GroupAction:
    """``A x B`` on ``Omega_a x Omega_b``; the pair ``(i, j)`` is point ``i * n_b + j``."""
    if not (a.transitive and b.transitive):
        raise ValueError("direct_product_action expects transitive factors")
    na, nb = a.n, b.n
    n = na * nb
    if n > domain_limit:
        raise DomainLimitError(f"degree {n} exceeds the domain limit {domain_limit}")
    grid_a, grid_b = np.divmod(np.arange(n), nb)
    gens = []
    for g in a.gen_images:
        gens.append(g[grid_a] * nb + grid_b)
    for g in b.gen_images:
        gens.append(grid_a * nb + g[grid_b])
    perms = [Permutation(g, check=False) for g in gens]
    alpha = a.alpha * nb + b.alpha
    group = PermutationGroup(perms, n, base=[alpha])
    labels = [(int(i), int(j)) for i, j in zip(grid_a, grid_b)]
    return natural_action(group, alpha, name=f"({a.name or 'A'}) x ({b.name or 'B'})").with_labels(labels)


def wreath_product_action(l: GroupAction, top: PermutationGroup, *,
                          domain_limit: int = DEFAULT_DOMAIN_LIMIT) -> GroupAction:
    """Product action of ``L wr P`` on ``Delta^k``.

    A tuple ``(d_0, ..., d_{k-1})`` is encoded as ``sum d_i * m^(k-1-i)`` with ``m = |Delta|``.
    ``P`` acts by moving coordinate ``i`` to position ``i^pi``.
    """
    m, k = l.n, top.degree
    if k * math.log(max(m, 2)) > math.log(domain_limit) + 1e-9:
        raise DomainLimitError(f"degree {m}^{k} exceeds the domain limit {domain_limit}")
    n = m ** k
    digits = np.array(list(iproduct(range(m), repeat=k)), dtype=np.int64).reshape(n, k)
    weights = m ** np.arange(k - 1, -1, -1, dtype=np.int64)
    gens = []
    for g in l.gen_images:
        d = digits.copy()
        d[:, 0] = g[d[:, 0]]
        gens.append(d @ weights)
    for pi in top.generators:
        d = np.empty_like(digits)
        d[:, pi.images] = digits
        gens.append(d @ weights)
    # with L transitive and conjugation by P moving coordinate 0 everywhere, these generate L wr P
    if not top.is_transitive() and k > 1:
        for c in range(1, k):
            for g in l.gen_images:
                d = digits.copy()
                d[:, c] = g[d[:, c]]
                gens.append(d @ weights)
    perms = [Permutation(g, check=False) for g in gens]
    alpha = int(sum(l.alpha * w for w in weights))
    expected = l.order ** k * top.order if l.faithful else None
    group = PermutationGroup(perms, n, base=[alpha], order=expected) if expected else PermutationGroup(perms, n)
    labels = [tuple(int(x) for x in row) for row in digits]
    return natural_action(group, alpha, name=f"({l.name or 'L'}) wr {k}").with_labels(labels)


# -- blocks ----------------------------------------------------------------------


def block_containing(gen_images: Sequence[np.ndarray], n: int, a: int, b: int) -> np.ndarray:
    """Smallest block of imprimitivity containing ``a`` and ``b`` (Atkinson's union-find)."""
    parent = np.arange(n)

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    queue = [(a, b)]
    qi = 0
    while qi < len(queue):
        x, y = queue[qi]
        qi += 1
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        parent[ry] = rx
        for g in gen_images:
            queue.append((int(g[x]), int(g[y])))
    root = find(a)
    return np.array([x for x in range(n) if find(x) == root], dtype=np.int64)


def _block_system(gen_images: Sequence[np.ndarray], n: int, block: np.ndarray) -> list[list[int]]:
    label = np.full(n, -1, dtype=np.int64)
    label[block] = 0
    blocks = [block]
    i = 0
    while i < len(blocks):
        for g in gen_images:
            img = g[blocks[i]]
            lab = label[img[0]]
            if lab < 0:
                label[img] = len(blocks)
                blocks.append(np.sort(img))
            elif not (label[img] == lab).all():
                raise ValueError("set is not a block")
        i += 1
    return sorted([sorted(int(x) for x in blk) for blk in blocks])


def minimal_block_systems(action: GroupAction) -> list[list[list[int]]]:
    """All block systems whose blocks are minimal non-trivial; empty for primitive actions."""
    if not action.transitive:
        raise ValueError("minimal_block_systems expects a transitive action")
    n, alpha = action.n, action.alpha
    if n <= 2:
        return []
    candidates = []
    for rep, _ in suborbits(action):
        if rep == alpha:
            continue
        blk = block_containing(action.gen_images, n, alpha, rep)
        if len(blk) < n:
            candidates.append(frozenset(int(x) for x in blk))
    candidates = set(candidates)
    minimal = [c for c in candidates if not any(d < c for d in candidates)]
    systems = [_block_system(action.gen_images, n, np.array(sorted(c))) for c in minimal]
    return sorted(systems, key=lambda s: (len(s[0]), s))


# -- distinguishing number -------------------------------------------------------------


def _multinomial(sizes: Sequence[int]) -> int:
    out = math.factorial(sum(sizes))
    for s in sizes:
        out //= math.factorial(s)
    return out


def _balanced_sizes(n: int, k: int) -> list[int]:
    q, r = divmod(n, k)
    return [q + 1] * r + [q] * (k - r)


class _ColourStabiliserTest:
    """Decide whether a colouring of the points has a non-trivial colour-preserving element."""

    def __init__(self, group: PermutationGroup, enum_limit: int = 50_000):
        self.group = group
        self.elements = None
        if group.order <= enum_limit:
            e = group.elements_array(limit=enum_limit)
            ident = (e == np.arange(group.degree)).all(axis=1)
            self.elements = e[~ident]

    def nontrivial(self, colours: np.ndarray) -> bool:
        if self.elements is not None:
            return bool((colours[self.elements] == colours).all(axis=1).any())
        return self._backtrack(colours)

    def _backtrack(self, colours: np.ndarray) -> bool:
        levels = self.group._levels
        deg = self.group.degree
        ident = np.arange(deg)

        def rec(i: int, w: np.ndarray, moved: bool) -> bool:
            if i == len(levels):
                return moved and bool((colours[w] == colours).all())
            lv = levels[i]
            want = colours[lv.point]
            for gamma, u in lv.trans.items():
                if colours[w[gamma]] != want:
                    continue
                if rec(i + 1, w[u], moved or gamma != lv.point):
                    return True
            return False

        return rec(0, ident, False)


def distinguishing_number(group: PermutationGroup, *, max_degree: int = 20) -> tuple[int, list[list[int]]]:
    """Smallest number of parts of a partition whose (part-wise) stabiliser is trivial.

    Returns the number and a witness partition. Part sizes whose multinomial count is
    below ``|G|`` cannot work (the colouring's orbit would be too small) and are skipped.
    """
    n = group.degree
    if n > max_degree:
        raise ValueError(f"degree {n} exceeds the search limit {max_degree}")
    if group.order == 1:
        return 1, [list(range(n))] if n else []
    tester = _ColourStabiliserTest(group)
    for k in range(1, n + 1):
        if _multinomial(_balanced_sizes(n, k)) < group.order:
            continue
        found = _search_colouring(n, k, group.order, tester)
        if found is not None:
            parts = [[int(x) for x in np.flatnonzero(found == c)] for c in range(k)]
            return k, [p for p in parts if p]
    raise AssertionError("the discrete partition always has trivial stabiliser")


def _search_colouring(n: int, k: int, order: int, tester: _ColourStabiliserTest) -> np.ndarray | None:
    """Restricted-growth colourings with ``k`` colours, pruned by the multinomial bound."""
    colours = np.zeros(n, dtype=np.int64)
    sizes = [0] * k

    def bound_ok(pos: int, used: int) -> bool:
        # best multinomial reachable: distribute the remaining points as evenly as possible
        rem = n - pos
        s = sorted(sizes)
        for _ in range(rem):
            s[0] += 1
            s.sort()
        return _multinomial(s) >= order

    def rec(pos: int, used: int) -> bool:
        if pos == n:
            return used == k and not tester.nontrivial(colours)
        if n - pos < k - used:
            return False
        for c in range(min(used + 1, k)):
            colours[pos] = c
            sizes[c] += 1
            if bound_ok(pos + 1, max(used, c + 1)) and rec(pos + 1, max(used, c + 1)):
                return True
            sizes[c] -= 1
        return False

    return colours.copy() if rec(0, 0) else None
