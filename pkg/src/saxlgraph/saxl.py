"""The Saxl graph: vertices are the points, edges are the bases of size two.

For a transitive group with point stabiliser ``H = G_alpha``, the neighbours of
``alpha`` are the points of the regular ``H``-orbits, and every other
neighbourhood is a translate of that one. The graph is therefore stored as the
neighbourhood of ``alpha`` plus a Schreier tree; full adjacency is materialised
only on request and only for moderate ``n``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .actions import GroupAction, suborbits
from .perm import PermutationGroup, orbit_array

DEFAULT_ADJACENCY_LIMIT = 50_000

__all__ = [
    "SaxlGraph",
    "BaseProfile",
    "build_saxl",
    "is_base",
    "base_profile",
    "neighbourhood",
    "wreath_base_check",
    "count_regular_suborbits_wreath",
    "regular_suborbits_product",
]


@dataclass(frozen=True)
class BaseProfile:
    has_base_two: bool
    witnesses: tuple[int, int] | None
    regular: bool = False

    @property
    def base_size_verdict(self) -> str:
        if self.regular:
            return "b(G)=1"
        return "b(G)=2" if self.has_base_two else "b(G)>2"


class SaxlGraph:
    """Saxl graph of a transitive, faithful action."""

    def __init__(self, action: GroupAction, adjacency_limit: int = DEFAULT_ADJACENCY_LIMIT):
        if not action.transitive:
            raise ValueError("the Saxl graph needs a transitive action")
        if not action.faithful:
            raise ValueError("the action is not faithful; quotient by the kernel first")
        self.action = action
        self.n = action.n
        self.alpha = action.alpha
        self.stabiliser_order = action.stabiliser_order
        self.suborbits = suborbits(action)
        h = self.stabiliser_order
        self.regular_reps = [rep for rep, length in self.suborbits if length == h and rep != self.alpha]
        self.r = len(self.regular_reps)
        self.valency = self.r * h
        labels = action.suborbit_labels()
        regular = np.zeros(self.n, dtype=bool)
        regular[self.regular_reps] = True
        self.neighbourhood_of_alpha = np.flatnonzero(regular[labels])
        self.adjacency_limit = adjacency_limit
        self._bits = None
        self._dense = None

    # -- neighbourhoods ---------------------------------------------------------------

    def neighbourhood(self, v: int) -> np.ndarray:
        """Neighbours of ``v``, sorted: the image of the neighbourhood of ``alpha`` under any ``g`` with ``alpha^g = v``."""
        if v == self.alpha:
            return self.neighbourhood_of_alpha
        if self._dense is not None:
            return np.flatnonzero(self._dense[v])
        t = self.action.transversal_image(v)
        return np.sort(t[self.neighbourhood_of_alpha])

    def is_edge(self, a: int, b: int) -> bool:
        if self._dense is not None:
            return bool(self._dense[a, b])
        nb = self.neighbourhood(a)
        i = np.searchsorted(nb, b)
        return bool(i < len(nb) and nb[i] == b)

    @property
    def has_adjacency(self) -> bool:
        return self._bits is not None

    def materialise(self) -> "SaxlGraph":
        """Build the full adjacency matrix (packed bit rows), following the Schreier tree."""
        if self._bits is not None:
            return self
        n = self.n
        if n > self.adjacency_limit:
            raise MemoryError(f"n = {n} exceeds the adjacency limit {self.adjacency_limit}")
        parent, pgen, _, order = self.action._schreier_tree()
        rows = np.empty((n, self.valency), dtype=np.int64)
        rows[self.alpha] = self.neighbourhood_of_alpha
        for y in order[1:]:
            rows[y] = self.action.gen_images[pgen[y]][rows[parent[y]]]
        dense = np.zeros((n, n), dtype=bool)
        if self.valency:
            dense[np.repeat(np.arange(n), self.valency), rows.ravel()] = True
        self._dense = dense
        self._bits = np.packbits(dense, axis=1)
        return self

    def adjacency_matrix(self) -> np.ndarray:
        """Dense boolean adjacency (materialising it if needed)."""
        self.materialise()
        return self._dense

    @property
    def adjacency_bits(self) -> np.ndarray:
        self.materialise()
        return self._bits

    @property
    def base_profile(self) -> BaseProfile:
        if self.stabiliser_order == 1:
            w = (self.alpha, self.alpha)
            return BaseProfile(True, w, regular=True)
        if self.r == 0:
            return BaseProfile(False, None)
        return BaseProfile(True, (self.alpha, int(self.regular_reps[0])))

    def is_complete(self) -> bool:
        return self.valency == self.n - 1

    def report(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "valency": self.valency,
            "alpha_neighbourhood": [int(x) + 1 for x in self.neighbourhood_of_alpha],
        }

    def adjacency_lines(self):
        for v in range(self.n):
            yield self.neighbourhood(v)

    def __repr__(self) -> str:
        return f"<SaxlGraph n={self.n} r={self.r} valency={self.valency}>"


def build_saxl(action: GroupAction, adjacency_limit: int = DEFAULT_ADJACENCY_LIMIT,
               materialise: bool | None = None) -> SaxlGraph:
    """Saxl graph of ``action``; adjacency is built eagerly when ``n`` is small."""
    g = SaxlGraph(action, adjacency_limit)
    if materialise is None:
        materialise = g.n <= min(adjacency_limit, 2000)
    if materialise:
        g.materialise()
    return g


def neighbourhood(graph: SaxlGraph, v: int) -> np.ndarray:
    return graph.neighbourhood(v)


def base_profile(action: GroupAction) -> BaseProfile:
    return SaxlGraph(action, adjacency_limit=0).base_profile


def is_base(action: GroupAction, a: int, b: int) -> bool:
    """Whether ``{a, b}`` is a base: ``G_a`` acts regularly on the orbit of ``b``.

    ``G_a`` is obtained by conjugating ``G_alpha``; then ``|G_{a,b}| = |G_a| / |b^{G_a}|``.
    """
    if not action.faithful:
        return False
    h = action.stabiliser_order
    if h == 1:
        return True
    gens = action.stabiliser_images_at(a)
    return len(orbit_array(gens, b)) == h


# -- wreath products in product action ------------------------------------------------


def _pair_type(l: GroupAction, a: int, b: int) -> int:
    """Label of the L-orbit of the pair ``(a, b)``: the suborbit of ``b`` seen from ``a``."""
    t = l.transversal_image(a)
    tinv = np.empty_like(t)
    tinv[t] = np.arange(len(t))
    return int(l.suborbit_labels()[tinv[b]])


def wreath_base_check(l: GroupAction, top: PermutationGroup, omega: Sequence[int], omega2: Sequence[int]) -> bool:
    """Base test in ``L wr P`` on ``Delta^k`` from coordinate data alone.

    ``(omega, omega2)`` is a base iff every coordinate pair is a base for ``L`` and no
    non-identity element of ``P`` preserves the colouring of coordinates by the
    L-orbit of their pair.
    """
    k = top.degree
    if len(omega) != k or len(omega2) != k:
        raise ValueError("tuples must have one entry per coordinate")
    for a, b in zip(omega, omega2):
        if not is_base(l, a, b):
            return False
    colours = np.array([_pair_type(l, a, b) for a, b in zip(omega, omega2)])
    for rows in top.element_blocks():
        keep = (colours[rows] == colours).all(axis=1)
        moved = (rows != np.arange(k)).any(axis=1)
        if (keep & moved).any():
            return False
    return True


def regular_suborbits_product(l: GroupAction, top: PermutationGroup) -> int:
    """Regular suborbits of ``L wr P`` at a constant tuple.

    They correspond to ``P``-orbits of maps from the coordinates to the regular
    suborbits of ``L`` whose stabiliser in ``P`` is trivial.
    """
    r = SaxlGraph(l, adjacency_limit=0).r
    k = top.degree
    elems = np.concatenate(list(top.element_blocks()))
    moved = (elems != np.arange(k)).any(axis=1)
    free = 0
    for f in itertools.product(range(r), repeat=k):
        f = np.array(f)
        if not ((f[elems] == f).all(axis=1) & moved).any():
            free += 1
    assert free % top.order == 0
    return free // top.order


def count_regular_suborbits_wreath(l: GroupAction, k: int) -> int:
    """Regular suborbits of ``L wr S_k`` when ``L`` has exactly ``k`` regular suborbits (always 1)."""
    r = SaxlGraph(l, adjacency_limit=0).r
    if r != k:
        raise ValueError(f"L has {r} regular suborbits, not {k}")
    return regular_suborbits_product(l, symmetric_group(k))


def symmetric_group(k: int) -> PermutationGroup:
    from .perm import Permutation

    if k <= 1:
        return PermutationGroup([], max(k, 1))
    cyc = Permutation(np.roll(np.arange(k), -1))
    swap = Permutation(np.r_[[1, 0], np.arange(2, k)])
    return PermutationGroup([cyc, swap])
