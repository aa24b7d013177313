"""Explicit graphs, the reference families, and isomorphism search.

Graphs here are small (a few hundred vertices at most for anything that needs
search), so adjacency is a dense boolean matrix. Isomorphisms are found by
colour refinement on the disjoint union of the two graphs followed by
individualisation and backtracking.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Graph",
    "ReferenceGraph",
    "as_graph",
    "complete_graph",
    "complete_multipartite",
    "wreath_graph",
    "johnson_graph",
    "paley_graph",
    "cycle_graph",
    "direct_product_graph",
    "find_isomorphism",
    "are_isomorphic",
    "IsomorphismResult",
]


class Graph:
    """Simple undirected graph on ``{0, ..., n-1}`` with a dense adjacency matrix."""

    def __init__(self, adjacency: np.ndarray, name: str = ""):
        adj = np.asarray(adjacency, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency must be square")
        self.adj = adj
        self.n = adj.shape[0]
        self.name = name

    @classmethod
    def from_edges(cls, n: int, edges, name: str = "") -> "Graph":
        adj = np.zeros((n, n), dtype=bool)
        for a, b in edges:
            adj[a, b] = adj[b, a] = True
        return cls(adj, name)

    def adjacency_matrix(self) -> np.ndarray:
        return self.adj

    def neighbourhood(self, v: int) -> np.ndarray:
        return np.flatnonzero(self.adj[v])

    def is_edge(self, a: int, b: int) -> bool:
        return bool(self.adj[a, b])

    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1)

    @property
    def valency(self) -> int:
        d = self.degrees()
        if len(d) and not (d == d[0]).all():
            raise ValueError("graph is not regular")
        return int(d[0]) if len(d) else 0

    def is_simple(self) -> bool:
        return bool((self.adj == self.adj.T).all() and not self.adj.diagonal().any())

    def complement(self) -> "Graph":
        c = ~self.adj
        np.fill_diagonal(c, False)
        return Graph(c, f"complement of {self.name}" if self.name else "")

    def edge_count(self) -> int:
        return int(np.triu(self.adj, 1).sum())

    def bitsets(self) -> list[int]:
        """Rows as Python integers (bit ``j`` of row ``i`` set iff ``i ~ j``)."""
        weights = np.packbits(self.adj, axis=1, bitorder="little")
        return [int.from_bytes(row.tobytes(), "little") for row in weights]

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<Graph{label} n={self.n} edges={self.edge_count()}>"


def as_graph(obj) -> Graph:
    """Explicit graph from a :class:`Graph`, a Saxl graph, or a square boolean matrix."""
    if isinstance(obj, Graph):
        return obj
    if hasattr(obj, "adjacency_matrix"):
        return Graph(obj.adjacency_matrix())
    return Graph(np.asarray(obj, dtype=bool))


class ReferenceGraph(Graph):
    """A graph from one of the named families, with its defining rule available for checks."""

    def __init__(self, kind: str, params: dict, adjacency: np.ndarray):
        shown = ",".join(str(v) for v in params.values() if not isinstance(v, Graph))
        super().__init__(adjacency, f"{kind}({shown})")
        self.kind = kind
        self.params = dict(params)

    def satisfies_rule(self, g: Graph) -> bool:
        """Check the family's structural rule directly on ``g`` (a necessary condition for isomorphism)."""
        return _RULES[self.kind](as_graph(g), **self.params)


def _ref(kind: str, adj: np.ndarray, **params) -> ReferenceGraph:
    return ReferenceGraph(kind, params, adj)


def complete_graph(m: int) -> ReferenceGraph:
    adj = ~np.eye(m, dtype=bool)
    return _ref("complete", adj, m=m)


def complete_multipartite(parts: int, size: int) -> ReferenceGraph:
    lab = np.repeat(np.arange(parts), size)
    return _ref("multipartite", lab[:, None] != lab[None, :], parts=parts, size=size)


def wreath_graph(n: int, k: int) -> ReferenceGraph:
    """``W(n, k)``: vertex ``(i, j)`` is ``i*k + j``; adjacent iff the first coordinates differ by 1 mod n."""
    i = np.repeat(np.arange(n), k)
    d = (i[:, None] - i[None, :]) % n
    return _ref("wreath", (d == 1) | (d == n - 1), n=n, k=k)


def johnson_graph(m: int) -> ReferenceGraph:
    """``J(m, 2)``: 2-subsets in lexicographic order, adjacent iff they share exactly one point."""
    pairs = list(itertools.combinations(range(m), 2))
    p = np.array(pairs)
    share = (p[:, None, 0] == p[None, :, 0]) | (p[:, None, 0] == p[None, :, 1]) | \
            (p[:, None, 1] == p[None, :, 0]) | (p[:, None, 1] == p[None, :, 1])
    np.fill_diagonal(share, False)
    return _ref("johnson", share, m=m)


def paley_graph(order: int) -> ReferenceGraph:
    """Paley graph on GF(order), ``order = 1 mod 4``: adjacent iff the difference is a non-zero square."""
    from .fields import GF

    if order % 4 != 1:
        raise ValueError("the Paley graph needs order = 1 mod 4")
    F = GF(order)
    sq = np.zeros(order, dtype=bool)
    sq[F.squares()] = True
    x = np.arange(order)
    diff = F.sub(x[:, None], x[None, :])
    return _ref("paley", sq[diff], order=order)


def cycle_graph(m: int) -> ReferenceGraph:
    i = np.arange(m)
    d = (i[:, None] - i[None, :]) % m
    return _ref("cycle", (d == 1) | (d == m - 1), m=m)


def direct_product_graph(a: Graph, b: Graph) -> ReferenceGraph:
    """Tensor product: ``(u, v) ~ (u', v')`` iff ``u ~ u'`` and ``v ~ v'``; vertex ``(u, v)`` is ``u*n_b + v``."""
    adj = np.kron(a.adj.astype(np.int8), b.adj.astype(np.int8)).astype(bool)
    return _ref("product", adj, a=a, b=b)


# -- structural rules ------------------------------------------------------------------


def _rule_complete(g: Graph, m: int) -> bool:
    return g.n == m and g.edge_count() == m * (m - 1) // 2


def _rule_multipartite(g: Graph, parts: int, size: int) -> bool:
    # the complement must be a disjoint union of cliques of the right sizes
    if g.n != parts * size:
        return False
    same = ~g.adj
    if not same.diagonal().all():
        return False
    rows = {row.tobytes() for row in same}
    if len(rows) != parts:
        return False
    return bool((same.sum(axis=1) == size).all()) and bool((same.astype(np.int64) @ same == size * same).all())


def _rule_johnson(g: Graph, m: int) -> bool:
    if g.n != m * (m - 1) // 2 or not g.is_simple():
        return False
    if not (g.degrees() == 2 * (m - 2)).all():
        return False
    common = g.adj.astype(np.int64) @ g.adj
    off = ~np.eye(g.n, dtype=bool)
    # adjacent pairs share m-2 neighbours, non-adjacent pairs share 4
    return bool((common[g.adj] == m - 2).all() and (common[off & ~g.adj] == 4).all())


def _rule_wreath(g: Graph, n: int, k: int) -> bool:
    if g.n != n * k or not g.is_simple():
        return False
    # classes of vertices with identical neighbourhoods, arranged in a cycle
    keys = {}
    cls = np.empty(g.n, dtype=np.int64)
    for v in range(g.n):
        cls[v] = keys.setdefault(g.adj[v].tobytes(), len(keys))
    if len(keys) != n or not (np.bincount(cls) == k).all():
        return False
    quotient = np.zeros((n, n), dtype=bool)
    a, b = np.nonzero(g.adj)
    quotient[cls[a], cls[b]] = True
    if not (quotient.sum(axis=1) == (2 if n > 2 else 1)).all():
        return False
    # every edge between two classes forces all edges between them
    counts = np.zeros((n, n), dtype=np.int64)
    np.add.at(counts, (cls[a], cls[b]), 1)
    if not (counts[quotient] == k * k).all():
        return False
    # the class graph must be connected (a single cycle)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in np.flatnonzero(quotient[x]):
            if int(y) not in seen:
                seen.add(int(y))
                stack.append(int(y))
    return len(seen) == n


def _rule_paley(g: Graph, order: int) -> bool:
    # strongly regular with the Paley parameters
    if g.n != order or not g.is_simple():
        return False
    k = (order - 1) // 2
    if not (g.degrees() == k).all():
        return False
    common = g.adj.astype(np.int64) @ g.adj
    off = ~np.eye(g.n, dtype=bool)
    return bool((common[g.adj] == (order - 5) // 4).all() and (common[off & ~g.adj] == (order - 1) // 4).all())


def _rule_cycle(g: Graph, m: int) -> bool:
    return g.n == m and bool((g.degrees() == 2).all()) and _connected(g)


def _rule_product(g: Graph, a: Graph, b: Graph) -> bool:
    return g.n == a.n * b.n and g.edge_count() == 2 * a.edge_count() * b.edge_count()


def _rule_paley_complement(g: Graph, order: int) -> bool:
    return g.n == order and g.is_simple() and _rule_paley(g.complement(), order)


def _rule_copies_of_multipartite(g: Graph, copies: int, parts: int, size: int) -> bool:
    if g.n != copies * parts * size or not g.is_simple():
        return False
    label = _component_labels(g)
    if label.max() + 1 != copies:
        return False
    return all(_rule_multipartite(Graph(g.adj[np.ix_(label == c, label == c)]), parts, size) for c in range(copies))


def _component_labels(g: Graph) -> np.ndarray:
    label = np.full(g.n, -1, dtype=np.int64)
    k = 0
    for v in range(g.n):
        if label[v] >= 0:
            continue
        seen = np.zeros(g.n, dtype=bool)
        seen[v] = True
        frontier = seen.copy()
        while frontier.any():
            nxt = g.adj[frontier].any(axis=0) & ~seen
            seen |= nxt
            frontier = nxt
        label[seen] = k
        k += 1
    return label


def _connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = np.zeros(g.n, dtype=bool)
    seen[0] = True
    frontier = seen.copy()
    while frontier.any():
        nxt = g.adj[frontier].any(axis=0) & ~seen
        seen |= nxt
        frontier = nxt
    return bool(seen.all())


_RULES = {
    "complete": _rule_complete,
    "multipartite": _rule_multipartite,
    "johnson": _rule_johnson,
    "wreath": _rule_wreath,
    "paley": _rule_paley,
    "cycle": _rule_cycle,
    "product": _rule_product,
    "paley_complement": _rule_paley_complement,
    "copies_of_multipartite": _rule_copies_of_multipartite,
}


# -- isomorphism ------------------------------------------------------------------------


@dataclass
class IsomorphismResult:
    mapping: np.ndarray | None
    conclusive: bool
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.mapping is not None


def _refine(adj: np.ndarray, colours: np.ndarray) -> np.ndarray:
    """Colour refinement to a stable partition; colours are canonical across the whole vertex set."""
    ncol = len(np.unique(colours))
    while True:
        onehot = np.zeros((len(colours), colours.max() + 1), dtype=np.int64)
        onehot[np.arange(len(colours)), colours] = 1
        counts = adj @ onehot
        sig = np.concatenate([colours[:, None], counts], axis=1)
        _, new = np.unique(sig, axis=0, return_inverse=True)
        new = new.ravel()
        k = new.max() + 1
        if k == ncol:
            return new
        colours, ncol = new, k


def find_isomorphism(a, b, *, node_limit: int = 200_000, max_n: int = 200) -> IsomorphismResult:
    """An isomorphism ``a -> b`` as an array ``m`` with ``a[i, j] == b[m[i], m[j]]``.

    Returns an inconclusive result when the graphs exceed ``max_n`` vertices or the
    search exceeds ``node_limit`` refinement steps.
    """
    ga, gb = as_graph(a), as_graph(b)
    n = ga.n
    if gb.n != n:
        return IsomorphismResult(None, True)
    if ga.edge_count() != gb.edge_count() or sorted(ga.degrees()) != sorted(gb.degrees()):
        return IsomorphismResult(None, True)
    if n > max_n:
        return IsomorphismResult(None, False)
    if n == 0:
        return IsomorphismResult(np.zeros(0, dtype=np.int64), True)
    union = np.zeros((2 * n, 2 * n), dtype=np.int64)
    union[:n, :n] = ga.adj
    union[n:, n:] = gb.adj
    nodes = 0
    aborted = False

    def balanced(col: np.ndarray) -> bool:
        ca = np.bincount(col[:n], minlength=col.max() + 1)
        cb = np.bincount(col[n:], minlength=col.max() + 1)
        return bool(np.array_equal(ca, cb))

    def search(col: np.ndarray):
        nonlocal nodes, aborted
        nodes += 1
        if nodes > node_limit:
            aborted = True
            return None
        col = _refine(union, col)
        if not balanced(col):
            return None
        counts = np.bincount(col[:n])
        if (counts == 1).all():
            mapping = np.empty(n, dtype=np.int64)
            pos_b = np.empty(col.max() + 1, dtype=np.int64)
            pos_b[col[n:]] = np.arange(n)
            mapping[:] = pos_b[col[:n]]
            if np.array_equal(ga.adj, gb.adj[np.ix_(mapping, mapping)]):
                return mapping
            return None
        # branch on the smallest non-singleton cell
        sizes = np.where(counts > 1, counts, n + 1)
        cell = int(np.argmin(sizes))
        v = int(np.flatnonzero(col[:n] == cell)[0])
        fresh = col.max() + 1
        for w in np.flatnonzero(col[n:] == cell):
            trial = col.copy()
            trial[v] = fresh
            trial[n + w] = fresh
            found = search(trial)
            if found is not None or aborted:
                return found
        return None

    start = np.concatenate([ga.degrees(), gb.degrees()]).astype(np.int64)
    _, start = np.unique(start, return_inverse=True)
    mapping = search(start.ravel())
    if mapping is not None:
        return IsomorphismResult(mapping, True, nodes)
    return IsomorphismResult(None, not aborted, nodes)


def are_isomorphic(a, b, **kw) -> bool | None:
    """True/False, or None if the search was inconclusive."""
    res = find_isomorphism(a, b, **kw)
    if res.found:
        return True
    return False if res.conclusive else None
