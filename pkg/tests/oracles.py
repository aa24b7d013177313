"""Brute-force reference computations used to check the library.

Everything here works from generator image arrays alone: groups are closed by
breadth-first multiplication, never through a stabiliser chain.
"""

from __future__ import annotations

from fractions import Fraction

import networkx as nx
import numpy as np


def closure(gens, limit: int = 20_000) -> np.ndarray:
    """All elements of the group generated by ``gens`` (image arrays), by BFS."""
    gens = [np.asarray(g, dtype=np.int64) for g in gens]
    n = len(gens[0])
    ident = np.arange(n, dtype=np.int64)
    seen = {ident.tobytes(): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g[x]  # x then g
                k = y.tobytes()
                if k not in seen:
                    seen[k] = y
                    nxt.append(y)
                    if len(seen) > limit:
                        raise RuntimeError("group too large for the closure oracle")
        frontier = nxt
    return np.array(list(seen.values()))


def two_point_stabiliser_sizes(elements: np.ndarray) -> np.ndarray:
    """``S[a, b] = |G_{a,b}|`` for every ordered pair, by counting elements."""
    n = elements.shape[1]
    fixed = (elements == np.arange(n)).astype(np.int64)
    return fixed.T @ fixed


def saxl_adjacency(elements: np.ndarray) -> np.ndarray:
    s = two_point_stabiliser_sizes(elements)
    adj = s == 1
    np.fill_diagonal(adj, False)
    return adj


def q2_by_pairs(elements: np.ndarray) -> Fraction:
    """Fraction of ordered pairs ``(a, b)`` (including ``a = b``) with ``G_{a,b} != 1``."""
    s = two_point_stabiliser_sizes(elements)
    n = elements.shape[1]
    return Fraction(int((s > 1).sum()), n * n)


def _is_prime(m: int) -> bool:
    return m > 1 and all(m % d for d in range(2, int(m ** 0.5) + 1))


def element_orders(elements: np.ndarray) -> np.ndarray:
    n = elements.shape[1]
    ident = np.arange(n)
    cur = elements.copy()
    orders = np.zeros(len(elements), dtype=np.int64)
    k = 1
    while (orders == 0).any():
        done = (cur == ident).all(axis=1) & (orders == 0)
        orders[done] = k
        cur = elements[np.arange(len(elements))[:, None], cur]  # cur then x
        k += 1
    return orders


def qhat_by_elements(elements: np.ndarray) -> Fraction:
    """``n^-2 * sum fix(x)^2`` over the elements of prime order, straight from the definition."""
    n = elements.shape[1]
    orders = element_orders(elements)
    prime = np.array([_is_prime(int(o)) for o in orders])
    fix = (elements[prime] == np.arange(n)).sum(axis=1).astype(np.int64)
    return Fraction(int((fix ** 2).sum()), n * n)


def nx_graph(adj: np.ndarray) -> nx.Graph:
    return nx.from_numpy_array(np.asarray(adj, dtype=np.int64))


def isomorphic(a: np.ndarray, b: np.ndarray) -> bool:
    return nx.is_isomorphic(nx_graph(a), nx_graph(b))


def brute_clique(adj: np.ndarray) -> int:
    return max((len(c) for c in nx.find_cliques(nx_graph(adj))), default=0)


def brute_chromatic(adj: np.ndarray) -> int:
    n = len(adj)
    if n == 0:
        return 0
    from itertools import product
    for k in range(1, n + 1):
        for cols in product(range(k), repeat=n):
            if cols[0] != 0:
                continue
            if all(cols[i] != cols[j] for i, j in zip(*np.nonzero(np.triu(adj)))):
                return k
    return n


def brute_total_domination(adj: np.ndarray) -> int | None:
    from itertools import combinations
    n = len(adj)
    for k in range(1, n + 1):
        for s in combinations(range(n), k):
            if adj[list(s)].any(axis=0).all():
                return k
    return None
