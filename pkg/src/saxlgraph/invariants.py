"""Graph invariants of Saxl graphs, each returned with a certificate that can be re-checked.

The hard invariants (clique, independence, chromatic and total domination numbers,
and the largest minimal base) are exact searches under a time budget. When the
budget runs out the answer is a bracket ``lower <= value <= upper`` flagged inexact.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order, connected_components as _cc

from .actions import DEFAULT_ENUM_LIMIT, EnumerationLimitError, GroupAction
from .graphs import Graph, ReferenceGraph, as_graph, find_isomorphism
from .perm import Permutation, orbit_array
from .saxl import SaxlGraph

__all__ = [
    "Bracket",
    "HamiltonianResult",
    "CommonNeighbourResult",
    "InvariantReport",
    "connected_components",
    "diameter",
    "is_eulerian",
    "find_hamiltonian_cycle",
    "common_neighbour_verify",
    "clique_number",
    "independence_number",
    "chromatic_number",
    "total_domination_number",
    "max_minimal_base",
    "matches_reference",
    "self_complementary_check",
    "compute_invariants",
    "check_clique",
    "check_independent",
    "check_colouring",
    "check_total_dominating",
    "is_minimal_base",
]

DEFAULT_BUDGET_MS = 10_000


class _Budget:
    def __init__(self, ms: float | None):
        self.deadline = None if ms is None else time.monotonic() + ms / 1000
        self.expired = False

    def check(self) -> bool:
        """True once the budget is spent (checked cheaply, sticky)."""
        if not self.expired and self.deadline is not None and time.monotonic() > self.deadline:
            self.expired = True
        return self.expired


@dataclass
class Bracket:
    """Result of a budgeted exact search."""

    lower: int
    upper: int
    certificate: list = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int | None:
        return self.lower if self.exact else None

    def to_json(self) -> dict:
        return {"value": self.value, "lower": self.lower, "upper": self.upper, "exact": self.exact,
                "certificate": _one_indexed(self.certificate)}


def _one_indexed(cert):
    if cert and isinstance(cert[0], (list, tuple, np.ndarray)):
        return [[int(v) + 1 for v in part] for part in cert]
    return [int(v) + 1 for v in cert]


def _dense(graph) -> np.ndarray:
    if isinstance(graph, SaxlGraph):
        return graph.adjacency_matrix()
    return as_graph(graph).adj


def _bits(adj: np.ndarray) -> list[int]:
    packed = np.packbits(adj, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def _members(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


# -- connectivity and distance -------------------------------------------------------------


def _component_of_alpha(graph: SaxlGraph) -> np.ndarray:
    """Orbit of alpha under ``<G_alpha, g_beta : beta a regular suborbit representative>``."""
    act = graph.action
    gens = list(act.stab_images) + [act.transversal_image(b) for b in graph.regular_reps]
    return np.sort(orbit_array(gens, graph.alpha)) if gens else np.array([graph.alpha])


def connected_components(graph) -> list[list[int]]:
    """Connected components, sorted by least vertex.

    For a Saxl graph without materialised adjacency, the component of alpha is an
    orbit of a subgroup and the others are its translates, so no BFS over edges is needed.
    """
    if isinstance(graph, SaxlGraph) and not graph.has_adjacency:
        comp = _component_of_alpha(graph)
        label = np.full(graph.n, -1, dtype=np.int64)
        parent, pgen, _, order = graph.action._schreier_tree()
        # translate the block along the Schreier tree
        blocks = []
        for v in order:
            if label[v] >= 0:
                continue
            block = np.sort(graph.action.transversal_image(int(v))[comp])
            label[block] = len(blocks)
            blocks.append(block)
        return sorted(([int(x) for x in b] for b in blocks), key=lambda b: b[0])
    adj = _dense(graph)
    k, labels = _cc(csr_matrix(adj), directed=False)
    comps = [np.flatnonzero(labels == i).tolist() for i in range(k)]
    return sorted(comps, key=lambda c: c[0])


def _eccentricity(adj: np.ndarray, source: int) -> float:
    order, pred = breadth_first_order(csr_matrix(adj), source, directed=False, return_predecessors=True)
    if len(order) < adj.shape[0]:
        return math.inf
    dist = np.zeros(adj.shape[0], dtype=np.int64)
    for v in order[1:]:
        dist[v] = dist[pred[v]] + 1
    return int(dist.max())


def diameter(graph, source: int | None = None) -> float:
    """Diameter (``math.inf`` if disconnected).

    Saxl graphs are vertex-transitive, so the eccentricity of alpha suffices. Without
    materialised adjacency, distances are constant on suborbits and the BFS runs over
    suborbit representatives only.
    """
    if isinstance(graph, SaxlGraph):
        if source is not None:
            return _eccentricity(graph.adjacency_matrix(), source)
        if graph.has_adjacency:
            return _eccentricity(graph.adjacency_matrix(), graph.alpha)
        return _suborbit_bfs(graph)
    adj = as_graph(graph).adj
    if source is not None:
        return _eccentricity(adj, source)
    return max((_eccentricity(adj, v) for v in range(adj.shape[0])), default=0)


def _suborbit_bfs(graph: SaxlGraph) -> float:
    act = graph.action
    labels = act.suborbit_labels()
    reps = {int(labels[rep]): rep for rep, _ in graph.suborbits}
    dist = {int(labels[graph.alpha]): 0}
    frontier = [graph.alpha]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for x in frontier:
            for lab in np.unique(labels[graph.neighbourhood(x)]):
                lab = int(lab)
                if lab not in dist:
                    dist[lab] = d
                    nxt.append(reps[lab])
        frontier = nxt
    if len(dist) < len(reps):
        return math.inf
    return max(dist.values())


def is_eulerian(graph) -> bool:
    """Connected with every degree even."""
    if isinstance(graph, SaxlGraph):
        return graph.valency % 2 == 0 and len(connected_components(graph)) == 1
    g = as_graph(graph)
    return bool((g.degrees() % 2 == 0).all()) and len(connected_components(g)) == 1


# -- Hamiltonian cycles ---------------------------------------------------------------------


@dataclass
class HamiltonianResult:
    found: bool
    cycle: list[int] | None = None
    method: str = ""

    def to_json(self) -> dict:
        if not self.found:
            return {"found": False}
        return {"found": True, "cycle": [v + 1 for v in self.cycle], "method": self.method}


def check_hamiltonian_cycle(adj: np.ndarray, cycle) -> bool:
    n = adj.shape[0]
    if cycle is None or len(cycle) != n or len(set(cycle)) != n or n < 3:
        return False
    return all(adj[cycle[i], cycle[(i + 1) % n]] for i in range(n))


def _palmer(adj: np.ndarray) -> list[int] | None:
    """Close gaps in a cyclic arrangement by segment reversals; always succeeds under Ore's condition."""
    n = adj.shape[0]
    cyc = list(range(n))
    for _ in range(n * n):
        gap = next((i for i in range(n) if not adj[cyc[i], cyc[(i + 1) % n]]), None)
        if gap is None:
            return cyc
        # rotate so that the gap is between positions 0 and 1
        cyc = cyc[gap:] + cyc[:gap]
        a, b = cyc[0], cyc[1]
        j = next((j for j in range(2, n - 1) if adj[a, cyc[j]] and adj[b, cyc[j + 1]]), None)
        if j is None:
            return None
        cyc[1:j + 1] = cyc[j:0:-1]
    return None


def _posa(adj: np.ndarray, rng: np.random.Generator, budget: _Budget) -> list[int] | None:
    """Rotation-extension search with random restarts."""
    n = adj.shape[0]
    nbrs = [np.flatnonzero(adj[v]) for v in range(n)]
    while not budget.check():
        start = int(rng.integers(n))
        path = [start]
        pos = np.full(n, -1, dtype=np.int64)
        pos[start] = 0
        stall = 0
        while stall < 10 * n and not budget.check():
            end = path[-1]
            cand = nbrs[end]
            free = cand[pos[cand] < 0]
            if len(free):
                w = int(free[rng.integers(len(free))])
                pos[w] = len(path)
                path.append(w)
                stall = 0
                continue
            if len(path) == n and adj[path[-1], path[0]]:
                return path
            # rotate: pick a neighbour w of the end on the path, reverse the tail after w
            on = cand[(pos[cand] >= 0) & (pos[cand] < len(path) - 2)]
            if len(path) == n:
                # try to find a rotation whose new end is adjacent to the start
                for w in on:
                    i = pos[w]
                    if adj[path[i + 1], path[0]]:
                        path[i + 1:] = path[:i:-1]
                        for k in range(i + 1, n):
                            pos[path[k]] = k
                        return path
            if not len(on):
                break
            w = int(on[rng.integers(len(on))])
            i = pos[w]
            path[i + 1:] = path[:i:-1]
            for k in range(i + 1, len(path)):
                pos[path[k]] = k
            stall += 1
    return None


def _exact_hamiltonian(adj: np.ndarray, budget: _Budget) -> tuple[list[int] | None, bool]:
    """Backtracking over paths from vertex 0; returns (cycle, conclusive)."""
    n = adj.shape[0]
    bits = _bits(adj)
    full = (1 << n) - 1
    path = [0]

    def rec(v: int, used: int) -> bool | None:
        if budget.check():
            return None
        if used == full:
            return bool(bits[v] & 1)
        options = bits[v] & ~used
        while options:
            low = options & -options
            w = low.bit_length() - 1
            options ^= low
            path.append(w)
            res = rec(w, used | low)
            if res:
                return True
            path.pop()
            if res is None:
                return None
        return False

    res = rec(0, 1)
    if res:
        return list(path), True
    return None, res is not None


def find_hamiltonian_cycle(graph, budget_ms: float | None = DEFAULT_BUDGET_MS, seed: int = 0) -> HamiltonianResult:
    """A Hamiltonian cycle, or ``found=False`` (the search gave up, or proved none exists for small n).

    When the minimum degree is at least ``n/2`` the gap-closing method is used and
    cannot fail. Otherwise rotation-extension with random restarts is tried, and
    small graphs (``n < 64``) fall back to exhaustive backtracking.
    """
    adj = _dense(graph)
    n = adj.shape[0]
    if n < 3:
        return HamiltonianResult(False)
    deg = adj.sum(axis=1)
    if deg.min() * 2 >= n:
        cyc = _palmer(adj)
        if cyc is not None and check_hamiltonian_cycle(adj, cyc):
            return HamiltonianResult(True, [int(v) for v in cyc], "gap-closing")
    if deg.min() < 2 or len(connected_components(Graph(adj))) > 1:
        return HamiltonianResult(False, method="disconnected")
    rng = np.random.default_rng(seed)
    if n < 64:
        # a short randomised attempt first, then exhaustive search for the rest of the budget
        cyc = _posa(adj, rng, _Budget(None if budget_ms is None else budget_ms / 4))
        method = "rotation-extension"
        if cyc is None:
            cyc, _ = _exact_hamiltonian(adj, _Budget(budget_ms))
            method = "backtracking"
    else:
        cyc = _posa(adj, rng, _Budget(budget_ms))
        method = "rotation-extension"
    if cyc is not None and check_hamiltonian_cycle(adj, cyc):
        return HamiltonianResult(True, [int(v) for v in cyc], method)
    return HamiltonianResult(False, method=method)


# -- common neighbours ---------------------------------------------------------------------


@dataclass
class CommonNeighbourResult:
    holds: bool
    witnesses: dict = field(default_factory=dict)
    failing_pair: tuple[int, int] | None = None

    def to_json(self) -> dict:
        out = {"holds": self.holds, "witnesses": {str(k + 1): v + 1 for k, v in self.witnesses.items()}}
        if self.failing_pair is not None:
            out["failing_pair"] = [self.failing_pair[0] + 1, self.failing_pair[1] + 1]
        return out


def common_neighbour_verify(graph) -> CommonNeighbourResult:
    """Whether every two vertices have a common neighbour.

    For a Saxl graph it suffices to test ``alpha`` against one representative of
    each suborbit; a witness is recorded for each.
    """
    if isinstance(graph, SaxlGraph):
        nbr_a = np.zeros(graph.n, dtype=bool)
        nbr_a[graph.neighbourhood_of_alpha] = True
        witnesses = {}
        for rep, _ in graph.suborbits:
            common = graph.neighbourhood(rep)[nbr_a[graph.neighbourhood(rep)]]
            if not len(common):
                return CommonNeighbourResult(False, witnesses, (graph.alpha, int(rep)))
            witnesses[int(rep)] = int(common[0])
        return CommonNeighbourResult(True, witnesses)
    adj = as_graph(graph).adj.astype(np.int64)
    both = adj @ adj
    bad = np.argwhere(both == 0)
    if len(bad):
        a, b = bad[0]
        return CommonNeighbourResult(False, {}, (int(a), int(b)))
    return CommonNeighbourResult(True, {})


# -- cliques and independent sets ----------------------------------------------------------


def _greedy_colour_order(cand: int, bits: list[int]) -> tuple[list[int], list[int]]:
    """Vertices of ``cand`` with colour numbers from greedy sequential colouring (Tomita style)."""
    order, colours = [], []
    colour = 0
    rest = cand
    while rest:
        colour += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~bits[v] & ~low
            rest &= ~low
            order.append(v)
            colours.append(colour)
    return order, colours


def _max_clique(bits: list[int], cand: int, budget: _Budget, lower: int = 0, seed_clique=()) -> tuple[list[int], bool]:
    """Maximum clique inside ``cand``; returns (clique, exact)."""
    best = list(seed_clique)
    best_size = max(lower, len(best))
    cur: list[int] = []

    def expand(p: int):
        nonlocal best, best_size
        order, colours = _greedy_colour_order(p, bits)
        for i in range(len(order) - 1, -1, -1):
            if budget.check():
                return
            if len(cur) + colours[i] <= best_size:
                return
            v = order[i]
            cur.append(v)
            np_ = p & bits[v]
            if np_:
                expand(np_)
            elif len(cur) > best_size:
                best, best_size = list(cur), len(cur)
            cur.pop()
            p &= ~(1 << v)

    expand(cand)
    return best, not budget.expired


def _colour_bound(bits: list[int], cand: int) -> int:
    _, colours = _greedy_colour_order(cand, bits)
    return max(colours, default=0)


def check_clique(adj: np.ndarray, clique) -> bool:
    c = list(clique)
    return len(set(c)) == len(c) and all(adj[a, b] for i, a in enumerate(c) for b in c[i + 1:])


def check_independent(adj: np.ndarray, indep) -> bool:
    c = list(indep)
    return len(set(c)) == len(c) and not any(adj[a, b] for i, a in enumerate(c) for b in c[i + 1:])


def _clique_bracket(adj: np.ndarray, budget_ms, vertex_transitive: bool) -> Bracket:
    n = adj.shape[0]
    if n == 0:
        return Bracket(0, 0, [])
    bits = _bits(adj)
    budget = _Budget(budget_ms)
    if vertex_transitive:
        # some maximum clique contains vertex 0
        sub, exact = _max_clique(bits, bits[0], budget)
        clique = [0] + sub
        upper = len(clique) if exact else 1 + _colour_bound(bits, bits[0])
    else:
        clique, exact = _max_clique(bits, (1 << n) - 1, budget)
        upper = len(clique) if exact else _colour_bound(bits, (1 << n) - 1)
    clique = sorted(int(v) for v in clique)
    assert check_clique(adj, clique)
    return Bracket(len(clique), max(upper, len(clique)), clique)


def clique_number(graph, budget_ms: float | None = DEFAULT_BUDGET_MS) -> Bracket:
    """Clique number by colour-bounded branch and bound; the certificate is a clique."""
    return _clique_bracket(_dense(graph), budget_ms, isinstance(graph, SaxlGraph))


def independence_number(graph, budget_ms: float | None = DEFAULT_BUDGET_MS) -> Bracket:
    """Independence number (a clique in the complement); the certificate is an independent set."""
    adj = _dense(graph)
    comp = ~adj
    np.fill_diagonal(comp, False)
    return _clique_bracket(comp, budget_ms, isinstance(graph, SaxlGraph))


# -- colouring ------------------------------------------------------------------------------


def check_colouring(adj: np.ndarray, colouring) -> bool:
    col = np.asarray(colouring)
    if col.shape != (adj.shape[0],):
        return False
    return not (adj & (col[:, None] == col[None, :])).any()


def _dsatur_colouring(adj: np.ndarray) -> np.ndarray:
    n = adj.shape[0]
    col = np.full(n, -1, dtype=np.int64)
    deg = adj.sum(axis=1)
    sat = [set() for _ in range(n)]
    for _ in range(n):
        free = np.flatnonzero(col < 0)
        v = max(free, key=lambda u: (len(sat[u]), deg[u], -u))
        c = 0
        while c in sat[v]:
            c += 1
        col[v] = c
        for w in np.flatnonzero(adj[v]):
            sat[w].add(c)
    return col


def _colour_with(adj: np.ndarray, k: int, budget: _Budget, fixed: list[int]) -> np.ndarray | None | bool:
    """A proper ``k``-colouring extending a colouring of the clique ``fixed``; False if none, None on timeout."""
    n = adj.shape[0]
    nbrs = [np.flatnonzero(adj[v]) for v in range(n)]
    col = np.full(n, -1, dtype=np.int64)
    # forbidden[v, c] counts coloured neighbours of v with colour c
    forbidden = np.zeros((n, k), dtype=np.int64)

    def assign(v, c):
        col[v] = c
        forbidden[nbrs[v], c] += 1

    def unassign(v, c):
        col[v] = -1
        forbidden[nbrs[v], c] -= 1

    for i, v in enumerate(fixed):
        assign(v, i)

    def rec(used: int):
        if budget.check():
            return None
        free = np.flatnonzero(col < 0)
        if not len(free):
            return True
        sat = (forbidden[free] > 0).sum(axis=1)
        v = int(free[np.argmax(sat * (n + 1) + adj[free].sum(axis=1))])
        # colours beyond ``used`` are interchangeable, so try only one new colour
        for c in range(min(used + 1, k)):
            if forbidden[v, c]:
                continue
            assign(v, c)
            res = rec(max(used, c + 1))
            if res:
                return True
            unassign(v, c)
            if res is None:
                return None
        return False

    res = rec(len(fixed))
    if res is None:
        return None
    return col.copy() if res else False


def chromatic_number(graph, budget_ms: float | None = DEFAULT_BUDGET_MS) -> Bracket:
    """Chromatic number: DSatur upper bound, clique lower bound, then exact search downward."""
    adj = _dense(graph)
    n = adj.shape[0]
    if n == 0:
        return Bracket(0, 0, [])
    budget = _Budget(budget_ms)
    best = _dsatur_colouring(adj)
    upper = int(best.max()) + 1
    clique = clique_number(graph, budget_ms)
    lower = clique.lower
    alpha = independence_number(graph, budget_ms)
    if alpha.exact:
        lower = max(lower, -(-n // alpha.value))
    while upper > lower and not budget.check():
        res = _colour_with(adj, upper - 1, budget, clique.certificate)
        if res is None:
            break
        if res is False:
            lower = upper
            break
        best, upper = res, upper - 1
    assert check_colouring(adj, best)
    parts = [np.flatnonzero(best == c).tolist() for c in range(int(best.max()) + 1)]
    return Bracket(lower, upper, parts)


# -- total domination ------------------------------------------------------------------------


def check_total_dominating(adj: np.ndarray, subset) -> bool:
    s = list(subset)
    return bool(len(s)) and bool(adj[:, s].any(axis=1).all())


def total_domination_number(graph, budget_ms: float | None = DEFAULT_BUDGET_MS) -> Bracket:
    """Smallest set ``L`` such that every vertex has a neighbour in ``L`` (exact set-cover search)."""
    adj = _dense(graph)
    n = adj.shape[0]
    if n == 0:
        return Bracket(0, 0, [])
    if (adj.sum(axis=1) == 0).any():
        raise ValueError("a graph with an isolated vertex has no total dominating set")
    bits = _bits(adj)
    full = (1 << n) - 1
    budget = _Budget(budget_ms)
    deg = adj.sum(axis=1)
    # greedy upper bound
    covered, greedy = 0, []
    while covered != full:
        v = max(range(n), key=lambda u: (bin(bits[u] & ~covered).count("1"), -u))
        greedy.append(v)
        covered |= bits[v]
    best = sorted(greedy)
    lower = max(2, -(-n // int(deg.max())))

    # a vertex-transitive graph has a minimum total dominating set through vertex 0
    first = [0] if isinstance(graph, SaxlGraph) else []

    def search(k: int) -> list[int] | None | bool:
        chosen: list[int] = list(first)

        def rec(cov: int) -> bool | None:
            if cov == full:
                return True
            if len(chosen) == k or budget.check():
                return None if budget.expired else False
            missing = full & ~cov
            if bin(missing).count("1") > (k - len(chosen)) * int(deg.max()):
                return False
            # the uncovered vertex with the fewest neighbours must be dominated by one of them
            target = min(_members(missing), key=lambda u: deg[u])
            for w in np.flatnonzero(adj[target]):
                chosen.append(int(w))
                res = rec(cov | bits[w])
                if res:
                    return True
                chosen.pop()
                if res is None:
                    return None
            return False

        res = rec(bits[0] if first else 0)
        if res:
            return sorted(chosen)
        return None if res is None else False

    while lower < len(best):
        res = search(lower)
        if res is None:
            break
        if res is False:
            lower += 1
        else:
            best = res
            break
    lower = min(lower, len(best))
    assert check_total_dominating(adj, best)
    return Bracket(lower, len(best), best)


# -- minimal bases ---------------------------------------------------------------------------


def _element_rows(action: GroupAction, enum_limit: int) -> np.ndarray:
    """Images of all group elements on the action's domain."""
    if action.order > enum_limit:
        raise EnumerationLimitError(f"|G| = {action.order} exceeds the enumeration limit {enum_limit}")
    elems = action.group.elements_array(enum_limit)
    if action.is_natural:
        return elems
    return np.array([action.image_of(Permutation(g, check=False)) for g in elems])


def is_minimal_base(rows: np.ndarray, subset) -> bool:
    """``subset`` is a base and no proper subset is (removing one point at a time suffices)."""
    s = list(subset)
    if len(s) == 0:
        return len(rows) == 1

    def stab(points):
        if not points:
            return len(rows)
        return int((rows[:, points] == np.asarray(points)).all(axis=1).sum())

    if stab(s) != 1:
        return False
    return all(stab(s[:i] + s[i + 1:]) > 1 for i in range(len(s)))


def max_minimal_base(action: GroupAction, budget_ms: float | None = DEFAULT_BUDGET_MS,
                     enum_limit: int = DEFAULT_ENUM_LIMIT) -> Bracket:
    """Largest size of a minimal base (a base with no proper sub-base).

    Every ordering of a minimal base is irredundant, so the search runs over sets
    containing ``alpha`` (by transitivity), adding points in increasing order and
    keeping only sets in which every point is still needed.
    """
    n = action.n
    if n > 200:
        raise ValueError("max_minimal_base is limited to degree 200")
    rows = _element_rows(action, enum_limit)
    budget = _Budget(budget_ms)
    upper = max(1, int(math.floor(math.log2(len(rows))))) if len(rows) > 1 else 1
    best: list[int] = []
    alpha = action.alpha

    def stab_idx(idx, pt):
        return idx[rows[idx, pt] == pt]

    def needed(points: list[int], idx: np.ndarray) -> bool:
        for i in range(len(points)):
            rest = points[:i] + points[i + 1:]
            if not rest:
                continue
            cnt = int((rows[:, rest] == np.asarray(rest)).all(axis=1).sum())
            if cnt == len(idx):
                return False
        return True

    def rec(points: list[int], idx: np.ndarray):
        nonlocal best
        if budget.check() or len(best) >= upper:
            return
        if len(idx) == 1:
            if len(points) > len(best):
                best = list(points)
            return
        # each further point at least halves the stabiliser
        if len(points) + max(1, int(math.floor(math.log2(len(idx))))) <= len(best):
            return
        last = points[-1] if len(points) > 1 else -1
        moved = np.flatnonzero((rows[idx] != np.arange(n)).any(axis=0))
        for y in moved:
            y = int(y)
            if y <= last or y == alpha:
                continue
            new = stab_idx(idx, y)
            cand = points + [y]
            if needed(cand, new):
                rec(cand, new)

    idx0 = np.arange(len(rows))
    rec([alpha], stab_idx(idx0, alpha))
    if not best:
        best = [alpha]
    exact = not budget.expired or len(best) >= upper
    assert is_minimal_base(rows, best)
    return Bracket(len(best), len(best) if exact else upper, sorted(best))


# -- structure -------------------------------------------------------------------------------


def matches_reference(graph, ref: ReferenceGraph, node_limit: int = 200_000) -> bool | None:
    """Rule check first, then an explicit isomorphism; None when the search is inconclusive."""
    g = Graph(_dense(graph))
    if g.n != ref.n or not ref.satisfies_rule(g):
        return False
    res = find_isomorphism(g, ref, node_limit=node_limit)
    if res.found:
        return True
    return False if res.conclusive else None


def self_complementary_check(graph, node_limit: int = 200_000) -> bool | None:
    g = Graph(_dense(graph))
    res = find_isomorphism(g, g.complement(), node_limit=node_limit)
    if res.found:
        return True
    return False if res.conclusive else None


# -- report ----------------------------------------------------------------------------------


@dataclass
class InvariantReport:
    components: int
    diameter: float
    eulerian: bool
    hamiltonian: HamiltonianResult | None = None
    clique: Bracket | None = None
    independence: Bracket | None = None
    chromatic: Bracket | None = None
    total_domination: Bracket | None = None
    max_minimal_base: Bracket | None = None
    common_neighbour: CommonNeighbourResult | None = None
    seed: int = 0

    def to_json(self) -> dict:
        out = {
            "components": self.components,
            "diameter": None if math.isinf(self.diameter) else int(self.diameter),
            "connected": not math.isinf(self.diameter),
            "eulerian": self.eulerian,
            "seed": self.seed,
        }
        for key in ("hamiltonian", "clique", "independence", "chromatic", "total_domination",
                    "max_minimal_base", "common_neighbour"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val.to_json()
        return out


def compute_invariants(graph: SaxlGraph, *, budget_ms: float | None = DEFAULT_BUDGET_MS, seed: int = 0,
                       hard: bool | None = None) -> InvariantReport:
    """All invariants of a Saxl graph. The hard ones are computed only when ``n <= 200`` (or ``hard=True``)."""
    comps = connected_components(graph)
    rep = InvariantReport(len(comps), diameter(graph), is_eulerian(graph), seed=seed)
    rep.common_neighbour = common_neighbour_verify(graph)
    if hard is None:
        hard = graph.n <= 200
    if hard and graph.valency:
        rep.hamiltonian = find_hamiltonian_cycle(graph, budget_ms, seed) if len(comps) == 1 else None
        rep.clique = clique_number(graph, budget_ms)
        rep.independence = independence_number(graph, budget_ms)
        rep.chromatic = chromatic_number(graph, budget_ms)
        rep.total_domination = total_domination_number(graph, budget_ms)
        try:
            rep.max_minimal_base = max_minimal_base(graph.action, budget_ms)
        except (EnumerationLimitError, ValueError):
            rep.max_minimal_base = None
    return rep

