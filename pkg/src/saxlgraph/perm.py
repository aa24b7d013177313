"""Permutations and permutation groups with verified stabiliser chains.

Points are 0-indexed internally. Text I/O (cycle or image notation) is
1-indexed. Elements act on the right: ``x^(gh) = (x^g)^h``, so the array of a
product ``g*h`` is ``h.images[g.images]``.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Permutation",
    "PermutationGroup",
    "Subgroup",
    "parse_permutation",
    "build_group",
    "orbit",
    "orbits",
]


def _as_array(images) -> np.ndarray:
    arr = np.array(images, dtype=np.int64).ravel()
    arr.setflags(write=False)
    return arr


def _is_bijection(arr: np.ndarray) -> bool:
    n = len(arr)
    if n == 0:
        return True
    if arr.min() < 0 or arr.max() >= n:
        return False
    seen = np.zeros(n, dtype=bool)
    seen[arr] = True
    return bool(seen.all())


def _inverse(arr: np.ndarray) -> np.ndarray:
    inv = np.empty_like(arr)
    inv[arr] = np.arange(len(arr), dtype=arr.dtype)
    return inv


class Permutation:
    """A bijection on ``{0, ..., degree-1}``."""

    __slots__ = ("_images", "_hash")

    def __init__(self, images, *, check: bool = True):
        arr = images if isinstance(images, np.ndarray) and not images.flags.writeable else _as_array(images)
        if check and not _is_bijection(arr):
            raise ValueError("images do not form a permutation")
        self._images = arr
        self._hash = None

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(np.arange(degree), check=False)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Build from 0-indexed cycles."""
        arr = np.arange(degree)
        for cyc in cycles:
            cyc = list(cyc)
            if len(set(cyc)) != len(cyc):
                raise ValueError(f"repeated point in cycle {cyc}")
            for i, x in enumerate(cyc):
                if not 0 <= x < degree:
                    raise ValueError(f"point {x + 1} out of range 1..{degree}")
                arr[x] = cyc[(i + 1) % len(cyc)]
        return cls(arr)

    @property
    def images(self) -> np.ndarray:
        return self._images

    @property
    def degree(self) -> int:
        return len(self._images)

    def __call__(self, point: int) -> int:
        return int(self._images[point])

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Permutation(other._images[self._images], check=False)

    def __invert__(self) -> "Permutation":
        return Permutation(_inverse(self._images), check=False)

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else ~self
        k = abs(k)
        result = np.arange(self.degree)
        acc = base._images
        while k:
            if k & 1:
                result = acc[result]
            acc = acc[acc]
            k >>= 1
        return Permutation(result, check=False)

    def conjugate(self, g: "Permutation") -> "Permutation":
        """Return ``g^-1 * self * g``."""
        return ~g * self * g

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.degree == other.degree and bool(np.array_equal(self._images, other._images))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._images.tobytes())
        return self._hash

    def is_identity(self) -> bool:
        return bool(np.array_equal(self._images, np.arange(self.degree)))

    def fixed_points(self) -> np.ndarray:
        return np.flatnonzero(self._images == np.arange(self.degree))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, 0-indexed, each starting at its smallest point."""
        seen = np.zeros(self.degree, dtype=bool)
        out = []
        for i in range(self.degree):
            if seen[i] or self._images[i] == i:
                continue
            cyc = [i]
            seen[i] = True
            j = int(self._images[i])
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = int(self._images[j])
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (self.degree - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        return math.lcm(*[len(c) for c in self.cycles()]) if self.degree else 1

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def to_cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cyc)

    def to_image_string(self) -> str:
        return "[" + ",".join(str(int(x) + 1) for x in self._images) + "]"

    def __str__(self) -> str:
        return self.to_cycle_string()

    def __repr__(self) -> str:
        return f"Permutation({self.to_cycle_string()}, degree={self.degree})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse 1-indexed cycle notation ``(1,2,3)(4,5)`` or image notation ``[2,3,1,4,5]``."""
    s = "".join(text.split())
    if not s:
        raise ValueError("empty permutation text")
    if s.startswith("["):
        if not s.endswith("]"):
            raise ValueError(f"malformed image notation: {text!r}")
        body = s[1:-1]
        try:
            vals = [int(x) for x in body.split(",")] if body else []
        except ValueError:
            raise ValueError(f"malformed image notation: {text!r}") from None
        if len(vals) != degree:
            raise ValueError(f"image list has {len(vals)} entries, expected {degree}")
        for v in vals:
            if not 1 <= v <= degree:
                raise ValueError(f"point {v} out of range 1..{degree}")
        arr = np.array(vals) - 1
        if not _is_bijection(arr):
            raise ValueError(f"image list is not a bijection: {text!r}")
        return Permutation(arr)
    pos = 0
    cycles = []
    for m in _CYCLE_RE.finditer(s):
        if m.start() != pos:
            raise ValueError(f"malformed cycle notation: {text!r}")
        pos = m.end()
        body = m.group(1)
        if not body:
            continue
        try:
            pts = [int(x) for x in body.split(",")]
        except ValueError:
            raise ValueError(f"malformed cycle notation: {text!r}") from None
        for v in pts:
            if not 1 <= v <= degree:
                raise ValueError(f"point {v} out of range 1..{degree}")
        cycles.append([v - 1 for v in pts])
    if pos != len(s):
        raise ValueError(f"malformed cycle notation: {text!r}")
    # disjointness across cycles is not required; cycles compose left to right
    perm = Permutation.identity(degree)
    for c in cycles:
        perm = perm * Permutation.from_cycles([c], degree)
    return perm


def orbit_array(gens: Sequence[np.ndarray], point: int) -> list[int]:
    """Orbit of ``point`` under generator arrays, in BFS order."""
    seen = {point}
    out = [point]
    for x in out:
        for g in gens:
            y = int(g[x])
            if y not in seen:
                seen.add(y)
                out.append(y)
    return out


def orbits_array(gens: Sequence[np.ndarray], degree: int) -> np.ndarray:
    """Orbit labels for every point (label = smallest point of the orbit)."""
    from scipy.sparse import coo_matrix
    from scipy.sparse.csgraph import connected_components

    if degree == 0:
        return np.zeros(0, dtype=np.int64)
    if not gens:
        return np.arange(degree)
    src = np.concatenate([np.arange(degree)] * len(gens))
    dst = np.concatenate([np.asarray(g) for g in gens])
    m = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(degree, degree))
    _, comp = connected_components(m, directed=True, connection="weak")
    # relabel by smallest member
    first = np.full(comp.max() + 1, degree, dtype=np.int64)
    np.minimum.at(first, comp, np.arange(degree))
    return first[comp]


class _Level:
    __slots__ = ("point", "gens", "trans", "trans_inv")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[np.ndarray] = []
        self.trans: dict[int, np.ndarray] = {}
        self.trans_inv: dict[int, np.ndarray] = {}

    def rebuild(self, degree: int) -> None:
        ident = np.arange(degree)
        trans = {self.point: ident}
        queue = [self.point]
        for x in queue:
            u = trans[x]
            for s in self.gens:
                y = int(s[x])
                if y not in trans:
                    trans[y] = s[u]
                    queue.append(y)
        self.trans = trans
        self.trans_inv = {y: _inverse(u) for y, u in trans.items()}


def _first_moved(arr: np.ndarray) -> int | None:
    moved = np.flatnonzero(arr != np.arange(len(arr)))
    return int(moved[0]) if len(moved) else None


class PermutationGroup:
    """A permutation group with an exact order from a verified stabiliser chain.

    Parameters
    ----------
    generators
        Generating permutations, all of the same degree.
    degree
        Required only when ``generators`` is empty.
    base
        Optional prefix of base points; the chain is extended as needed.
    order
        Optional known order. When given, the chain is grown by random sifting
        until the orbit-length product reaches it (which certifies the chain)
        and the deterministic closure check is skipped.
    """

    def __init__(self, generators: Sequence[Permutation], degree: int | None = None, *,
                 base: Sequence[int] = (), order: int | None = None, seed: int = 0):
        generators = list(generators)
        if degree is None:
            if not generators:
                raise ValueError("degree is required for a group without generators")
            degree = generators[0].degree
        for g in generators:
            if g.degree != degree:
                raise ValueError("generators have mismatched degrees")
        self.degree = degree
        self.generators = generators
        self._levels: list[_Level] = []
        arrs = [g.images for g in generators if not g.is_identity()]
        if order is not None:
            self._random_schreier_sims(arrs, list(base), order, seed)
        else:
            self._schreier_sims(arrs, list(base))
        self.order = math.prod(len(lv.trans) for lv in self._levels)
        if order is not None and self.order != order:
            raise ValueError(f"group order {self.order} does not match the stated order {order}")

    # -- chain construction -------------------------------------------------

    def _new_level(self, point: int) -> _Level:
        lv = _Level(point)
        self._levels.append(lv)
        return lv

    def _strip(self, g: np.ndarray, start: int = 0) -> tuple[np.ndarray, int]:
        for j in range(start, len(self._levels)):
            lv = self._levels[j]
            beta = int(g[lv.point])
            inv = lv.trans_inv.get(beta)
            if inv is None:
                return g, j
            g = inv[g]
        return g, len(self._levels)

    def _add_residue(self, h: np.ndarray, i: int, j: int) -> None:
        """Insert residue ``h`` (sifted out at level ``j``) into levels ``i+1..j``."""
        if j == len(self._levels):
            pt = _first_moved(h)
            self._new_level(pt)
        for lv in self._levels[i + 1:j + 1]:
            lv.gens.append(h)
            lv.rebuild(self.degree)

    def _init_levels(self, gens: list[np.ndarray], base: list[int]) -> None:
        for b in base:
            self._new_level(b)
        for g in gens:
            if all(g[lv.point] == lv.point for lv in self._levels):
                self._new_level(_first_moved(g))
        for lv_index, lv in enumerate(self._levels):
            fixed = [lv2.point for lv2 in self._levels[:lv_index]]
            lv.gens = [g for g in gens if all(g[b] == b for b in fixed)]
            lv.rebuild(self.degree)

    def _schreier_sims(self, gens: list[np.ndarray], base: list[int]) -> None:
        self._init_levels(gens, base)
        ident = np.arange(self.degree)
        i = len(self._levels) - 1
        while i >= 0:
            lv = self._levels[i]
            jumped = False
            for beta, u in list(lv.trans.items()):
                for s in list(lv.gens):
                    img = int(s[beta])
                    g = lv.trans_inv[img][s[u]]
                    if np.array_equal(g, ident):
                        continue
                    h, j = self._strip(g, i + 1)
                    if j < len(self._levels) or not np.array_equal(h, ident):
                        self._add_residue(h, i, j)
                        i = j
                        jumped = True
                        break
                if jumped:
                    break
            if not jumped:
                i -= 1
        self._drop_trivial_levels()

    def _random_schreier_sims(self, gens: list[np.ndarray], base: list[int], order: int, seed: int) -> None:
        self._init_levels(gens, base)
        if not gens:
            return
        rng = np.random.default_rng(seed)
        ident = np.arange(self.degree)
        # product replacement state
        state = [g.copy() for g in gens]
        while len(state) < 10:
            state.append(gens[len(state) % len(gens)].copy())
        acc = ident.copy()
        for _ in range(50):
            acc = _product_replacement_step(state, acc, rng)
        stall = 0
        while True:
            if math.prod(len(lv.trans) for lv in self._levels) >= order:
                # the chain is certified once every generator sifts through it
                pending = [g for g in gens if not self.contains_array(g)]
                if not pending:
                    break
                h, j = self._strip(pending[0], 0)
                self._add_residue(h, -1, j)
                continue
            acc = _product_replacement_step(state, acc, rng)
            h, j = self._strip(acc, 0)
            if j < len(self._levels) or not np.array_equal(h, ident):
                self._add_residue(h, -1, j)
                stall = 0
            else:
                stall += 1
                if stall > 2000:
                    # the stated order is probably wrong; stop and let the caller report it
                    break
        self._drop_trivial_levels()

    def _drop_trivial_levels(self) -> None:
        self._levels = [lv for lv in self._levels if len(lv.trans) > 1]

    # -- queries --------------------------------------------------------------

    @property
    def base(self) -> list[int]:
        return [lv.point for lv in self._levels]

    @property
    def strong_gens(self) -> list[Permutation]:
        seen = {}
        for lv in self._levels:
            for s in lv.gens:
                seen.setdefault(s.tobytes(), s)
        return [Permutation(s, check=False) for s in seen.values()]

    @property
    def basic_orbit_lengths(self) -> list[int]:
        return [len(lv.trans) for lv in self._levels]

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def sift(self, g: Permutation) -> tuple[Permutation, int]:
        """Sift ``g`` through the chain; returns the residue and the level it stopped at."""
        h, j = self._strip(g.images, 0)
        return Permutation(h, check=False), j

    def __contains__(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        h, j = self._strip(g.images, 0)
        return j == len(self._levels) and bool(np.array_equal(h, np.arange(self.degree)))

    def contains_array(self, arr: np.ndarray) -> bool:
        h, j = self._strip(arr, 0)
        return j == len(self._levels) and bool(np.array_equal(h, np.arange(self.degree)))

    def verify(self) -> bool:
        """Re-check the chain: generators sift to identity and every Schreier generator of every level sifts."""
        if any(g not in self for g in self.generators):
            return False
        ident = np.arange(self.degree)
        for i, lv in enumerate(self._levels):
            for beta, u in lv.trans.items():
                for s in lv.gens:
                    g = lv.trans_inv[int(s[beta])][s[u]]
                    h, j = self._strip(g, i + 1)
                    if j < len(self._levels) or not np.array_equal(h, ident):
                        return False
        return True

    def orbit(self, point: int) -> list[int]:
        return orbit_array([g.images for g in self.generators], point)

    def orbits(self) -> np.ndarray:
        return orbits_array([g.images for g in self.generators], self.degree)

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree if self.degree else True

    def transversal(self, level: int = 0) -> dict[int, Permutation]:
        lv = self._levels[level]
        return {b: Permutation(u, check=False) for b, u in lv.trans.items()}

    def stabiliser(self, point: int) -> "Subgroup":
        """Point stabiliser, read off a chain whose first base point is ``point``."""
        chain = self if self.base[:1] == [point] else PermutationGroup(
            self.generators, self.degree, base=[point], order=self.order)
        if not chain._levels or chain._levels[0].point != point:
            return Subgroup(self, self.generators, order=self.order)
        gens = [Permutation(s, check=False) for s in _level_gens_from(chain, 1)]
        return Subgroup(self, gens, order=chain.order // len(chain._levels[0].trans))

    def pointwise_stabiliser_order(self, points: Sequence[int]) -> int:
        chain = PermutationGroup(self.generators, self.degree, base=list(points), order=self.order)
        k = 0
        order = chain.order
        for lv in chain._levels:
            if k < len(points) and lv.point == points[k]:
                order //= len(lv.trans)
                k += 1
            else:
                break
        # points that were dropped from the chain are fixed by the whole remaining stabiliser
        return order if k == len(points) else _stab_order_slow(chain, points)

    def random_element(self, rng: np.random.Generator) -> Permutation:
        g = np.arange(self.degree)
        for lv in reversed(self._levels):
            keys = list(lv.trans)
            u = lv.trans[keys[int(rng.integers(len(keys)))]]
            g = u[g]
        return Permutation(g, check=False)

    def element_blocks(self, block_size: int = 4096) -> Iterator[np.ndarray]:
        """Yield all group elements as rows of int arrays, in blocks."""
        ident = np.arange(self.degree)[None, :]
        if not self._levels:
            yield ident.copy()
            return
        # enumerate the stabiliser of the first base point fully, then multiply by level-0 transversal
        tail = ident
        for lv in reversed(self._levels[1:]):
            us = list(lv.trans.values())
            tail = np.concatenate([u[tail] for u in us], axis=0)
        buf = []
        size = 0
        for u in self._levels[0].trans.values():
            blk = u[tail]
            buf.append(blk)
            size += len(blk)
            if size >= block_size:
                yield np.concatenate(buf, axis=0)
                buf, size = [], 0
        if buf:
            yield np.concatenate(buf, axis=0)

    def elements_array(self, limit: int = 200_000) -> np.ndarray:
        if self.order > limit:
            raise ValueError(f"group order {self.order} exceeds enumeration limit {limit}")
        return np.concatenate(list(self.element_blocks()), axis=0)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"<PermutationGroup degree={self.degree} order={self.order}>"


def _level_gens_from(chain: PermutationGroup, level: int) -> list[np.ndarray]:
    if level >= len(chain._levels):
        return []
    return list(chain._levels[level].gens)


def _stab_order_slow(chain: PermutationGroup, points: Sequence[int]) -> int:
    g = chain
    for p in points:
        g = PermutationGroup(g.stabiliser(p).generators, chain.degree)
    return g.order


def _product_replacement_step(state: list[np.ndarray], acc: np.ndarray, rng) -> np.ndarray:
    k = len(state)
    i, j = rng.choice(k, size=2, replace=False)
    if rng.integers(2):
        state[i] = state[j][state[i]]
    else:
        state[i] = state[i][state[j]]
    return state[i][acc]


class Subgroup:
    """A subgroup of ``parent`` given by generators, with exact order."""

    def __init__(self, parent: PermutationGroup, generators: Sequence[Permutation], *,
                 order: int | None = None, name: str | None = None, check: bool = True):
        self.parent = parent
        self.generators = list(generators)
        self.name = name
        if check:
            for g in self.generators:
                if g not in parent:
                    raise ValueError(f"generator {g} is not in the parent group")
        self.group = PermutationGroup(self.generators, parent.degree, order=order)
        self.order = self.group.order
        if parent.order % self.order:
            raise ValueError("subgroup order does not divide the parent order")

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def __contains__(self, g: Permutation) -> bool:
        return g in self.group

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<Subgroup{label} order={self.order} index={self.index}>"


def build_group(generators: Sequence[Permutation], degree: int | None = None) -> PermutationGroup:
    """Build a group with a deterministic, verified stabiliser chain."""
    return PermutationGroup(generators, degree)


def orbit(group: PermutationGroup, point: int) -> list[int]:
    if not 0 <= point < group.degree:
        raise ValueError(f"point {point} out of range")
    return group.orbit(point)


def orbits(group: PermutationGroup) -> list[list[int]]:
    labels = group.orbits()
    out: dict[int, list[int]] = {}
    for x, lab in enumerate(labels):
        out.setdefault(int(lab), []).append(x)
    return list(out.values())
