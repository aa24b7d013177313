"""Exact non-base probabilities: Q(G,2), the fixed-point-ratio bound Q-hat, and the star criterion."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .actions import (DEFAULT_ENUM_LIMIT, EnumerationLimitError, GroupAction, PrimeOrderProfile, _primes_dividing,
                      _prime_order_of_rows, prime_order_profile)
from .io import decimal3, fraction_str
from .perm import PermutationGroup, Subgroup
from .saxl import SaxlGraph

__all__ = [
    "ProbabilityReport",
    "q2_exact",
    "qhat",
    "qhat_from_action",
    "q2_threshold_t",
    "star_criterion",
    "max_centraliser_order",
    "probability_report",
]


def q2_exact(graph: SaxlGraph) -> Fraction:
    """Probability that a random ordered pair of points is not a base: ``1 - valency/n``.

    For a regular action the pairs ``(a, a)`` are bases too and the probability is 0.
    """
    if graph.stabiliser_order == 1:
        return Fraction(0)
    return 1 - Fraction(graph.valency, graph.n)


def qhat(profile: PrimeOrderProfile, n: int | None = None) -> Fraction:
    """``n^-2 * sum m f^2`` over the profile; fixed-point-free classes contribute nothing."""
    n = profile.n if n is None else n
    return Fraction(profile.fix_square_sum(), n * n)


def qhat_from_action(action: GroupAction, enum_limit: int = DEFAULT_ENUM_LIMIT) -> Fraction:
    return qhat(prime_order_profile(action, enum_limit))


def q2_threshold_t(q2: Fraction, n: int | None = None) -> int:
    """``max{m >= 1 : q2 < 1/m}``; 0 when ``q2 >= 1``.

    For ``q2 = 0`` every ``m`` qualifies; the graph is complete and ``n - 1`` is
    returned as the sentinel (``n`` must then be given).
    """
    q2 = Fraction(q2)
    if q2 < 0 or q2 > 1:
        raise ValueError("q2 must lie in [0, 1]")
    if q2 == 0:
        if n is None:
            raise ValueError("q2 = 0: pass n to get the sentinel value n - 1")
        return n - 1
    return math.ceil(1 / q2) - 1


def _prime_order_elements(sub: PermutationGroup, enum_limit: int) -> np.ndarray:
    if sub.order > enum_limit:
        raise EnumerationLimitError(f"|H| = {sub.order} exceeds the enumeration limit {enum_limit}")
    rows = sub.elements_array(enum_limit)
    if sub.order == 1:
        return rows[:0]
    pr = _prime_order_of_rows(rows, sub.base, _primes_dividing(sub.order))
    return rows[pr > 0]


def _class_representatives(elements: np.ndarray, conj: np.ndarray) -> np.ndarray:
    """One element per orbit of ``conj`` (all elements of H) acting by conjugation on ``elements``."""
    inv = np.argsort(conj, axis=1)
    seen: set = set()
    reps = []
    for x in elements:
        key = x.tobytes()
        if key in seen:
            continue
        reps.append(x)
        # h^-1 x h as an image array is x composed along: point i -> h[x[hinv[i]]]
        conjugates = conj[np.arange(len(conj))[:, None], x[inv]]
        for c in conjugates:
            seen.add(c.tobytes())
    return np.array(reps) if reps else elements[:0]


def max_centraliser_order(group: PermutationGroup, subgroup: Subgroup,
                          enum_limit: int = DEFAULT_ENUM_LIMIT) -> int:
    """``max |C_G(x)|`` over ``1 != x`` in ``H``; 0 when ``H = 1``.

    The maximum is attained at an element of prime order (``C_G(x) <= C_G(x^k)``),
    so only those are examined, one per ``H``-class, by enumerating ``G``.
    """
    if group.order > enum_limit:
        raise EnumerationLimitError(f"|G| = {group.order} exceeds the enumeration limit {enum_limit}")
    h = subgroup.group
    if h.order == 1:
        return 0
    xs = _prime_order_elements(h, enum_limit)
    reps = _class_representatives(xs, h.elements_array(enum_limit))
    counts = np.zeros(len(reps), dtype=np.int64)
    for rows in group.element_blocks():
        for i, x in enumerate(reps):
            # g commutes with x iff x[g[i]] == g[x[i]] for all i
            counts[i] += int((x[rows] == rows[:, x]).all(axis=1).sum())
    return int(counts.max())


def star_criterion(group: PermutationGroup, subgroup: Subgroup, enum_limit: int = DEFAULT_ENUM_LIMIT) -> bool:
    """``|H|^2 max_{1 != x in H} |C_G(x)| < |G|/2``, a sufficient condition for ``Q-hat < 1/2``.

    With ``H = 1`` the maximum over the empty set is taken as 0, so the test passes.
    """
    c = max_centraliser_order(group, subgroup, enum_limit)
    return 2 * subgroup.order ** 2 * c < group.order


@dataclass
class ProbabilityReport:
    n: int
    valency: int
    q2: Fraction
    qhat: Fraction | None
    t: int
    star: bool | None = None

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "valency": self.valency,
            "q2": fraction_str(self.q2),
            "q2_3dp": decimal3(self.q2),
            "qhat": None if self.qhat is None else fraction_str(self.qhat),
            "qhat_3dp": None if self.qhat is None else decimal3(self.qhat),
            "t": self.t,
            "star": self.star,
        }
        return out


def probability_report(graph: SaxlGraph, *, subgroup: Subgroup | None = None,
                       enum_limit: int = DEFAULT_ENUM_LIMIT, star: bool = True) -> ProbabilityReport:
    """All probabilistic quantities for a built Saxl graph.

    ``Q-hat`` needs the stabiliser enumerated; the star criterion also needs ``G``
    enumerated and is skipped (None) when that exceeds ``enum_limit``.
    """
    act = graph.action
    q2 = q2_exact(graph)
    try:
        qh = qhat(prime_order_profile(act, enum_limit))
    except EnumerationLimitError:
        qh = None
    t = q2_threshold_t(q2, graph.n)
    star_val = None
    if star:
        sub = subgroup if subgroup is not None else act.stabiliser
        try:
            star_val = star_criterion(act.group, sub, enum_limit) if act.group.order <= enum_limit else None
        except EnumerationLimitError:
            star_val = None
    return ProbabilityReport(graph.n, graph.valency, q2, qh, t, star_val)
