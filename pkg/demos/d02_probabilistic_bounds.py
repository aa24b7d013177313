"""
Counting non-bases exactly
==========================

Q(G,2) is the chance that a random ordered pair of points is not a base. It
comes straight from the valency. The fixed-point-ratio sum Q-hat bounds it
from above and needs only the point stabiliser.
"""

from fractions import Fraction

from saxlgraph import build_saxl, coset_action, q2_exact, q2_threshold_t, star_criterion
from saxlgraph.catalog import load_group, load_subgroup
from saxlgraph.io import decimal3
from saxlgraph.probability import qhat_from_action

# S7 on the cosets of AGL1(7): the bound is useless here (above 1) yet Q(G,2) < 1
g = build_saxl(coset_action(load_group("S7"), load_subgroup("S7", "AGL1(7)")))
print("S7/AGL1(7):  Q(G,2) =", q2_exact(g), "  Q-hat =", qhat_from_action(g.action))

# A9 and A10: Q-hat > 1/2, but two regular suborbits push Q(G,2) below 1/2
for name, sub in (("A9", "3^2:2A4"), ("A10", "M10")):
    grp, h = load_group(name), load_subgroup(name, sub)
    s = build_saxl(coset_action(grp, h), materialise=False)
    q2 = q2_exact(s)
    print(f"{name}/{sub}: n = {s.n}, r = {s.r}, Q(G,2) = {q2} < 1/2: {q2 < Fraction(1, 2)}, "
          f"t = {q2_threshold_t(q2)}")
    if grp.order <= 200_000:
        print("   star criterion:", star_criterion(grp, h))

# the sporadic rows: exact Q-hat next to its three-decimal rounding
for name, sub in (("M11", "2.S4"), ("M12", "A4xS3"), ("J1", "2^3.7.3")):
    s = build_saxl(coset_action(load_group(name), load_subgroup(name, sub)), materialise=False)
    qh = qhat_from_action(s.action)
    print(f"{name}/{sub}: n = {s.n}, r = {s.r}, valency = {s.valency}, Q-hat = {qh} = {float(qh):.5f} "
          f"-> {decimal3(qh)}")
