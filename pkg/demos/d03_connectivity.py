"""
Components, distances and Euler tours
=====================================

A primitive group always has a connected Saxl graph. An imprimitive one need
not, and the components then form a block system.
"""

from saxlgraph import build_saxl, connected_components, diameter, is_eulerian
from saxlgraph.actions import coset_action
from saxlgraph.catalog import load_group, load_subgroup
from saxlgraph.constructions import extraspecial_example, wreath_graph_example

# p disjoint copies of a complete multipartite graph
for p in (3, 5):
    g = build_saxl(extraspecial_example(p).action, materialise=False)
    comps = connected_components(g)
    print(f"extraspecial p={p}: n = {g.n}, valency = {g.valency}, components = {len(comps)} "
          f"of size {len(comps[0])}")

# wreath graphs W(2n+1, p^n) have diameter n
for n, p in ((2, 3), (3, 2)):
    g = build_saxl(wreath_graph_example(n, p).action)
    print(f"W:<g> n={n} p={p}: n = {g.n}, valency = {g.valency}, diameter = {diameter(g)}")

# Euler tours: connected plus even valency. M23 on 40320 points has odd valency.
for name, sub in (("M12", "A4xS3"), ("M23", "23:11")):
    g = build_saxl(coset_action(load_group(name), load_subgroup(name, sub)), materialise=False)
    print(f"{name}/{sub}: n = {g.n}, r = {g.r}, valency = {g.valency}, Eulerian = {is_eulerian(g)}")
