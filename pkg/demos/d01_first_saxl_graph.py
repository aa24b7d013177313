"""
A first Saxl graph: GL2(5) acting on non-zero vectors
=====================================================

Two vectors form a base exactly when they are linearly independent, so the
graph should be complete multipartite with one part per line through the origin.
"""

from saxlgraph import build_saxl, compute_invariants, probability_report
from saxlgraph.constructions import gl2_vectors
from saxlgraph.graphs import complete_multipartite
from saxlgraph.invariants import matches_reference

# the family instance carries the action and the graph we expect to see
fi = gl2_vectors(5)
act = fi.action
print(f"|G| = {act.order}, n = {act.n}, |G_alpha| = {act.stabiliser_order}")

# suborbits of the stabiliser of e1 = (1, 0); the regular ones give the neighbours
g = build_saxl(act)
print("suborbit lengths:", sorted(length for _, length in g.suborbits))
print(f"r = {g.r}, valency = r|H| = {g.valency}")

# neighbours of e1 are the vectors not on the line through e1
print("first few neighbours of (1,0):", [act.labels[v] for v in g.neighbourhood(act.alpha)[:6]])

# compare with K_{4,4,4,4,4,4}
print("isomorphic to 6 parts of size 4:", matches_reference(g, complete_multipartite(6, 4)))

# exact probabilities and the invariants with their certificates
prob = probability_report(g)
print("Q(G,2) =", prob.q2, " Q-hat =", prob.qhat, " t =", prob.t)
inv = compute_invariants(g, budget_ms=5000)
for key in ("clique", "independence", "chromatic", "total_domination", "max_minimal_base"):
    b = getattr(inv, key)
    print(f"{key:18} {b.value}   certificate {b.to_json()['certificate']}")
