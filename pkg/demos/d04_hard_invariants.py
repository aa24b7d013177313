"""
Hard invariants under a time budget
===================================

Clique, independence and chromatic numbers, total domination and the largest
minimal base are returned as brackets [lower, upper] with a certificate for the
bound that was reached. On small graphs they close; on larger ones they may not.
"""

from saxlgraph import build_saxl, coset_action
from saxlgraph.catalog import load_group, load_subgroup
from saxlgraph.invariants import (chromatic_number, clique_number, find_hamiltonian_cycle, independence_number,
                                  max_minimal_base, total_domination_number)

g = build_saxl(coset_action(load_group("S7"), load_subgroup("S7", "AGL1(7)")))
print(f"S7/AGL1(7): n = {g.n}, valency = {g.valency}")

for label, fn in (("clique", clique_number), ("independence", independence_number),
                  ("chromatic", chromatic_number), ("total domination", total_domination_number)):
    b = fn(g, 3000)
    print(f"{label:17} [{b.lower}, {b.upper}]{'  exact' if b.exact else ''}")

b = max_minimal_base(g.action, 3000)
print(f"{'max minimal base':17} [{b.lower}, {b.upper}]  witness {[v + 1 for v in b.certificate]}")

ham = find_hamiltonian_cycle(g, 5000, seed=0)
print("Hamiltonian cycle:", ham.found, "via", ham.method, "starting", [v + 1 for v in ham.cycle[:8]], "...")
