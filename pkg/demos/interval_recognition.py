"""Interval and cointerval recognition walkthrough.

Run with: python demos/interval_recognition.py
"""

from boxicity import (
    Graph,
    chordal_at_free_oracle,
    complement,
    cycle_graph,
    gen_family,
    graph6_encode,
    interval_representation,
    is_cointerval,
    is_interval,
    maximal_cliques,
    mycielski,
    path_graph,
)

print("=== Maximal cliques ===")
p4 = path_graph(4)
print("path 0-1-2-3:", maximal_cliques(p4))
print("4-cycle:     ", maximal_cliques(cycle_graph(4)))

print()
print("=== Recognition with witnesses ===")
result = is_interval(p4)
print(f"path on 4 vertices: {result.verdict}, clique order {result.clique_order}")
rep = interval_representation(p4)
print("intervals (vertex -> [lo, hi]):")
print(rep.to_text(), end="")

c4 = cycle_graph(4)
print(f"4-cycle: {is_interval(c4).verdict} ({is_interval(c4).reason})")

myc_p4, _ = mycielski(p4, 2)
print(f"Mycielski of the path: {is_interval(myc_p4).verdict}")

print()
print("=== Cointervality = complement is interval ===")
two_disjoint_edges = Graph.from_edges(4, [(0, 1), (2, 3)])
cases = [
    ("empty:4", gen_family("empty:4")),
    ("cycle:4", gen_family("cycle:4")),
    ("two disjoint edges", two_disjoint_edges),
]
for name, g in cases:
    print(f"{name:20s} cointerval={is_cointerval(g)}  "
          f"(complement is {is_interval(complement(g)).verdict})")

print()
print("=== Independent oracle (chordal + no asteroidal triple) ===")
for spec in ["path:6", "cycle:5", "star:4", "mycielski:path:4:2"]:
    g = gen_family(spec)
    agree = chordal_at_free_oracle(g) == is_interval(g).interval
    print(f"{spec:22s} graph6={graph6_encode(g):12s} oracle agrees: {agree}")
