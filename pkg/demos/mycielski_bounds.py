"""How the Mycielski construction moves boxicity, end to end.

Run with: python demos/mycielski_bounds.py
"""

from boxicity import (
    complement,
    complete_graph,
    cycle_graph,
    edge_clique_cover,
    exact_boxicity,
    focal_vertices,
    focalize,
    format_cover,
    join,
    complete_mycielski_cover,
    multipartite_mycielski_bounds,
    mycielski,
    mycielski_cover,
    mycielski_kn_boxicity,
    mycielski_lower_bound,
    mycielski_upper_bound,
    path_graph,
    star_graph,
    verify_cointerval_cover,
)

print("=== Mycielski graphs of complete graphs ===")
print("n  closed-form  engine")
for n in range(2, 6):
    myc, _ = mycielski(complete_graph(n), 2)
    print(f"{n}  {mycielski_kn_boxicity(n)}            {exact_boxicity(myc).value}")

print()
print("=== The explicit covers behind the formula ===")
cover = complete_mycielski_cover(3)
print(format_cover(cover), end="")
myc3, _ = mycielski(complete_graph(3), 2)
print("verifies:", verify_cointerval_cover(myc3, cover).ok)

print()
print("=== Focal vertices force growth ===")
for times in (1, 2, 3):
    g = focalize(cycle_graph(4), times)
    lb = mycielski_lower_bound(g)
    print(f"4-cycle with {times} focal vertices: box={exact_boxicity(g).value}, "
          f"Mycielski lower bound {lb}")

print()
print("=== Upper bound from clique covers of the complement ===")
for name, g in [("cycle:4", cycle_graph(4)), ("star:3", star_graph(3)),
                ("complete:4", complete_graph(4))]:
    theta, clique_cover = edge_clique_cover(complement(g))
    built = mycielski_cover(g, clique_cover)
    print(f"{name:12s} theta(complement)={theta} focal={len(focal_vertices(g))} "
          f"-> cover with {len(built.parts)} parts "
          f"(upper bound {mycielski_upper_bound(g)})")

print()
print("=== Complete multipartite corollary ===")
for parts in ([2, 2], [2, 2, 1], [1, 1, 2], [3, 2, 2]):
    b = multipartite_mycielski_bounds(parts)
    exact = "?" if b.exact is None else str(b.exact)
    print(f"parts {parts}: {b.lower} <= box(Mycielski) <= {b.upper}, exact {exact}")

print()
print("=== No focal vertices but still growing: the path on 4 vertices ===")
p4 = path_graph(4)
myc_p4, _ = mycielski(p4, 2)
print(f"box(path) = {exact_boxicity(p4).value}, "
      f"box(Mycielski of path) = {exact_boxicity(myc_p4).value}")

print()
print("=== Dense in triangles and 4-cycles, boxicity still 2 ===")
star_myc, _ = mycielski(star_graph(3), 2)
g = join(complete_graph(3), star_myc)
print(f"join of a triangle with the Mycielski star: box = {exact_boxicity(g).value}")
