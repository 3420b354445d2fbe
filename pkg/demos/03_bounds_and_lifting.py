"""The sandwich chi(G^2) <= chi_g(G) <= a(chi(G^2)), constructively.

The upper bound comes from lifting: compose a distance-two q-coloring with
an optimal AP-free q-set (a graceful coloring of K_q) and the result is a
graceful coloring using colors up to a(q)."""

from graceful import (bounds, cycle_graph, distance_two_k_colorable,
                      gnp_graph, graceful_chromatic_number, hypercube_graph,
                      is_graceful_coloring, lift_distance_two, petersen_graph)

for name, g in [("C_5", cycle_graph(5)), ("Q_3", hypercube_graph(3)),
                ("Petersen", petersen_graph()),
                ("G(8, 0.4, seed 7)", gnp_graph(8, 0.4, 7))]:
    lo, hi = bounds(g)
    chig = graceful_chromatic_number(g).value
    print(f"{name:18s}  {lo} <= chi_g = {chig} <= {hi}")

# the lift, step by step, on the 3-cube
g = hypercube_graph(3)
d2 = distance_two_k_colorable(g, 4)
print("\nQ_3 distance-two 4-coloring:", d2.coloring.colors)
lifted = lift_distance_two(g, d2.coloring)
print("lifted through {1,2,4,5}:   ", lifted.colors)
print("graceful?", is_graceful_coloring(g, lifted)[0], "- palette size", lifted.k)
