"""A first tour: graceful colorings, difference labellings, and verifiers.

A graceful coloring is a proper vertex coloring whose induced edge labels
h(uv) = |f(u) - f(v)| are themselves a proper edge coloring: edges sharing
an endpoint must carry distinct labels.
"""

from graceful import (Graph, VertexColoring, induced_difference_labelling,
                      is_distance_two_coloring, is_graceful_coloring,
                      path_graph)

# The 5-vertex running example: vertex 2 is adjacent to everything else.
g = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 3), (2, 4)])
f = VertexColoring((2, 4, 1, 5, 3), 5)

print("edges:        ", g.edges())
print("colors:       ", f.colors)
print("edge labels:  ", induced_difference_labelling(g, f).labels)
print("graceful?     ", is_graceful_coloring(g, f))
print("distance-two? ", is_distance_two_coloring(g, f))

# Every graceful coloring is a distance-two coloring, but not conversely:
# (1,2,3) on the path 0-1-2 is distance-two yet its labels are 1,1.
p3 = path_graph(3)
bad = VertexColoring((1, 2, 3), 3)
print("\nP_3 with colors (1,2,3):")
print("distance-two? ", is_distance_two_coloring(p3, bad)[0])
ok, viol = is_graceful_coloring(p3, bad)
print("graceful?     ", ok, "- violation:", viol)
print("(1,2,4) fixes it:", is_graceful_coloring(p3, VertexColoring((1, 2, 4), 4))[0])
