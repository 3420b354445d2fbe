"""a(n), progression-free sets, and complete graphs.

Coloring K_n gracefully means picking n colors with all pairwise
differences distinct at every vertex, which is exactly an n-element set
with no 3-term arithmetic progression.  So the graceful chromatic number
of K_n equals a(n), the minimum span of such a set (OEIS A065825).
"""

from graceful import (a_of_n, a_of_n_bruteforce, all_optimal_witnesses,
                      complete_graph, graceful_chromatic_number)

print(" n  a(n)  oracle  chi_g(K_n)  one witness")
for n in range(1, 7):
    value, witness = a_of_n(n)
    oracle = a_of_n_bruteforce(n)
    chig = graceful_chromatic_number(complete_graph(n)).value
    print(f"{n:2d}  {value:4d}  {oracle:6d}  {chig:10d}  {witness.elements}")

print("\nall optimal witnesses for n = 4:")
for w in all_optimal_witnesses(4):
    print("  ", w.elements)
