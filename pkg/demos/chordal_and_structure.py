"""
Chordal graphs and graphs with chi = n - 2
==========================================

Chordal graphs have chi_DP = chi.  Graphs whose chromatic number is two
below their order have a rigid structure, recovered here by a classifier.
"""

from dpcolor import chordal_peo, classify_chi_n_minus_2, dp_chromatic, join, make_complete, make_cycle
from dpcolor.graph import chromatic_number, nonisomorphic_graphs

chordal = [g for n in range(1, 6) for g in nonisomorphic_graphs(n) if chordal_peo(g) is not None]
print(len(chordal), "chordal graphs on at most 5 vertices")
print("chi_DP == chi for all:", all(dp_chromatic(g).value == chromatic_number(g) for g in chordal))

for g in [make_cycle(4), make_cycle(5), join(make_cycle(5), make_complete(2)), join(make_complete(3), make_complete(0))]:
    if g.n >= 3 and chromatic_number(g) == g.n - 2:
        print(g.n, "vertices:", classify_chi_n_minus_2(g))
    else:
        print(g.n, "vertices: chi =", chromatic_number(g), "->", classify_chi_n_minus_2(g))
