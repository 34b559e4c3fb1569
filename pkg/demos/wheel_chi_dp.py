"""
DP-chromatic number of the 4-wheel
==================================

Adding a universal vertex to C4 gives a graph with chromatic number 3 and
coloring number 4.  Exhaustive enumeration over all normalized 3-fold
covers shows the DP-chromatic number sits at the lower end.
"""

import time

from dpcolor import Caps, all_covers_colorable, chromatic_number, coloring_number, join, make_complete, make_cycle

wheel = join(make_cycle(4), make_complete(1))
print("n =", wheel.n, "edges =", wheel.num_edges, "cycle rank =", wheel.cycle_rank)
print("chi =", chromatic_number(wheel), "col =", coloring_number(wheel))

start = time.perf_counter()
sweep = all_covers_colorable(wheel, 3)
print(f"3-fold covers: {sweep.total}, all colorable: {sweep.colorable} ({time.perf_counter() - start:.2f}s)")

# at m=2 the first bad cover is reported with its rank vector
bad = all_covers_colorable(wheel, 2).certificate
print("first bad 2-fold cover, ranks", bad.ranks)
print(bad.to_text("(2 colors are too few)"))

# splitting the work across processes gives the same answer
print("2 workers agree:", all_covers_colorable(wheel, 2, Caps(workers=2)).certificate.ranks == bad.ranks)
