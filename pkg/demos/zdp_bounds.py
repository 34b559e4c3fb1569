"""
How many universal vertices make chi_DP equal chi?
==================================================

Z_DP(G) is the least s such that joining G with K_s closes the gap between
the DP-chromatic and chromatic numbers.  For tiny graphs it can be probed
exactly; otherwise the piecewise upper bound applies.
"""

from dpcolor import Graph, bound_comparison, make_cycle, make_path, zdp_exact_small, zdp_n_upper_bound, zdp_upper_bound

for name, g in [("C4", make_cycle(4)), ("C6", make_cycle(6)), ("P3", make_path(3))]:
    z = zdp_exact_small(g)
    print(f"{name}: {z.record()} probes={z.probes} {zdp_upper_bound(g).record()}")

# K_{2,3}: one universal vertex is not enough, and deciding s=2 would need
# 24^11 covers, so the answer comes back as an interval
k23 = Graph.from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
print("K23:", zdp_exact_small(k23).record())

# the formula case compared with the older 3m bound
cmp = bound_comparison(make_path(5))
print(f"P5: formula {cmp.this_paper}, ceil(2.4m) {cmp.ceil_2_4m}, 3m {cmp.prior_3m}, ratio {cmp.ratio}")

for n in (2, 4, 10):
    print(f"Z_DP(n) <= {zdp_n_upper_bound(n)} for n = {n}")
