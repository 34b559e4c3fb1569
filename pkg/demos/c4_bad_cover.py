"""
A 2-fold cover of the 4-cycle with no coloring
==============================================

Every graph with chromatic number 2 is 2-list-colorable when it is a tree,
but an even cycle already needs 3 colors once lists can be "twisted" along
the edges.  This script builds the twisted cover, checks it, and lets the
enumerator rediscover it.
"""

from dpcolor import (
    cover_to_text,
    dp_chromatic,
    enumerate_covers,
    find_coloring,
    h0_cover,
    make_cycle,
    normalize,
    validate_cover,
)

c4 = make_cycle(4)

# three edges match list entries straight across, the fourth swaps them
h0 = h0_cover()
print(cover_to_text(h0))
print("violations:", validate_cover(h0))
print("coloring:", find_coloring(h0))

# Up to relabelling each list there are only 2 full 2-fold covers of C4:
# the straight one and the twisted one.
for nc in enumerate_covers(c4, 2):
    print("ranks", nc.ranks(), "coloring", find_coloring(nc.cover))
print("twisted cover is H0 after normalization:", list(enumerate_covers(c4, 2))[1] == normalize(h0))

# With 3 colors per vertex all 6 normalized covers can be colored.
result = dp_chromatic(c4)
print(result.record())
