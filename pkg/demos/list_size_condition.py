"""
Checking the list-size condition and trying to break it
=======================================================

For G joined with a clique A, the checker certifies (in exact rationals)
that |A| is large compared to the deficiencies of the G-vertices.  When the
check passes, every cover of G v A with those list sizes should be
colorable; random sampling looks for a counterexample.
"""

from dpcolor import Theorem1Instance, chromatic_number, falsify, join, make_complete, make_cycle, sigma_table, theorem1_check
from dpcolor.bounds import minimal_passing_size_a

c4 = make_cycle(4)
for size_a in (9, 10):
    inst = Theorem1Instance.uniform(c4, 2, size_a, size_a + 2)
    print(f"|A|={size_a}: sigma={sigma_table(inst).entries} -> {theorem1_check(inst)}")

size_a = minimal_passing_size_a(c4)
fold = size_a + chromatic_number(c4)
cert = falsify(join(c4, make_complete(size_a)), fold, samples=2000, seed=2024)
print(f"sampled 2000 covers of C4 v K{size_a} with fold {fold}: bad cover found = {cert is not None}")

# the same sampler does find the bad cover when it exists
print("C4, m=2:", falsify(c4, 2, samples=50, seed=1).ranks)
