# Complements of paths, cycles and cocktail party graphs.
# sigma/n^1.5 stays well under 2 but is not monotone in n.

from pbdkit.constructions import (
    cocktail_party_partition,
    complement_cycle_partition,
    complement_path_partition,
)

for n in (10, 50, 100, 200, 400, 900):
    c = complement_path_partition(n)
    print(f"n={n:4d} sigma={c.achieved_sigma:6d} ratio={c.achieved_sigma / n ** 1.5:.3f}")

c = complement_path_partition(11)
print("P-bar_11 cliques:", c.object.cliques)

for n in (5, 10, 50):
    print(f"n={n}: cycle {complement_cycle_partition(n).achieved_sigma}, cocktail {cocktail_party_partition(n).achieved_sigma}")
