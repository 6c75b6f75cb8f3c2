# Clique partitions of K_n - K_m from truncated planes and resolvable designs.

from pbdkit.bounds import cn_bounds, scp_knkm_bounds
from pbdkit.constructions import resolvable_cn_partition, scp_upper_prime, trivial_knkm

for n, m in [(50, 8), (100, 11), (200, 17)]:
    lo, hi = scp_knkm_bounds(n, m)
    plane = scp_upper_prime(n, m)
    print(
        f"K_{n}-K_{m}: lower {float(lo.exact):.1f}, plane q={plane.parameters['q']} "
        f"gives {plane.achieved_sigma}, trivial gives {trivial_knkm(n, m).achieved_sigma}"
    )

# m close to n/2: a resolvable design, new points added one per parallel class
for n, m in [(20, 9), (40, 19), (60, 29), (20, 6)]:
    c = resolvable_cn_partition(n, m)
    lo, hi = cn_bounds(n, m)
    print(f"K_{n}-K_{m}: k={c.parameters['k']} v={c.parameters['v']} sigma {c.achieved_sigma} "
          f"(claim {c.claimed_sigma_bound.exact}; leading terms {float(lo.exact):.0f}..{float(hi.exact):.0f})")
