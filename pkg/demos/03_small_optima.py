# Exhaustive search on small cases.
# The minimum sigma over nontrivial PBDs on n points is 3n - 3 and only
# near-pencils reach it.

from pbdkit import exact_S, exact_S_prime, exact_scp, complete_minus_clique
from pbdkit.bounds import bound_B, scp_knkm_halfcase_exact
from pbdkit.solver import SolverLimits

for n in range(4, 8):
    row = {m: exact_S(n, m).optimum for m in range(2, n)}
    print(f"n={n} S(n,m) by m: {row}  3n-3={3 * n - 3}")

res = exact_S(6, 5, SolverLimits(all_optima=True))
print("all optimal PBDs on 6 points (largest block fixed):", [w.blocks for w in res.all_witnesses])

# removing a big clique: the solver agrees with the closed form for m >= n/2
for n, m in [(4, 2), (6, 3), (7, 4), (8, 5)]:
    r = exact_scp(complete_minus_clique(n, m))
    print(f"scp(K_{n}-K_{m}) = {r.optimum}, formula {scp_knkm_halfcase_exact(n, m).exact}, nodes {r.nodes_explored}")

print("S'(7,3) =", exact_S_prime(7, 3).optimum, " bound B(7,3) =", bound_B(7, 3).exact)
