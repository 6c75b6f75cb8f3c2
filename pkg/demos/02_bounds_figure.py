# Lower bounds on sigma for a PBD whose largest block has size tau.
# Prints the table behind the n=21 bounds diagram and where each bound wins.

from pbdkit.bounds import best_sigma_lower, bound_A, bound_B, bound_C, fmt_fraction, max_valency_lower

n = 21
print(f"{'tau':>4} {'A':>8} {'B':>8} {'C':>8}  best")
for tau in range(2, n):
    a, b, c = bound_A(n, tau), bound_B(n, tau), bound_C(n, tau)
    best, src = best_sigma_lower(n, tau)
    print(f"{tau:>4} {fmt_fraction(a.exact):>8} {fmt_fraction(b.exact):>8} {fmt_fraction(c.exact):>8}  {src}")

# A hands over to B once tau(tau-1) exceeds n-1, B to C at tau = (n-1)/2
print("max-valency bound ceil:", max_valency_lower(n).ceil)

# the same table as CSV: pbdkit bounds --n 21 --csv
