# Finite fields, planes and the designs built on them.
# Run: python3 demos/01_fields_and_planes.py

from pbdkit import affine_plane, gf_construct, projective_plane, sigma, valencies, validate_pbd
from pbdkit.classical import augmented_affine_plane, one_factorization, resolvable_design

# %% GF(9) is GF(3)[x] / (x^2 + 1); elements are base-3 digit strings
F = gf_construct(9)
print("GF(9) modulus (low degree first):", F.modulus)
gen = next(a for a in F.elements() if a and F.element_order(a) == 8)
print("a generator:", gen, "powers:", [F.pow(gen, k) for k in range(8)])

# %% the Fano plane and AG(2,3)
fano = projective_plane(2)
print("PG(2,2):", fano.blocks, "sigma", sigma(fano), "valencies", set(valencies(fano)))
ag, res = affine_plane(3)
for i, cls in enumerate(res.classes):
    print(f"AG(2,3) class {i}:", [ag.blocks[b] for b in cls])

# %% one new point on a parallel class gives a PBD on q^2 + 1 points
for q in (2, 3, 4, 5):
    d = augmented_affine_plane(q)
    print(f"q={q} n={d.n} sigma={sigma(d)} ok={validate_pbd(d).ok}")

# %% round robins and Kirkman schoolgirls
print("K_6 one-factorization:", one_factorization(6).classes)
kts, res = resolvable_design(15, 3)
print("KTS(15) day 1:", [kts.blocks[b] for b in res.classes[0]])
