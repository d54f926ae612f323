r"""
W-algebra generators from the row determinant
=============================================

Build the pyramid for a 2 x 2 rectangle with eps = -, write down the first
few generators s_{i,j}(omega_r) of the finite W-algebra as PBW polynomials,
and confirm they really lie in the W-algebra and satisfy the twisted
Yangian relations after passing through kappa_l.
"""

from rectwalg import walg
from rectwalg.lie import Pyramid

pyr = Pyramid(2, 2, "-")
print(pyr)

# %%
# Generators of degree r <= 2, as PBW polynomials in the f[a,b].

for (i, j, r), x in sorted(walg.walg_generators(pyr, 2).items()):
    print(f"s_{{{i},{j}}}(omega_{r}) = {x}")

# %%
# Membership: pr([m, x]) = 0 for every generator m of the nilpotent part.

x = walg.walg_generator(-1, -1, 2, pyr)
print("in W-algebra:", walg.is_in_walg(x, pyr))

# %%
# All four checks up to order l + 2, as records.  Every record should pass.

recs = walg.verify_all(pyr, R=pyr.l + 2)
for name in ("membership", "miura_kappa", "kernel", "symmetry"):
    mine = [r for r in recs if r["check"] == name]
    print(f"{name:12s} {sum(r['status'] == 'pass' for r in mine)}/{len(mine)}")

# %%
# The quadratic relation is expensive, so it is spot checked to order 2.

quad = walg.check_quadratic_relation(pyr, order=2)
print("quadratic:", sum(r["status"] == "pass" for r in quad), "of", len(quad))
