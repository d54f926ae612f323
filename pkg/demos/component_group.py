r"""
The component group action
==========================

For eps = - with n, l even (and for eps = + with n even and l odd) the
component group has order 2.  Its generator c permutes the finite
dimensional irreducibles; on row classes it flips the sign of one entry
of row -1.
"""

from rectwalg.classify import c_action, is_findim_tableaux, orbit
from rectwalg.lie import Pyramid, SignData, build_e, build_h, component_generator, exact_det
from rectwalg.series import sharp_special
from rectwalg.tableaux import RowClass, enumerate_row_classes

sd = SignData(2, 4, "-")
rc = RowClass(2, 4, {-1: [-3, 1, 2, 4]})

# %%
# The entry to flip is the sharp-special element of row -1 with a 0 in front.

print(sharp_special([0, -3, 1, 2, 4]))
print(c_action(rc, sd))
print(orbit(rc, sd))

# %%
# c is an involution and keeps finite dimensional classes finite dimensional.

sd = SignData(2, 2, "-")
for r in enumerate_row_classes(2, 2, [-2, -1, 0, 1, 2, "1/2"]):
    if is_findim_tableaux(r, sd)[0]:
        out = c_action(r, sd)
        assert c_action(out, sd) == r and is_findim_tableaux(out, sd)[0]
        if out != r:
            print(r, "<->", out)

# %%
# As a matrix, c swaps the boxes of rows 1 and -1.  It fixes e and h and
# preserves the form.

pyr = Pyramid(4, 2, "-")
c = component_generator(pyr)
print("det", exact_det(c, pyr.N))
print("c e c = e:", c @ build_e(pyr) @ c == build_e(pyr), " c h c = h:", c @ build_h(pyr) @ c == build_h(pyr))
