r"""
Finite dimensionality of L(A), two ways
=======================================

A row class of skew-symmetric tableaux gives an irreducible module L(A) of
the W-algebra.  Whether it is finite dimensional can be read off from the
tableau (is there a column strict representative?) or from its highest
weight as a twisted Yangian module.  This script runs both and compares.
"""

from rectwalg.classify import classify
from rectwalg.lie import SignData
from rectwalg.series import lofa
from rectwalg.tableaux import RowClass, enumerate_row_classes

sd = SignData(2, 4, "-")
rc = RowClass(2, 4, {-1: [-3, 1, 2, 4]})
print(rc)

# %%
# The highest weight.  For l even, eps = - the Yangian is Y_2^+.

print(lofa(rc, sd))

# %%
# For l even and eps = -, the tableau side inserts a middle column first.

res = classify(rc, sd)
print(res.findim_tableaux, res.findim_yangian, res.branch)
print(res.witness)

# %%
# A failing case: no arrangement has decreasing columns.

res = classify(RowClass(2, 2, {-1: [0, 0]}), SignData(2, 2, "-"))
print(res.findim_tableaux, res.findim_yangian)

# %%
# Sweep every class over a small pool and count.  The two answers agree.

for case in [(2, 2, "+"), (2, 3, "-"), (3, 3, "+")]:
    sd = SignData(*case)
    results = [classify(r, sd) for r in enumerate_row_classes(sd.n, sd.l, [-1, 0, 1, 2, "1/2"])]
    print(case, len(results), "classes,",
          sum(r.findim_tableaux for r in results), "finite dimensional,",
          sum(not r.agree for r in results), "disagreements")
