r"""
The -> and => relations on factored series
==========================================

Series are products of factors (1 + c u^-1) over products of the same
shape.  This walks through deciding lam1 -> lam2 and mu(-u) => mu(u), and
the two flavours of special element that drive the Y_n^+ criterion.
"""

from rectwalg.exact import num
from rectwalg.series import (
    FactoredSeries, arrow, double_arrow, double_arrow_witness, mu_sharp,
    sharp_prime_special, sharp_special,
)


def fs(*cs, denom=()):
    return FactoredSeries([num(c) for c in cs], [num(d) for d in denom])


# %%
# lam1 -> lam2 asks for P with lam1/lam2 = P(u+1)/P(u).
# (1+2u^-1)/(1+u^-1) = (u+2)/(u+1), so P(u) = u+1 works.

print(arrow(fs(2), fs(1)))       # True
print(arrow(fs(1), fs(2)))       # False
print(arrow(fs("1/2"), fs(0)))   # False: 1/2 and 0 lie in different Z-cosets

# Symbolic constants behave like a separate coset.
print(arrow(fs("s+2"), fs("s")))

# %%
# mu(-u) => mu(u) becomes a pairing problem on the roots a of
# prod(1 - a u^-1): pair them so every pair sum is a non-negative integer.

mu = fs(-3, 1)                      # roots 3 and -1
print(double_arrow(mu), double_arrow_witness(mu))
print(double_arrow(fs(3, -1)))      # roots -3 and 1: sum -2, no pairing

# %%
# sharp-special: the maximal leftover when the rest pairs with sums in Z_{>0}.

print(sharp_special([-3, -1, 2]))       # -3
print(sharp_special([-3, -2, 1]))       # None
print(sharp_special([0, -3, 1, 2, 4]))  # 2

# %%
# sharp'-special pairs off minimal non-negative sums first.  Shifting a list
# by 1/2 turns one notion into the other.

xs = [num(x) for x in (-3, -1, 2)]
print(sharp_prime_special([x - num("1/2") for x in xs]))
print(sharp_prime_special([2, -1, 0]), mu_sharp([2, -1, 0]))
print(mu_sharp(mu_sharp([2, -1, 0])))
