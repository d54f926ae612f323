"""Factored power series in u^{-1} and the combinatorics of their roots.

A FactoredSeries is a ratio of products of linear factors (1 + c u^{-1});
only the constants c are stored.  Statements phrased with factors
(1 - a u^{-1}) use roots a = -c.

The two relations between series:
  lam1 -> lam2   iff lam1/lam2 = P(u+1)/P(u) for a monic polynomial P,
  mu(-u) => mu(u) iff the same holds with P(u) = P(1-u),
are decided by matching constants under the partial order of ``exact``.
"""

from collections import Counter
from functools import lru_cache

from .exact import Number, coset_key, ge, num, sum_nonneg_int

__all__ = [
    "FactoredSeries", "WeightData", "arrow", "arrow_chain", "double_arrow",
    "cleared_roots", "normalize_roots", "nonneg_pairing", "odd_nonneg_pairing", "all_pairings",
    "sharp_special", "sharp_prime_special", "mu_sharp", "lofa",
]

HALF = num("1/2")


def _sorted(xs):
    return tuple(sorted((num(x) for x in xs), key=Number.sort_key))


class FactoredSeries:
    """prod(1 + c u^-1 for c in numer) / prod(1 + d u^-1 for d in denom), reduced."""

    __slots__ = ("numer", "denom")

    def __init__(self, numer=(), denom=()):
        # (1 + 0 u^-1) is the constant 1
        zero = num(0)
        n = Counter(c for c in _sorted(numer) if c != zero)
        d = Counter(c for c in _sorted(denom) if c != zero)
        common = n & d
        self.numer = _sorted((n - common).elements())
        self.denom = _sorted((d - common).elements())

    def __mul__(self, other):
        return FactoredSeries(self.numer + other.numer, self.denom + other.denom)

    def inverse(self):
        return FactoredSeries(self.denom, self.numer)

    def __truediv__(self, other):
        return self * other.inverse()

    def at_minus_u(self):
        """The series mu(-u)."""
        return FactoredSeries([-c for c in self.numer], [-d for d in self.denom])

    def is_polynomial(self):
        return not self.denom

    def is_even(self):
        return self.at_minus_u() == self

    def __eq__(self, other):
        return isinstance(other, FactoredSeries) and (self.numer, self.denom) == (other.numer, other.denom)

    def __hash__(self):
        return hash((self.numer, self.denom))

    def __str__(self):
        top = "".join(f"(1{_signed(c)}u^-1)" for c in self.numer) or "1"
        if not self.denom:
            return top
        return top + "/" + "".join(f"(1{_signed(d)}u^-1)" for d in self.denom)

    def __repr__(self):
        return f"FactoredSeries({self})"


def _signed(c):
    s = str(c)
    return s if s.startswith("-") else "+" + s


def factor(c):
    return FactoredSeries([c])


class WeightData:
    """Highest weight (mu_i) indexed by {1, 3, ..., n-1} or {0, 2, ..., n-1}."""

    def __init__(self, entries):
        self.entries = dict(sorted(entries.items()))
        if 0 in self.entries and not self.entries[0].is_even():
            raise ValueError("mu_0 must be an even series")

    @property
    def indices(self):
        return list(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self):
        return "; ".join(f"mu_{i} = {s}" for i, s in self.entries.items())


# ---- the -> relation

def arrow(s1, s2):
    """Decide s1 -> s2 by threshold matching of the reduced ratio, coset by coset."""
    ratio = s1 / s2
    top, bottom = list(ratio.numer), list(ratio.denom)
    # as a rational function of u the shorter side carries factors u = u + 0
    pad = [num(0)] * abs(len(top) - len(bottom))
    if len(top) < len(bottom):
        top += pad
    else:
        bottom += pad
    groups = {}
    for a in top:
        groups.setdefault(coset_key(a), ([], []))[0].append(a.offset)
    for b in bottom:
        groups.setdefault(coset_key(b), ([], []))[1].append(b.offset)
    for xs, ys in groups.values():
        if len(xs) != len(ys):
            return False
        if any(x < y for x, y in zip(sorted(xs), sorted(ys))):
            return False
    return True


def arrow_chain(series):
    return all(arrow(a, b) for a, b in zip(series, series[1:]))


# ---- pairings with non-negative integer sums

def cleared_roots(s):
    """Roots a of gamma*s = prod(1 - a u^-1), gamma = prod(1 - d^2 u^-2) over denominators d."""
    return [-c for c in s.numer] + list(s.denom)


def normalize_roots(roots, odd):
    """Cancel {a, -a} pairs and zeros, then add one 0 to reach the wanted parity.

    A root 0 is the factor 1, so zeros can always be added; one is enough.
    """
    out = [a for a in _cancel_opposites(roots) if a != 0]
    if len(out) % 2 != int(odd):
        out.append(num(0))
    return out


def _cancel_opposites(roots):
    left = Counter(roots)
    for a in list(left):
        if a == -a:
            continue
        k = min(left[a], left[-a])
        if k:
            left[a] -= k
            left[-a] -= k
    return list(left.elements())


def nonneg_pairing(roots):
    """Perfect pairing with every pair sum in Z_{>=0}, or None.

    Elements of a coset C can only pair with elements of -C.  For C != -C
    this is a threshold matching of C against the negatives of -C, decided
    by sorted dominance; for C = -C the sorted list is paired mirror-wise,
    smallest with largest, which maximises the minimum pair sum.
    """
    roots = [num(a) for a in roots]
    if len(roots) % 2:
        return None
    groups = {}
    for a in roots:
        groups.setdefault(coset_key(a), []).append(a)
    pairs = []
    done = set()
    for key, xs in groups.items():
        if key in done:
            continue
        neg_key = coset_key(-xs[0])
        done.update((key, neg_key))
        if neg_key == key:
            xs = sorted(xs, key=lambda a: a.offset)
            if len(xs) % 2:
                return None
            m = len(xs)
            for k in range(m // 2):
                if not sum_nonneg_int(xs[k], xs[m - 1 - k]):
                    return None
                pairs.append((xs[k], xs[m - 1 - k]))
        else:
            ys = groups.get(neg_key, [])
            if len(xs) != len(ys):
                return None
            xs = sorted(xs, key=lambda a: a.offset)
            ys = sorted(ys, key=lambda a: -a.offset)
            for x, y in zip(xs, ys):
                if not sum_nonneg_int(x, y):
                    return None
                pairs.append((x, y))
    return pairs


def odd_nonneg_pairing(roots):
    """(leftover, pairing) where the rest pairs with sums >= 0, or None."""
    roots = [num(a) for a in roots]
    if len(roots) % 2 == 0:
        return None
    for a in sorted(set(roots), key=Number.sort_key):
        rest = list(roots)
        rest.remove(a)
        p = nonneg_pairing(rest)
        if p is not None:
            return a, p
    return None


def all_pairings(xs):
    """Every perfect pairing of the list (by position), as lists of pairs."""
    xs = list(xs)
    if not xs:
        yield []
        return
    first = xs[0]
    for k in range(1, len(xs)):
        rest = xs[1:k] + xs[k + 1:]
        for p in all_pairings(rest):
            yield [(first, xs[k])] + p


def double_arrow(s):
    """Decide s(-u) => s(u)."""
    return double_arrow_witness(s) is not None


def double_arrow_witness(s):
    return nonneg_pairing(normalize_roots(cleared_roots(s), odd=False))


# ---- sharp-special elements

@lru_cache(maxsize=None)
def _pairable(items, strict):
    """Exact search: can the sorted tuple be perfectly paired with sums in Z_{>=0} (Z_{>0})."""
    if not items:
        return True
    first, rest = items[0], items[1:]
    tried = set()
    for k, b in enumerate(rest):
        if b in tried:
            continue
        tried.add(b)
        if sum_nonneg_int(first, b, strict) and _pairable(rest[:k] + rest[k + 1:], strict):
            return True
    return False


def _greater(a, b):
    return a != b and ge(a, b)


def sharp_special(xs):
    """Unique maximal leftover over rearrangements whose pairs have sums in Z_{>0}."""
    xs = _sorted(xs)
    if len(xs) % 2 == 0:
        raise ValueError("sharp-special needs a list of odd length")
    cands = []
    for k, a in enumerate(xs):
        if a in cands:
            continue
        if _pairable(xs[:k] + xs[k + 1:], True):
            cands.append(a)
    top = [a for a in cands if not any(_greater(b, a) for b in cands)]
    return top[0] if len(top) == 1 else None


@lru_cache(maxsize=None)
def _sharp_prime_leftovers(items):
    if len(items) == 1:
        return frozenset(items)
    best, choices = None, []
    for p in range(len(items)):
        for q in range(p + 1, len(items)):
            s = items[p] + items[q]
            if not s.is_integer() or s.offset < 0:
                continue
            if best is None or s.offset < best:
                best, choices = s.offset, [(p, q)]
            elif s.offset == best:
                choices.append((p, q))
    out = set()
    seen = set()
    for p, q in choices:
        if (items[p], items[q]) in seen:
            continue
        seen.add((items[p], items[q]))
        rest = tuple(x for k, x in enumerate(items) if k not in (p, q))
        out |= _sharp_prime_leftovers(rest)
    return frozenset(out)


def sharp_prime_special(xs, all_values=False):
    """Leftover of an ordering that pairs off minimal non-negative sums first.

    Only orderings whose pair sums are all in Z_{>=0} count.  Returns None
    when there is no such ordering (or, defensively, when the leftover is
    not unique); ``all_values=True`` returns the full set instead.
    """
    xs = _sorted(xs)
    if len(xs) % 2 == 0:
        raise ValueError("sharp'-special needs a list of odd length")
    vals = _sharp_prime_leftovers(xs)
    if all_values:
        return vals
    return next(iter(vals)) if len(vals) == 1 else None


def mu_sharp(xs):
    """Replace the sharp'-special element a by -1-a."""
    xs = [num(x) for x in xs]
    a = sharp_prime_special(xs)
    if a is None:
        raise ValueError("sharp'-special element undefined")
    out = list(xs)
    out[out.index(a)] = -1 - a
    return out


# ---- tableau to highest weight

def lofa(rc, sd):
    """Highest weight of L(A) for a row class A (indices i >= 0 of I_n)."""
    n, l, phi = rc.n, rc.l, sd.phi
    entries = {}
    for i in range(0 if n % 2 else 1, n, 2):
        cs = [a + HALF * i for a in rc.row(i)]
        if l % 2 == 0:
            entries[i] = FactoredSeries(cs)
            continue
        if i == 0:
            # the centre box a_{0,0} = 0 gets the extra 1/2
            k = cs.index(num(0))
            cs[k] = cs[k] + HALF
        entries[i] = FactoredSeries(cs, [HALF * phi])
    return WeightData(entries)
