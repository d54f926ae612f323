"""Universal enveloping algebras in PBW normal form.

An element is a dict from non-decreasing tuples of generator indices to
Fractions.  Products are straightened by moving letters right to left past
larger ones, each swap adding the bracket term; swaps are memoised per
(monomial, letter).

``GradedPresentation`` specialises this to g with the pyramid grading and
carries the projection pr, the map xi onto U(h) and the shift eta.
"""

from fractions import Fraction
from itertools import product

from . import lie

__all__ = [
    "AlgebraPresentation", "PBWElement", "GradedPresentation", "rho",
    "graded_presentation",
]

ONE = Fraction(1)


def _acc(d, k, v):
    v = d.get(k, 0) + v
    if v:
        d[k] = v
    else:
        d.pop(k, None)


class PBWElement(dict):
    __slots__ = ("alg",)

    def __init__(self, alg, terms=None):
        super().__init__()
        self.alg = alg
        if terms:
            for k, v in terms.items():
                if v:
                    self[k] = Fraction(v)

    def _check(self, other):
        if other.alg is not self.alg:
            raise ValueError("elements live in different presentations")

    def __add__(self, other):
        if not isinstance(other, PBWElement):
            other = self.alg.scalar(other)
        self._check(other)
        out = PBWElement(self.alg, self)
        for k, v in other.items():
            _acc(out, k, v)
        return out

    __radd__ = __add__

    def __neg__(self):
        return PBWElement(self.alg, {k: -v for k, v in self.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PBWElement):
            return self.alg.multiply(self, other)
        return PBWElement(self.alg, {k: v * other for k, v in self.items()})

    def __rmul__(self, c):
        return PBWElement(self.alg, {k: c * v for k, v in self.items()})

    def __eq__(self, other):
        if not isinstance(other, PBWElement):
            other = self.alg.scalar(other)
        return dict.__eq__(self, other)

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def degree(self):
        return max((len(m) for m in self), default=-1)

    def __str__(self):
        return self.alg.format(self)


class AlgebraPresentation:
    """Lie algebra with ordered basis 0..d-1 and bracket table.

    ``bracket[i][j]`` is a dict {k: c} giving [x_i, x_j].  Only the entries
    with i > j are used for straightening.
    """

    def __init__(self, names, bracket, check=None):
        self.names = list(names)
        self.dim = len(self.names)
        self.bracket = [[{} for _ in range(self.dim)] for _ in range(self.dim)]
        for i in range(self.dim):
            for j in range(self.dim):
                self.bracket[i][j] = {k: Fraction(v) for k, v in bracket[i][j].items() if v}
        self._cache = {}
        if check is None:
            check = self.dim <= 12
        if check:
            self.check_bracket()

    def check_bracket(self):
        br = self.bracket
        for i, j in product(range(self.dim), repeat=2):
            neg = {k: -v for k, v in br[j][i].items()}
            if br[i][j] != neg:
                raise ValueError(f"bracket not antisymmetric at {i}, {j}")
        for i, j, k in product(range(self.dim), repeat=3):
            tot = {}
            for (x, y, z) in ((i, j, k), (j, k, i), (k, i, j)):
                for w, c in br[y][z].items():
                    for t, c2 in br[x][w].items():
                        _acc(tot, t, c * c2)
            if tot:
                raise ValueError(f"Jacobi fails at {i}, {j}, {k}")

    def scalar(self, c):
        return PBWElement(self, {(): c} if c else None)

    def one(self):
        return self.scalar(1)

    def gen(self, i):
        return PBWElement(self, {(i,): 1})

    def linear(self, coeffs):
        return PBWElement(self, {(i,): c for i, c in coeffs.items()})

    def _mono_letter(self, mono, y):
        key = (mono, y)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if not mono or mono[-1] <= y:
            res = {mono + (y,): ONE}
        else:
            x = mono[-1]
            head = mono[:-1]
            res = {}
            # head x y = (head y) x + head [x, y]
            for m, c in self._mono_letter(head, y).items():
                for m2, c2 in self._mono_letter(m, x).items():
                    _acc(res, m2, c * c2)
            for k, ck in self.bracket[x][y].items():
                for m2, c2 in self._mono_letter(head, k).items():
                    _acc(res, m2, ck * c2)
        self._cache[key] = res
        return res

    def mono_mul(self, left, right):
        cur = {left: ONE}
        for y in right:
            nxt = {}
            for m, c in cur.items():
                for m2, c2 in self._mono_letter(m, y).items():
                    _acc(nxt, m2, c * c2)
            cur = nxt
        return cur

    def multiply(self, x, y):
        if x.alg is not self or y.alg is not self:
            raise ValueError("elements live in different presentations")
        out = {}
        for m1, c1 in x.items():
            for m2, c2 in y.items():
                for m, c in self.mono_mul(m1, m2).items():
                    _acc(out, m, c * c1 * c2)
        return PBWElement(self, out)

    def commutator(self, x, y):
        return self.multiply(x, y) - self.multiply(y, x)

    def word(self, letters):
        """Normal form of the (unsorted) word x_{l1} x_{l2} ..."""
        return PBWElement(self, self.mono_mul((), tuple(letters)))

    def format(self, x):
        if not x:
            return "0"
        parts = []
        for m in sorted(x, key=lambda m: (len(m), m)):
            c = x[m]
            w = "*".join(str(self.names[i]) for i in m)
            if not w:
                parts.append(f"{c}")
            elif c == 1:
                parts.append(w)
            elif c == -1:
                parts.append("-" + w)
            else:
                parts.append(f"{c}*{w}")
        return " + ".join(parts).replace("+ -", "- ")


def rho(q, n, eps):
    if q > 0:
        return Fraction(n * q - eps, 2)
    if q < 0:
        return Fraction(n * q + eps, 2)
    return Fraction(0)


class GradedPresentation(AlgebraPresentation):
    """U(g) for a pyramid, generators f_{a,b} over admissible pairs.

    Order: p-generators (degree >= 0) by (degree, row(a), col(a), row(b),
    col(b)), then m-generators in the same order.  So every normal monomial
    is a p-word followed by an m-word.
    """

    def __init__(self, pyr, check=False):
        self.pyr = pyr
        basis = lie.gbasis(pyr)

        def key(item):
            (a, b), _ = item
            d = pyr.col(b) - pyr.col(a)
            return (d < 0, d, pyr.row(a), pyr.col(a), pyr.row(b), pyr.col(b))

        basis.sort(key=key)
        self.pairs = [ab for ab, _ in basis]
        self.elements = [f for _, f in basis]
        self.index = {ab: i for i, ab in enumerate(self.pairs)}
        self.deg = [pyr.col(b) - pyr.col(a) for (a, b) in self.pairs]
        self.is_m = [d < 0 for d in self.deg]
        self.m_gens = [i for i, t in enumerate(self.is_m) if t]
        self.h_gens = [i for i, d in enumerate(self.deg) if d == 0]
        d = len(basis)
        table = [[{} for _ in range(d)] for _ in range(d)]
        for i in range(d):
            for j in range(i + 1, d):
                c = self.coords(self.elements[i].bracket(self.elements[j]))
                table[i][j] = c
                table[j][i] = {k: -v for k, v in c.items()}
        names = [f"f[{a},{b}]" for (a, b) in self.pairs]
        super().__init__(names, table, check=check)
        e = lie.build_e(pyr)
        self.chi_val = [lie.chi(x, pyr, e) if m else None for x, m in zip(self.elements, self.is_m)]
        # eta shifts f by lambda(f) = sum_a f_{a,a} rho_{col(a)} / 2 on h
        self.shift = [Fraction(0)] * d
        for i in self.h_gens:
            x = self.elements[i]
            self.shift[i] = sum(
                (v * rho(pyr.col(a), pyr.n, pyr.eps) for (a, b), v in x.items() if a == b), Fraction(0)
            ) / 2

    def coords(self, x):
        """Express a matrix in g as {generator index: coefficient}."""
        c = lie.coordinates(x, self.pyr)
        return {self.index[ab]: v for ab, v in c.items()}

    def embed(self, x):
        return self.linear(self.coords(x))

    def pr(self, x):
        """Projection U(g) = U(p) + I -> U(p)."""
        out = {}
        for m, c in x.items():
            k = len(m)
            while k and self.is_m[m[k - 1]]:
                k -= 1
            for i in m[:k]:
                if self.is_m[i]:
                    raise AssertionError("monomial not in p-then-m order")
            for i in m[k:]:
                c = c * self.chi_val[i]
                if not c:
                    break
            if c:
                _acc(out, m[:k], c)
        return PBWElement(self, out)

    def in_p(self, x):
        return all(not self.is_m[i] for m in x for i in m)

    def xi(self, x):
        """Algebra map U(p) -> U(h) killing positive-degree generators."""
        out = {}
        for m, c in x.items():
            if any(self.is_m[i] for i in m):
                raise ValueError("xi is only defined on U(p)")
            if all(self.deg[i] == 0 for i in m):
                _acc(out, m, c)
        return PBWElement(self, out)

    def eta(self, x):
        """Shift automorphism of U(h): f_{a,a} -> f_{a,a} - rho_{col(a)}."""
        out = {}
        for m, c in x.items():
            cur = {(): c}
            for i in m:
                if self.deg[i] != 0:
                    raise ValueError("eta is only defined on U(h)")
                s = self.shift[i]
                nxt = {}
                for w, v in cur.items():
                    _acc(nxt, w + (i,), v)
                    if s:
                        _acc(nxt, w, -v * s)
                cur = nxt
            for w, v in cur.items():
                _acc(out, w, v)
        return PBWElement(self, out)

    def miura(self, x):
        return self.eta(self.xi(x))


_presentations = {}


def graded_presentation(pyr):
    """Cached GradedPresentation per (n, l, eps, labelling)."""
    key = (pyr.n, pyr.l, pyr.eps, pyr.order)
    if key not in _presentations:
        _presentations[key] = GradedPresentation(pyr)
    return _presentations[key]
