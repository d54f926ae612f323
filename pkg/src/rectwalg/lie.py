"""Orthogonal and symplectic Lie algebras in the pyramid coordinates.

Matrices are indexed by the symmetric index sets I_N = {1-N, 3-N, ..., N-1}.
A pyramid assigns every index of I_{nl} a box (row, col) in an n x l array,
which fixes the nilpotent e of Jordan type (l^n), the grading, and the
character chi used to define the W-algebra.
"""

from fractions import Fraction
from itertools import product

__all__ = [
    "SignData", "Pyramid", "LieElement", "index_set", "hat", "sign_power",
    "matrix_unit", "f_gen", "form_matrix", "build_e", "build_h", "degree",
    "chi", "subalgebra_basis", "gbasis", "coordinates", "component_generator",
    "exact_det", "in_algebra",
]


def index_set(n):
    return list(range(1 - n, n, 2))


def hat(i):
    return 0 if i >= 0 else 1


def sign_power(sign, k):
    return 1 if k % 2 == 0 else sign


class SignData:
    """eps picks so (+) or sp (-); phi is the sign of the associated twisted Yangian."""

    def __init__(self, n, l, eps):
        eps = _parse_sign(eps)
        if n < 1 or l < 1:
            raise ValueError("n and l must be positive")
        if eps == 1 and l % 2 == 0 and n % 2:
            raise ValueError("eps=+ with l even requires n even")
        if eps == -1 and l % 2 and n % 2:
            raise ValueError("eps=- with l odd requires n even")
        if eps == -1 and (n * l) % 2:
            raise ValueError("eps=- requires n*l even")
        self.n, self.l, self.eps = n, l, eps
        self.phi = eps if l % 2 else -eps

    def __repr__(self):
        return f"SignData(n={self.n}, l={self.l}, eps={sign_str(self.eps)}, phi={sign_str(self.phi)})"

    def __eq__(self, other):
        return isinstance(other, SignData) and (self.n, self.l, self.eps) == (other.n, other.l, other.eps)

    def __hash__(self):
        return hash((self.n, self.l, self.eps))


def _parse_sign(eps):
    if eps in (1, "+", "+1"):
        return 1
    if eps in (-1, "-", "-1"):
        return -1
    raise ValueError(f"sign must be + or -, got {eps!r}")


def sign_str(s):
    return "+" if s > 0 else "-"


class Pyramid:
    """Skew-symmetric labelling of an n x l array of boxes by I_{nl}.

    ``order="column"`` fills columns left to right, each top to bottom;
    ``order="row"`` fills rows top to bottom, each left to right.  For
    eps=- the labels are then re-signed so that boxes right of the centre
    (and the lower half of the centre column) carry positive labels.
    """

    def __init__(self, n, l, eps, order="column"):
        self.sd = SignData(n, l, eps)
        self.n, self.l, self.eps, self.phi = n, l, self.sd.eps, self.sd.phi
        self.order = order
        rows, cols = index_set(n), index_set(l)
        if order == "column":
            boxes = [(r, c) for c in cols for r in rows]
        elif order == "row":
            boxes = [(r, c) for r in rows for c in cols]
        else:
            raise ValueError(f"unknown labelling order {order!r}")
        labels = index_set(n * l)
        box = dict(zip(labels, boxes))
        if self.eps == -1:
            for a in labels:
                if a > 0:
                    r, c = box[a]
                    if c < 0 or (c == 0 and r < 0):
                        box[a], box[-a] = box[-a], box[a]
        self.box = box
        self.label = {v: k for k, v in box.items()}
        for a, (r, c) in box.items():
            assert box[-a] == (-r, -c)

    @property
    def N(self):
        return self.n * self.l

    def row(self, a):
        return self.box[a][0]

    def col(self, a):
        return self.box[a][1]

    def at(self, row, col):
        return self.label[(row, col)]

    def dump(self):
        rows, cols = index_set(self.n), index_set(self.l)
        w = max(len(str(a)) for a in self.box)
        return "\n".join(" ".join(str(self.at(r, c)).rjust(w) for c in cols) for r in rows)

    def __repr__(self):
        return f"Pyramid(n={self.n}, l={self.l}, eps={sign_str(self.eps)}, order={self.order!r})"


class LieElement(dict):
    """Sparse rational matrix {(a, b): coeff} in the matrix units e_{a,b}."""

    def __init__(self, *args, **kw):
        super().__init__()
        for k, v in dict(*args, **kw).items():
            if v:
                self[k] = Fraction(v)

    def copy(self):
        return LieElement(self)

    def _acc(self, key, v):
        v = self.get(key, 0) + v
        if v:
            self[key] = v
        else:
            self.pop(key, None)

    def __add__(self, other):
        out = self.copy()
        for k, v in other.items():
            out._acc(k, v)
        return out

    def __neg__(self):
        return LieElement({k: -v for k, v in self.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        return LieElement({k: v * c for k, v in self.items()})

    __rmul__ = __mul__

    def __matmul__(self, other):
        by_row = {}
        for (c, d), v in other.items():
            by_row.setdefault(c, []).append((d, v))
        out = LieElement()
        for (a, b), v in self.items():
            for d, w in by_row.get(b, ()):
                out._acc((a, d), v * w)
        return out

    def bracket(self, other):
        return self @ other - other @ self

    def transpose(self):
        return LieElement({(b, a): v for (a, b), v in self.items()})

    def trace(self):
        return sum((v for (a, b), v in self.items() if a == b), Fraction(0))

    def __str__(self):
        if not self:
            return "0"
        out = ""
        for (a, b), v in sorted(self.items()):
            term = f"E[{a},{b}]" if abs(v) == 1 else f"{abs(v)}*E[{a},{b}]"
            if not out:
                out = term if v > 0 else "-" + term
            else:
                out += (" + " if v > 0 else " - ") + term
        return out


def matrix_unit(a, b):
    return LieElement({(a, b): 1})


def identity(N):
    return LieElement({(a, a): 1 for a in index_set(N)})


def _rank_of(pyr_or_rank):
    return pyr_or_rank.N if isinstance(pyr_or_rank, Pyramid) else int(pyr_or_rank)


def f_gen(pyr_or_rank, i, j, eps=None):
    """f_{i,j} = e_{i,j} - eps^(hat i + hat j) e_{-j,-i}."""
    N = _rank_of(pyr_or_rank)
    if eps is None:
        eps = pyr_or_rank.eps
    eps = _parse_sign(eps)
    idx = set(index_set(N))
    if i not in idx or j not in idx:
        raise ValueError(f"indices ({i}, {j}) outside I_{N}")
    x = matrix_unit(i, j)
    x._acc((-j, -i), -sign_power(eps, hat(i) + hat(j)))
    return x


def form_matrix(N, eps):
    """J with x^T J + J x = 0 cutting out so_N (eps=+) or sp_N (eps=-)."""
    eps = _parse_sign(eps)
    J = LieElement()
    for j in index_set(N):
        J[(-j, j)] = Fraction(1 if eps == 1 or j > 0 else -1)
    return J


def in_algebra(x, N, eps):
    J = form_matrix(N, eps)
    return not (x.transpose() @ J + J @ x)


def build_e(pyr):
    e = LieElement()
    for a in pyr.box:
        r, c = pyr.box[a]
        if c + 2 not in index_set(pyr.l):
            continue
        b = pyr.at(r, c + 2)
        if c + 2 >= 2 or (c + 2 == 1 and r > 0):
            e = e + f_gen(pyr, a, b)
        elif c + 2 == 1 and r == 0:
            e = e + f_gen(pyr, a, b) * Fraction(1, 2)
    return e


def build_h(pyr):
    return LieElement({(a, a): -pyr.col(a) for a in pyr.box})


def degree(x, pyr):
    """Common ad(h)-degree of the terms of x, None for 0, "mixed" otherwise."""
    degs = {pyr.col(b) - pyr.col(a) for (a, b) in x}
    if not degs:
        return None
    return degs.pop() if len(degs) == 1 else "mixed"


def chi(x, pyr, e=None):
    """chi(x) = (x, e) = tr(x e)/2 on the negatively graded part m."""
    for (a, b) in x:
        if pyr.col(b) - pyr.col(a) >= 0:
            raise ValueError("chi is only defined on m (negative degree)")
    if e is None:
        e = build_e(pyr)
    return (x @ e).trace() / 2


def _admissible(a, b, eps):
    return a + b < 0 if eps == 1 else a + b <= 0


def gbasis(pyr):
    """Admissible pairs (a, b) with their f_{a,b}; these form a basis of g."""
    out = []
    for a, b in product(sorted(pyr.box), repeat=2):
        if _admissible(a, b, pyr.eps):
            out.append(((a, b), f_gen(pyr, a, b)))
    return out


def coordinates(x, pyr):
    """Coefficients of x in the gbasis, keyed by admissible pair."""
    out = {}
    for (a, b), v in x.items():
        if _admissible(a, b, pyr.eps):
            out[(a, b)] = v / 2 if a + b == 0 else v
    return out


def subalgebra_basis(pyr, which="g"):
    sel = {
        "g": lambda d: True,
        "m": lambda d: d < 0,
        "p": lambda d: d >= 0,
        "h0": lambda d: d == 0,
    }[which]
    return [f for (a, b), f in gbasis(pyr) if sel(pyr.col(b) - pyr.col(a))]


def component_generator(pyr):
    """The involution swapping rows 1 and -1 inside every column."""
    n, l, eps = pyr.n, pyr.l, pyr.eps
    if not (n % 2 == 0 and ((eps == -1 and l % 2 == 0) or (eps == 1 and l % 2 == 1))):
        raise ValueError("component group is trivial for these parameters")
    c = LieElement()
    for a in pyr.box:
        r, k = pyr.box[a]
        if r not in (1, -1):
            c[(a, a)] = Fraction(1)
        elif r == 1:
            b = pyr.at(-1, k)
            c[(a, b)] = Fraction(1)
            c[(b, a)] = Fraction(1)
    return c


def exact_det(x, N):
    """Determinant of a sparse matrix over I_N by fraction-exact elimination."""
    idx = index_set(N)
    m = [[x.get((a, b), Fraction(0)) for b in idx] for a in idx]
    det = Fraction(1)
    for k in range(N):
        piv = next((r for r in range(k, N) if m[r][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        for r in range(k + 1, N):
            f = m[r][k] / m[k][k]
            if f:
                m[r] = [u - f * v for u, v in zip(m[r], m[k])]
    return det
