"""Generators of the rectangular W-algebra and their twisted Yangian images.

The W-algebra side: the row determinant omega(u) of a matrix over the
tensor algebra T(gl_l)[u], pushed into U(p) by the maps s_{i,j}.  The
Yangian side: kappa_l(S_{i,j}(u)), a product of evaluation matrices with
entries in U(h), kept as truncated series in u^{-1}.  The check_* functions
compare the two and test the defining relations exactly.
"""

from fractions import Fraction
from itertools import permutations, product

from . import lie
from .lie import hat, index_set, sign_power
from .pbw import graded_presentation, rho

__all__ = [
    "TensorElement", "build_omega_matrix", "rdet", "omega_coeffs", "s_apply",
    "walg_generator", "walg_generators", "is_in_walg", "walg_witness",
    "kappa_S", "check_membership", "check_gens_identity", "check_kernel",
    "check_symmetry_relation", "check_quadratic_relation", "verify_all",
]


class TensorElement(dict):
    """{(power of u, word): coeff}; a word is a tuple of letters (p, q) = e_{p,q}."""

    def __init__(self, terms=None):
        super().__init__()
        for k, v in (terms or {}).items():
            if v:
                self[k] = Fraction(v)

    @classmethod
    def scalar(cls, c, power=0):
        return cls({(power, ()): c})

    @classmethod
    def letter(cls, p, q):
        return cls({(0, ((p, q),)): 1})

    def _acc(self, k, v):
        v = self.get(k, 0) + v
        if v:
            self[k] = v
        else:
            self.pop(k, None)

    def __add__(self, other):
        out = TensorElement(self)
        for k, v in other.items():
            out._acc(k, v)
        return out

    def __neg__(self):
        return TensorElement({k: -v for k, v in self.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TensorElement):
            return TensorElement({k: v * other for k, v in self.items()})
        out = TensorElement()
        for (p1, w1), v1 in self.items():
            for (p2, w2), v2 in other.items():
                out._acc((p1 + p2, w1 + w2), v1 * v2)
        return out

    __rmul__ = __mul__

    def coeff(self, power):
        """Coefficient of u^power, as a TensorElement without u."""
        return TensorElement({(0, w): v for (p, w), v in self.items() if p == power})

    def shift(self, k):
        return TensorElement({(p + k, w): v for (p, w), v in self.items()})

    def powers(self):
        return {p for p, _ in self}

    def __str__(self):
        if not self:
            return "0"
        parts = []
        for (p, w), v in sorted(self.items(), key=lambda t: (-t[0][0], t[0][1])):
            factors = [f"e[{a},{b}]" for a, b in w]
            if p:
                factors.insert(0, "u" if p == 1 else f"u^{p}")
            body = "*".join(factors)
            if not body:
                parts.append(str(v))
            elif v == 1:
                parts.append(body)
            elif v == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{v}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


def build_omega_matrix(sd, barred=False):
    """The l x l matrix Omega(u) (or its barred version for l odd), as {(p, q): entry}."""
    l, phi = sd.l, sd.phi
    if barred and l % 2 == 0:
        raise ValueError("the barred matrix only exists for l odd")
    M = {}
    for p, q in product(index_set(l), repeat=2):
        if p < q:
            M[p, q] = TensorElement.letter(p, q)
        elif p == q:
            if barred and p == 0:
                M[p, q] = TensorElement.letter(0, 0)
            else:
                M[p, q] = TensorElement.scalar(1, 1) + TensorElement.letter(q, q) + TensorElement.scalar(
                    rho(q, sd.n, sd.eps))
        elif p == q + 2:
            M[p, q] = TensorElement.scalar(-1 if p < 0 else (-phi if p == 0 else 1))
    return M


def _perm_sign(perm):
    sign, seen = 1, set()
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def rdet(M, idx=None):
    """Row determinant: Laplace expansion with factors kept in row order."""
    if idx is None:
        idx = sorted({p for p, _ in M})
    k = len(idx)
    total = TensorElement()
    for perm in permutations(range(k)):
        term = TensorElement.scalar(_perm_sign(perm))
        for r in range(k):
            entry = M.get((idx[r], idx[perm[r]]))
            if not entry:
                term = None
                break
            term = term * entry
        if term:
            total = total + term
    return total


_omega_cache = {}


def omega_coeffs(sd, R):
    """[omega_0, ..., omega_R], omega_s being the u^{l-s} coefficient of omega(u)."""
    key = (sd.n, sd.l, sd.eps, R)
    if key in _omega_cache:
        return _omega_cache[key]
    l, phi = sd.l, sd.phi
    main = rdet(build_omega_matrix(sd))
    out = [main.coeff(l - s) for s in range(R + 1)]
    if l % 2:
        bar = rdet(build_omega_matrix(sd, barred=True))
        base = Fraction(-phi, 2)  # (-2 phi)^{-1}
        for s in range(R + 1):
            for t in bar.powers():
                r = t - l + s
                if r >= 1:
                    out[s] = out[s] + bar.coeff(t) * base ** r
    _omega_cache[key] = out
    return out


class _SMap:
    """The algebra map s: T(gl_l) -> M_n(U(g)), memoised on word prefixes."""

    def __init__(self, pyr):
        self.pyr = pyr
        self.G = graded_presentation(pyr)
        self.rows = index_set(pyr.n)
        self.cache = {(): {(i, j): self.G.scalar(1 if i == j else 0) for i in self.rows for j in self.rows}}

    def letter(self, p, q):
        pyr, G, phi = self.pyr, self.G, self.pyr.phi
        out = {}
        for i, j in product(self.rows, repeat=2):
            a, b = pyr.at(i, p), pyr.at(j, q)
            sign = sign_power(phi, hat(i) * hat(p) + hat(j) * hat(q))
            out[i, j] = G.embed(lie.f_gen(pyr, a, b)) * sign
        return out

    def __call__(self, word):
        hit = self.cache.get(word)
        if hit is not None:
            return hit
        left = self(word[:-1])
        right = self.letter(*word[-1])
        out = {}
        for i, j in product(self.rows, repeat=2):
            acc = self.G.scalar(0)
            for k in self.rows:
                if left[i, k] and right[k, j]:
                    acc = acc + left[i, k] * right[k, j]
            out[i, j] = acc
        self.cache[word] = out
        return out


_smaps = {}


def _smap(pyr):
    key = (pyr.n, pyr.l, pyr.eps, pyr.order)
    if key not in _smaps:
        _smaps[key] = _SMap(pyr)
    return _smaps[key]


def s_apply(i, j, x, pyr):
    """s_{i,j}(x) for x in T(gl_l)[u]; returns {power of u: element of U(g)}."""
    S = _smap(pyr)
    out = {}
    for (p, w), c in x.items():
        y = S(w)[i, j] * c
        out[p] = out[p] + y if p in out else y
    return {p: v for p, v in out.items() if v}


def walg_generator(i, j, r, pyr):
    om = omega_coeffs(pyr.sd, r)[r]
    return s_apply(i, j, om, pyr).get(0, graded_presentation(pyr).scalar(0))


def walg_generators(pyr, R):
    return {(i, j, r): walg_generator(i, j, r, pyr)
            for i in index_set(pyr.n) for j in index_set(pyr.n) for r in range(1, R + 1)}


def walg_witness(x, pyr):
    """First (m-generator, nonzero pr([m, x])) found, or None."""
    G = graded_presentation(pyr)
    if not G.in_p(x):
        return ("not in U(p)", x)
    for m in G.m_gens:
        g = G.gen(m)
        y = G.pr(G.multiply(g, x) - G.multiply(x, g))
        if y:
            return (G.names[m], y)
    return None


def is_in_walg(x, pyr):
    return walg_witness(x, pyr) is None


# truncated series: list of coefficients [x_0, ..., x_R] of u^0 .. u^-R

def _series_mul(A, B, R, G):
    out = [G.scalar(0) for _ in range(R + 1)]
    for s, a in enumerate(A):
        if not a:
            continue
        for t in range(R + 1 - s):
            if B[t]:
                out[s + t] = out[s + t] + a * B[t]
    return out


def _matrix_mul(X, Y, rows, R, G):
    out = {}
    for i, j in product(rows, repeat=2):
        acc = [G.scalar(0) for _ in range(R + 1)]
        for k in rows:
            if any(X[i, k]) and any(Y[k, j]):
                prod_ = _series_mul(X[i, k], Y[k, j], R, G)
                acc = [u + v for u, v in zip(acc, prod_)]
        out[i, j] = acc
    return out


def _eval_matrix(pyr, col, R):
    """ev_col(T(u)) for col > 0: delta + u^{-1} f_{a,b}."""
    G = graded_presentation(pyr)
    rows = index_set(pyr.n)
    out = {}
    for i, j in product(rows, repeat=2):
        s = [G.scalar(0) for _ in range(R + 1)]
        s[0] = G.scalar(1 if i == j else 0)
        if R >= 1:
            s[1] = G.embed(lie.f_gen(pyr, pyr.at(i, col), pyr.at(j, col)))
        out[i, j] = s
    return out


def _tau_matrix(pyr, E, R):
    """tau(E(u))_{i,h} = phi^(hat i + hat h) E(-u)_{-h,-i}."""
    rows = index_set(pyr.n)
    out = {}
    for i, h in product(rows, repeat=2):
        sign = sign_power(pyr.phi, hat(i) + hat(h))
        src = E[-h, -i]
        out[i, h] = [x * (sign * (-1) ** r) for r, x in enumerate(src)]
    return out


def _ev0_matrix(pyr, R):
    """delta + (u + phi/2)^{-1} f_{a,b} in the middle column."""
    G = graded_presentation(pyr)
    rows = index_set(pyr.n)
    out = {}
    for i, j in product(rows, repeat=2):
        f = G.embed(lie.f_gen(pyr, pyr.at(i, 0), pyr.at(j, 0)))
        s = [G.scalar(1 if i == j else 0)]
        for r in range(1, R + 1):
            s.append(f * Fraction(-pyr.phi, 2) ** (r - 1))
        out[i, j] = s
    return out


_kappa_cache = {}


def kappa_S(pyr, R):
    """kappa_l(S_{i,j}(u)) truncated at u^{-R}, as {(i, j): [coeffs]}."""
    key = (pyr.n, pyr.l, pyr.eps, pyr.order, R)
    if key in _kappa_cache:
        return _kappa_cache[key]
    G = graded_presentation(pyr)
    rows = index_set(pyr.n)
    l = pyr.l
    if l % 2:
        cols = [c for c in index_set(l) if c > 0]
        Z = _ev0_matrix(pyr, R)
    else:
        cols = [c for c in index_set(l) if c > 0]
        E1 = _eval_matrix(pyr, cols[0], R)
        Z = _matrix_mul(_tau_matrix(pyr, E1, R), E1, rows, R, G)
        cols = cols[1:]
    K = Z
    for c in cols:
        E = _eval_matrix(pyr, c, R)
        K = _matrix_mul(_matrix_mul(_tau_matrix(pyr, E, R), K, rows, R, G), E, rows, R, G)
    _kappa_cache[key] = K
    return K


# verification reports

def _record(check, pyr, i=None, j=None, r=None, diff=None, extra=None):
    rec = {
        "check": check, "n": pyr.n, "l": pyr.l, "eps": lie.sign_str(pyr.eps),
        "i": i, "j": j, "r": r,
        "status": "pass" if not diff else "fail",
        "witness": None,
    }
    if diff:
        m = min(diff, key=lambda t: (len(t), t))
        rec["witness"] = diff.alg.format(type(diff)(diff.alg, {m: diff[m]}))
    if extra:
        rec.update(extra)
    return rec


def _default_R(pyr, R):
    return pyr.l + 2 if R is None else R


def _pairs(pyr, pairs):
    rows = index_set(pyr.n)
    return list(product(rows, rows)) if pairs is None else list(pairs)


def check_membership(pyr, R=None, pairs=None):
    R = _default_R(pyr, R)
    out = []
    for i, j in _pairs(pyr, pairs):
        for r in range(1, R + 1):
            x = walg_generator(i, j, r, pyr)
            w = walg_witness(x, pyr)
            rec = _record("membership", pyr, i, j, r)
            if w is not None:
                rec["status"] = "fail"
                rec["witness"] = f"[{w[0]}, s(omega)] projects to {w[1]}"
            out.append(rec)
    return out


def check_gens_identity(pyr, R=None, pairs=None):
    R = _default_R(pyr, R)
    G = graded_presentation(pyr)
    K = kappa_S(pyr, R)
    out = []
    for i, j in _pairs(pyr, pairs):
        for r in range(1, R + 1):
            lhs = G.miura(walg_generator(i, j, r, pyr))
            out.append(_record("miura_kappa", pyr, i, j, r, lhs - K[i, j][r]))
    return out


def check_kernel(pyr, R=None, pairs=None):
    R = _default_R(pyr, R)
    K = kappa_S(pyr, R)
    half_phi = Fraction(pyr.phi, 2)
    out = []
    for i, j in _pairs(pyr, pairs):
        s = K[i, j]
        for r in range(pyr.l + 1, R + 1):
            x = s[r] if pyr.l % 2 == 0 else s[r] + s[r - 1] * half_phi
            out.append(_record("kernel", pyr, i, j, r, x))
    return out


def check_symmetry_relation(pyr, R=None, pairs=None):
    R = _default_R(pyr, R)
    K = kappa_S(pyr, R)
    phi = pyr.phi
    out = []
    for i, j in _pairs(pyr, pairs):
        for r in range(R + 1):
            lhs = K[-j, -i][r] * (sign_power(phi, hat(i) + hat(j)) * (-1) ** r)
            rhs = K[i, j][r]
            if r % 2 == 0 and r >= 2:
                rhs = rhs + K[i, j][r - 1] * phi
            out.append(_record("symmetry", pyr, i, j, r, lhs - rhs))
    return out


def check_quadratic_relation(pyr, order=2, tuples=None):
    """Coefficients of u^-a v^-b, -2 <= a, b <= order, of the quadratic relation."""
    R = order + 2
    K = kappa_S(pyr, R)
    G = graded_presentation(pyr)
    phi = pyr.phi
    rows = index_set(pyr.n)
    zero = G.scalar(0)

    def S(i, j, a):
        return K[i, j][a] if 0 <= a <= R else zero

    if tuples is None:
        tuples = list(product(rows, repeat=4))
    out = []
    for (i, j, k, m) in tuples:
        p1 = sign_power(phi, hat(k) + hat(-j))
        p2 = sign_power(phi, hat(i) + hat(-m))
        p3 = sign_power(phi, hat(i) + hat(-j))

        def C(a, b):
            return G.commutator(S(i, j, a), S(k, m, b))

        def X(a, b):
            return S(k, j, a) * S(i, m, b) - S(k, j, b) * S(i, m, a)

        def Y(a, b):
            return S(i, -k, a) * S(-j, m, b) * p1 - S(k, -i, b) * S(-m, j, a) * p2

        def W(a, b):
            return (S(k, -i, a) * S(-j, m, b) - S(k, -i, b) * S(-j, m, a)) * p3

        for a, b in product(range(-2, order + 1), repeat=2):
            lhs = C(a + 2, b) - C(a, b + 2)
            rhs = X(a + 1, b) + X(a, b + 1) - (Y(a + 1, b) - Y(a, b + 1)) + W(a, b)
            rec = _record("quadratic", pyr, diff=lhs - rhs, extra={"tuple": [i, j, k, m], "a": a, "b": b})
            out.append(rec)
    return out


def verify_all(pyr, R=None, pairs=None, quadratic=False):
    recs = []
    recs += check_membership(pyr, R, pairs)
    recs += check_gens_identity(pyr, R, pairs)
    recs += check_kernel(pyr, R, pairs)
    recs += check_symmetry_relation(pyr, R, pairs)
    if quadratic:
        recs += check_quadratic_relation(pyr)
    return recs
