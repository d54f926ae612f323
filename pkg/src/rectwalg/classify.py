"""Finite dimensionality of L(A), decided twice, and the component group action.

The tableau route asks for a column strict representative.  The Yangian
route converts the row class into a highest weight and applies the
twisted Yangian criteria; for Y_n^+ with n > 2 even, the four disjuncts
are decided through the position of the sharp'-special root relative to
-1/2, 0, -1/2 and -1.
"""

from dataclasses import dataclass
from typing import Optional

from .exact import ge, num
from .lie import SignData, sign_str
from .series import (
    FactoredSeries, HALF, arrow_chain, cleared_roots, double_arrow,
    lofa, normalize_roots, odd_nonneg_pairing, sharp_prime_special, sharp_special,
)
from .tableaux import RowClass, Tableau, a_plus, std_decision

__all__ = [
    "ClassificationResult", "SCHEMA", "is_findim_tableaux", "is_findim_yangian",
    "is_findim_weights", "check_weight_shape", "classify", "c_action", "orbit",
    "sharp_series",
]

SCHEMA = "rectwalg.classification/1"

# (1 + u^-1/2), and 2u/(2u+1) = (1 + u^-1/2)^-1
PLUS_HALF = FactoredSeries([HALF])


def _sd(sd):
    return sd if isinstance(sd, SignData) else SignData(*sd)


def is_findim_tableaux(rc, sd):
    sd = _sd(sd)
    if sd.l % 2 == 0 and sd.eps == -1:
        return _found(std_decision(a_plus(rc), 1))
    return _found(std_decision(rc, sd.eps))


def _found(A):
    return A is not None, A


def check_weight_shape(weight, sd):
    """Reject weights that cannot come from U(g,e): too many factors or a stray denominator."""
    sd = _sd(sd)
    for i, s in weight.entries.items():
        t = s * FactoredSeries([HALF * sd.phi]) if sd.l % 2 else s
        if not t.is_polynomial():
            raise ValueError(f"mu_{i} is not of the allowed form (denominator {t.denom})")
        if len(t.numer) > sd.l:
            raise ValueError(f"mu_{i} has {len(t.numer)} factors, at most {sd.l} allowed")


def sharp_series(mu):
    """(s, mu^sharp) for the sharp'-special root s of (1 + u^-1/2) gamma mu, or (None, None)."""
    roots = normalize_roots(cleared_roots(mu * PLUS_HALF), odd=True)
    s = sharp_prime_special(roots)
    if s is None:
        return None, None
    return s, mu * FactoredSeries([1 + s], [-s])


def is_findim_weights(weight, sd, direct=False):
    """(finite dimensional?, branch) for a highest weight of Y_n^phi.

    ``direct=True`` decides the four Y_n^+ disjuncts by the => relation
    itself instead of the threshold comparisons; it exists for testing.
    """
    sd = _sd(sd)
    n, phi = sd.n, sd.phi
    mus = [weight[i] for i in weight.indices]
    if n % 2:
        if arrow_chain(mus):
            return True, "y_n_odd(i)"
        if arrow_chain([mus[0] / PLUS_HALF] + mus[1:]):
            return True, "y_n_odd(ii)"
        return False, "y_n_odd"
    if phi == -1:
        return double_arrow(mus[0]) and arrow_chain(mus), "y_n_minus"
    if n == 2:
        roots = normalize_roots(cleared_roots(mus[0] * PLUS_HALF), odd=True)
        return odd_nonneg_pairing(roots) is not None, "y_2"
    s, sharp = sharp_series(mus[0])
    if s is None:
        return False, "y_n_plus:sharp_undefined"
    rest = mus[1:]
    if direct:
        tests = [
            ("i", double_arrow(mus[0]), mus[0]),
            ("ii", double_arrow(mus[0] * PLUS_HALF), mus[0]),
            ("iii", double_arrow(sharp), sharp),
            ("iv", double_arrow(sharp * PLUS_HALF), sharp),
        ]
    else:
        tests = [
            ("i", ge(s, -HALF), mus[0]),
            ("ii", ge(s, 0), mus[0]),
            ("iii", ge(-HALF, s), sharp),
            ("iv", ge(num(-1), s), sharp),
        ]
    for name, ok, head in tests:
        if ok and arrow_chain([head] + rest):
            return True, f"y_n_plus({name})"
    return False, "y_n_plus"


def is_findim_yangian(rc, sd):
    sd = _sd(sd)
    w = lofa(rc, sd)
    check_weight_shape(w, sd)
    return is_findim_weights(w, sd)


@dataclass
class ClassificationResult:
    rc: RowClass
    sd: SignData
    findim_tableaux: bool
    findim_yangian: bool
    witness: Optional[Tableau]
    branch: str

    @property
    def agree(self):
        return self.findim_tableaux == self.findim_yangian

    def to_dict(self):
        return {
            "schema": SCHEMA,
            "n": self.sd.n, "l": self.sd.l,
            "eps": sign_str(self.sd.eps), "phi": sign_str(self.sd.phi),
            "rows": self.rc.to_dict()["rows"],
            "findim_tableaux": self.findim_tableaux,
            "findim_yangian": self.findim_yangian,
            "agree": self.agree,
            "branch": self.branch,
            "witness": self.witness.to_dict()["rows"] if self.witness else None,
        }


def classify(rc, sd):
    sd = _sd(sd)
    if (rc.n, rc.l) != (sd.n, sd.l):
        raise ValueError(f"row class is {rc.n}x{rc.l} but parameters are {sd.n}x{sd.l}")
    ft, witness = is_findim_tableaux(rc, sd)
    fy, branch = is_findim_yangian(rc, sd)
    return ClassificationResult(rc, sd, ft, fy, witness, branch)


def _component_case(sd):
    n, l, eps = sd.n, sd.l, sd.eps
    if eps == -1 and n % 2 == 0 and l % 2 == 0:
        return "C"
    if eps == 1 and n % 2 == 0 and l % 2 == 1:
        return "C'"
    raise ValueError("component group action needs eps=- with n, l even, or eps=+ with n even and l odd")


def c_action(rc, sd):
    """Flip the sign of one sharp-special entry of row -1 (row 1 follows by skew symmetry)."""
    sd = _sd(sd)
    case = _component_case(sd)
    row = list(rc.row(-1))
    a = sharp_special(([num(0)] if case == "C" else []) + row)
    if a is None or a == 0:
        return rc
    row[row.index(a)] = -a
    rows = rc.rows()
    rows[-1] = row
    return RowClass(rc.n, rc.l, rows)


def orbit(rc, sd):
    return sorted({rc, c_action(rc, sd)})
