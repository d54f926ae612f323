"""Exact scalars of the form q + sum(c_s * s) with q, c_s rational and s formal symbols.

A symbol stands for a generic complex number, so two values differ by an
integer only when their symbolic parts agree.  This makes the partial order
``a >= b  iff  a - b in Z_{>=0}`` decidable.
"""

import re
from fractions import Fraction

__all__ = ["Number", "num", "ge", "gt", "sum_nonneg_int", "coset_key"]

_SYMBOL = re.compile(r"[a-z][a-z0-9]*$")
_TERM = re.compile(r"\s*([+-]?)\s*([0-9]+(?:/[0-9]+)?)?\s*(\*?)\s*([a-z][a-z0-9]*)?\s*")


class Number:
    __slots__ = ("offset", "irr", "_hash")

    def __init__(self, offset=0, irr=()):
        self.offset = Fraction(offset)
        if isinstance(irr, dict):
            irr = irr.items()
        self.irr = tuple(sorted((s, Fraction(c)) for s, c in irr if c != 0))
        self._hash = hash((self.offset, self.irr))

    @classmethod
    def symbol(cls, name, coeff=1):
        if not _SYMBOL.match(name):
            raise ValueError(f"bad symbol name {name!r}")
        return cls(0, [(name, coeff)])

    @classmethod
    def parse(cls, text):
        if isinstance(text, (int, Fraction)):
            return cls(text)
        s = text.strip()
        if not s:
            raise ValueError("empty number")
        offset = Fraction(0)
        irr = {}
        pos = 0
        while pos < len(s):
            m = _TERM.match(s, pos)
            sign, coeff, star, sym = m.groups()
            if m.end() == pos or (coeff is None and sym is None):
                raise ValueError(f"cannot parse {text!r}")
            if pos > 0 and not sign:
                raise ValueError(f"missing operator in {text!r}")
            if star and (coeff is None or sym is None):
                raise ValueError(f"cannot parse {text!r}")
            if coeff is not None and sym is not None and not star:
                raise ValueError(f"write coefficients as c*s in {text!r}")
            c = Fraction(coeff) if coeff is not None else Fraction(1)
            if sign == "-":
                c = -c
            if sym is None:
                offset += c
            else:
                irr[sym] = irr.get(sym, 0) + c
            pos = m.end()
        return cls(offset, irr)

    def __str__(self):
        parts = []
        for sym, c in self.irr:
            if c == 1:
                t = sym
            elif c == -1:
                t = "-" + sym
            else:
                t = f"{c}*{sym}"
            parts.append(t)
        if self.offset != 0 or not parts:
            parts.append(str(self.offset))
        out = parts[0]
        for t in parts[1:]:
            out += t if t.startswith("-") else "+" + t
        return out

    def __repr__(self):
        return f"Number({str(self)!r})"

    def __eq__(self, other):
        if not isinstance(other, Number):
            if isinstance(other, (int, Fraction)):
                return not self.irr and self.offset == other
            return NotImplemented
        return self.offset == other.offset and self.irr == other.irr

    def __hash__(self):
        return self._hash

    def __add__(self, other):
        other = _coerce(other)
        d = dict(self.irr)
        for s, c in other.irr:
            d[s] = d.get(s, 0) + c
        return Number(self.offset + other.offset, d)

    __radd__ = __add__

    def __neg__(self):
        return Number(-self.offset, [(s, -c) for s, c in self.irr])

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, q):
        if isinstance(q, Number):
            if q.irr:
                raise TypeError("only rational scaling is supported")
            q = q.offset
        q = Fraction(q)
        return Number(self.offset * q, [(s, c * q) for s, c in self.irr])

    __rmul__ = __mul__

    def sort_key(self):
        """Total order for canonical sorting; unrelated to the partial order."""
        return (self.irr, self.offset)

    def __lt__(self, other):
        return self.sort_key() < _coerce(other).sort_key()

    def is_rational(self):
        return not self.irr

    def is_integer(self):
        return not self.irr and self.offset.denominator == 1


def _coerce(x):
    if isinstance(x, Number):
        return x
    if isinstance(x, (int, Fraction)):
        return Number(x)
    if isinstance(x, str):
        return Number.parse(x)
    raise TypeError(f"cannot convert {x!r} to Number")


def num(x):
    """Build a Number from an int, Fraction, string or Number."""
    return _coerce(x)


def ge(a, b):
    d = _coerce(a) - _coerce(b)
    return d.is_integer() and d.offset >= 0


def gt(a, b):
    d = _coerce(a) - _coerce(b)
    return d.is_integer() and d.offset > 0


def sum_nonneg_int(a, b, strict=False):
    s = _coerce(a) + _coerce(b)
    if not s.is_integer():
        return False
    return s.offset > 0 if strict else s.offset >= 0


def coset_key(a):
    """Identifies the class of a modulo Z."""
    a = _coerce(a)
    return (a.irr, a.offset - (a.offset.numerator // a.offset.denominator))
