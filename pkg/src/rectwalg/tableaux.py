"""Skew-symmetric n x l tableaux, their row classes and column strictness.

Rows are indexed by I_n and columns by I_l; skew symmetry means
a_{i,j} = -a_{-i,-j}, so a tableau is determined by its rows i < 0 (and
row 0 when n is odd, which must be its own negative).
"""

from itertools import combinations_with_replacement, permutations, product
import json

from .exact import Number, gt, num
from .lie import index_set

__all__ = [
    "Tableau", "RowClass", "row_class", "is_column_strict", "std_decision",
    "std_bruteforce", "a_plus", "strip_middle", "enumerate_row_classes",
]


def _key(x):
    return x.sort_key()


def _neg_row(xs):
    return tuple(sorted((-x for x in xs), key=_key))


class Tableau:
    def __init__(self, n, l, entries):
        self.n, self.l = n, l
        self.entries = {k: num(v) for k, v in entries.items()}
        for i, j in product(index_set(n), index_set(l)):
            if (i, j) not in self.entries:
                raise ValueError(f"missing entry ({i}, {j})")
            if self.entries[i, j] != -self.entries[-i, -j]:
                raise ValueError(f"skew symmetry fails at ({i}, {j})")

    @classmethod
    def from_rows(cls, n, l, rows):
        """rows: {i: entries in column order} for i <= 0; the rest is derived."""
        cols = index_set(l)
        entries = {}
        for i, row in rows.items():
            if i > 0:
                continue
            if len(row) != l:
                raise ValueError(f"row {i} has {len(row)} entries, expected {l}")
            for j, v in zip(cols, row):
                entries[i, j] = num(v)
                entries[-i, -j] = -num(v)
        return cls(n, l, entries)

    def row(self, i):
        return [self.entries[i, j] for j in index_set(self.l)]

    def column(self, j):
        return [self.entries[i, j] for i in index_set(self.n)]

    def to_dict(self):
        rows = {str(i): [str(x) for x in self.row(i)] for i in index_set(self.n) if i <= 0}
        return {"n": self.n, "l": self.l, "rows": rows}

    def __eq__(self, other):
        return isinstance(other, Tableau) and (self.n, self.l, self.entries) == (other.n, other.l, other.entries)

    def __str__(self):
        cells = [[str(self.entries[i, j]) for j in index_set(self.l)] for i in index_set(self.n)]
        w = max(len(c) for r in cells for c in r)
        return "\n".join(" ".join(c.rjust(w) for c in r) for r in cells)


class RowClass:
    """A tableau up to permutations within rows; rows i < 0 (and 0) sorted."""

    def __init__(self, n, l, rows):
        self.n, self.l = n, l
        neg = [i for i in index_set(n) if i < 0]
        self.neg = tuple(tuple(sorted((num(x) for x in rows[i]), key=_key)) for i in neg)
        for i, r in zip(neg, self.neg):
            if len(r) != l:
                raise ValueError(f"row {i} has {len(r)} entries, expected {l}")
        if n % 2:
            mid = tuple(sorted((num(x) for x in rows[0]), key=_key))
            if len(mid) != l or mid != _neg_row(mid):
                raise ValueError("row 0 must have l entries and equal its own negative")
            if l % 2 and num(0) not in mid:
                raise ValueError("row 0 must contain the centre entry 0")
            self.mid = mid
        else:
            self.mid = None

    def row(self, i):
        if i == 0:
            if self.mid is None:
                raise KeyError(0)
            return self.mid
        if i < 0:
            return self.neg[(i + self.n - 1) // 2]
        return _neg_row(self.row(-i))

    def rows(self):
        """{i: sorted row} for i <= 0."""
        return {i: self.row(i) for i in index_set(self.n) if i <= 0}

    def sort_key(self):
        k = [tuple(_key(x) for x in r) for r in self.neg]
        if self.mid is not None:
            k.append(tuple(_key(x) for x in self.mid))
        return tuple(k)

    def __eq__(self, other):
        return isinstance(other, RowClass) and (self.n, self.l, self.neg, self.mid) == (
            other.n, other.l, other.neg, other.mid)

    def __hash__(self):
        return hash((self.n, self.l, self.neg, self.mid))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def to_dict(self):
        rows = {str(i): [str(x) for x in r] for i, r in self.rows().items()}
        return {"n": self.n, "l": self.l, "rows": rows}

    def __repr__(self):
        body = ", ".join(f"{i}: ({', '.join(map(str, r))})" for i, r in self.rows().items())
        return f"RowClass(n={self.n}, l={self.l}, {{{body}}})"


def row_class(A):
    return RowClass(A.n, A.l, {i: A.row(i) for i in index_set(A.n) if i <= 0})


def load_json(data):
    """Parse the tableau JSON format into (n, l, {row index: entries})."""
    if isinstance(data, str):
        data = json.loads(data)
    n, l = int(data["n"]), int(data["l"])
    rows = {int(k): [num(x) for x in v] for k, v in data["rows"].items()}
    return n, l, rows


def _decreasing(xs):
    return all(gt(a, b) for a, b in zip(xs, xs[1:]))


def is_column_strict(A, eps):
    n, l = A.n, A.l
    a = A.entries
    rows = index_set(n)
    for j in index_set(l):
        if j != 0 and not _decreasing(A.column(j)):
            return False
    if l % 2:
        if n % 2 == 0:
            if not _decreasing([a[i, 0] for i in rows if i <= -1]):
                return False
            if eps in (-1, "-") and not gt(a[-1, 0], 0):
                return False
            if eps in (1, "+") and n >= 4 and not gt(a[-3, 0] + a[-1, 0], 0):
                return False
        else:
            if not _decreasing([a[i, 0] for i in rows if i <= -2]):
                return False
            if n >= 3 and not gt(a[-2, 0] * 2, 0):
                return False
    return True


class _Search:
    """Backtracking search for a column strict arrangement of a row class."""

    def __init__(self, rc, eps):
        self.rc, self.eps = rc, 1 if eps in (1, "+") else -1
        self.n, self.l = rc.n, rc.l
        self.cols = index_set(rc.l)
        self.neg_rows = [i for i in index_set(rc.n) if i < 0]
        self.grid = {}

    def run(self):
        if self._row(0):
            rows = {i: [self.grid[i, j] for j in self.cols] for i in self.neg_rows}
            if self.n % 2:
                rows[0] = [self.grid[0, j] for j in self.cols]
            return Tableau.from_rows(self.n, self.l, rows)
        return None

    def _row(self, k):
        if k == len(self.neg_rows):
            return self._middle_row() if self.n % 2 else True
        i = self.neg_rows[k]
        return self._fill(k, i, 0, list(self.rc.row(i)))

    def _ok(self, i, j, v):
        g = self.grid
        if i - 2 >= 1 - self.n and not gt(g[i - 2, j], v):
            return False
        last = i == self.neg_rows[-1]
        if not last:
            return True
        if self.n % 2 == 0:
            if j > 0 and not gt(v + g[i, -j], 0):
                return False
            if j == 0:
                if self.eps == -1 and not gt(v, 0):
                    return False
                if self.eps == 1 and self.n >= 4 and not gt(g[-3, 0] + v, 0):
                    return False
        elif j == 0 and not gt(v * 2, 0):
            return False
        return True

    def _feasible(self, i, pos, left):
        # every unfilled column still needs a value strictly below the row above
        if i - 2 < 1 - self.n:
            return True
        for j in self.cols[pos:]:
            above = self.grid[i - 2, j]
            if not any(gt(above, v) for v in left):
                return False
        return True

    def _fill(self, k, i, pos, left):
        if pos == self.l:
            return self._row(k + 1)
        j = self.cols[pos]
        tried = set()
        for idx, v in enumerate(left):
            if v in tried:
                continue
            tried.add(v)
            if not self._ok(i, j, v):
                continue
            self.grid[i, j] = v
            rest = left[:idx] + left[idx + 1:]
            if self._feasible(i, pos + 1, rest) and self._fill(k, i, pos + 1, rest):
                return True
            del self.grid[i, j]
        return False

    def _middle_row(self):
        left = list(self.rc.row(0))
        if self.l % 2:
            left.remove(num(0))
            self.grid[0, 0] = num(0)
        return self._fill_middle([j for j in self.cols if j > 0], left)

    def _fill_middle(self, js, left):
        if not js:
            return True
        j = js[0]
        tried = set()
        for v in left:
            if v in tried:
                continue
            tried.add(v)
            rest = list(left)
            rest.remove(v)
            if -v not in rest:
                continue
            rest.remove(-v)
            if self.n >= 3:
                # a_{-2,j} > a_{0,j} > a_{2,j} = -a_{-2,-j}
                if not (gt(self.grid[-2, j], v) and gt(v + self.grid[-2, -j], 0)):
                    continue
            self.grid[0, j], self.grid[0, -j] = v, -v
            if self._fill_middle(js[1:], rest):
                return True
        return False


def std_decision(rc, eps):
    """A column strict tableau in the row class, or None."""
    return _Search(rc, eps).run()


def _distinct_perms(xs):
    return set(permutations(xs))


def _skew_arrangements(mid, l):
    """Every arrangement of a self-skew row with a_{0,-j} = -a_{0,j}."""
    pos = [j for j in index_set(l) if j > 0]
    left = list(mid)
    if l % 2:
        left.remove(num(0))

    def place(k, left, row):
        if k == len(pos):
            yield [row[j] for j in index_set(l)]
            return
        for v in sorted(set(left), key=_key):
            rest = list(left)
            rest.remove(v)
            if -v not in rest:
                continue
            rest.remove(-v)
            row[pos[k]], row[-pos[k]] = v, -v
            yield from place(k + 1, rest, row)

    yield from place(0, left, {0: num(0)} if l % 2 else {})


def std_bruteforce(rc, eps):
    """Exhaustive oracle: try every arrangement of every row."""
    neg = [i for i in index_set(rc.n) if i < 0]
    choices = [sorted(_distinct_perms(rc.row(i)), key=lambda p: [_key(x) for x in p]) for i in neg]
    if rc.n % 2:
        choices.append(list(_skew_arrangements(rc.row(0), rc.l)))
        neg = neg + [0]
    for combo in product(*choices):
        A = Tableau.from_rows(rc.n, rc.l, dict(zip(neg, combo)))
        if is_column_strict(A, eps):
            return A
    return None


def a_plus(rc):
    """Insert the middle column (n/2-1, ..., 1, 0, 0, -1, ..., 1-n/2), or its n odd analogue."""
    if rc.l % 2:
        raise ValueError("a_plus needs l even")
    rows = {}
    for i, r in rc.rows().items():
        extra = num(0) if i == 0 else num(-i - 1) * num("1/2")
        rows[i] = list(r) + [extra]
    return RowClass(rc.n, rc.l + 1, rows)


def strip_middle(rc):
    """Inverse of a_plus."""
    rows = {}
    for i, r in rc.rows().items():
        extra = num(0) if i == 0 else num(-i - 1) * num("1/2")
        r = list(r)
        r.remove(extra)
        rows[i] = r
    return RowClass(rc.n, rc.l - 1, rows)


def enumerate_row_classes(n, l, pool):
    """All row classes with rows i < 0 (and the pairs of row 0) drawn from pool.

    For n odd, row 0 is a union of pairs {x, -x} with x, -x in the pool,
    plus the forced centre 0 when l is odd.
    """
    pool = sorted(set(num(x) for x in pool), key=_key)
    neg = [i for i in index_set(n) if i < 0]
    row_opts = list(combinations_with_replacement(pool, l))
    if n % 2:
        reps = [x for x in pool if -x in pool and (x == -x or _key(-x) < _key(x))]
        mids = []
        for c in combinations_with_replacement(reps, l // 2):
            m = [y for x in c for y in (x, -x)]
            if l % 2:
                m.append(num(0))
            mids.append(m)
    else:
        mids = [None]
    seen = set()
    for combo in product(row_opts, repeat=len(neg)):
        for mid in mids:
            rows = dict(zip(neg, combo))
            if mid is not None:
                rows[0] = mid
            rc = RowClass(n, l, rows)
            if rc not in seen:
                seen.add(rc)
                yield rc
