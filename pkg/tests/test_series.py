from itertools import combinations_with_replacement, product

import pytest

from rectwalg.exact import ge, num, sum_nonneg_int
from rectwalg.lie import SignData
from rectwalg.series import (
    HALF, FactoredSeries, all_pairings, arrow, arrow_chain, cleared_roots, double_arrow,
    lofa, mu_sharp, normalize_roots, sharp_prime_special, sharp_special,
)
from rectwalg.tableaux import RowClass


def fs(numer=(), denom=()):
    return FactoredSeries([num(x) for x in numer], [num(x) for x in denom])


def ms(xs):
    return sorted((num(x) for x in xs), key=lambda a: a.sort_key())


# ---- oracles

def chain_search(s1, s2, budget=6):
    """Exhaustive search for P with s1/s2 = P(u+1)/P(u), deg P <= budget.

    As rational functions in u, P(u+1)/P(u) is a product of telescoped chains
    (u+b+k)/(u+b) with k >= 0, whose lengths k add up to deg P.  Try every way
    of matching denominator constants b with numerator constants b+k.
    """
    top = list(s1.numer) + list(s2.denom)
    bottom = list(s1.denom) + list(s2.numer)
    pad = [num(0)] * abs(len(top) - len(bottom))
    if len(top) < len(bottom):
        top += pad
    else:
        bottom += pad

    def go(top, bottom, left):
        if not bottom:
            return True
        b, rest = bottom[0], bottom[1:]
        for k, x in enumerate(top):
            d = x - b
            if d.is_integer() and 0 <= d.offset <= left:
                if go(top[:k] + top[k + 1:], rest, left - int(d.offset)):
                    return True
        return False

    return go(top, bottom, budget)


def pairing_bruteforce(s):
    """s(-u) => s(u) by trying every set of cancelled {a,-a} pairs and every pairing."""
    roots = [a for a in cleared_roots(s) if a != 0]
    opposite = [(a, k) for k, a in enumerate(roots) if a.sort_key() < (-a).sort_key()]
    for mask in product([0, 1], repeat=len(opposite)):
        left = list(roots)
        ok = True
        for (a, _), m in zip(opposite, mask):
            if m:
                if -a not in left or a not in left:
                    ok = False
                    break
                left.remove(a)
                left.remove(-a)
        if not ok:
            continue
        if len(left) % 2:
            left.append(num(0))
        for p in all_pairings(left):
            if all(sum_nonneg_int(x, y) for x, y in p):
                return True
    return False


# ---- FactoredSeries

def test_reduction_and_zero_constants():
    assert fs([1, 2], [2]) == fs([1])
    assert fs([0, 1], [0]) == fs([1])
    assert fs([0]) == fs()
    assert str(fs([1], ["-1/2"])) == "(1+1u^-1)/(1-1/2u^-1)"


def test_at_minus_u_and_evenness():
    assert fs([1, -2]).at_minus_u() == fs([-1, 2])
    assert fs(["s", "-s"]).is_even()
    assert not fs([1]).is_even()


# ---- arrow

def test_arrow_examples():
    assert arrow(fs([2, 0]), fs([1, 0]))
    assert not arrow(fs(["1/2"]), fs([0]))
    assert not arrow(fs([0]), fs([1]))
    assert not chain_search(fs([0]), fs([1]))


def test_arrow_pads_with_u():
    # (1+u^-1) = (u+1)/u, P(u) = u
    assert arrow(fs([1]), fs())
    assert not arrow(fs(), fs([1]))
    assert arrow(fs([3]), fs())
    assert not arrow(fs([-1]), fs())


ARROW_POOL = ["-1", "0", "1", "2", "1/2", "-1/2", "s", "s+1"]


def _small_series():
    out = []
    for k in range(3):
        for c in combinations_with_replacement(ARROW_POOL, k):
            out.append(fs(c))
    out.append(fs([1], ["1/2"]))
    out.append(fs(["s+2"], ["s"]))
    return out


def test_arrow_matches_chain_search():
    series = _small_series()
    found = 0
    for s1, s2 in product(series, repeat=2):
        got = arrow(s1, s2)
        assert got == chain_search(s1, s2), (s1, s2)
        found += got
    assert found > 50


def test_arrow_reflexive_and_transitive():
    series = _small_series()[:40]
    rel = {(a, b): arrow(a, b) for a, b in product(series, repeat=2)}
    for a in series:
        assert rel[a, a]
    for a, b, c in product(series, repeat=3):
        if rel[a, b] and rel[b, c]:
            assert rel[a, c]


def test_arrow_chain():
    assert arrow_chain([fs([2]), fs([1]), fs([0])])
    assert not arrow_chain([fs([2]), fs([3])])
    assert arrow_chain([fs([1])])


# ---- double arrow

def test_double_arrow_examples():
    # roots a are the negated constants
    assert double_arrow(fs([-3, 1]))
    assert double_arrow(fs(["s", "-s"]))
    assert not double_arrow(fs([3, -1]))
    assert not pairing_bruteforce(fs([3, -1]))


def test_double_arrow_clears_denominators():
    # (1 - u^-1)/(1 + 1/2 u^-1): roots {1} plus the cleared -1/2 after gamma
    assert not double_arrow(fs([-1], ["1/2"]))
    assert double_arrow(fs([-1], ["-1"]))  # reduces to 1
    assert double_arrow(fs([], [1]))  # cleared root 1, paired with a free 0
    assert not double_arrow(fs([], ["-3/2"]))


DA_POOL = ["-2", "-1", "0", "1", "2", "1/2", "-3/2", "s", "-s+1"]


@pytest.mark.parametrize("size", range(1, 9))
def test_double_arrow_matches_bruteforce(size):
    pool = DA_POOL if size <= 5 else DA_POOL[:6]
    count = 0
    for c in combinations_with_replacement(pool, size):
        for split in range(0, min(size, 2) + 1):
            s = fs(c[split:], c[:split])
            assert double_arrow(s) == pairing_bruteforce(s), s
            count += 1
    assert count > 0


def test_double_arrow_ignores_opposite_pairs():
    for c in combinations_with_replacement(DA_POOL[:6], 3):
        s = fs(c)
        for b in ("1", "3/2", "s"):
            assert double_arrow(s) == double_arrow(s * fs([b, "-" + b if b != "s" else "-s"]))


def test_normalize_roots():
    assert normalize_roots([num(1), num(-1), num(2)], odd=True) == [num(2)]
    assert normalize_roots([num(2)], odd=False) == [num(2), num(0)]
    assert normalize_roots([num(0), num(0)], odd=True) == [num(0)]


# ---- sharp-special elements

def test_sharp_special_examples():
    assert sharp_special([-3, -1, 2]) == num(-3)
    assert sharp_special([-3, -2, 1]) is None
    assert sharp_special([0, -3, 1, 2, 4]) == num(2)
    with pytest.raises(ValueError):
        sharp_special([1, 2])


def test_sharp_prime_examples():
    assert sharp_prime_special(["-7/2", "-3/2", "3/2"]) == num("-7/2")
    assert sharp_prime_special([2, -1, 0]) == num(0)
    # an opposite pair sums to 0, which is minimal whenever b + a, b - a are not
    assert sharp_prime_special([3, -3, "1/2"]) == num("1/2")
    assert sharp_prime_special([-1, -1, -1]) is None  # no admissible pair at all
    with pytest.raises(ValueError):
        sharp_prime_special([])


def test_mu_sharp_examples():
    assert ms(mu_sharp([2, -1, 0])) == ms([2, -1, -1])
    assert mu_sharp(["-1/2"]) == [num("-1/2")]
    with pytest.raises(ValueError):
        mu_sharp([-1, -1, -1])


SMALL = [num(x) for x in range(-3, 4)]


def _odd_lists():
    for k in (1, 3, 5):
        yield from combinations_with_replacement(SMALL, k)


def test_shift_relates_sharp_and_sharp_prime():
    checked = 0
    for xs in _odd_lists():
        w = sharp_special([x + HALF for x in xs])
        if w is None:
            continue
        assert sharp_prime_special(xs, all_values=True) == frozenset([w - HALF]), xs
        checked += 1
    assert checked > 300


def test_mu_sharp_involution():
    checked = 0
    for xs in _odd_lists():
        if sharp_prime_special(xs) is None:
            continue
        assert ms(mu_sharp(mu_sharp(xs))) == ms(xs), xs
        checked += 1
    assert checked > 300


THRESHOLD_POOL = [num(x) for x in ["-3", "-2", "-1", "0", "1", "2", "1/2", "-1/2", "3/2", "-3/2", "-5/2"]]


def test_threshold_tests_match_direct_decision():
    # mu = (1 + u^-1/2)^-1 prod (1 - a u^-1), with sharp'-special root a
    plus = fs(["1/2"])
    checked = 0
    for k in (1, 3, 5):
        for xs in combinations_with_replacement(THRESHOLD_POOL, k):
            a = sharp_prime_special(xs)
            if a is None:
                continue
            mu = fs([-x for x in xs], ["1/2"])
            sharp = fs([-x for x in mu_sharp(xs)], ["1/2"])
            assert double_arrow(mu) == ge(a, -HALF), xs
            assert double_arrow(mu * plus) == ge(a, 0), xs
            assert double_arrow(sharp) == ge(-HALF, a), xs
            assert double_arrow(sharp * plus) == ge(num(-1), a), xs
            checked += 1
    assert checked > 1000


# ---- tableau to weight

def test_lofa_even_l():
    w = lofa(RowClass(2, 2, {-1: [2, -1]}), SignData(2, 2, "-"))
    assert w.indices == [1]
    assert w[1] == fs(["-3/2", "3/2"])


def test_lofa_odd_l_denominator():
    for n, l, eps in [(2, 3, "-"), (2, 3, "+"), (2, 1, "+"), (4, 1, "-")]:
        sd = SignData(n, l, eps)
        rows = {i: [2] * l for i in range(-n + 1, 0, 2)}
        w = lofa(RowClass(n, l, rows), sd)
        for i in w.indices:
            c = num(-2) + HALF * i
            assert w[i] == FactoredSeries([c] * l, [sd.phi * HALF])


def test_lofa_odd_n_even_mu0():
    sd = SignData(3, 3, "+")
    rc = RowClass(3, 3, {-2: [1, 2, 3], 0: [-1, 0, 1]})
    w = lofa(rc, sd)
    assert w.indices == [0, 2]
    # the centre 0 becomes 1/2, which cancels the denominator 1/2
    assert w[0] == fs([-1, 1]) and w[0].is_even()
    assert w[2] == fs([-2, -1, 0], ["1/2"])  # row 2 = (-3, -2, -1) shifted by 1
