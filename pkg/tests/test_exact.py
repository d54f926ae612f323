from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rectwalg.exact import Number, coset_key, ge, gt, num, sum_nonneg_int

halves = st.integers(-12, 12).map(lambda k: Fraction(k, 2))
numbers = st.builds(
    lambda q, a, b: Number(q, {"s": a, "t": b}),
    halves,
    st.sampled_from([0, 0, 1, -1, Fraction(1, 2)]),
    st.sampled_from([0, 0, 0, 1]),
)


@pytest.mark.parametrize("text,offset,irr", [
    ("3/2", Fraction(3, 2), ()),
    ("-4", Fraction(-4), ()),
    ("s", 0, (("s", 1),)),
    ("s+1/2", Fraction(1, 2), (("s", 1),)),
    ("-s+1/2", Fraction(1, 2), (("s", -1),)),
    ("-2*s+1", 1, (("s", -2),)),
    ("x1 - 1/3*y + 2", 2, (("x1", 1), ("y", Fraction(-1, 3)))),
])
def test_parse(text, offset, irr):
    x = Number.parse(text)
    assert x.offset == offset
    assert x.irr == tuple((s, Fraction(c)) for s, c in irr)


@pytest.mark.parametrize("bad", ["", "2s", "s+", "1 2", "S", "*s", "1/0x"])
def test_parse_rejects(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        Number.parse(bad)


@given(numbers)
def test_text_round_trip(x):
    assert Number.parse(str(x)) == x


@given(numbers)
def test_ge_reflexive(x):
    assert ge(x, x) and not gt(x, x)


@given(numbers, numbers)
def test_ge_antisymmetric(x, y):
    if ge(x, y) and ge(y, x):
        assert x == y


@given(numbers, numbers, numbers)
def test_ge_transitive(x, y, z):
    if ge(x, y) and ge(y, z):
        assert ge(x, z)


@given(numbers, numbers)
def test_gt_is_strict_ge(x, y):
    assert gt(x, y) == (ge(x, y) and x != y)


@given(numbers, numbers)
def test_comparable_iff_same_coset(x, y):
    assert (ge(x, y) or ge(y, x)) == (coset_key(x) == coset_key(y))


def test_incomparable_values():
    assert not ge(num("1/2"), 0) and not ge(0, num("1/2"))
    assert not ge(num("s+1"), num(0))
    assert ge(num("s+1"), num("s"))


def test_sum_nonneg_int():
    assert sum_nonneg_int(num(3), num(-1))
    assert sum_nonneg_int(num(1), num(-1))
    assert not sum_nonneg_int(num(1), num(-1), strict=True)
    assert sum_nonneg_int(num("s+1/2"), num("-s+1/2"))
    assert not sum_nonneg_int(num("1/2"), num(0))


def test_rational_scaling_only():
    assert num("s") * 2 == num("2*s")
    with pytest.raises(TypeError):
        num("s") * num("s")
