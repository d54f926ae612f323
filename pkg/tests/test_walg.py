import random
from fractions import Fraction
from itertools import product

import pytest
import sympy

from rectwalg.lie import Pyramid, SignData, f_gen, index_set
from rectwalg.pbw import graded_presentation, rho
from rectwalg.walg import (
    TensorElement, build_omega_matrix, check_gens_identity, check_kernel, check_membership,
    check_quadratic_relation, check_symmetry_relation, is_in_walg, kappa_S, omega_coeffs, rdet,
    s_apply, walg_generator, walg_witness, _record, _smap,
)

T = TensorElement


def _failures(recs):
    return [r for r in recs if r["status"] != "pass"]


def test_rdet_keeps_row_order():
    a, b, c, d = (T.letter(*pq) for pq in [(1, 1), (1, 2), (2, 1), (2, 2)])
    M = {(0, 0): a, (0, 1): b, (1, 0): c, (1, 1): d}
    assert rdet(M) == a * d - b * c
    assert rdet(M) != d * a - c * b


def test_rdet_identity():
    M = {(p, p): T.scalar(1) for p in range(4)}
    assert rdet(M) == T.scalar(1)


@pytest.mark.parametrize("seed", range(5))
def test_rdet_matches_commutative_determinant(seed):
    rng = random.Random(seed)
    k = 4
    vals = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(k)] for _ in range(k)]
    M = {(p, q): T.scalar(vals[p][q]) for p in range(k) for q in range(k) if vals[p][q]}
    expected = sympy.Matrix(vals).det()
    got = rdet(M, idx=list(range(k))).get((0, ()), 0)
    assert sympy.Rational(got.numerator, got.denominator) == expected


def test_omega_matrix_entries():
    M = build_omega_matrix(SignData(1, 1, "+"))
    assert M == {(0, 0): T.scalar(1, 1) + T.letter(0, 0)}
    assert build_omega_matrix(SignData(2, 2, "-"))[1, -1] == T.scalar(1)
    assert build_omega_matrix(SignData(2, 3, "+"))[0, -2] == T.scalar(-1)  # phi = +
    assert build_omega_matrix(SignData(2, 3, "-"))[0, -2] == T.scalar(1)  # phi = -
    assert build_omega_matrix(SignData(2, 3, "-"))[-2, -2] == T.scalar(1, 1) + T.letter(-2, -2) + T.scalar(
        rho(-2, 2, -1))
    assert (-2, 2) in build_omega_matrix(SignData(2, 3, "-"))
    assert (2, -2) not in build_omega_matrix(SignData(2, 3, "-"))
    bar = build_omega_matrix(SignData(1, 3, "+"), barred=True)
    assert bar[0, 0] == T.letter(0, 0)
    with pytest.raises(ValueError):
        build_omega_matrix(SignData(2, 2, "-"), barred=True)


def test_omega_l1():
    for eps in "+":
        sd = SignData(1, 1, eps)
        om = omega_coeffs(sd, 3)
        e00 = T.letter(0, 0)
        assert om[0] == T.scalar(1)
        assert om[1] == e00
        assert om[2] == e00 * Fraction(-sd.phi, 2)
        assert om[3] == e00 * Fraction(1, 4)


def test_omega_l2():
    sd = SignData(2, 2, "-")
    om = omega_coeffs(sd, 4)
    expected = T.letter(-1, -1) + T.letter(1, 1) + T.scalar(rho(-1, 2, -1) + rho(1, 2, -1))
    assert om[0] == T.scalar(1)
    assert om[1] == expected
    assert not om[3] and not om[4]


def test_s_apply_unit_and_multiplicativity():
    pyr = Pyramid(2, 3, "-")
    G = graded_presentation(pyr)
    rows = index_set(pyr.n)
    for i, j in product(rows, repeat=2):
        assert s_apply(i, j, T.scalar(1), pyr) == ({0: G.one()} if i == j else {})
    S = _smap(pyr)
    rng = random.Random(3)
    cols = index_set(pyr.l)
    for _ in range(10):
        w1 = tuple((rng.choice(cols), rng.choice(cols)) for _ in range(2))
        w2 = tuple((rng.choice(cols), rng.choice(cols)) for _ in range(2))
        for i, j in product(rows, repeat=2):
            rhs = G.scalar(0)
            for k in rows:
                rhs = rhs + S(w1)[i, k] * S(w2)[k, j]
            assert S(w1 + w2)[i, j] == rhs


def test_single_letter_lookup():
    pyr = Pyramid(3, 2, "-")
    G = graded_presentation(pyr)
    # s_{0,0}(e_{1,-1}) = f_{a,b} with a = box(row 0, col 1), b = box(row 0, col -1)
    got = s_apply(0, 0, T.letter(1, -1), pyr)[0]
    assert got == G.embed(f_gen(pyr, pyr.at(0, 1), pyr.at(0, -1)))


def test_degree_one_generators():
    pyr = Pyramid(2, 2, "-")
    for i, j in product(index_set(2), repeat=2):
        x = walg_generator(i, j, 1, pyr)
        assert x.degree() <= 1


def test_l1_generator():
    pyr = Pyramid(1, 1, "+")
    assert not walg_generator(0, 0, 1, pyr)  # f_{0,0} = 0 in so_1
    assert is_in_walg(graded_presentation(pyr).scalar(5), pyr)


def test_membership_detects_non_members():
    pyr = Pyramid(2, 2, "-")
    G = graded_presentation(pyr)
    positive = [i for i in range(G.dim) if G.deg[i] == 2]
    assert positive
    assert all(walg_witness(G.gen(i), pyr) is not None for i in positive)
    assert walg_witness(G.gen(G.m_gens[0]), pyr)[0] == "not in U(p)"


def test_kappa_leading_terms():
    pyr = Pyramid(2, 1, "-")
    G = graded_presentation(pyr)
    K = kappa_S(pyr, 3)
    for i, j in product(index_set(2), repeat=2):
        assert K[i, j][0] == G.scalar(1 if i == j else 0)
        f = G.embed(f_gen(pyr, pyr.at(i, 0), pyr.at(j, 0)))
        assert K[i, j][1] == f
        assert K[i, j][2] == f * Fraction(-pyr.phi, 2)


def test_walg_checks(walg_pyr):
    R = walg_pyr.l + 2
    for check in (check_membership, check_gens_identity, check_kernel, check_symmetry_relation):
        recs = check(walg_pyr, R)
        assert recs and not _failures(recs), _failures(recs)[:3]


def test_second_labelling_passes():
    pyr = Pyramid(2, 3, "+", order="row")
    for check in (check_membership, check_gens_identity, check_kernel, check_symmetry_relation):
        assert not _failures(check(pyr))


@pytest.mark.parametrize("eps", ["+", "-"])
def test_quadratic_relation_n2_l2(eps):
    recs = check_quadratic_relation(Pyramid(2, 2, eps), order=2)
    assert len(recs) == 16 * 25
    assert not _failures(recs)


def test_quadratic_relation_named_tuple():
    recs = check_quadratic_relation(Pyramid(2, 2, "-"), order=2, tuples=[(1, 1, -1, -1)])
    assert recs and not _failures(recs)


def test_failure_record_has_witness():
    pyr = Pyramid(2, 2, "-")
    G = graded_presentation(pyr)
    rec = _record("demo", pyr, 1, 1, 1, G.gen(0) * 2 + G.scalar(1))
    assert rec["status"] == "fail" and rec["witness"] == "1"
