import itertools
import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import cgcluster.positivity as pos
from cgcluster.cg import CGParams, w0_conjugate
from cgcluster.cg import generic_matrix, initial_family
from cgcluster.exact import PolyMatrix, poly_det

F = Fraction


def brute_minors(m):
    # oracle: permutation-expansion determinants on every square submatrix
    n = len(m)
    for k in range(1, n + 1):
        for rows in itertools.combinations(range(n), k):
            for cols in itertools.combinations(range(n), k):
                tot = F(0)
                for perm in itertools.permutations(range(k)):
                    sgn = 1
                    for a, b in itertools.combinations(range(k), 2):
                        if perm[a] > perm[b]:
                            sgn = -sgn
                    term = F(sgn)
                    for r, c in zip(rows, perm):
                        term *= m[r][cols[c]]
                    tot += term
                yield tot


def test_all_minors_small():
    assert pos.all_minors_positive([[F(1)]])
    assert not pos.all_minors_positive(pos.as_rational_matrix([[1, 0], [0, 1]]))
    assert pos.totally_nonnegative(pos.as_rational_matrix([[1, 0], [0, 1]]))
    assert sum(1 for _ in pos.all_minors(pos.build_X0(4))) == sum(
        len(list(itertools.combinations(range(4), k))) ** 2 for k in range(1, 5))


def test_X_eighth_is_tp():
    x = pos.build_Xt(3, F(1, 8))
    assert all(v > 0 for v in brute_minors(x))
    assert pos.all_minors_positive(x)
    assert not pos.tp_cg_member(x)
    assert pos.psi2_value(x) < 0


def test_X0_n3():
    assert pos.build_X0(3) == pos.as_rational_matrix([[3, 2, 1], [2, 2, 1], [1, 1, 1]])
    assert pos.build_Xt(3, 0) == pos.build_X0(3)
    for n in (3, 4, 5):
        assert pos.psi2_value(pos.build_X0(n)) == -1


def test_X0_not_tp():
    # TNN but with a vanishing minor, so the test family is not all positive
    x0 = pos.build_X0(3)
    assert pos.totally_nonnegative(x0)
    assert not pos.all_minors_positive(x0)
    assert pos.tp_via_test_family(x0) is False


@pytest.mark.parametrize("n", range(2, 6))
def test_E_tnn(n):
    for t in (F(1, 3), F(1), F(5, 2)):
        assert pos.totally_nonnegative(pos.build_E(n, t))
        assert pos.totally_nonnegative(pos.rational_inverse(pos.build_E(n, -t)))


def test_shift_matrix():
    s = pos.shift_matrix(3)
    assert s[0][1] == 1 and s[1][2] == 1 and sum(sum(r) for r in s) == 2


def test_family_shapes():
    # i=2, j=1: rows [1, 2], columns [2, 3]
    assert ((1, 2), (2, 3)) in pos.family_F1(3)
    for n in range(2, 8):
        assert len(pos.family_F1(n)) == n * (n - 1) // 2
        assert len(pos.test_family(n)) == n * n


@pytest.mark.parametrize("n", [3, 4])
def test_F1_w0_is_conjugated_F1(n):
    X = generic_matrix(n)
    for (r1, c1), (r0, c0) in zip(pos.family_F1(n), pos.family_F1_w0(n)):
        f1 = poly_det(PolyMatrix([[X[r - 1, c - 1] for c in c1] for r in r1]))
        f0 = poly_det(PolyMatrix([[X[r - 1, c - 1] for c in c0] for r in r0]))
        assert w0_conjugate(f1, n) == f0


def test_F2_literal_range_is_not_a_test_family():
    # [[1, -1], [1, 1]] passes the literal family but has a negative entry
    m = pos.as_rational_matrix([[1, -1], [1, 1]])
    assert pos.tp_via_test_family(m, literal=True)
    assert not pos.tp_via_test_family(m)
    assert not pos.all_minors_positive(m)
    assert len(pos.family_F2(3, literal=True)) < len(pos.family_F2(3))


@pytest.mark.parametrize("n", [3, 4])
def test_test_family_agrees_with_all_minors(n):
    rng = random.Random(100 + n)
    for _ in range(50):
        m = pos.random_tp_matrix(n, rng)
        assert pos.all_minors_positive(m)
        assert pos.tp_via_test_family(m)
        q = pos.random_perturbation(m, rng)
        assert pos.tp_via_test_family(q) == pos.all_minors_positive(q)
    assert not pos.tp_via_test_family(pos.as_rational_matrix([[int(i == j) for j in range(n)] for i in range(n)]))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_psi2_closed_form(n):
    rng = random.Random(n)
    for _ in range(100):
        m = [[F(rng.randint(-20, 20), rng.randint(1, 7)) for _ in range(n)] for _ in range(n)]
        assert pos.psi2_value(m) == pos.psi2_closed_form(m)


def test_cg_member_basic():
    rng = random.Random(3)
    m = pos.random_tp_matrix(3, rng)
    m[2][2] = -m[2][2]
    assert not pos.tp_cg_member(m)
    vals = pos.initial_values(pos.build_X0(3), CGParams.make(3))
    assert vals["psi_2"] == -1 and len(vals) == 9


def cg_positive_sample(rng):
    """A 3x3 matrix with every initial CG function positive, built in the chart
    x33, x23, x31, theta2, phi2, psi2, phi3 (all positive) plus x13, x22."""
    a, b, c, t2, f2, p2, f3 = (F(rng.randint(1, 9), rng.randint(1, 4)) for _ in range(7))
    x13 = (a * p2 + b * b * c) / (a * c) + F(rng.randint(1, 9), rng.randint(1, 4))
    k = a * c * x13 - a * p2 - b * b * c
    if f3 * k <= b * c * f2 * t2:  # phi4 > 0
        f3 = b * c * f2 * t2 / k + 1
    x22 = (a * f2 * k + b * f3 * t2 + f2 * t2 * t2) / (a * f2 * t2) + F(rng.randint(1, 9), rng.randint(1, 4))
    x11 = (-b * f3 + a * c * x13 ** 2 + a * f2 * x22 - a * p2 * x13 - f2 * t2) / (a * b * b)
    x32 = (x22 * a - t2) / b
    x12 = (f2 + x13 * x22) / b
    x21 = (x13 * c - p2) / b
    return [[x11, x12, x13], [x21, x22, b], [c, x32, a]]


def test_cg_member_implies_tp():
    m = pos.as_rational_matrix([[108, 201, 10], [9, 20, 1], [1, 19, 1]])
    assert pos.tp_cg_member(m) and pos.all_minors_positive(m)
    rng = random.Random(11)
    for _ in range(60):
        m = cg_positive_sample(rng)
        assert pos.tp_cg_member(m)
        assert pos.all_minors_positive(m)
        assert all(v > 0 for v in brute_minors(m))


def test_sl_variant_drops_det():
    m = pos.random_tp_matrix(3, random.Random(5))
    assert pos.tp_cg_member(m, variant="sl") in (True, False)
    assert len(initial_family(CGParams.make(3, "sl"))) == 8


@pytest.mark.parametrize("n", [3, 4])
def test_separation_witness(n):
    w = pos.separation_witness(n)
    assert w["t"] > 0
    assert pos.all_minors_positive(w["matrix"]) and not pos.tp_cg_member(w["matrix"])
    assert w["psi2"] < 0


def test_no_witness_raises():
    with pytest.raises(pos.NoWitness):
        pos.separation_witness(3, start=F(1, 2 ** 25))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.lists(st.fractions(min_value=-100, max_value=100, max_denominator=9),
                         min_size=3, max_size=3), min_size=3, max_size=3))
def test_matrix_json_round_trip(rows):
    m = pos.as_rational_matrix(rows)
    text = pos.dump_matrix(m)
    assert all(isinstance(v, str) for r in json.loads(text) for v in r)
    assert pos.load_matrix(text) == m


def test_non_square_rejected():
    with pytest.raises(ValueError):
        pos.as_rational_matrix([[1, 2]])
