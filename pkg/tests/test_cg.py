import itertools

import pytest

from cgcluster.cg import (
    CGParams,
    build_initial_seed,
    build_quiver_cg,
    build_U,
    generic_matrix,
    initial_family,
    phi,
    psi,
    rho,
    stable_vertices,
    theta,
    w0_conjugate,
)
from cgcluster.cluster import mutate_seed
from cgcluster.exact import ZERO, PolyMatrix, X, entry, param, poly_det, rank_over_Z
from cgcluster.exact.poly import Polynomial
from cgcluster.gap import S2, stable_functions


def y_matrix(n):
    return PolyMatrix([[Polynomial.var(param(f"y{i}{j}")) for j in range(1, n + 1)] for i in range(1, n + 1)])


def test_u_shape_and_blocks_n3():
    p = CGParams.make(3)
    U = build_U(generic_matrix(3), y_matrix(3), p)
    assert (U.rows, U.cols) == (4, 12)
    y = lambda i, j: Polynomial.var(param(f"y{i}{j}"))  # noqa: E731
    assert [[U[r, c] for c in (7, 8)] for r in (2, 3)] == [[y(1, 3), X(2, 1)], [y(2, 3), X(3, 1)]]


def test_u_n2_single_block_row():
    p = CGParams.make(2)
    U = build_U(generic_matrix(2), y_matrix(2), p)
    y = lambda i, j: Polynomial.var(param(f"y{i}{j}"))  # noqa: E731
    assert [U[0, c] for c in range(6)] == [ZERO, y(1, 1), y(1, 2), X(2, 1), X(2, 2), ZERO]


@pytest.mark.parametrize("n", range(3, 9))
def test_u_block_structure(n):
    p = CGParams.make(n)
    U = build_U(generic_matrix(n), y_matrix(n), p)
    assert (U.rows, U.cols) == (p.k * (n - 1), (p.k + 1) * (n + 1))
    for r in range(p.k):
        for a in range(n - 1):
            row = r * (n - 1) + a
            for c in range(U.cols):
                blk, off = divmod(c, n + 1)
                v = U[row, c]
                if blk == r and off >= 1:
                    assert v == Polynomial.var(param(f"y{a + 1}{off}"))
                elif blk == r + 1 and off < n:
                    assert v == X(a + 2, off + 1)
                else:
                    assert v == ZERO


def test_named_functions_n3():
    p = CGParams.make(3)
    assert theta(1, p) == X(3, 3)
    assert psi(2, p) == X(1, 3) * X(3, 1) - X(2, 1) * X(2, 3)
    assert theta(3, p) == poly_det(generic_matrix(3))
    z = ZERO
    s2 = poly_det(PolyMatrix([[X(2, 1), X(2, 2), X(2, 3), z], [X(3, 1), X(3, 2), X(3, 3), z],
                              [z, X(1, 1), X(1, 2), X(1, 3)], [z, X(2, 1), X(2, 2), X(2, 3)]]))
    assert phi(4, p) == s2 == stable_functions()[S2]


@pytest.mark.parametrize("n", range(3, 6))
def test_psi2_closed_form(n):
    p = CGParams.make(n)
    assert psi(2, p) == X(n - 2, n) * X(n, 1) - X(n - 1, n) * X(n - 1, 1)


@pytest.mark.parametrize("n", range(3, 9))
def test_rho_bijective_and_stable(n):
    p = CGParams.make(n)
    r = rho(p)
    assert sorted(r.values()) == sorted(itertools.product(range(1, n + 1), repeat=2))
    sv = stable_vertices(p)
    assert sv[("theta", n)] == (1, 1)
    if n % 2:
        assert sv[("phi", p.N)] == (2, 1) and sv[("psi", p.M)] == (1, n)
    else:
        assert sv[("phi", p.N)] == (1, n) and sv[("psi", p.M)] == (2, 1)


def test_rho_n3_table():
    r = rho(CGParams.make(3))
    assert r[("theta", 3)] == (1, 1) and r[("phi", 4)] == (2, 1) and r[("psi", 2)] == (1, 3)
    assert r[("theta", 1)] == (3, 3) and r[("theta", 2)] == (2, 2)


def test_quiver_counts():
    assert build_quiver_cg(3).arrow_count() == 18
    assert build_quiver_cg(3, "hat").arrow_count() == 20
    assert len(build_quiver_cg(5).vertices) == 25
    assert len(build_quiver_cg(5, "prime").vertices) == 24
    q = build_quiver_cg(3)
    assert q.arrows[((1, 3), (1, 2))] == 0  # no horizontal arrow into (1, n-1)
    assert q.arrows[((2, 1), (1, 1))] == 0  # no vertical arrow into (1, 1)
    with pytest.raises(ValueError):
        build_quiver_cg(2)


def test_initial_seed_shapes():
    s = build_initial_seed(3)
    assert len(s.variables) == 9 and len(s.frozen) == 3 and len(s.btilde) == 6
    sl = build_initial_seed(3, "sl")
    assert len(sl.variables) == 8 and len(sl.frozen) == 2
    for n in range(3, 9):
        assert len(build_initial_seed(n, functions=False).variables) == n * n


@pytest.mark.parametrize("n", range(3, 9))
def test_full_rank(n):
    s = build_initial_seed(n, functions=False)
    assert rank_over_Z(s.btilde) == s.n_mutable


@pytest.mark.parametrize("n", [3, 4])
def test_one_step_regular(n):
    s = build_initial_seed(n)
    for v in s.mutable:
        assert mutate_seed(s, v).regular


def test_two_step_regular_n3():
    s = build_initial_seed(3)
    for v in s.mutable:
        t = mutate_seed(s, v)
        for u in t.mutable:
            if u != v:
                assert mutate_seed(t, u).regular


def test_w0_conjugation():
    f = X(1, 2) * X(3, 3)
    assert w0_conjugate(f, 3) == X(3, 2) * X(1, 1)
    assert w0_conjugate(w0_conjugate(f, 3), 3) == f
    fam = initial_family(CGParams.make(3))
    assert w0_conjugate(fam[("theta", 3)], 3) == fam[("theta", 3)]
    assert entry(1, 1) in fam[("theta", 3)].variables()


def test_params_validation():
    with pytest.raises(ValueError):
        CGParams.make(1)
    with pytest.raises(ValueError):
        CGParams.make(3, "gl")
    p = CGParams.make(4)
    assert (p.k, p.N, p.M) == (2, 6, 6)
    p = CGParams.make(5)
    assert (p.k, p.N, p.M) == (3, 12, 8)
