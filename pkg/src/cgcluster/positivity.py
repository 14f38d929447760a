"""Total positivity: exhaustive minor tests, the minor families F1, F2, F1^{w0},
the positive locus of the initial CG extended cluster, and the separating
curve X(t) with X(0) = X0."""
from __future__ import annotations

import itertools
import json
import random
from fractions import Fraction
from typing import Sequence

from .cg import CGParams, initial_family, label_name, psi
from .exact import entry, rational_det, rational_inverse

RationalMatrix = list  # list[list[Fraction]]
Minor = tuple  # (rows, cols), 1-based tuples


def as_rational_matrix(rows: Sequence[Sequence]) -> RationalMatrix:
    m = [[Fraction(x) for x in r] for r in rows]
    if any(len(r) != len(m) for r in m):
        raise ValueError("matrix must be square")
    return m


def load_matrix(text: str) -> RationalMatrix:
    """Matrix JSON: array of arrays of rational strings such as "3/4"."""
    return as_rational_matrix(json.loads(text))


def dump_matrix(m: RationalMatrix) -> str:
    return json.dumps([[str(x) for x in r] for r in m])


def minor(m: RationalMatrix, rows: Sequence[int], cols: Sequence[int]) -> Fraction:
    return rational_det([[m[r - 1][c - 1] for c in cols] for r in rows])


def all_minors(m: RationalMatrix):
    n = len(m)
    for k in range(1, n + 1):
        for rows in itertools.combinations(range(1, n + 1), k):
            for cols in itertools.combinations(range(1, n + 1), k):
                yield (rows, cols), minor(m, rows, cols)


def all_minors_positive(m: RationalMatrix) -> bool:
    return all(v > 0 for _, v in all_minors(m))


def totally_nonnegative(m: RationalMatrix) -> bool:
    return all(v >= 0 for _, v in all_minors(m))


# ---------------------------------------------------------------------------
# minor families
# ---------------------------------------------------------------------------
def _rng(a: int, b: int) -> tuple:
    return tuple(range(a, b + 1))


def family_F1(n: int) -> list[Minor]:
    """Rows [j, n+j-i], columns [i, n], for i in [n], j in [i-1]."""
    return [(_rng(j, n + j - i), _rng(i, n)) for i in range(1, n + 1) for j in range(1, i)]


def family_F1_w0(n: int) -> list[Minor]:
    """Rows [i-j+1, n-j+1], columns [1, n-i+1]: the F1 members of W0 X W0."""
    return [(_rng(i - j + 1, n - j + 1), _rng(1, n - i + 1)) for i in range(1, n + 1) for j in range(1, i)]


def family_F2(n: int, *, literal: bool = False) -> list[Minor]:
    """Rows [1, i], columns [1, n] minus [j+1, j+n-i].

    ``j`` runs over [0, i]; with ``literal=True`` over [1, i], which drops the
    trailing minors x_{1n}, ... and repeats det X, so the family is no longer
    a test family.  Duplicates are removed.
    """
    out: list[Minor] = []
    for i in range(1, n + 1):
        for j in range(1 if literal else 0, i + 1):
            gone = set(_rng(j + 1, j + n - i))
            idx = (_rng(1, i), tuple(c for c in range(1, n + 1) if c not in gone))
            if idx not in out:
                out.append(idx)
    return out


def test_family(n: int, *, literal: bool = False) -> list[Minor]:
    return family_F1_w0(n) + family_F2(n, literal=literal)


def tp_via_test_family(m: RationalMatrix, *, literal: bool = False) -> bool:
    n = len(m)
    return all(minor(m, r, c) > 0 for r, c in test_family(n, literal=literal))


def initial_values(m: RationalMatrix, p: CGParams) -> dict[str, Fraction]:
    n = len(m)
    point = {entry(i, j): m[i - 1][j - 1] for i in range(1, n + 1) for j in range(1, n + 1)}
    out = {}
    for label, f in initial_family(p).items():
        out[label_name(label)] = Fraction(f.evaluate(point))
    return out


def tp_cg_member(m: RationalMatrix, p: CGParams | None = None, variant: str = "mat") -> bool:
    """Every function of the initial CG extended cluster is positive at ``m``.

    ``variant='sl'`` drops det X, which is identically 1 on SL_n.
    """
    n = len(m)
    p = p or CGParams.make(n, variant)
    vals = initial_values(m, p)
    if variant == "sl":
        vals.pop(f"theta_{n}", None)
    return all(v > 0 for v in vals.values())


# ---------------------------------------------------------------------------
# the separating curve
# ---------------------------------------------------------------------------
def _mul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def _transpose(a):
    return [list(r) for r in zip(*a)]


def _identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def shift_matrix(n: int) -> RationalMatrix:
    """S = (delta_{i, j-1})."""
    return [[Fraction(int(i == j - 1)) for j in range(n)] for i in range(n)]


def build_E(n: int, t) -> RationalMatrix:
    t = Fraction(t)
    s = shift_matrix(n)
    return [[Fraction(int(i == j)) + t * s[i][j] for j in range(n)] for i in range(n)]


def build_X0(n: int) -> RationalMatrix:
    e = build_E(n, -1)
    return rational_inverse(_mul(_transpose(e), e))


def build_Xt(n: int, t) -> RationalMatrix:
    e = build_E(n, t)
    g = _mul(e, _transpose(e))
    acc = build_X0(n)
    for _ in range(n - 1):
        acc = _mul(acc, g)
    return acc


def psi2_closed_form(m: RationalMatrix) -> Fraction:
    """x_{n-2,n} x_{n,1} - x_{n-1,n} x_{n-1,1}."""
    n = len(m)
    x = lambda i, j: m[i - 1][j - 1]  # noqa: E731
    return x(n - 2, n) * x(n, 1) - x(n - 1, n) * x(n - 1, 1)


def psi2_value(m: RationalMatrix) -> Fraction:
    n = len(m)
    point = {entry(i, j): m[i - 1][j - 1] for i in range(1, n + 1) for j in range(1, n + 1)}
    return Fraction(psi(2, CGParams.make(n)).evaluate(point))


class NoWitness(RuntimeError):
    pass


def separation_witness(n: int, *, start=Fraction(1), floor=Fraction(1, 2 ** 20)) -> dict:
    """Halve t from ``start`` until X(t) is totally positive but outside the CG locus."""
    t = Fraction(start)
    tried = []
    while t >= floor:
        x = build_Xt(n, t)
        tp = all_minors_positive(x)
        cg = tp_cg_member(x)
        tried.append(str(t))
        if tp and not cg:
            return {"n": n, "t": t, "matrix": x, "psi2": psi2_value(x), "tried": tried}
        t /= 2
    raise NoWitness(f"no separating t >= {floor} for n={n}")


# ---------------------------------------------------------------------------
# random samples
# ---------------------------------------------------------------------------
def _elementary(n: int, i: int, t: Fraction, lower: bool) -> RationalMatrix:
    m = _identity(n)
    if lower:
        m[i + 1][i] = t
    else:
        m[i][i + 1] = t
    return m


def random_tp_matrix(n: int, rng: random.Random) -> RationalMatrix:
    """Product of positive elementary bidiagonals along a reduced word of w0, twice, and a positive diagonal."""
    word = [i for k in range(n - 1, 0, -1) for i in range(k)]
    acc = [[Fraction(rng.randint(1, 5), rng.randint(1, 3)) if i == j else Fraction(0) for j in range(n)]
           for i in range(n)]
    for lower in (True, False):
        for i in word:
            t = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            e = _elementary(n, i, t, lower)
            acc = _mul(e, acc) if lower else _mul(acc, e)
    return acc


def random_perturbation(m: RationalMatrix, rng: random.Random, scale=Fraction(1, 2)) -> RationalMatrix:
    """Perturb one entry so that TP may or may not survive."""
    out = [list(r) for r in m]
    n = len(m)
    i, j = rng.randrange(n), rng.randrange(n)
    out[i][j] = out[i][j] * (1 + Fraction(rng.randint(-20, 20), 10) * scale)
    return out
