"""Exact determinants and ranks."""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .poly import ONE, ZERO, Polynomial


class DimensionError(ValueError):
    pass


class PolyMatrix:
    """Dense matrix of polynomials."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        rows = [[Polynomial._lift(e) for e in row] for row in entries]
        if not rows or not rows[0]:
            raise DimensionError("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged rows")
        self.rows, self.cols, self.entries = len(rows), width, rows

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "PolyMatrix":
        return cls([[ZERO] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        """0-based row/column index lists."""
        return PolyMatrix([[self.entries[i][j] for j in cols] for i in rows])

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise DimensionError("inner dimensions differ")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = ZERO
                for t in range(self.cols):
                    a, b = self.entries[i][t], other.entries[t][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix([[fn(e) for e in row] for row in self.entries])

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.entries == other.entries


def _cofactor_det(m: list[list[Polynomial]]) -> Polynomial:
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = ZERO
    for j in range(n):
        a = m[0][j]
        if not a:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = a * _cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _bareiss_det(m: list[list[Polynomial]]) -> Polynomial:
    """Fraction-free elimination; every division is exact in the polynomial ring."""
    a = [row[:] for row in m]
    n = len(a)
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            # pick the sparsest nonzero pivot below
            cands = [i for i in range(k + 1, n) if a[i][k]]
            if not cands:
                return ZERO
            best = min(cands, key=lambda i: len(a[i][k]))
            a[k], a[best] = a[best], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                akj = a[k][j]
                v = piv * a[i][j]
                if aik and akj:
                    v = v - aik * akj
                a[i][j] = v.divexact(prev) if prev != ONE else v
            a[i][k] = ZERO
        prev = piv
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def poly_det(m, method: str = "auto") -> Polynomial:
    """Exact determinant of a square polynomial matrix.

    ``'expansion'`` is Laplace expansion along rows memoized on the set of
    used columns (fast for the sparse block matrices built here);
    ``'bareiss'`` is fraction-free elimination.  ``'auto'`` uses plain
    cofactors below size 4 and the memoized expansion otherwise.
    """
    entries = m.entries if isinstance(m, PolyMatrix) else [[Polynomial._lift(e) for e in row] for row in m]
    n = len(entries)
    if n == 0 or any(len(r) != n for r in entries):
        raise DimensionError("determinant of a non-square matrix")
    if method == "bareiss":
        return _bareiss_det(entries)
    if method == "expansion" or n >= 4:
        return _expansion_det(entries)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    return _cofactor_det(entries)


def _expansion_det(entries) -> Polynomial:
    n = len(entries)
    nz = [[c for c in range(n) if entries[r][c]] for r in range(n)]
    memo: dict[int, Polynomial] = {}

    def rec(r: int, used: int) -> Polynomial:
        if r == n:
            return ONE
        hit = memo.get(used)
        if hit is not None:
            return hit
        acc = ZERO
        for c in nz[r]:
            bit = 1 << c
            if used & bit:
                continue
            sub = rec(r + 1, used | bit)
            if not sub:
                continue
            # sign of column c among the columns still free
            pos = c - bin(used & (bit - 1)).count("1")
            t = entries[r][c] * sub
            acc = acc - t if pos % 2 else acc + t
        memo[used] = acc
        return acc

    return rec(0, 0)


def permutation_det(m) -> Polynomial:
    """Leibniz expansion; an independent oracle for small sizes."""
    entries = m.entries if isinstance(m, PolyMatrix) else [[Polynomial._lift(e) for e in row] for row in m]
    n = len(entries)
    total = ZERO
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = ONE
        for i, p in enumerate(perm):
            term = term * entries[i][p]
            if not term:
                break
        total = total - term if inv % 2 else total + term
    return total


def rank_over_Z(m: Sequence[Sequence[int]]) -> int:
    """Exact rank of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [[int(x) for x in row] for row in m]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    rank = 0
    prev = 1
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if a[r][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][c]
        for r in range(rank + 1, rows):
            arc = a[r][c]
            for j in range(c + 1, cols):
                a[r][j] = (p * a[r][j] - arc * a[rank][j]) // prev
            a[r][c] = 0
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


def rational_det(m: Sequence[Sequence]) -> Fraction:
    """Determinant of a rational matrix by Gaussian elimination over Q."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    if any(len(r) != n for r in a):
        raise DimensionError("determinant of a non-square matrix")
    det = Fraction(1)
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k]), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        p = a[k][k]
        det *= p
        for r in range(k + 1, n):
            f = a[r][k] / p
            if f:
                for j in range(k + 1, n):
                    a[r][j] -= f * a[k][j]
    return det


def rational_inverse(m: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[k], a[piv] = a[piv], a[k]
        p = a[k][k]
        a[k] = [x / p for x in a[k]]
        for r in range(n):
            if r != k and a[r][k]:
                f = a[r][k]
                a[r] = [x - f * y for x, y in zip(a[r], a[k])]
    return [row[n:] for row in a]


def solve_rational(rows: Sequence[Sequence], rhs: Sequence) -> tuple[list[Fraction], int]:
    """Solve ``A x = b`` over Q; returns (particular solution, nullity).

    Raises ValueError when the system is inconsistent.
    """
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    nvar = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(nvar):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(a)):
        if a[i][nvar]:
            raise ValueError("inconsistent linear system")
    x = [Fraction(0)] * nvar
    for i, c in enumerate(pivots):
        x[c] = a[i][nvar]
    return x, nvar - len(pivots)
