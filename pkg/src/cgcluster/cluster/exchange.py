"""Extended exchange matrices and matrix mutation."""
from __future__ import annotations

from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]


class MutationError(ValueError):
    pass


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in r) for r in rows)


def principal_part(b: Matrix) -> Matrix:
    n = len(b)
    return tuple(row[:n] for row in b)


def is_skew_principal(b: Matrix) -> bool:
    n = len(b)
    return all(b[i][j] == -b[j][i] for i in range(n) for j in range(n))


def mutate_matrix(b: Sequence[Sequence[int]], k: int) -> Matrix:
    """Matrix mutation in mutable direction ``k`` (0-based row index).

    ``b'_ij = -b_ij`` if ``i == k`` or ``j == k``, otherwise
    ``b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2``.
    """
    n = len(b)
    if not 0 <= k < n:
        raise MutationError(f"direction {k} is not a mutable vertex (have {n})")
    bk = b[k]
    out = []
    for i, row in enumerate(b):
        if i == k:
            out.append(tuple(-x for x in row))
            continue
        bik = row[k]
        if bik == 0:
            r = list(row)
        else:
            r = [x + (abs(bik) * bkj + bik * abs(bkj)) // 2 for x, bkj in zip(row, bk)]
        r[k] = -row[k]
        out.append(tuple(r))
    return tuple(out)
