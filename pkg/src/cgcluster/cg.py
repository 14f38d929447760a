"""Cremmer-Gervais initial data: U(X, Y), the minors theta/phi/psi, the vertex
correspondence rho, the quivers Q_CG(n), Q'_CG(n), Q^_CG(n), and initial seeds."""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .cluster import Quiver, Seed
from .exact import ZERO, PolyMatrix, Polynomial, X, atom, entry, poly_det

log = logging.getLogger(__name__)


class ConstructionError(RuntimeError):
    """The construction contradicts a structural claim (signals a bug)."""


@dataclass(frozen=True)
class CGParams:
    n: int
    k: int
    N: int
    M: int
    variant: str = "mat"

    @classmethod
    def make(cls, n: int, variant: str = "mat") -> "CGParams":
        if n < 2:
            raise ValueError("n must be at least 2")
        variant = variant.lower()
        if variant not in ("mat", "sl"):
            raise ValueError("variant must be 'mat' or 'sl'")
        k = (n + 1) // 2
        N = k * (n - 1)
        M = N if n % 2 == 0 else N - n + 1
        return cls(n, k, N, M, variant)

    def with_variant(self, variant: str) -> "CGParams":
        return CGParams.make(self.n, variant)

    def __post_init__(self):
        n = self.n
        if self.k != (n + 1) // 2 or self.N != self.k * (n - 1):
            raise ValueError("inconsistent k/N")
        if self.M != (self.N if n % 2 == 0 else self.N - n + 1):
            raise ValueError("inconsistent M")


def generic_matrix(n: int) -> PolyMatrix:
    return PolyMatrix([[X(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)])


def _u_layout(n: int, k: int):
    """Source of every U entry: ('X', i, j), ('Y', i, j) (1-based) or None."""
    rows, cols = k * (n - 1), (k + 1) * (n + 1)
    src = [[None] * cols for _ in range(rows)]
    for r in range(k):
        for a in range(n - 1):
            row = r * (n - 1) + a
            # calY = [0  Y_[1,n-1]] in block column r
            for c in range(1, n + 1):
                src[row][r * (n + 1) + c] = ("Y", a + 1, c)
            # calX = [X_[2,n]  0] in block column r + 1
            for c in range(n):
                src[row][(r + 1) * (n + 1) + c] = ("X", a + 2, c + 1)
    return src


def build_U(Xm: PolyMatrix, Ym: PolyMatrix, p: CGParams) -> PolyMatrix:
    """The k(n-1) x (k+1)(n+1) block staircase with calY, calX blocks."""
    n = p.n
    for m in (Xm, Ym):
        if m.rows != n or m.cols != n:
            raise ValueError(f"expected {n}x{n} matrices")
    src = _u_layout(n, p.k)
    out = []
    for row in src:
        r = []
        for s in row:
            if s is None:
                r.append(ZERO)
            else:
                m = Xm if s[0] == "X" else Ym
                r.append(m[s[1] - 1, s[2] - 1])
        out.append(r)
    return PolyMatrix(out)


# index windows (1-based, inclusive) -------------------------------------
def _theta_window(i, p):
    n = p.n
    return (n - i + 1, n), (n - i + 1, n)


def _phi_window(q, p):
    kn = p.k * (p.n + 1)
    return (p.N - q + 1, p.N), (kn - q + 1, kn)


def _psi_window(q, p):
    kn = p.k * (p.n + 1)
    return (p.N - q + 1, p.N), (kn - q + 2, kn + 1)


def _check(kind, idx, p):
    if kind == "theta":
        top = p.n if p.variant == "mat" else p.n - 1
        ok = 1 <= idx <= top
    elif kind == "phi":
        ok = 1 <= idx <= p.N
    else:
        ok = 1 <= idx <= p.M
    if not ok:
        raise IndexError(f"{kind}_{idx} out of range for n={p.n} ({p.variant})")


def _minor(m: PolyMatrix, rows, cols) -> Polynomial:
    r = list(range(rows[0] - 1, rows[1]))
    c = list(range(cols[0] - 1, cols[1]))
    return poly_det(m.submatrix(r, c))


@lru_cache(maxsize=None)
def _function(kind: str, idx: int, n: int) -> Polynomial:
    p = CGParams.make(n, "mat")
    Xm = generic_matrix(n)
    if kind == "theta":
        return _minor(Xm, *_theta_window(idx, p))
    U = _cached_U(n)
    win = _phi_window(idx, p) if kind == "phi" else _psi_window(idx, p)
    return _minor(U, *win)


@lru_cache(maxsize=None)
def _cached_U(n: int) -> PolyMatrix:
    Xm = generic_matrix(n)
    return build_U(Xm, Xm, CGParams.make(n))


def theta(i: int, p: CGParams) -> Polynomial:
    """Trailing principal minor of X of size i (i = n only in the Mat variant)."""
    _check("theta", i, p)
    return _function("theta", i, p.n)


def phi(q: int, p: CGParams) -> Polynomial:
    _check("phi", q, p)
    return _function("phi", q, p.n)


def psi(q: int, p: CGParams) -> Polynomial:
    _check("psi", q, p)
    return _function("psi", q, p.n)


def function_labels(p: CGParams) -> list[tuple[str, int]]:
    top = p.n if p.variant == "mat" else p.n - 1
    return ([("theta", i) for i in range(1, top + 1)] + [("phi", q) for q in range(1, p.N + 1)]
            + [("psi", q) for q in range(1, p.M + 1)])


def initial_function(label: tuple[str, int], p: CGParams) -> Polynomial:
    kind, idx = label
    return {"theta": theta, "phi": phi, "psi": psi}[kind](idx, p)


def initial_family(p: CGParams) -> dict:
    return {lab: initial_function(lab, p) for lab in function_labels(p)}


def label_name(label) -> str:
    return f"{label[0]}_{label[1]}"


def rho(p: CGParams) -> dict:
    """label -> grid vertex (i, j) of the upper-left entry of the defining submatrix."""
    src = _u_layout(p.n, p.k)
    out = {}
    for lab in function_labels(p):
        kind, idx = lab
        if kind == "theta":
            (r0, _), (c0, _) = _theta_window(idx, p)
            ij = (r0, c0)
        else:
            (r0, _), (c0, _) = (_phi_window if kind == "phi" else _psi_window)(idx, p)
            s = src[r0 - 1][c0 - 1]
            if s is None:
                raise ConstructionError(f"upper-left entry of {label_name(lab)} is a structural zero")
            ij = (s[1], s[2])
        out[lab] = ij
    target = {(i, j) for i in range(1, p.n + 1) for j in range(1, p.n + 1)}
    if p.variant == "sl":
        target.discard((1, 1))
    if len(set(out.values())) != len(out) or set(out.values()) != target:
        raise ConstructionError("rho is not a bijection onto the grid")
    return out


# table-driven stable-vertex assignment: parity -> (phi_N vertex, psi_M vertex)
def stable_vertices(p: CGParams) -> dict:
    n = p.n
    place = {1: ((2, 1), (1, n)), 0: ((1, n), (2, 1))}[n % 2]
    out = {("phi", p.N): place[0], ("psi", p.M): place[1]}
    if p.variant == "mat":
        out[("theta", n)] = (1, 1)
    return out


def _grid_arrows(n: int) -> list[tuple]:
    arrows = []
    for i in range(1, n + 1):
        for j in range(1, n):
            if (i, j) != (1, n - 1):
                arrows.append(((i, j + 1), (i, j)))
    for i in range(1, n):
        for j in range(1, n + 1):
            if (i, j) != (1, 1):
                arrows.append(((i + 1, j), (i, j)))
    for i in range(1, n):
        for j in range(1, n):
            arrows.append(((i, j), (i + 1, j + 1)))
    for j in range(2, n):
        arrows.append(((n, j), (1, j)))
        arrows.append(((1, j), (n, j + 1)))
    for i in range(1, n - 1):
        arrows.append(((i, n), (i + 2, 1)))
        arrows.append(((i + 2, 1), (i + 1, n)))
    return arrows


def build_quiver_cg(p: CGParams | int, flavor: str = "plain") -> Quiver:
    """Q_CG(n) ('plain'), Q'_CG(n) with (1,1) deleted ('prime'), or Q^_CG(n) ('hat')."""
    if isinstance(p, int):
        p = CGParams.make(p, "sl" if flavor == "prime" else "mat")
    n = p.n
    if n < 3:
        raise ValueError("the CG quiver is defined for n >= 3")
    arrows = _grid_arrows(n)
    mult = Counter(arrows)
    if max(mult.values()) > 1:
        raise ConstructionError("arrow rules produced a multiple arrow")
    verts = tuple((i, j) for i in range(1, n + 1) for j in range(1, n + 1))
    frozen = set(stable_vertices(p.with_variant("mat")).values())
    q = Quiver.build(verts, frozen, arrows)
    if flavor == "plain":
        return q
    if flavor == "prime":
        return q.delete_vertex((1, 1))
    if flavor == "hat":
        return q.add_arrows([((1, 1), (n, 2)), ((n, 1), (1, 1))])
    raise ValueError(f"unknown flavor {flavor!r}")


def vertex_labels(p: CGParams) -> dict:
    """grid vertex -> function label (inverse of rho)."""
    return {ij: lab for lab, ij in rho(p).items()}


def build_initial_seed(p: CGParams | int, variant: str | None = None, *, functions: bool = True) -> Seed:
    """Initial extended cluster placed on the grid via rho.

    With ``functions=False`` the variables are formal atoms ``z[i][j]`` (no
    determinants are expanded), which is enough for combinatorial checks at
    large n.
    """
    if isinstance(p, int):
        p = CGParams.make(p, variant or "mat")
    elif variant is not None:
        p = p.with_variant(variant)
    flavor = "plain" if p.variant == "mat" else "prime"
    q = build_quiver_cg(p, flavor)
    labels = vertex_labels(p)
    stable = set(stable_vertices(p).values())
    if set(q.frozen) != stable:
        raise ConstructionError("quiver frozen set differs from the stable-variable vertices")
    if functions:
        variables = {v: initial_function(labels[v], p) for v in q.vertices}
    else:
        variables = {v: Polynomial.var(atom(*v)) for v in q.vertices}
    casimir = theta(p.n, p.with_variant("mat")) if (p.variant == "sl" and functions) else None
    return Seed.from_quiver(q, variables, params=p, casimir=casimir)


def w0_conjugate(f: Polynomial, n: int) -> Polynomial:
    """f^{w0}(X) = f(W0 X W0): x_ij -> x_{n+1-i, n+1-j}."""
    mapping = {entry(i, j): X(n + 1 - i, n + 1 - j) for i in range(1, n + 1) for j in range(1, n + 1)}
    return f.subs(mapping)
