"""Computational content of the SL_3 / Mat_3 gap between the cluster algebra
and the upper cluster algebra: the {x12, .} table in the chart
(x11, x12, x13, x21, x22, x23, s1, s2, s3), the decomposition of p, the
operators D1 and D2, weight vectors, and bounded absence of x12."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .cg import CGParams, build_initial_seed, phi, psi, theta
from .cluster import enumerate_cluster_variables, mutate_sequence
from .exact import ONE, ZERO, Polynomial, PolyMatrix, X, chart, entry, poly_det
from .exact.variables import VarId
from .poisson import bracket_of, cg_bracket

S1, S2, S3 = chart("s1"), chart("s2"), chart("s3")
CHART_ENTRIES = [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3)]
CHART_VARS: list[VarId] = [entry(*e) for e in CHART_ENTRIES] + [S1, S2, S3]


def _x(i, j) -> Polynomial:
    return X(i, j)


def _s(v: VarId) -> Polynomial:
    return Polynomial.var(v)


def stable_functions() -> dict[VarId, Polynomial]:
    """s1 = psi_2, s2 = phi_4, s3 = det X as polynomials in matrix entries."""
    p = CGParams.make(3)
    return {S1: psi(2, p), S2: phi(4, p), S3: theta(3, p)}


def to_matrix_entries(f: Polynomial) -> Polynomial:
    return f.subs(stable_functions())


def chart_brackets(s3_reading: str = "x12") -> dict[VarId, Polynomial]:
    """Expected {x12, v} for every chart coordinate v.

    The s3 entry is read as {x12, s3} = 0; ``s3_reading='x21'`` returns the
    same table (the relation {x21, s3} = 0 holds too, s3 being a Casimir).
    """
    if s3_reading not in ("x12", "x21"):
        raise ValueError("s3_reading must be 'x12' or 'x21'")
    x = _x
    two3 = Fraction(2, 3)
    return {
        entry(1, 1): (x(1, 1) * x(1, 2)).scale(-two3),
        entry(1, 2): ZERO,
        entry(1, 3): (x(1, 2) * x(1, 3)).scale(two3),
        entry(2, 1): (x(1, 2) * x(2, 1)).scale(two3),
        entry(2, 2): (x(1, 2) * x(2, 2)).scale(Fraction(4, 3)) + (x(1, 3) * x(2, 1)).scale(2)
        - (x(1, 1) * x(2, 3)).scale(2),
        entry(2, 3): (x(1, 3) * x(2, 2)).scale(2),
        S1: (x(1, 2) * _s(S1)).scale(two3),
        S2: (x(1, 2) * _s(S2)).scale(Fraction(4, 3)),
        S3: ZERO,
    }


@dataclass
class TableMismatch:
    relation: str
    expected: Polynomial
    computed: Polynomial


def cross_validate_chart_brackets() -> list[TableMismatch]:
    """Compare the table with brackets computed from the R-matrix (empty list on success)."""
    br = cg_bracket(3)
    sf = stable_functions()
    bad = []
    for v, expected in chart_brackets().items():
        g = X(v.a, v.b) if v.kind == "x" else sf[v]
        computed = bracket_of(X(1, 2), g, br)
        exp = to_matrix_entries(expected)
        if computed != exp:
            bad.append(TableMismatch(f"{{x[1][2], {v}}}", exp, computed))
    # the alternative reading {x21, s3} = 0
    c = bracket_of(X(2, 1), sf[S3], br)
    if c:
        bad.append(TableMismatch("{x[2][1], s3}", ZERO, c))
    return bad


def p_polynomial() -> Polynomial:
    x = _x
    m = PolyMatrix([
        [x(1, 1), x(1, 2), x(1, 3), ZERO],
        [x(2, 1), x(2, 2), x(2, 3), ZERO],
        [ZERO, x(1, 1), x(1, 2), x(1, 3)],
        [ZERO, x(2, 1), x(2, 2), x(2, 3)],
    ])
    return poly_det(m)


def delta() -> Polynomial:
    return X(1, 1) * X(2, 3) - X(1, 3) * X(2, 1)


class IdentityFailure(AssertionError):
    pass


def p_components() -> tuple[Polynomial, Polynomial, Polynomial]:
    x = _x
    p0 = x(1, 1) * x(1, 3) * x(2, 2) ** 2 + delta() ** 2
    p1 = x(2, 2) * (x(1, 3) * x(2, 1) + x(1, 1) * x(2, 3))
    p2 = x(2, 1) * x(2, 3)
    return p0, p1, p2


def p_decompose() -> tuple[Polynomial, Polynomial, Polynomial]:
    """(p0, p1, p2) together with the verified relation p = -p0 + x12 p1 - x12^2 p2.

    Only this signed form holds for the 4x4 determinant p; in particular
    p restricted to x12 = 0 is -p0.
    """
    p0, p1, p2 = p_components()
    x12 = X(1, 2)
    if p_polynomial() != -p0 + x12 * p1 - x12 ** 2 * p2:
        raise IdentityFailure("p != -p0 + x12 p1 - x12^2 p2")
    return p0, p1, p2


def literal_p_identity() -> bool:
    """Whether p == p0 + x12 p1 + x12^2 p2 with the unsigned components (it does not)."""
    p0, p1, p2 = p_components()
    x12 = X(1, 2)
    return p_polynomial() == p0 + x12 * p1 + x12 ** 2 * p2


# ---------------------------------------------------------------------------
# D1, D2
# ---------------------------------------------------------------------------
# constant weights of D1; D1 = (2/3) x12 sum_v c_v v d/dv
D1_WEIGHTS = {entry(1, 1): -1, entry(1, 3): 1, entry(2, 1): 1, entry(2, 2): 2, S1: 1, S2: 2}


@dataclass(frozen=True)
class GapOperator:
    """First-order operator sum_v coeffs[v] d/dv on chart polynomials."""

    name: str
    coeffs: tuple  # ((VarId, Polynomial), ...)

    def __call__(self, f: Polynomial) -> Polynomial:
        acc = ZERO
        for v, c in self.coeffs:
            d = f.diff(v)
            if d:
                acc = acc + c * d
        return acc

    def __add__(self, other: "GapOperator") -> "GapOperator":
        tab: dict = {}
        for v, c in self.coeffs + other.coeffs:
            tab[v] = tab.get(v, ZERO) + c
        return GapOperator(f"{self.name}+{other.name}", tuple((v, c) for v, c in tab.items() if c))


def gap_operators(reading: str = "euler") -> dict[str, GapOperator]:
    """D1 and D2.

    In ``'euler'`` reading every d/dv of D1 acts as v d/dv, the form under
    which {x12, f} = (D1 + D2) f and the D1(p0) identity hold; ``'literal'``
    keeps bare partial derivatives and is kept only to exhibit the mismatch.
    """
    if reading not in ("euler", "literal"):
        raise ValueError("reading must be 'euler' or 'literal'")
    x12 = X(1, 2)
    d1 = []
    for v, c in D1_WEIGHTS.items():
        coeff = x12.scale(Fraction(2, 3) * c)
        if reading == "euler":
            coeff = coeff * Polynomial.var(v)
        d1.append((v, coeff))
    x = _x
    d2 = [
        (entry(2, 2), (x(1, 3) * x(2, 1) - x(1, 1) * x(2, 3)).scale(2)),
        (entry(2, 3), (x(1, 3) * x(2, 2)).scale(2)),
    ]
    return {"D1": GapOperator("D1", tuple(d1)), "D2": GapOperator("D2", tuple(d2))}


def apply_D(which: str, f: Polynomial, reading: str = "euler") -> Polynomial:
    ops = gap_operators(reading)
    if which == "D1+D2":
        return (ops["D1"] + ops["D2"])(f)
    return ops[which](f)


def chart_bracket_x12(f: Polynomial, table: dict | None = None) -> Polynomial:
    """{x12, f} by the Leibniz rule from the chart table."""
    table = table or chart_brackets()
    acc = ZERO
    for v in f.variables():
        b = table.get(v)
        if b is None:
            raise ValueError(f"{v} is not a chart coordinate")
        if b:
            acc = acc + f.diff(v) * b
    return acc


def check_D_identity(f: Polynomial, *, reading: str = "euler", through_matrix: bool = True) -> bool:
    """{x12, f} == (D1 + D2) f, in the chart and optionally after passing to matrix entries."""
    rhs = apply_D("D1+D2", f, reading)
    if chart_bracket_x12(f) != rhs:
        return False
    if through_matrix:
        lhs = bracket_of(X(1, 2), to_matrix_entries(f), cg_bracket(3))
        return lhs == to_matrix_entries(rhs)
    return True


def d1_p0_identity() -> bool:
    """(3 / x12) D1(p0) == 8 p0 - 12 Delta^2 - 12 Delta x13 x21."""
    p0, _, _ = p_decompose()
    lhs = apply_D("D1", p0).scale(3).divexact(X(1, 2))
    d = delta()
    return lhs == p0.scale(8) - (d * d).scale(12) - (d * X(1, 3) * X(2, 1)).scale(12)


def p_log_canonical() -> bool:
    """{x12, p} == (2/3) x12 p."""
    p = p_polynomial()
    return bracket_of(X(1, 2), p, cg_bracket(3)) == (X(1, 2) * p).scale(Fraction(2, 3))


def chart_monomials(max_degree: int) -> list[Polynomial]:
    out = []
    for d in range(max_degree + 1):
        for combo in itertools.combinations_with_replacement(CHART_VARS, d):
            m = ONE
            for v in combo:
                m = m * Polynomial.var(v)
            out.append(m)
    return out


def random_chart_polynomial(rng: random.Random, max_degree: int = 4, terms: int = 4) -> Polynomial:
    f = ZERO
    for _ in range(terms):
        d = rng.randint(0, max_degree)
        m = Polynomial.const(Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
        for _ in range(d):
            m = m * Polynomial.var(rng.choice(CHART_VARS))
        f = f + m
    return f


# ---------------------------------------------------------------------------
# weights and bounded absence
# ---------------------------------------------------------------------------
def weight_vectors() -> dict[tuple, tuple]:
    """(w1, w2) = (i - 2, j - 2) for the nine entries of a 3x3 matrix."""
    w = {(i, j): (i - 2, j - 2) for i in range(1, 4) for j in range(1, 4)}
    if len(set(w.values())) != 9:
        raise IdentityFailure("weight vectors are not pairwise distinct")
    return w


def weight_gradings(n: int = 3) -> dict[str, dict]:
    return {
        "w1": {entry(i, j): i - 2 for i in range(1, n + 1) for j in range(1, n + 1)},
        "w2": {entry(i, j): j - 2 for i in range(1, n + 1) for j in range(1, n + 1)},
    }


def x12_absence(depth: int, variant: str = "mat") -> dict:
    """Bounded search for x12 among cluster variables reachable within ``depth`` steps.

    Also reports, for each matrix entry, the first depth at which it occurs
    as a cluster variable (None if never within the bound).
    """
    seed = build_initial_seed(CGParams.make(3, variant))
    first_seen: dict[str, int | None] = {f"x[{i}][{j}]": None for i in range(1, 4) for j in range(1, 4)}
    counts = []
    for d in range(depth + 1):
        found = enumerate_cluster_variables(seed, d)
        counts.append(len(found))
        for i, j in itertools.product(range(1, 4), repeat=2):
            key = f"x[{i}][{j}]"
            if first_seen[key] is None and X(i, j) in found:
                first_seen[key] = d
    method = "symbolic" if isinstance(found, set) else "modular"
    confirmed = {}
    if method == "modular":
        # fingerprint hits are replayed symbolically along their witness path
        for key, d in first_seen.items():
            if d is None:
                continue
            i, j = int(key[2]), int(key[5])
            path, v = found.witness(X(i, j))
            confirmed[key] = mutate_sequence(seed, path).var(v) == X(i, j)
    return {
        "variant": variant,
        "depth": depth,
        "method": method,
        "cluster_variable_counts": counts,
        "x12_present": first_seen["x[1][2]"] is not None,
        "entries_first_depth": first_seen,
        "symbolically_confirmed": confirmed,
        "kind": "bounded evidence (finite exchange-graph ball), not a proof",
    }
