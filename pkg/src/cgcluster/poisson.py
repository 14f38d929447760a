"""Belavin-Drinfeld data, the classical R-matrix of a BD class, the quadratic
(Sklyanin) Poisson bracket on matrix entries, and log-canonicity checks."""
from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Mapping, Sequence

from .cluster import exchange_monomials, mutate_seed
from .exact import ZERO, Polynomial, X, entry, solve_rational
from .exact.poly import _norm

log = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Belavin-Drinfeld triples
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class BDTriple:
    """Simple roots are indexed 1..n-1 (alpha_i = eps_i - eps_{i+1})."""

    n: int
    gamma1: frozenset
    gamma2: frozenset
    gamma: tuple  # sorted ((alpha, gamma(alpha)), ...)

    def __post_init__(self):
        g = dict(self.gamma)
        simple = set(range(1, self.n))
        if set(g) != set(self.gamma1) or set(g.values()) != set(self.gamma2):
            raise ValueError("gamma must map Gamma1 onto Gamma2")
        if len(set(g.values())) != len(g):
            raise ValueError("gamma is not injective")
        if not (self.gamma1 <= simple and self.gamma2 <= simple):
            raise ValueError("roots out of range")
        for a, b in itertools.combinations(sorted(g), 2):
            if (abs(a - b) == 1) != (abs(g[a] - g[b]) == 1):
                raise ValueError("gamma is not an isometry of the Dynkin subdiagrams")
        for a in g:
            seen, x = set(), a
            while x in g:
                if x in seen:
                    raise ValueError("gamma is not nilpotent")
                seen.add(x)
                x = g[x]

    @property
    def map(self) -> dict:
        return dict(self.gamma)

    @property
    def k_T(self) -> int:
        return self.n - 1 - len(self.gamma1)

    def root_image(self, a: int, b: int):
        """gamma on the positive root eps_a - eps_b (1-based, a < b), or None if outside Phi_1."""
        g = self.map
        idx = range(a, b)
        if any(t not in g for t in idx):
            return None
        img = sorted(g[t] for t in idx)
        if img != list(range(img[0], img[0] + len(img))):
            return None
        return (img[0], img[-1] + 1)

    def chains(self) -> list[tuple[tuple, tuple]]:
        """All pairs (alpha, beta) of positive roots with alpha <_T beta."""
        out = []
        for a in range(1, self.n + 1):
            for b in range(a + 1, self.n + 1):
                cur = (a, b)
                while True:
                    nxt = self.root_image(*cur)
                    if nxt is None:
                        break
                    out.append(((a, b), nxt))
                    cur = nxt
        return out


def cg_triple(n: int) -> BDTriple:
    """Gamma1 = {2..n-1}, Gamma2 = {1..n-2}, gamma(i) = i - 1."""
    g = tuple((i, i - 1) for i in range(2, n))
    return BDTriple(n, frozenset(range(2, n)), frozenset(range(1, n - 1)), g)


def trivial_triple(n: int) -> BDTriple:
    return BDTriple(n, frozenset(), frozenset(), ())


# ---------------------------------------------------------------------------
# R-matrices
# ---------------------------------------------------------------------------
# r = sum r[(p, q), (u, v)] e_pq (x) e_uv, indices 1-based
RMatrix = dict


@dataclass(frozen=True)
class Convention:
    leg: str = "12"           # '21' swaps tensor legs of r
    orientation: str = "forward"  # 'backward' runs gamma the other way

    @classmethod
    def all(cls) -> list["Convention"]:
        return [cls(l, o) for l in ("12", "21") for o in ("forward", "backward")]


class RMatrixError(ValueError):
    pass


def cartan_part(t: BDTriple, orientation: str = "forward") -> tuple[list[list[Fraction]], int]:
    """Solve for r_0 in h (x) h: r_0 + r_0^21 = Cartan Casimir, plus the BD equations.

    Returns (coefficient matrix c with r_0 = sum c[a][b] e_aa (x) e_bb, nullity).
    The antisymmetric part of c is the unknown; with nullity > 0 the
    particular solution with all free parameters zero is returned.
    """
    n = t.n
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    col = {p: i for i, p in enumerate(pairs)}
    sym = [[Fraction(int(a == b)) - Fraction(1, n) for b in range(n)] for a in range(n)]

    def c_expr(a, b):
        # c[a][b] = sym/2 + A[a][b] as (coefficient vector over pairs, constant)
        vec = [Fraction(0)] * len(pairs)
        if a < b:
            vec[col[(a, b)]] += 1
        elif a > b:
            vec[col[(b, a)]] -= 1
        return vec, sym[a][b] / 2

    rows, rhs = [], []

    def add(terms):
        vec = [Fraction(0)] * len(pairs)
        const = Fraction(0)
        for coeff, (a, b) in terms:
            v, c0 = c_expr(a, b)
            vec = [x + coeff * y for x, y in zip(vec, v)]
            const += coeff * c0
        rows.append(vec)
        rhs.append(-const)

    for a in range(n):
        add([(1, (a, b)) for b in range(n)])  # traceless first leg
    for al, be in t.map.items():
        if orientation == "backward":
            al, be = be, al
        i, j = al - 1, be - 1  # alpha_{al} = eps_i - eps_{i+1}
        for b in range(n):
            add([(1, (i, b)), (-1, (i + 1, b)), (1, (b, j)), (-1, (b, j + 1))])
    if not pairs:
        return [[sym[a][b] / 2 for b in range(n)] for a in range(n)], 0
    try:
        sol, nullity = solve_rational(rows, rhs)
    except ValueError as e:
        raise RMatrixError("BD system for the Cartan part is inconsistent") from e
    c = [[sym[a][b] / 2 for b in range(n)] for a in range(n)]
    for (a, b), k in col.items():
        c[a][b] += sol[k]
        c[b][a] -= sol[k]
    return c, nullity


def build_r_matrix(t: BDTriple, convention: Convention = Convention()) -> RMatrix:
    """Classical R-matrix of the BD class of ``t`` normalized by r + r^21 = sum e_ab (x) e_ba - 1/n 1(x)1."""
    n = t.n
    c, nullity = cartan_part(t, convention.orientation)
    if nullity and t.k_T == 1:
        raise RMatrixError("Cartan part not unique although k_T = 1")
    r: dict = {}

    def add(key, v):
        r[key] = r.get(key, 0) + v
        if not r[key]:
            del r[key]

    for a in range(n):
        for b in range(n):
            if c[a][b]:
                add(((a + 1, a + 1), (b + 1, b + 1)), c[a][b])
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            add(((a, b), (b, a)), 1)  # e_alpha (x) e_-alpha
    for (a, b), (A, B) in t.chains():
        if convention.orientation == "forward":
            # e_beta (x) e_-alpha - e_-alpha (x) e_beta
            add(((A, B), (b, a)), 1)
            add(((b, a), (A, B)), -1)
        else:
            # e_alpha (x) e_-beta - e_-beta (x) e_alpha
            add(((a, b), (B, A)), 1)
            add(((B, A), (a, b)), -1)
    if convention.leg == "21":
        r = {(y, x): v for (x, y), v in r.items()}
    return r


def split_casimir(n: int) -> RMatrix:
    """Casimir element of the trace form on sl_n."""
    out = {}
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            out[((a, b), (b, a))] = Fraction(1)
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            key = ((a, a), (b, b))
            out[key] = out.get(key, 0) - Fraction(1, n)
    return {k: v for k, v in out.items() if v}


def symmetrize(r: RMatrix) -> RMatrix:
    out = dict(r)
    for (x, y), v in r.items():
        out[(y, x)] = out.get((y, x), 0) + v
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# Quadratic brackets
# ---------------------------------------------------------------------------
# the Sklyanin bracket {X (x), X} = SCALE [r, X (x) X] reproduces the coordinate table
SCALE = 2


class JacobiError(RuntimeError):
    pass


@dataclass
class QuadraticBracket:
    """Generator table {x_ij, x_kl} stored for (i,j) < (k,l); the rest by skew-symmetry.

    When built from an R-matrix the bracket of arbitrary polynomials uses the
    R-matrix directly (``r``/``scale``); ``bracket_of(..., method='table')``
    always uses the generator table.
    """

    n: int
    table: dict
    r: RMatrix | None = None
    scale: Fraction = Fraction(1)
    _int_r: tuple | None = field(default=None, repr=False)

    def get(self, a: tuple, b: tuple) -> Polynomial:
        if a == b:
            return ZERO
        if a < b:
            return self.table.get((a, b), ZERO)
        return -self.table.get((b, a), ZERO)

    def generators(self) -> list[tuple]:
        return [(i, j) for i in range(1, self.n + 1) for j in range(1, self.n + 1)]


def sklyanin_bracket(r: RMatrix, n: int, scale=SCALE, *, check_jacobi: bool = False) -> QuadraticBracket:
    """{x_ij, x_kl} = scale (sum_ac r[(i,a),(k,c)] x_aj x_cl - sum_bd x_ib x_kd r[(b,j),(d,l)])."""
    left = {}
    right = {}
    for ((p, q), (u, v)), val in r.items():
        left.setdefault((p, u), []).append((q, v, val))
        right.setdefault((q, v), []).append((p, u, val))
    table = {}
    gens = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    for a, b in itertools.combinations(gens, 2):
        (i, j), (k, l) = a, b
        acc = ZERO
        for q, v, val in left.get((i, k), ()):
            acc = acc + (X(q, j) * X(v, l)).scale(val)
        for p, u, val in right.get((j, l), ()):
            acc = acc - (X(i, p) * X(k, u)).scale(val)
        acc = acc.scale(scale)
        if acc:
            table[(a, b)] = acc
    br = QuadraticBracket(n, table, r=r, scale=Fraction(scale))
    if check_jacobi:
        bad = jacobi_failures(br)
        if bad:
            raise JacobiError(f"Jacobi identity fails on {bad[0]}")
    return br


def reference_x12_relations() -> dict[tuple, Polynomial]:
    """{x12, x_kl} on Mat_3 for the entries of the first two rows, as stated coordinate data."""
    t = Fraction(2, 3)
    return {
        (1, 1): (X(1, 1) * X(1, 2)).scale(-t),
        (1, 3): (X(1, 2) * X(1, 3)).scale(t),
        (2, 1): (X(1, 2) * X(2, 1)).scale(t),
        (2, 3): (X(1, 3) * X(2, 2)).scale(2),
        (2, 2): (X(1, 2) * X(2, 2)).scale(Fraction(4, 3)) + (X(1, 3) * X(2, 1)).scale(2)
        - (X(1, 1) * X(2, 3)).scale(2),
    }


class ConventionError(RuntimeError):
    pass


def matching_conventions(scale=SCALE) -> list[Convention]:
    """Conventions whose n=3 CG bracket reproduces :func:`reference_x12_relations`."""
    ref = reference_x12_relations()
    out = []
    for conv in Convention.all():
        br = sklyanin_bracket(build_r_matrix(cg_triple(3), conv), 3, scale)
        if all(br.get((1, 2), k) == v for k, v in ref.items()):
            out.append(conv)
    return out


@lru_cache(maxsize=None)
def resolved_convention() -> Convention:
    found = matching_conventions()
    if len(found) != 1:
        raise ConventionError(f"expected exactly one matching convention, found {found}")
    return found[0]


def cg_bracket(n: int) -> QuadraticBracket:
    """The Cremmer-Gervais bracket on Mat_n (det X is a Casimir)."""
    return _cg_bracket_cached(n)


@lru_cache(maxsize=None)
def _cg_bracket_cached(n: int) -> QuadraticBracket:
    return sklyanin_bracket(build_r_matrix(cg_triple(n), resolved_convention()), n)


def standard_bracket(n: int) -> QuadraticBracket:
    return sklyanin_bracket(build_r_matrix(trivial_triple(n)), n)


def _gradient(f: Polynomial, n: int) -> dict:
    out = {}
    for v in f.variables():
        if v.kind == "x":
            d = f.diff(v)
            if d:
                out[(v.a, v.b)] = d
    return out


def _int_r(br: QuadraticBracket):
    if br._int_r is None:
        vals = [Fraction(v) * br.scale for v in br.r.values()]
        den = lcm(*(v.denominator for v in vals)) if vals else 1
        items = [(k, int(Fraction(v) * br.scale * den)) for k, v in br.r.items()]
        br._int_r = (den, items)
    return br._int_r


def _lr_matrices(f: Polynomial, n: int):
    """L[i][a] = sum_j x_aj df/dx_ij,  R[b][j] = sum_i x_ib df/dx_ij."""
    grad = _gradient(f, n)
    L, R = {}, {}
    for (i, j), d in grad.items():
        for a in range(1, n + 1):
            t = d * X(a, j)
            L[(i, a)] = L[(i, a)] + t if (i, a) in L else t
            t = d * X(i, a)
            R[(a, j)] = R[(a, j)] + t if (a, j) in R else t
    return L, R


def bracket_of(f: Polynomial, g: Polynomial, br: QuadraticBracket, method: str = "auto") -> Polynomial:
    """Exact {f, g} as the bi-derivation extension of the generator bracket."""
    if method == "table" or br.r is None:
        return _bracket_table(f, g, br)
    n = br.n
    den, items = _int_r(br)
    Lf, Rf = _lr_matrices(f, n)
    Lg, Rg = _lr_matrices(g, n)
    HL: dict = {}
    HR: dict = {}
    for ((p, q), (u, v)), val in items:
        # left: r[(i,a),(k,c)] Lf[i][a] Lg[k][c]   with (i,a)=(p,q), (k,c)=(u,v)
        if (p, q) in Lf and (u, v) in Lg:
            t = Lg[(u, v)].scale(val)
            HL[(p, q)] = HL[(p, q)] + t if (p, q) in HL else t
        # right: r[(b,j),(d,l)] Rf[b][j] Rg[d][l]
        if (p, q) in Rf and (u, v) in Rg:
            t = Rg[(u, v)].scale(val)
            HR[(p, q)] = HR[(p, q)] + t if (p, q) in HR else t
    acc = ZERO
    for key, h in HL.items():
        if h:
            acc = acc + Lf[key] * h
    for key, h in HR.items():
        if h:
            acc = acc - Rf[key] * h
    return acc.scale(Fraction(1, den)) if den != 1 else acc


def _bracket_table(f: Polynomial, g: Polynomial, br: QuadraticBracket) -> Polynomial:
    gf = {v: f.diff(v) for v in f.variables()}
    gg = {v: g.diff(v) for v in g.variables()}
    gf = {v: d for v, d in gf.items() if d}
    gg = {v: d for v, d in gg.items() if d}
    acc = ZERO
    for u, du in gf.items():
        h = ZERO
        for v, dv in gg.items():
            b = _generator_bracket(br, u, v)
            if b:
                h = h + b * dv
        if h:
            acc = acc + du * h
    return acc


def _generator_bracket(br: QuadraticBracket, u, v) -> Polynomial:
    if u.kind != "x" or v.kind != "x":
        raise ValueError("quadratic brackets act on matrix entries only")
    return br.get((u.a, u.b), (v.a, v.b))


def jacobi_failures(br: QuadraticBracket, triples: Iterable | None = None) -> list:
    gens = br.generators()
    if triples is None:
        triples = itertools.combinations(gens, 3)
    bad = []
    for a, b, c in triples:
        xa, xb, xc = (X(*a), X(*b), X(*c))
        s = (bracket_of(br.get(a, b), xc, br, "table") + bracket_of(br.get(b, c), xa, br, "table")
             + bracket_of(br.get(c, a), xb, br, "table"))
        if s:
            bad.append((a, b, c))
    return bad


# ---------------------------------------------------------------------------
# log-canonicity
# ---------------------------------------------------------------------------
@dataclass
class LogCanonicalReport:
    ok: bool
    names: list
    omega: list | None = None
    failure: tuple | None = None   # (name_i, name_j, remainder polynomial)

    def integer_rescaling(self) -> int:
        """Smallest positive integer c with c * Omega integral."""
        if not self.omega:
            return 1
        return lcm(*(Fraction(w).denominator for row in self.omega for w in row)) or 1

    def to_json(self) -> dict:
        d = {"ok": self.ok, "names": [str(x) for x in self.names]}
        if self.omega is not None:
            d["omega"] = [[str(Fraction(w)) for w in row] for row in self.omega]
            d["integer_rescaling"] = self.integer_rescaling()
        if self.failure is not None:
            d["failure"] = {"pair": [str(self.failure[0]), str(self.failure[1])],
                            "remainder": str(self.failure[2])}
        return d


def log_canonical_coefficient(f: Polynomial, g: Polynomial, br: QuadraticBracket):
    """(omega, remainder) with {f,g} = omega f g + remainder, omega read off a leading term."""
    b = bracket_of(f, g, br)
    fg = f * g
    if not b:
        return Fraction(0), ZERO
    m, c = fg.leading()
    omega = Fraction(b.terms.get(m, 0)) / Fraction(c)
    return _norm(omega), b - fg.scale(omega)


def check_log_canonical(family: Sequence[Polynomial] | Mapping, br: QuadraticBracket, *,
                        jobs: int = 1) -> LogCanonicalReport:
    """Verify {f_i, f_j} = omega_ij f_i f_j with constant omega_ij for every pair."""
    if isinstance(family, Mapping):
        names, funcs = list(family.keys()), list(family.values())
    else:
        funcs = list(family)
        names = list(range(len(funcs)))
    if any(f.is_zero() for f in funcs):
        raise ValueError("family contains the zero function")
    m = len(funcs)
    omega = [[Fraction(0)] * m for _ in range(m)]
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    results = _map_pairs(funcs, br, pairs, jobs)
    for (i, j), (w, rem) in zip(pairs, results):
        if rem:
            return LogCanonicalReport(False, names, None, (names[i], names[j], rem))
        omega[i][j] = w
        omega[j][i] = -w
    return LogCanonicalReport(True, names, omega)


def _pair_worker(args):
    f, g, br = args
    return log_canonical_coefficient(f, g, br)


def _map_pairs(funcs, br, pairs, jobs):
    if jobs <= 1 or len(pairs) < 2:
        return [log_canonical_coefficient(funcs[i], funcs[j], br) for i, j in pairs]
    import multiprocessing as mp

    ctx = mp.get_context("fork")
    with ctx.Pool(jobs) as pool:
        return pool.map(_pair_worker, [(funcs[i], funcs[j], br) for i, j in pairs], chunksize=1)


def jacobi_sample(br: QuadraticBracket, count: int, rng: random.Random) -> list:
    triples = list(itertools.combinations(br.generators(), 3))
    return jacobi_failures(br, rng.sample(triples, min(count, len(triples))))


def casimir_failures(f: Polynomial, br: QuadraticBracket) -> list[tuple]:
    """Generators x_ij with {f, x_ij} != 0."""
    return [g for g in br.generators() if bracket_of(f, X(*g), br)]


# ---------------------------------------------------------------------------
# compatibility with a cluster structure
# ---------------------------------------------------------------------------
@dataclass
class CompatibilityReport:
    ok: bool
    seeds_checked: list = field(default_factory=list)   # mutation paths
    failure: dict | None = None

    def to_json(self) -> dict:
        d = {"ok": self.ok, "seeds_checked": [list(map(list, p)) for p in self.seeds_checked]}
        if self.failure:
            d["failure"] = self.failure
        return d


def _random_point_filter(family, br, rng, points=30):
    """Cheap necessary condition: {f,g} / (f g) takes a single value at random points.

    {f,g}(pt) is evaluated from the generator table and the gradients at pt,
    without forming the symbolic bracket.
    """
    n = br.n
    gens = br.generators()
    m = len(family)
    grads = [{g: f.diff(entry(*g)) for g in gens} for f in family]
    ratios = [[set() for _ in range(m)] for _ in range(m)]
    for _ in range(points):
        pt = random_point(n, rng)
        table = {(a, b): Fraction(br.get(a, b).evaluate(pt)) for a in gens for b in gens if a < b}
        vals = [Fraction(f.evaluate(pt)) for f in family]
        dv = [{g: Fraction(d.evaluate(pt)) for g, d in gr.items() if d} for gr in grads]
        for i in range(m):
            for j in range(i + 1, m):
                fg = vals[i] * vals[j]
                if not fg:
                    continue
                b = Fraction(0)
                for a, da in dv[i].items():
                    for c, dc in dv[j].items():
                        if a < c:
                            b += table[(a, c)] * da * dc
                        elif c < a:
                            b -= table[(c, a)] * da * dc
                ratios[i][j].add(b / fg)
    for i in range(m):
        for j in range(i + 1, m):
            if len(ratios[i][j]) > 1:
                return (i, j)
    return None


def check_compatibility(seed, br: QuadraticBracket, depth: int = 1, *, directions=None,
                        rng: random.Random | None = None, prefilter: bool = False,
                        jobs: int = 1) -> CompatibilityReport:
    """Log-canonicality of every extended cluster reached by mutation paths of length <= depth.

    ``directions`` restricts the first step to the given vertex labels.  With
    ``prefilter`` each family is first screened by random-point evaluation.
    """
    rng = rng or random.Random(0)
    report = CompatibilityReport(True)
    frontier = [(seed, ())]
    seen = {seed.key()}
    for level in range(depth + 1):
        nxt = []
        for s, path in frontier:
            fam = list(s.variables)
            if not s.regular or not all(isinstance(f, Polynomial) for f in fam):
                report.ok = False
                report.failure = {"path": [list(v) for v in path], "reason": "non-polynomial variable"}
                return report
            if prefilter:
                bad = _random_point_filter(fam, br, rng)
                if bad:
                    report.ok = False
                    report.failure = {"path": [list(v) for v in path], "pair": [str(s.vertices[b]) for b in bad],
                                      "reason": "random-point screen"}
                    return report
            lc = check_log_canonical(dict(zip(s.vertices, fam)), br, jobs=jobs)
            report.seeds_checked.append(path)
            if not lc.ok:
                report.ok = False
                report.failure = {"path": [list(v) for v in path], **lc.to_json()["failure"]}
                return report
            if level == depth:
                continue
            labels = s.mutable if (level or directions is None) else directions
            for v in labels:
                if path and path[-1] == v:
                    continue
                child = mutate_seed(s, v)
                if child.key() in seen:
                    continue
                seen.add(child.key())
                nxt.append((child, path + (v,)))
        frontier = nxt
    return report


# ---------------------------------------------------------------------------
# toric weights
# ---------------------------------------------------------------------------
@dataclass
class ToricWeights:
    """Left/right gradings of x_ij and the weight of each family member."""

    n: int
    left: dict
    right: dict
    weights: dict   # name -> (left weight, right weight)
    rank: int = 2

    def matrix(self) -> list[list[int]]:
        return [list(w) for w in self.weights.values()]


class ToricError(ValueError):
    pass


def toric_gradings(n: int) -> tuple[dict, dict]:
    left = {entry(i, j): n + 1 - 2 * i for i in range(1, n + 1) for j in range(1, n + 1)}
    right = {entry(i, j): n + 1 - 2 * j for i in range(1, n + 1) for j in range(1, n + 1)}
    return left, right


def toric_check(n: int, family: Mapping) -> ToricWeights:
    """Bi-homogeneity of every member under x_ij -> (n+1-2i, n+1-2j)."""
    left, right = toric_gradings(n)
    weights = {}
    for name, f in family.items():
        a, b = f.is_homogeneous(left), f.is_homogeneous(right)
        if a is None or b is None:
            raise ToricError(f"{name} is not bi-homogeneous")
        weights[name] = (a, b)
    return ToricWeights(n, left, right, weights)


def exchange_weight_failures(seed, n: int, *, explicit: bool = False) -> list:
    """Vertices whose initial exchange relation has sides of different toric weight.

    Weights are additive, so the check is that each row of the exchange
    matrix annihilates the weight matrix of the extended cluster;
    ``explicit=True`` forms both exchange monomials instead.
    """
    left, right = toric_gradings(n)
    bad = []
    if explicit:
        for k, v in enumerate(seed.mutable):
            pos, neg = exchange_monomials(seed, k)
            wp = (pos.is_homogeneous(left), pos.is_homogeneous(right))
            wn = (neg.is_homogeneous(left), neg.is_homogeneous(right))
            if None in wp or wp != wn:
                bad.append(v)
        return bad
    w = toric_check(n, dict(zip(seed.vertices, seed.variables))).weights
    cols = [w[v] for v in seed.vertices]
    for k, v in enumerate(seed.mutable):
        row = seed.btilde[k]
        if any(sum(b * c[g] for b, c in zip(row, cols)) for g in (0, 1)):
            bad.append(v)
    return bad


def random_point(n: int, rng: random.Random, lo: int = -50, hi: int = 50) -> dict:
    return {entry(i, j): Fraction(rng.randint(lo, hi), rng.randint(1, 9))
            for i in range(1, n + 1) for j in range(1, n + 1)}
