"""Seeds of geometric type and the exchange relation."""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Sequence

from ..exact import ONE, Polynomial, RationalFn, atom, format_poly, parse_poly
from ..exact.poly import NotDivisible
from .exchange import Matrix, MutationError, as_matrix, is_skew_principal, mutate_matrix
from .quiver import Quiver

Variable = Polynomial | RationalFn


def canonical(v: Variable) -> Variable:
    """Polynomials stay polynomials; fractions with constant denominators collapse."""
    if isinstance(v, RationalFn) and v.den.is_constant():
        return v.as_polynomial()
    return v


@dataclass(frozen=True)
class Seed:
    """Extended cluster plus extended exchange matrix.

    ``vertices`` lists mutable vertices first (rows of ``btilde``), then frozen
    ones.  ``casimir`` is an optional function identified with 1 (``det X`` on
    SL_n): exchange monomials of unequal degree are balanced by powers of it,
    so variables are stored as their homogeneous Mat_n lifts.
    """

    vertices: tuple
    btilde: Matrix
    variables: tuple
    params: Any = None
    casimir: Polynomial | None = None
    regular: bool = True
    history: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if len(self.variables) != len(self.vertices):
            raise ValueError("variable count must equal vertex count")
        if any(len(r) != len(self.vertices) for r in self.btilde):
            raise ValueError("btilde column count must equal vertex count")
        if len(self.btilde) > len(self.vertices):
            raise ValueError("more mutable rows than vertices")
        if not is_skew_principal(self.btilde):
            raise ValueError("principal part of btilde must be skew-symmetric")

    # construction ------------------------------------------------------
    @classmethod
    def from_quiver(cls, q: Quiver, variables: dict, **kw) -> "Seed":
        order, b = q.to_matrix()
        return cls(order, b, tuple(variables[v] for v in order), **kw)

    # accessors ---------------------------------------------------------
    @property
    def n_mutable(self) -> int:
        return len(self.btilde)

    @property
    def mutable(self) -> tuple:
        return self.vertices[: self.n_mutable]

    @property
    def frozen(self) -> tuple:
        return self.vertices[self.n_mutable:]

    def index(self, v) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise MutationError(f"unknown vertex {v!r}") from None

    def var(self, v) -> Variable:
        return self.variables[self.index(v)]

    def cluster(self) -> tuple:
        return self.variables[: self.n_mutable]

    def quiver(self) -> Quiver:
        return Quiver.from_matrix(self.vertices, self.btilde)

    def key(self):
        return (self.variables, self.btilde)

    def same_as(self, other: "Seed") -> bool:
        return self.vertices == other.vertices and self.variables == other.variables and self.btilde == other.btilde

    def formal(self) -> "Seed":
        """Same exchange matrix, variables replaced by independent atoms ``z[v]``."""
        def z(v):
            if isinstance(v, tuple) and len(v) == 2:
                return Polynomial.var(atom(*v))
            return Polynomial.var(atom(v))

        return replace(self, variables=tuple(z(v) for v in self.vertices), params="formal", casimir=None,
                       regular=True, history=())

    # serialization -------------------------------------------------------
    def to_json(self) -> dict:
        p = self.params
        labels = [list(v) if isinstance(v, tuple) else v for v in self.vertices]
        return {
            "n": getattr(p, "n", None),
            "variant": getattr(p, "variant", None),
            "vertices": [
                {"i": l[0], "j": l[1], "frozen": k >= self.n_mutable} if isinstance(l, list)
                else {"label": l, "frozen": k >= self.n_mutable}
                for k, l in enumerate(labels)
            ],
            "btilde": [list(r) for r in self.btilde],
            "variables": [str(v) for v in self.variables],
            "regular": self.regular,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)

    @classmethod
    def from_json(cls, data: dict, params=None) -> "Seed":
        verts = []
        frozen_flags = []
        for v in data["vertices"]:
            verts.append((int(v["i"]), int(v["j"])) if "i" in v else v["label"])
            frozen_flags.append(bool(v.get("frozen")))
        nmut = len(data["btilde"])
        if frozen_flags != [k >= nmut for k in range(len(verts))]:
            raise ValueError("vertices must list mutable vertices first, matching btilde rows")
        variables = []
        for s in data["variables"]:
            if "/" in s and ") / (" in s:
                num, den = s.split(") / (")
                variables.append(RationalFn(parse_poly(num.lstrip("(")), parse_poly(den.rstrip(")"))))
            else:
                variables.append(parse_poly(s))
        casimir = None
        if params is None and data.get("n") and data.get("variant"):
            from ..cg import CGParams

            params = CGParams.make(int(data["n"]), data["variant"])
        if params is not None and getattr(params, "variant", None) == "sl":
            from ..cg import theta

            casimir = theta(params.n, params.with_variant("mat"))
        return cls(tuple(verts), as_matrix(data["btilde"]), tuple(variables), params=params,
                   casimir=casimir, regular=bool(data.get("regular", True)))


def _monomial_product(variables: Sequence[Variable], row: Sequence[int], sign: int):
    out = ONE
    deg = 0
    for x, b in zip(variables, row):
        e = b * sign
        if e > 0:
            out = out * (x**e)
    return out


def exchange_monomials(s: Seed, k: int) -> tuple[Variable, Variable]:
    """The two monomials of the exchange relation at mutable index ``k``."""
    row = s.btilde[k]
    pos = _monomial_product(s.variables, row, 1)
    neg = _monomial_product(s.variables, row, -1)
    if s.casimir is not None:
        pos, neg = _balance(pos, neg, s.casimir)
    return pos, neg


def _balance(a, b, casimir: Polynomial):
    da, db = _deg(a), _deg(b)
    dc = casimir.degree()
    if da == db or da is None or db is None:
        return a, b
    diff = abs(da - db)
    if diff % dc:
        raise MutationError("exchange monomials cannot be balanced by the Casimir")
    if da < db:
        return a * casimir ** (diff // dc), b
    return a, b * casimir ** (diff // dc)


def _deg(v):
    if isinstance(v, Polynomial):
        return v.is_homogeneous()
    num, den = v.num.is_homogeneous(), v.den.is_homogeneous()
    return None if num is None or den is None else num - den


def exchange(s: Seed, k: int) -> tuple[Variable, bool]:
    """New variable at mutable index ``k`` and whether the division was exact."""
    xk = s.variables[k]
    if isinstance(xk, Polynomial) and xk.is_zero() or isinstance(xk, RationalFn) and xk.num.is_zero():
        raise MutationError("cluster variable at mutation vertex is zero")
    pos, neg = exchange_monomials(s, k)
    num = pos + neg
    if isinstance(num, Polynomial) and isinstance(xk, Polynomial):
        try:
            return num.divexact(xk), True
        except NotDivisible:
            return RationalFn(num, xk), False
    r = canonical(RationalFn.lift(num) / RationalFn.lift(xk))
    return r, isinstance(r, Polynomial)


def mutate_seed(s: Seed, v) -> Seed:
    """Mutate at vertex label ``v``.  Frozen or unknown labels raise MutationError."""
    k = s.index(v)
    if k >= s.n_mutable:
        raise MutationError(f"vertex {v!r} is frozen")
    new, exact = exchange(s, k)
    variables = s.variables[:k] + (new,) + s.variables[k + 1:]
    return Seed(s.vertices, mutate_matrix(s.btilde, k), variables, params=s.params, casimir=s.casimir,
                regular=s.regular and exact, history=s.history + (v,))


def mutate_sequence(s: Seed, seq: Sequence) -> Seed:
    for v in seq:
        s = mutate_seed(s, v)
    return s


def is_laurent_in(seed0: Seed, f) -> bool:
    """Laurent-polynomial test for ``f`` with respect to ``seed0``'s extended cluster.

    For a formal seed (variables are distinct atoms) this is exact: ``f`` must
    involve only those atoms and reduce to a fraction with monomial
    denominator.  For seeds whose variables are general polynomials, the
    denominator of ``f`` must factor as a monomial in those variables, found
    by repeated exact division.
    """
    atoms = _atoms(seed0)
    f = canonical(f) if isinstance(f, RationalFn) else f
    if atoms is not None:
        num, den = (f, ONE) if isinstance(f, Polynomial) else (f.num, f.den)
        if not (num.variables() | den.variables()) <= atoms:
            return False
        return den.is_monomial() or den.is_constant()
    if isinstance(f, Polynomial):
        return True
    den = f.den
    changed = True
    while changed and not den.is_constant():
        changed = False
        for x in seed0.variables:
            if not isinstance(x, Polynomial) or x.is_constant():
                continue
            try:
                den = den.divexact(x)
                changed = True
            except NotDivisible:
                continue
    return den.is_constant()


def _atoms(seed: Seed):
    out = set()
    for x in seed.variables:
        if not (isinstance(x, Polynomial) and x.is_monomial()):
            return None
        (m, c), = x.terms.items()
        vs = x.variables()
        if c != 1 or len(vs) != 1 or x.degree() != 1:
            return None
        out |= vs
    return out if len(out) == len(seed.variables) else None


def generic_seed(quiver: Quiver) -> Seed:
    """Seed on ``quiver`` with independent atom variables."""
    order, b = quiver.to_matrix()
    s = Seed(order, b, tuple(ONE for _ in order), params="formal")
    return s.formal()
