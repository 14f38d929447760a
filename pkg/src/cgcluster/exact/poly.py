"""Sparse multivariate (Laurent) polynomials with exact rational coefficients.

Monomials are packed into a single Python integer: the exponent of the
variable with registry index ``k`` is the ``k``-th balanced base-2**16 digit.
Multiplying monomials is then integer addition.
"""
from __future__ import annotations

import heapq
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping

from .variables import REGISTRY, VarId

_BITS = REGISTRY.BITS
_HALF = REGISTRY.HALF
_MASK = REGISTRY.MASK


class NotDivisible(ArithmeticError):
    """Raised by exact division when the quotient is not a polynomial."""


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def coerce_coeff(c):
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return _norm(c)
    if isinstance(c, _RationalABC):
        return _norm(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return _norm(Fraction(c))
    raise TypeError(f"not an exact rational: {c!r}")


def mono_pack(exps: Mapping[VarId, int]) -> int:
    m = 0
    for v, e in exps.items():
        if e:
            m += e << (_BITS * REGISTRY.index(v))
    return m


def mono_unpack(m: int) -> dict[VarId, int]:
    """Decode a packed monomial into ``{VarId: exponent}`` (nonzero only)."""
    out = {}
    if m == 0:
        return out
    u = m + REGISTRY.bias
    k = 0
    while u:
        e = (u & _MASK) - _HALF
        if e:
            out[REGISTRY.var(k)] = e
        u >>= _BITS
        k += 1
    return out


def mono_exponent(m: int, idx: int) -> int:
    return (((m + REGISTRY.bias) >> (_BITS * idx)) & _MASK) - _HALF


def mono_nonneg(m: int) -> bool:
    # every balanced digit >= 0 <=> top bit of each biased digit set
    bias = REGISTRY.bias
    return ((m + bias) & bias) == bias


def mono_degree(m: int) -> int:
    return sum(mono_unpack(m).values())


def _mono_min(a: int, b: int) -> int:
    ea, eb = mono_unpack(a), mono_unpack(b)
    out = {}
    for v in set(ea) | set(eb):
        out[v] = min(ea.get(v, 0), eb.get(v, 0))
    return mono_pack(out)


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps packed monomial -> coefficient."""

    __slots__ = ("terms", "laurent", "_hash")

    def __init__(self, terms=None, laurent: bool = False):
        if terms is None:
            terms = {}
        self.terms: dict[int, object] = terms
        self.laurent = bool(laurent) or any(not mono_nonneg(m) for m in terms if m)
        self._hash = None

    # construction ------------------------------------------------------
    @classmethod
    def _raw(cls, terms, laurent):
        p = object.__new__(cls)
        p.terms = terms
        p.laurent = laurent
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "Polynomial":
        c = coerce_coeff(c)
        return cls._raw({0: c} if c else {}, False)

    @classmethod
    def var(cls, v: VarId, power: int = 1) -> "Polynomial":
        m = power << (_BITS * REGISTRY.index(v))
        return cls._raw({m: 1}, power < 0)

    @classmethod
    def monomial(cls, exps: Mapping[VarId, int], coeff=1) -> "Polynomial":
        coeff = coerce_coeff(coeff)
        if not coeff:
            return ZERO
        m = mono_pack(exps)
        return cls._raw({m: coeff}, any(e < 0 for e in exps.values()))

    @classmethod
    def from_terms(cls, items: Iterable[tuple[Mapping[VarId, int], object]]) -> "Polynomial":
        terms: dict[int, object] = {}
        for exps, c in items:
            m = mono_pack(exps)
            terms[m] = terms.get(m, 0) + coerce_coeff(c)
        return cls({m: _norm(c) for m, c in terms.items() if c})

    # basic protocol ----------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get(0, 0)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    # arithmetic ----------------------------------------------------------
    @staticmethod
    def _lift(x) -> "Polynomial":
        if isinstance(x, Polynomial):
            return x
        return Polynomial.const(x)

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction)):
                other = Polynomial.const(other)
            else:
                return NotImplemented
        if len(self.terms) < len(other.terms):
            small, big = self.terms, other.terms
        else:
            small, big = other.terms, self.terms
        out = dict(big)
        for m, c in small.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v:
                    out[m] = _norm(v)
                else:
                    del out[m]
        return Polynomial._raw(out, self.laurent or other.laurent)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self.terms.items()}, self.laurent)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction)):
                other = Polynomial.const(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction)):
                return self.scale(other)
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, object] = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = ma + mb
                out[m] = get(m, 0) + ca * cb
        res = {m: _norm(c) for m, c in out.items() if c}
        return Polynomial._raw(res, self.laurent or other.laurent)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        c = coerce_coeff(c)
        if not c:
            return ZERO
        if c == 1:
            return self
        return Polynomial._raw({m: _norm(v * c) for m, v in self.terms.items()}, self.laurent)

    def shift(self, m: int) -> "Polynomial":
        """Multiply by the packed monomial ``m``."""
        if m == 0:
            return self
        out = {k + m: c for k, c in self.terms.items()}
        return Polynomial(out, self.laurent)

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            if self.is_monomial():
                (m, c), = self.terms.items()
                return Polynomial._raw({-m * (-e): Fraction(1) / c ** (-e)}, True).normalized()
            raise ValueError("negative power of a non-monomial polynomial")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def normalized(self) -> "Polynomial":
        return Polynomial({m: _norm(c) for m, c in self.terms.items() if c}, self.laurent)

    # structure -----------------------------------------------------------
    def as_laurent(self) -> "Polynomial":
        return Polynomial._raw(self.terms, True)

    def has_negative_exponents(self) -> bool:
        return any(not mono_nonneg(m) for m in self.terms)

    def variables(self) -> set[VarId]:
        out = set()
        for m in self.terms:
            out.update(mono_unpack(m))
        return out

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def degree_in(self, v: VarId) -> int:
        idx = REGISTRY.index(v)
        return max((mono_exponent(m, idx) for m in self.terms), default=0)

    def is_homogeneous(self, weights: Mapping[VarId, int] | None = None):
        """Return the common weight of all terms, or None if inhomogeneous."""
        w = None
        for m in self.terms:
            e = mono_unpack(m)
            if weights is None:
                s = sum(e.values())
            else:
                s = sum(weights.get(v, 0) * k for v, k in e.items())
            if w is None:
                w = s
            elif w != s:
                return None
        return w

    def monomial_content(self) -> int:
        """Packed gcd monomial (componentwise minimum exponent) of all terms."""
        it = iter(self.terms)
        try:
            g = next(it)
        except StopIteration:
            return 0
        for m in it:
            g = _mono_min(g, m)
        return g

    def coefficient_content(self) -> Fraction:
        """Positive rational c with self/c primitive (integer coprime coefficients)."""
        from math import gcd, lcm

        if not self.terms:
            return Fraction(1)
        num = 0
        den = 1
        for c in self.terms.values():
            c = Fraction(c)
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    def leading(self):
        """Leading (monomial, coefficient) in graded lex order over canonical variable order."""
        best = None
        bkey = None
        for m, c in self.terms.items():
            k = _grlex_key(m)
            if bkey is None or k > bkey:
                best, bkey = (m, c), k
        if best is None:
            raise ValueError("zero polynomial has no leading term")
        return best

    def coefficient(self, exps: Mapping[VarId, int]):
        return self.terms.get(mono_pack(exps), 0)

    def items(self):
        """(exponent dict, coefficient) pairs in canonical descending order."""
        keyed = sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)
        return [(mono_unpack(m), c) for m, c in keyed]

    # calculus / substitution ------------------------------------------
    def diff(self, v: VarId) -> "Polynomial":
        idx = REGISTRY.index(v)
        step = 1 << (_BITS * idx)
        shift = _BITS * idx
        bias = REGISTRY.bias
        out = {}
        for m, c in self.terms.items():
            e = (((m + bias) >> shift) & _MASK) - _HALF
            if e:
                out[m - step] = _norm(c * e)
        return Polynomial._raw(out, self.laurent)

    def evaluate(self, values: Mapping[VarId, object]):
        """Exact value at a point; every variable present must be assigned."""
        total = 0
        cache: dict[tuple[VarId, int], object] = {}
        for m, c in self.terms.items():
            t = c
            for v, e in mono_unpack(m).items():
                key = (v, e)
                p = cache.get(key)
                if p is None:
                    x = values[v]
                    p = Fraction(x) ** e if e < 0 else x**e
                    cache[key] = p
                t = t * p
            total = total + t
        return _norm(total) if isinstance(total, Fraction) else total

    def evaluate_mod(self, values: Mapping[VarId, int], prime: int) -> int:
        total = 0
        for m, c in self.terms.items():
            c = Fraction(c)
            t = c.numerator * pow(c.denominator, -1, prime)
            for v, e in mono_unpack(m).items():
                t = t * pow(values[v], e, prime)
            total = (total + t) % prime
        return total

    def subs(self, mapping: Mapping[VarId, "Polynomial"]) -> "Polynomial":
        """Substitute polynomials for variables (unmapped variables kept)."""
        out = ZERO
        pcache: dict[tuple[VarId, int], Polynomial] = {}
        for m, c in self.terms.items():
            t = Polynomial.const(c)
            rest = {}
            for v, e in mono_unpack(m).items():
                if v in mapping:
                    key = (v, e)
                    p = pcache.get(key)
                    if p is None:
                        p = Polynomial._lift(mapping[v]) ** e
                        pcache[key] = p
                    t = t * p
                else:
                    rest[v] = e
            if rest:
                t = t * Polynomial.monomial(rest)
            out = out + t
        return out

    def coefficients_in(self, v: VarId) -> dict[int, "Polynomial"]:
        """Split by powers of ``v``: ``self = sum_k out[k] * v**k``."""
        idx = REGISTRY.index(v)
        step = 1 << (_BITS * idx)
        out: dict[int, dict] = {}
        for m, c in self.terms.items():
            e = mono_exponent(m, idx)
            out.setdefault(e, {})[m - e * step] = c
        return {e: Polynomial(t) for e, t in out.items()}

    # division --------------------------------------------------------------
    def divexact(self, other: "Polynomial") -> "Polynomial":
        """Exact quotient ``self / other``; raises NotDivisible otherwise."""
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.terms:
            return ZERO
        if self.laurent or other.laurent or self.has_negative_exponents() or other.has_negative_exponents():
            return self._divexact_laurent(other)
        return Polynomial._raw(_divexact_terms(self.terms, other.terms), False)

    def _divexact_laurent(self, other: "Polynomial") -> "Polynomial":
        sa = self.monomial_content()
        sb = other.monomial_content()
        a = {m - sa: c for m, c in self.terms.items()}
        b = {m - sb: c for m, c in other.terms.items()}
        q = _divexact_terms(a, b)
        shift = sa - sb
        return Polynomial({m + shift: c for m, c in q.items()}, True)

    def divides(self, other: "Polynomial") -> bool:
        try:
            other.divexact(self)
        except NotDivisible:
            return False
        return True

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self.scale(Fraction(1) / Fraction(other))
        if isinstance(other, Polynomial):
            if other.is_constant() and other.terms:
                return self.scale(Fraction(1) / Fraction(other.terms[0]))
            from .ratfn import RationalFn

            return RationalFn(self, other)
        return NotImplemented

    # text --------------------------------------------------------------
    def __str__(self):
        from .text import format_poly

        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


_canon_cache: list = [0, ()]


def _canonical_order():
    if _canon_cache[0] != len(REGISTRY):
        vs = [REGISTRY.var(k) for k in range(len(REGISTRY))]
        _canon_cache[0] = len(REGISTRY)
        _canon_cache[1] = tuple(sorted(vs, key=VarId.sort_key))
    return _canon_cache[1]


def _grlex_key(m: int):
    e = mono_unpack(m)
    return (sum(e.values()), tuple(e.get(v, 0) for v in _canonical_order()))


def _divexact_terms(a: dict, b: dict) -> dict:
    """Exact division of non-negative-exponent term dicts.

    Uses the packed-integer order on monomials (a lex order), which is a
    monomial order for non-negative exponents, so the leading term of the
    remainder always comes from the leading term of the divisor.
    """
    bm = max(b)
    bc = b[bm]
    b_rest = [(m - bm, c) for m, c in b.items() if m != bm]
    max_qdeg = max(mono_degree(m) for m in a) - min(mono_degree(m) for m in b)
    rem = dict(a)
    heap = [-m for m in rem]
    heapq.heapify(heap)
    q = {}
    bias = REGISTRY.bias
    while rem:
        m = -heapq.heappop(heap)
        c = rem.pop(m, None)
        if c is None:
            continue
        d = m - bm
        if ((d + bias) & bias) != bias:
            raise NotDivisible("leading monomial not divisible")
        if type(c) is int and type(bc) is int and not c % bc:
            qc = c // bc
        else:
            qc = _norm(Fraction(c) / bc)
        q[d] = qc
        for off, cc in b_rest:
            t = d + bm + off
            v = rem.get(t)
            if v is None:
                rem[t] = -qc * cc
                heapq.heappush(heap, -t)
            else:
                v = v - qc * cc
                if v:
                    rem[t] = _norm(v)
                else:
                    del rem[t]
        if mono_degree(d) > max_qdeg:
            raise NotDivisible("quotient degree exceeds bound")
    return q


ZERO = Polynomial._raw({}, False)
ONE = Polynomial._raw({0: 1}, False)


def X(i: int, j: int) -> Polynomial:
    from .variables import entry

    return Polynomial.var(entry(i, j))
