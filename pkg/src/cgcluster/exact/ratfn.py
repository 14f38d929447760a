"""Reduced fractions of polynomials."""
from __future__ import annotations

from fractions import Fraction

from .poly import ONE, NotDivisible, Polynomial


_HASH_PRIME = (1 << 61) - 1


def hash_point(v) -> int:
    """Deterministic nonzero residue attached to a variable."""
    h = 1469598103934665603
    for ch in repr(tuple(v)):
        h = (h ^ ord(ch)) * 1099511628211 % _HASH_PRIME
    return h or 1


class RationalFn:
    """``num/den`` with ``den`` primitive and positive leading coefficient.

    Reduction cancels the monomial and scalar contents and tries exact
    division both ways.  There is no general multivariate gcd: when a common
    non-monomial factor cannot be excluded the fraction is flagged
    ``reduced=False``.
    """

    __slots__ = ("num", "den", "reduced")

    def __init__(self, num, den=ONE, *, reduce: bool = True):
        num = Polynomial._lift(num)
        den = Polynomial._lift(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den, self.reduced = num, den, False
        if reduce:
            self._reduce()

    def _reduce(self):
        num, den = self.num, self.den
        if num.is_zero():
            self.num, self.den, self.reduced = num, ONE, True
            return
        sm = den.monomial_content()
        if sm:
            # divide out the monomial content of den, push it into num
            num = num.shift(-sm)
            den = den.shift(-sm)
        c = den.coefficient_content()
        lead = den.leading()[1]
        if lead < 0:
            c = -c
        num, den = num.scale(Fraction(1) / c), den.scale(Fraction(1) / c)
        if den.is_constant():
            self.num, self.den, self.reduced = num, ONE, True
            return
        try:
            q = num.divexact(den)
            self.num, self.den, self.reduced = q, ONE, True
            return
        except NotDivisible:
            pass
        # den is free of monomial factors here; a monomial num shares nothing
        self.reduced = num.is_monomial() or num.is_constant()
        if not self.reduced:
            try:
                q = den.divexact(num)
                lc = q.leading()[1]
                self.num = Polynomial.const(1 if lc > 0 else -1)
                self.den = q if lc > 0 else -q
                self.reduced = True
                return
            except NotDivisible:
                pass
        self.num, self.den = num, den

    # predicates ----------------------------------------------------------
    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def is_laurent(self) -> bool:
        """True iff the (reduced) denominator is a monomial."""
        return self.den.is_monomial()

    def as_polynomial(self) -> Polynomial:
        if self.den.is_constant():
            return self.num.scale(Fraction(1) / Fraction(self.den.terms[0]))
        if self.den.is_monomial():
            (m, c), = self.den.terms.items()
            return self.num.shift(-m).scale(Fraction(1) / Fraction(c)).as_laurent()
        raise ValueError("not a (Laurent) polynomial")

    # arithmetic ------------------------------------------------------------
    @staticmethod
    def lift(x) -> "RationalFn":
        return x if isinstance(x, RationalFn) else RationalFn(Polynomial._lift(x), ONE, reduce=False)

    def __add__(self, other):
        o = RationalFn.lift(other)
        if self.den == o.den:
            return RationalFn(self.num + o.num, self.den)
        return RationalFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        r = RationalFn(-self.num, self.den, reduce=False)
        r.reduced = self.reduced
        return r

    def __sub__(self, other):
        return self + (-RationalFn.lift(other))

    def __rsub__(self, other):
        return RationalFn.lift(other) - self

    def __mul__(self, other):
        o = RationalFn.lift(other)
        return RationalFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RationalFn.lift(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFn(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RationalFn.lift(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return RationalFn(self.den**(-e), self.num**(-e))
        return RationalFn(self.num**e, self.den**e)

    def __eq__(self, other):
        if isinstance(other, (RationalFn, Polynomial, int, Fraction)):
            o = RationalFn.lift(other)
            if self.den == o.den:
                return self.num == o.num
            return (self.num * o.den - o.num * self.den).is_zero()
        return NotImplemented

    def __hash__(self):
        # value at a fixed pseudo-random point mod a prime: equal fractions hash equally
        if self.den.is_constant():
            return hash(self.as_polynomial())
        vs = self.num.variables() | self.den.variables()
        pt = {v: hash_point(v) for v in vs}
        d = self.den.evaluate_mod(pt, _HASH_PRIME)
        if d == 0:
            return 0
        return hash(self.num.evaluate_mod(pt, _HASH_PRIME) * pow(d, -1, _HASH_PRIME) % _HASH_PRIME)

    def evaluate(self, values):
        d = self.den.evaluate(values)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at point")
        return Fraction(self.num.evaluate(values)) / d

    def __str__(self):
        if self.den.is_constant():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RationalFn({str(self)!r})"
