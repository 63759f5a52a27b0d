"""Rational functions in t1, t2 with a canonical form.

Canonical form: gcd(num, den) = 1, den integer-primitive with positive
lexicographically-leading coefficient (t1-major). Equality is then
structural.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import MalformedInputError
from .poly import Poly2, poly2_divexact, poly2_from_text, poly2_gcd, poly2_to_text


class RatFunc2:
    """Element of Q(t1, t2), always stored in canonical form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly2, den: Poly2 | None = None):
        if den is None:
            den = Poly2.one()
        if den.is_zero():
            raise MalformedInputError("rational function with zero denominator")
        if num.is_zero():
            num, den = Poly2.zero(), Poly2.one()
        else:
            g = poly2_gcd(num, den)
            if not g.is_const():
                num = poly2_divexact(num, g)
                den = poly2_divexact(den, g)
            c = den.content()
            if den.leading_coefficient() < 0:
                c = -c
            if c != 1:
                num = num.scale(1 / c)
                den = den.scale(1 / c)
        self.num = num
        self.den = den
        self._hash: int | None = None

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls) -> RatFunc2:
        return _RF_ZERO

    @classmethod
    def one(cls) -> RatFunc2:
        return _RF_ONE

    @classmethod
    def const(cls, c) -> RatFunc2:
        return cls(Poly2.const(Fraction(c)))

    @classmethod
    def from_poly(cls, p: Poly2) -> RatFunc2:
        return cls(p)

    @staticmethod
    def lift(x) -> RatFunc2:
        if isinstance(x, RatFunc2):
            return x
        if isinstance(x, Poly2):
            return RatFunc2(x)
        if isinstance(x, (int, Fraction)):
            return RatFunc2.const(x)
        raise TypeError(f"cannot lift {type(x).__name__} to RatFunc2")

    # -- queries ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_const(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def const_value(self) -> Fraction:
        return self.num.const_value() / self.den.const_value()

    # -- field operations --------------------------------------------------------

    def __add__(self, other) -> RatFunc2:
        other = RatFunc2.lift(other)
        return RatFunc2(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RatFunc2:
        return RatFunc2(-self.num, self.den)

    def __sub__(self, other) -> RatFunc2:
        return self + (-RatFunc2.lift(other))

    def __rsub__(self, other) -> RatFunc2:
        return RatFunc2.lift(other) + (-self)

    def __mul__(self, other) -> RatFunc2:
        other = RatFunc2.lift(other)
        return RatFunc2(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc2:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc2(self.den, self.num)

    def __truediv__(self, other) -> RatFunc2:
        return self * RatFunc2.lift(other).inverse()

    def __rtruediv__(self, other) -> RatFunc2:
        return RatFunc2.lift(other) * self.inverse()

    def __pow__(self, k: int) -> RatFunc2:
        if k < 0:
            return self.inverse() ** (-k)
        out = _RF_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Poly2)):
            other = RatFunc2.lift(other)
        return isinstance(other, RatFunc2) and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- evaluation ---------------------------------------------------------------

    def evaluate(self, v1: Fraction, v2: Fraction) -> Fraction:
        d = self.den.evaluate(v1, v2)
        if d == 0:
            raise ZeroDivisionError("pole of rational function at evaluation point")
        return self.num.evaluate(v1, v2) / d

    def subs_t2_minus_t1(self) -> tuple[list[Fraction], list[Fraction]]:
        """Numerator and denominator after t2 = -t1, as univariate polys."""
        return self.num.subs_t2_minus_t1(), self.den.subs_t2_minus_t1()

    # -- text form -------------------------------------------------------------------

    def __str__(self) -> str:
        return ratfunc_to_text(self)

    def __repr__(self) -> str:
        return f"RatFunc2({ratfunc_to_text(self)})"


_RF_ZERO = RatFunc2(Poly2.zero())
_RF_ONE = RatFunc2(Poly2.one())


def ratfunc_normalize(f: RatFunc2) -> RatFunc2:
    """Return the canonical representative (idempotent; RatFunc2 stores one)."""
    return RatFunc2(f.num, f.den)


def ratfunc_to_text(f: RatFunc2) -> str:
    """Canonical string: "num" when den = 1, else "(num)/(den)"."""
    if f.den == Poly2.one():
        return poly2_to_text(f.num)
    return f"({poly2_to_text(f.num)})/({poly2_to_text(f.den)})"


def ratfunc_from_text(text: str) -> RatFunc2:
    s = text.strip()
    if s.startswith("(") and ")/(" in s and s.endswith(")"):
        left, right = s.split(")/(", 1)
        return RatFunc2(poly2_from_text(left[1:]), poly2_from_text(right[:-1]))
    return RatFunc2(poly2_from_text(s))
