"""Truncated power series in u and s_1..s_r with RatFunc2 coefficients.

Truncation is a per-variable box: coefficients are kept for u-exponent
a <= u_order and s_k-exponent d_k <= s_orders[k]. Box truncation commutes
with ring operations, so products of truncations agree with truncations
of full products.
"""

from __future__ import annotations

from ..errors import EmptyOrderError, ShapeError
from .ratfunc import RatFunc2

Key = tuple[int, tuple[int, ...]]


class TruncSeries:
    __slots__ = ("u_order", "s_orders", "coeffs")

    def __init__(self, u_order: int, s_orders, coeffs: dict[Key, RatFunc2] | None = None):
        if u_order < 0 or any(d < 0 for d in s_orders):
            raise ShapeError("truncation orders must be nonnegative")
        self.u_order = int(u_order)
        self.s_orders = tuple(int(d) for d in s_orders)
        clean: dict[Key, RatFunc2] = {}
        if coeffs:
            for (a, ds), c in coeffs.items():
                ds = tuple(ds)
                if len(ds) != len(self.s_orders):
                    raise ShapeError("s-exponent tuple has wrong length")
                if a > self.u_order or any(d > dmax for d, dmax in zip(ds, self.s_orders)):
                    continue
                if not c.is_zero():
                    clean[(a, ds)] = c
        self.coeffs = clean

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, u_order: int, s_orders) -> TruncSeries:
        return cls(u_order, s_orders)

    @classmethod
    def one(cls, u_order: int, s_orders) -> TruncSeries:
        zeros = (0,) * len(tuple(s_orders))
        return cls(u_order, s_orders, {(0, zeros): RatFunc2.one()})

    @classmethod
    def const(cls, value, u_order: int, s_orders) -> TruncSeries:
        zeros = (0,) * len(tuple(s_orders))
        return cls(u_order, s_orders, {(0, zeros): RatFunc2.lift(value)})

    @classmethod
    def monomial(cls, a: int, ds, value, u_order: int, s_orders) -> TruncSeries:
        return cls(u_order, s_orders, {(a, tuple(ds)): RatFunc2.lift(value)})

    # -- queries ------------------------------------------------------------------

    def shape(self) -> tuple[int, tuple[int, ...]]:
        return (self.u_order, self.s_orders)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, a: int, ds) -> RatFunc2:
        return self.coeffs.get((a, tuple(ds)), RatFunc2.zero())

    def constant_term(self) -> RatFunc2:
        return self.coefficient(0, (0,) * len(self.s_orders))

    def monomials(self):
        """Sorted (a, ds, coefficient) triples."""
        for key in sorted(self.coeffs):
            yield key[0], key[1], self.coeffs[key]

    def _check_shape(self, other: TruncSeries) -> None:
        if self.shape() != other.shape():
            raise ShapeError(
                f"truncation orders differ: {self.shape()} vs {other.shape()}"
            )

    # -- ring operations -------------------------------------------------------------

    def __add__(self, other: TruncSeries) -> TruncSeries:
        self._check_shape(other)
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            s = out.get(key)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return self._wrap(out)

    def __neg__(self) -> TruncSeries:
        return self._wrap({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        return self + (-other)

    def __mul__(self, other: TruncSeries) -> TruncSeries:
        self._check_shape(other)
        out: dict[Key, RatFunc2] = {}
        smax = self.s_orders
        for (a1, d1), c1 in self.coeffs.items():
            for (a2, d2), c2 in other.coeffs.items():
                a = a1 + a2
                if a > self.u_order:
                    continue
                ds = tuple(x + y for x, y in zip(d1, d2))
                if any(d > dmax for d, dmax in zip(ds, smax)):
                    continue
                key = (a, ds)
                prod = c1 * c2
                s = out.get(key)
                s = prod if s is None else s + prod
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return self._wrap(out)

    def scale(self, value) -> TruncSeries:
        c = RatFunc2.lift(value)
        if c.is_zero():
            return TruncSeries(self.u_order, self.s_orders)
        return self._wrap({k: v * c for k, v in self.coeffs.items()})

    def __pow__(self, k: int) -> TruncSeries:
        if k < 0:
            return self.inverse() ** (-k)
        out = TruncSeries.one(self.u_order, self.s_orders)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> TruncSeries:
        """Multiplicative inverse; requires an invertible constant term."""
        c0 = self.constant_term()
        if c0.is_zero():
            raise ZeroDivisionError("series has no invertible constant term")
        # 1/(c0(1+N)) = (1/c0) * sum (-N)^k, N nilpotent in the truncated ring
        n = self.scale(c0.inverse()) - TruncSeries.one(self.u_order, self.s_orders)
        bound = self.u_order + sum(self.s_orders)
        out = TruncSeries.one(self.u_order, self.s_orders)
        power = TruncSeries.one(self.u_order, self.s_orders)
        sign = 1
        for _ in range(bound):
            power = power * n
            if power.is_zero():
                break
            sign = -sign
            out = out + (power if sign > 0 else -power)
        return out.scale(c0.inverse())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncSeries)
            and self.shape() == other.shape()
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.shape(), tuple(sorted(self.coeffs.items()))))

    # -- calculus ----------------------------------------------------------------------

    def d_du(self) -> TruncSeries:
        """d/du; the result carries u_order - 1 (the top coefficient is lost)."""
        if self.u_order == 0:
            raise EmptyOrderError("cannot differentiate a series truncated at u^0")
        out: dict[Key, RatFunc2] = {}
        for (a, ds), c in self.coeffs.items():
            if a >= 1:
                out[(a - 1, ds)] = c * a
        return TruncSeries(self.u_order - 1, self.s_orders, out)

    def s_scale_d(self, ell: int) -> TruncSeries:
        """The degree-preserving operator s_ell * d/d(s_ell); ell is 1-based."""
        if not 1 <= ell <= len(self.s_orders):
            raise IndexError(f"s-index {ell} out of range 1..{len(self.s_orders)}")
        out: dict[Key, RatFunc2] = {}
        for (a, ds), c in self.coeffs.items():
            d = ds[ell - 1]
            if d:
                out[(a, ds)] = c * d
        return self._wrap(out)

    # -- reshaping ----------------------------------------------------------------------

    def truncate(self, u_order: int, s_orders) -> TruncSeries:
        """Restriction to smaller (or equal) truncation orders."""
        s_orders = tuple(s_orders)
        if u_order > self.u_order or any(d > dmax for d, dmax in zip(s_orders, self.s_orders)):
            raise ShapeError("cannot truncate to larger orders")
        return TruncSeries(u_order, s_orders, self.coeffs)

    def _wrap(self, coeffs: dict[Key, RatFunc2]) -> TruncSeries:
        out = TruncSeries.__new__(TruncSeries)
        out.u_order = self.u_order
        out.s_orders = self.s_orders
        out.coeffs = coeffs
        return out

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        chunks = []
        for a, ds, c in self.monomials():
            mono = []
            if a:
                mono.append("u" if a == 1 else f"u^{a}")
            for k, d in enumerate(ds, start=1):
                if d:
                    mono.append(f"s{k}" if d == 1 else f"s{k}^{d}")
            body = "*".join(mono) if mono else "1"
            chunks.append(f"({c})*{body}")
        return " + ".join(chunks)

    def __repr__(self) -> str:
        return f"TruncSeries(u_order={self.u_order}, s_orders={self.s_orders}, {self})"


def series_arith(a: TruncSeries, b: TruncSeries, op: str) -> TruncSeries:
    """Ring operation with explicit symbol; op is one of '+', '-', '*'."""
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op in ("*", "x", "\u00d7"):
        return a * b
    raise ValueError(f"unknown series operation {op!r}")


def series_d_du(f: TruncSeries) -> TruncSeries:
    return f.d_du()


def series_s_scale_d(f: TruncSeries, ell: int) -> TruncSeries:
    return f.s_scale_d(ell)
