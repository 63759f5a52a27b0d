"""Sparse bivariate polynomials over Q, plus dense univariate helpers.

Poly2 is the coefficient workhorse for everything equivariant: exact
polynomials in the torus weights t1, t2 with Fraction coefficients.
Gcds are computed by content/primitive-part recursion so that rational
functions built on top of Poly2 admit a canonical form.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd as _int_gcd

Monomial = tuple[int, int]

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# dense univariate polynomials over Q (lists of Fractions, index = degree)
# ---------------------------------------------------------------------------

def _u_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _u_add(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    n = max(len(p), len(q))
    out = [_ZERO] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return _u_trim(out)


def _u_scale(p: list[Fraction], c: Fraction) -> list[Fraction]:
    if c == 0:
        return []
    return [ci * c for ci in p]


def _u_mul(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    if not p or not q:
        return []
    out = [_ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] += a * b
    return _u_trim(out)


def _u_divmod(p: list[Fraction], q: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    if not q:
        raise ZeroDivisionError("univariate division by zero polynomial")
    rem = list(p)
    quo = [_ZERO] * max(0, len(p) - len(q) + 1)
    dq = len(q) - 1
    lc = q[-1]
    while len(rem) - 1 >= dq and rem:
        shift = len(rem) - 1 - dq
        c = rem[-1] / lc
        quo[shift] = c
        for j, b in enumerate(q):
            rem[shift + j] -= c * b
        _u_trim(rem)
    return quo, rem


def _u_gcd(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    """Monic gcd in Q[x]; gcd(0, 0) = 0."""
    a, b = list(p), list(q)
    while b:
        a, b = b, _u_divmod(a, b)[1]
    if a:
        lc = a[-1]
        a = [c / lc for c in a]
    return a


def _u_is_unit(p: list[Fraction]) -> bool:
    return len(p) == 1


# ---------------------------------------------------------------------------
# Poly2
# ---------------------------------------------------------------------------

class Poly2:
    """Polynomial in t1, t2 with Fraction coefficients, stored sparsely.

    Instances are immutable; no zero coefficients are stored.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: dict[Monomial, Fraction] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[(int(mono[0]), int(mono[1]))] = c
        self.terms = clean
        self._hash: int | None = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> Poly2:
        return _P2_ZERO

    @classmethod
    def one(cls) -> Poly2:
        return _P2_ONE

    @classmethod
    def const(cls, c) -> Poly2:
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def t1(cls) -> Poly2:
        return _P2_T1

    @classmethod
    def t2(cls) -> Poly2:
        return _P2_T2

    @classmethod
    def monomial(cls, e1: int, e2: int, c=1) -> Poly2:
        return cls({(e1, e2): Fraction(c)})

    @classmethod
    def linear(cls, c1, c2) -> Poly2:
        """c1*t1 + c2*t2."""
        return cls({(1, 0): Fraction(c1), (0, 1): Fraction(c2)})

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def const_value(self) -> Fraction:
        """The value of a constant polynomial."""
        if not self.terms:
            return _ZERO
        if self.is_const():
            return self.terms[(0, 0)]
        raise ValueError("polynomial is not constant")

    def leading_monomial(self) -> Monomial:
        """Lexicographically largest monomial, t1-major."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms)

    def leading_coefficient(self) -> Fraction:
        return self.terms[self.leading_monomial()]

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(e1 + e2 for e1, e2 in self.terms)

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: Poly2) -> Poly2:
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, _ZERO) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        p = Poly2.__new__(Poly2)
        p.terms = out
        p._hash = None
        return p

    def __neg__(self) -> Poly2:
        p = Poly2.__new__(Poly2)
        p.terms = {m: -c for m, c in self.terms.items()}
        p._hash = None
        return p

    def __sub__(self, other: Poly2) -> Poly2:
        return self + (-other)

    def __mul__(self, other) -> Poly2:
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(other))
        out: dict[Monomial, Fraction] = {}
        for (a1, a2), c in self.terms.items():
            for (b1, b2), d in other.terms.items():
                mono = (a1 + b1, a2 + b2)
                s = out.get(mono, _ZERO) + c * d
                if s:
                    out[mono] = s
                else:
                    out.pop(mono, None)
        p = Poly2.__new__(Poly2)
        p.terms = out
        p._hash = None
        return p

    __rmul__ = __mul__

    def scale(self, c: Fraction) -> Poly2:
        if not c:
            return _P2_ZERO
        p = Poly2.__new__(Poly2)
        p.terms = {m: v * c for m, v in self.terms.items()}
        p._hash = None
        return p

    def __pow__(self, k: int) -> Poly2:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = _P2_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly2) and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.terms.items())))
        return self._hash

    # -- evaluation and substitution ------------------------------------------

    def evaluate(self, v1: Fraction, v2: Fraction) -> Fraction:
        total = _ZERO
        for (e1, e2), c in self.terms.items():
            total += c * v1**e1 * v2**e2
        return total

    def subs_t2_minus_t1(self) -> list[Fraction]:
        """Substitute t2 = -t1; returns a dense univariate poly in t1."""
        out: list[Fraction] = []
        for (e1, e2), c in self.terms.items():
            d = e1 + e2
            if len(out) <= d:
                out.extend([_ZERO] * (d + 1 - len(out)))
            out[d] += c * (-1) ** e2
        return _u_trim(out)

    # -- normalization helpers -------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational c with self/c integer-primitive (0 for zero)."""
        if not self.terms:
            return _ZERO
        num = 0
        den = 1
        for c in self.terms.values():
            num = _int_gcd(num, abs(c.numerator))
            den = den * c.denominator // _int_gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> Poly2:
        """Integer-primitive multiple with positive lex-leading coefficient."""
        if not self.terms:
            return _P2_ZERO
        c = self.content()
        if self.leading_coefficient() < 0:
            c = -c
        return self.scale(1 / c)

    # -- string form -------------------------------------------------------------

    def __str__(self) -> str:
        return poly2_to_text(self)

    def __repr__(self) -> str:
        return f"Poly2({poly2_to_text(self)})"


_P2_ZERO = Poly2()
_P2_ONE = Poly2({(0, 0): _ONE})
_P2_T1 = Poly2({(1, 0): _ONE})
_P2_T2 = Poly2({(0, 1): _ONE})


# ---------------------------------------------------------------------------
# gcd and exact division (content/primitive-part recursion)
# ---------------------------------------------------------------------------

def _to_recursive(p: Poly2) -> dict[int, list[Fraction]]:
    """View in (Q[t2])[t1]: map t1-degree -> dense poly in t2."""
    rec: dict[int, list[Fraction]] = {}
    for (e1, e2), c in p.terms.items():
        coeff = rec.setdefault(e1, [])
        if len(coeff) <= e2:
            coeff.extend([_ZERO] * (e2 + 1 - len(coeff)))
        coeff[e2] += c
    return {d: _u_trim(c) for d, c in rec.items() if _u_trim(list(c))}


def _from_recursive(rec: dict[int, list[Fraction]]) -> Poly2:
    terms: dict[Monomial, Fraction] = {}
    for e1, coeff in rec.items():
        for e2, c in enumerate(coeff):
            if c:
                terms[(e1, e2)] = c
    return Poly2(terms)


def _rec_degree(rec: dict[int, list[Fraction]]) -> int:
    return max(rec) if rec else -1


def _rec_content(rec: dict[int, list[Fraction]]) -> list[Fraction]:
    g: list[Fraction] = []
    for coeff in rec.values():
        g = _u_gcd(g, coeff)
        if _u_is_unit(g):
            return [_ONE]
    return g


def _rec_div_content(rec: dict[int, list[Fraction]], cont: list[Fraction]) -> dict[int, list[Fraction]]:
    if _u_is_unit(cont):
        c = cont[0]
        return {d: _u_scale(p, 1 / c) for d, p in rec.items()}
    out = {}
    for d, p in rec.items():
        q, r = _u_divmod(p, cont)
        if r:
            raise ValueError("content division not exact")
        out[d] = q
    return out


def _rec_prem(a: dict[int, list[Fraction]], b: dict[int, list[Fraction]]) -> dict[int, list[Fraction]]:
    """Pseudo-remainder of a by b in (Q[t2])[t1]."""
    db = _rec_degree(b)
    lb = b[db]
    rem = {d: list(p) for d, p in a.items()}
    while rem and _rec_degree(rem) >= db:
        da = _rec_degree(rem)
        la = rem[da]
        # rem <- lb*rem - la*x^(da-db)*b
        new: dict[int, list[Fraction]] = {}
        for d, p in rem.items():
            new[d] = _u_mul(p, lb)
        for d, p in b.items():
            shifted = d + da - db
            new[shifted] = _u_add(new.get(shifted, []), _u_scale(_u_mul(p, la), Fraction(-1)))
        rem = {d: p for d, p in new.items() if p}
    return rem


def poly2_gcd(a: Poly2, b: Poly2) -> Poly2:
    """Primitive gcd of two bivariate polynomials (positive lex-leading)."""
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    if a.is_const() or b.is_const():
        return _P2_ONE
    if len(a.terms) == 1 and len(b.terms) == 1:
        (a1, a2), = a.terms
        (b1, b2), = b.terms
        return Poly2.monomial(min(a1, b1), min(a2, b2))

    ra, rb = _to_recursive(a), _to_recursive(b)
    ca, cb = _rec_content(ra), _rec_content(rb)
    pa, pb = _rec_div_content(ra, ca), _rec_div_content(rb, cb)
    if _rec_degree(pa) < _rec_degree(pb):
        pa, pb = pb, pa
    while pb:
        rem = _rec_prem(pa, pb)
        pa = pb
        if rem:
            rem = _rec_div_content(rem, _rec_content(rem))
        pb = rem
    cont = _u_gcd(ca, cb)
    g = _from_recursive(pa) * _from_recursive({0: cont})
    return g.primitive()


def poly2_divexact(a: Poly2, b: Poly2) -> Poly2:
    """Exact quotient a/b; raises if the division leaves a remainder."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero():
        return _P2_ZERO
    if b.is_const():
        return a.scale(1 / b.const_value())
    if len(b.terms) == 1:
        (b1, b2), bc = next(iter(b.terms.items()))
        terms = {}
        for (e1, e2), c in a.terms.items():
            if e1 < b1 or e2 < b2:
                raise ValueError("division not exact")
            terms[(e1 - b1, e2 - b2)] = c / bc
        return Poly2(terms)

    ra, rb = _to_recursive(a), _to_recursive(b)
    db = _rec_degree(rb)
    lb = rb[db]
    quo: dict[int, list[Fraction]] = {}
    while ra:
        da = _rec_degree(ra)
        if da < db:
            raise ValueError("division not exact")
        q, r = _u_divmod(ra[da], lb)
        if r:
            raise ValueError("division not exact")
        quo[da - db] = q
        new: dict[int, list[Fraction]] = {d: list(p) for d, p in ra.items()}
        for d, p in rb.items():
            shifted = d + da - db
            new[shifted] = _u_add(new.get(shifted, []), _u_scale(_u_mul(p, q), Fraction(-1)))
        ra = {d: p for d, p in new.items() if p}
    return _from_recursive(quo)


# ---------------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------------

def _format_coefficient(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _format_term(mono: Monomial, c: Fraction) -> str:
    e1, e2 = mono
    parts = []
    if e1:
        parts.append("t1" if e1 == 1 else f"t1^{e1}")
    if e2:
        parts.append("t2" if e2 == 1 else f"t2^{e2}")
    if not parts:
        return _format_coefficient(c)
    body = "*".join(parts)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return _format_coefficient(c) + "*" + body


def poly2_to_text(p: Poly2) -> str:
    """Canonical text form: monomials in descending lex order, t1-major."""
    if p.is_zero():
        return "0"
    chunks = []
    for mono in sorted(p.terms, reverse=True):
        term = _format_term(mono, p.terms[mono])
        if not chunks:
            chunks.append(term)
        elif term.startswith("-"):
            chunks.append("- " + term[1:])
        else:
            chunks.append("+ " + term)
    return " ".join(chunks)


_TERM_RE = re.compile(
    r"^(?P<coef>[+-]?\d+(?:/\d+)?)?"
    r"(?P<v1>\*?t1(?:\^(?P<e1>\d+))?)?"
    r"(?P<v2>\*?t2(?:\^(?P<e2>\d+))?)?$"
)


def poly2_from_text(text: str) -> Poly2:
    """Parse the canonical text form produced by poly2_to_text."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return Poly2.zero()
    # split into signed terms at top level (no parentheses inside a Poly2)
    pieces: list[str] = []
    current = ""
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0 and s[i - 1] not in "+-*/^":
            pieces.append(current)
            current = ch
        else:
            current += ch
    pieces.append(current)
    terms: dict[Monomial, Fraction] = {}
    for piece in pieces:
        sign = 1
        while piece and piece[0] in "+-":
            if piece[0] == "-":
                sign = -sign
            piece = piece[1:]
        m = _TERM_RE.match(piece)
        if not m or not piece:
            raise ValueError(f"cannot parse polynomial term {piece!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else _ONE
        e1 = int(m.group("e1")) if m.group("e1") else (1 if m.group("v1") else 0)
        e2 = int(m.group("e2")) if m.group("e2") else (1 if m.group("v2") else 0)
        mono = (e1, e2)
        terms[mono] = terms.get(mono, _ZERO) + sign * coef
    return Poly2(terms)


# ---------------------------------------------------------------------------
# Poly1: dense univariate polynomials over Q (for characteristic polynomials)
# ---------------------------------------------------------------------------

class Poly1:
    """Univariate polynomial over Q, dense, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly1) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: Poly1) -> Poly1:
        return Poly1(_u_add(list(self.coeffs), list(other.coeffs)))

    def __mul__(self, other: Poly1) -> Poly1:
        return Poly1(_u_mul(list(self.coeffs), list(other.coeffs)))

    def derivative(self) -> Poly1:
        return Poly1([i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x: Fraction) -> Fraction:
        total = _ZERO
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def gcd(self, other: Poly1) -> Poly1:
        return Poly1(_u_gcd(list(self.coeffs), list(other.coeffs)))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        chunks = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if not c:
                continue
            if d == 0:
                body = _format_coefficient(c)
            else:
                var = "x" if d == 1 else f"x^{d}"
                if c == 1:
                    body = var
                elif c == -1:
                    body = "-" + var
                else:
                    body = _format_coefficient(c) + "*" + var
            if not chunks:
                chunks.append(body)
            elif body.startswith("-"):
                chunks.append("- " + body[1:])
            else:
                chunks.append("+ " + body)
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"Poly1({self})"
