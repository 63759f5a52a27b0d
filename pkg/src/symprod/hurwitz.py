"""Hurwitz-type counts in symmetric groups.

H(eta_1, ..., eta_s) is 1/n! times the number of tuples (g_1, ..., g_s)
with prescribed cycle types multiplying to the identity. Three backends:

  * hurwitz       -- the trusted oracle: direct enumeration of tuples
                     (one factor fixed to a class representative, one
                     determined by the product condition);
  * hurwitz_fast  -- class-algebra convolution; the multiplication table
                     is built once per n by running one fixed target
                     representative against the whole group;
  * one_part_double_hurwitz -- the sinh closed form for H(sigma, (2)^b, (k)),
                     cross-validated against the oracle in the test suite.

The refined count H_sigma(left | right) constrains the partial product of
the left factors to lie in the class sigma.

Enumeration is guarded by a budget on n (default 8), overridable through
the SYMPROD_HURWITZ_BUDGET environment variable.
"""

from __future__ import annotations

import os
from fractions import Fraction
from itertools import permutations
from math import factorial

from .errors import ResourceBudgetError
from .partitions import Partition, aut_order, partition

DEFAULT_BUDGET = 8
_BUDGET_ENV = "SYMPROD_HURWITZ_BUDGET"

Perm = tuple[int, ...]


def enumeration_budget() -> int:
    raw = os.environ.get(_BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_BUDGET


def _compose(p: Perm, q: Perm) -> Perm:
    return tuple(p[qi] for qi in q)


def _cycle_type(p: Perm) -> Partition:
    n = len(p)
    seen = bytearray(n)
    parts = []
    for i in range(n):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = 1
                j = p[j]
                length += 1
            parts.append(length)
    parts.sort(reverse=True)
    return tuple(parts)


class _GroupData:
    """Per-n symmetric group tables: class members, sizes, convolution."""

    def __init__(self, n: int):
        self.n = n
        self.members: dict[Partition, list[Perm]] = {}
        for p in permutations(range(n)):
            self.members.setdefault(_cycle_type(p), []).append(p)
        self.classes: list[Partition] = sorted(self.members, reverse=True)
        self.index = {c: i for i, c in enumerate(self.classes)}
        self.sizes = {c: len(self.members[c]) for c in self.classes}
        self.identity_class = (1,) * n if n else ()
        self._structure: list[list[list[int]]] | None = None

    def structure(self) -> list[list[list[int]]]:
        """S[c][a][b] = #{(x, y) in C_a x C_b : x*y = rep_c} for a fixed rep."""
        if self._structure is None:
            k = len(self.classes)
            table = [[[0] * k for _ in range(k)] for _ in range(k)]
            inverses = {}
            for c_idx, c in enumerate(self.classes):
                rep = self.members[c][0]
                row = table[c_idx]
                for cls, elems in self.members.items():
                    a_idx = self.index[cls]
                    for x in elems:
                        inv = inverses.get(x)
                        if inv is None:
                            inv = [0] * self.n
                            for i, xi in enumerate(x):
                                inv[xi] = i
                            inv = tuple(inv)
                            inverses[x] = inv
                        y = _compose(inv, rep)
                        row[a_idx][self.index[_cycle_type(y)]] += 1
            self._structure = table
        return self._structure


_GROUPS: dict[int, _GroupData] = {}
_BRUTE_MEMO: dict[tuple, Fraction] = {}
_FAST_MEMO: dict[tuple, Fraction] = {}
_GJV_MEMO: dict[tuple, Fraction] = {}


def clear_caches() -> None:
    _GROUPS.clear()
    _BRUTE_MEMO.clear()
    _FAST_MEMO.clear()
    _GJV_MEMO.clear()


def _check_budget(n: int) -> None:
    budget = enumeration_budget()
    if n > budget:
        raise ResourceBudgetError(
            f"n = {n} exceeds the enumeration budget {budget} "
            f"(override with {_BUDGET_ENV})",
            budget,
        )


def _group(n: int) -> _GroupData:
    _check_budget(n)
    gd = _GROUPS.get(n)
    if gd is None:
        gd = _GroupData(n)
        _GROUPS[n] = gd
    return gd


def _normalize_profiles(profiles, n: int | None) -> tuple[int, tuple[Partition, ...]]:
    ps = tuple(partition(p) for p in profiles)
    if not ps:
        raise ValueError("at least one ramification profile is required")
    sizes = {sum(p) for p in ps}
    if len(sizes) != 1:
        raise ValueError(f"profiles have mixed sizes {sorted(sizes)}")
    size = sizes.pop()
    if n is not None and n != size:
        raise ValueError(f"profiles are partitions of {size}, not {n}")
    return size, ps


def hurwitz(profiles, n: int | None = None) -> Fraction:
    """Disconnected Hurwitz number by direct enumeration (the oracle)."""
    n, ps = _normalize_profiles(profiles, n)
    if n == 0:
        return Fraction(1)
    _check_budget(n)
    key = (n, tuple(sorted(ps)))
    cached = _BRUTE_MEMO.get(key)
    if cached is not None:
        return cached
    gd = _group(n)
    # order by class size: fix the largest, let the second largest be the
    # factor determined by the product condition, enumerate the rest
    ordered = sorted(ps, key=lambda c: gd.sizes[c], reverse=True)
    fixed = ordered[0]
    count = 0
    if len(ordered) == 1:
        count = 1 if fixed == gd.identity_class else 0
    elif len(ordered) == 2:
        count = gd.sizes[fixed] if ordered[0] == ordered[1] else 0
    else:
        det = ordered[1]
        enum = sorted(ordered[2:], key=lambda c: gd.sizes[c])
        members = [gd.members[c] for c in enum]
        start = gd.members[fixed][0]
        total = 0

        def rec(level: int, current: Perm):
            nonlocal total
            if level == len(members):
                # inverse has the same cycle type as the product itself
                if _cycle_type(current) == det:
                    total += 1
                return
            for g in members[level]:
                rec(level + 1, _compose(current, g))

        rec(0, start)
        count = gd.sizes[fixed] * total
    result = Fraction(count, factorial(n))
    _BRUTE_MEMO[key] = result
    return result


def _distribution(gd: _GroupData, profiles: tuple[Partition, ...]) -> list[int]:
    """T[c] = number of tuples with the given types multiplying to rep_c."""
    k = len(gd.classes)
    vec = [0] * k
    vec[gd.index[gd.identity_class]] = 1
    table = gd.structure()
    for profile in profiles:
        b_idx = gd.index[profile]
        new = [0] * k
        for c_idx in range(k):
            row = table[c_idx]
            total = 0
            for a_idx, t in enumerate(vec):
                if t:
                    total += t * row[a_idx][b_idx]
            new[c_idx] = total
        vec = new
    return vec


def hurwitz_fast(profiles, n: int | None = None) -> Fraction:
    """Same count as hurwitz, through class-algebra convolution."""
    n, ps = _normalize_profiles(profiles, n)
    if n == 0:
        return Fraction(1)
    _check_budget(n)
    key = (n, tuple(sorted(ps)))
    cached = _FAST_MEMO.get(key)
    if cached is not None:
        return cached
    gd = _group(n)
    vec = _distribution(gd, ps)
    result = Fraction(vec[gd.index[gd.identity_class]], factorial(n))
    _FAST_MEMO[key] = result
    return result


def hurwitz_refined(sigma, left, right) -> Fraction:
    """Refined count: the left partial product is constrained to class sigma.

    Satisfies the product identity
        H_sigma(L | R) = z_sigma * H(L, sigma) * H(sigma, R)
    and the sum rule over all sigma of n. A vacuous sigma (n = 0) gives 1.
    """
    sigma = partition(sigma)
    n = sum(sigma)
    if n == 0:
        if any(sum(partition(p)) for p in tuple(left) + tuple(right)):
            raise ValueError("profiles must be partitions of 0 for vacuous sigma")
        return Fraction(1)
    lefts = tuple(partition(p) for p in left)
    rights = tuple(partition(p) for p in right)
    for p in lefts + rights:
        if sum(p) != n:
            raise ValueError(f"profile {p} is not a partition of {n}")
    gd = _group(n)
    dist_l = _distribution(gd, lefts)
    dist_r = _distribution(gd, rights)
    c = gd.index[sigma]
    count = gd.sizes[sigma] * dist_l[c] * dist_r[c]
    return Fraction(count, factorial(n))


# ---------------------------------------------------------------------------
# one-part double Hurwitz numbers via the sinh generating function
# ---------------------------------------------------------------------------

def _sinh_quotient(scale: int, order: int) -> list[Fraction]:
    """Series of sinh(scale*t/2)/(scale*t/2) to the given t-degree."""
    out = [Fraction(0)] * (order + 1)
    m = 0
    while 2 * m <= order:
        out[2 * m] = Fraction(scale ** (2 * m), 4**m * factorial(2 * m + 1))
        m += 1
    return out


def _series_mul(p: list[Fraction], q: list[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j in range(min(order - i, len(q) - 1) + 1):
            if q[j]:
                out[i + j] += a * q[j]
    return out


def _series_inv(p: list[Fraction], order: int) -> list[Fraction]:
    if not p or p[0] == 0:
        raise ZeroDivisionError("series inversion needs a unit constant term")
    out = [Fraction(0)] * (order + 1)
    out[0] = 1 / p[0]
    for m in range(1, order + 1):
        acc = Fraction(0)
        for k in range(1, min(m, len(p) - 1) + 1):
            acc += p[k] * out[m - k]
        out[m] = -acc / p[0]
    return out


def one_part_double_hurwitz(sigma, b: int) -> Fraction:
    """H(sigma, (2)^b, (k)) for k = |sigma| from the closed generating form.

    The t^(b - l(sigma) + 1) coefficient of
        (t/2)/sinh(t/2) * prod_i sinh(sigma_i t/2)/(sigma_i t/2)
    is de-normalized by b!, k^(b-1) and 1/|Aut(sigma)|; the k-normalization
    is pinned by matching the enumeration oracle.
    """
    sigma = partition(sigma)
    k = sum(sigma)
    if k == 0:
        raise ValueError("sigma must be a nonempty partition")
    if b < 0:
        return Fraction(0)
    key = (sigma, b)
    cached = _GJV_MEMO.get(key)
    if cached is not None:
        return cached
    top = b - len(sigma) + 1
    if top < 0 or top % 2 == 1:
        # the generating series is even in t
        _GJV_MEMO[key] = Fraction(0)
        return Fraction(0)
    rhs = _series_inv(_sinh_quotient(1, top), top)
    for part in sigma:
        rhs = _series_mul(rhs, _sinh_quotient(part, top), top)
    coeff = rhs[top]
    result = coeff * factorial(b) * Fraction(k) ** (b - 1) / aut_order(sigma)
    _GJV_MEMO[key] = result
    return result
