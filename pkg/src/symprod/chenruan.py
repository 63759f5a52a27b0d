"""Chen-Ruan cohomology of the symmetric product stack of A_r.

Weighted partitions are expanded into the fixed-point class basis by
distributing every cycle over the fixed points with localized
coefficients; the orbifold Poincare pairing is diagonal there, with
diagonal entries H(sigma_k, sigma_k)-products times tangent weights.
A direct matching-sum formula for the pairing is kept alongside as a
validated accelerator.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .algebra import RatFunc2
from .errors import DegenerateBasisError
from .partitions import (
    Label,
    MultiPartition,
    WeightedPartition,
    aut_order_weighted,
    centralizer_order,
    mp_aut_order,
    mp_size,
    multipartition,
    underlying,
    wp_size,
)
from .surface import TangentWeights, class_of, integrate


class CRClass:
    """Linear combination of fixed-point classes of [Sym^n(A_r)]."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[MultiPartition, RatFunc2] | None = None):
        self.n = n
        clean: dict[MultiPartition, RatFunc2] = {}
        if terms:
            for mp, c in terms.items():
                if mp_size(mp) != n:
                    raise ValueError(f"multipartition {mp} has size != {n}")
                if not c.is_zero():
                    clean[mp] = c
        self.terms = clean

    def __add__(self, other: CRClass) -> CRClass:
        if self.n != other.n:
            raise ValueError("cannot add classes of different symmetric products")
        out = dict(self.terms)
        for mp, c in other.terms.items():
            s = out.get(mp)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(mp, None)
            else:
                out[mp] = s
        res = CRClass.__new__(CRClass)
        res.n = self.n
        res.terms = out
        return res

    def scale(self, c) -> CRClass:
        c = RatFunc2.lift(c)
        res = CRClass.__new__(CRClass)
        res.n = self.n
        res.terms = {} if c.is_zero() else {mp: v * c for mp, v in self.terms.items()}
        return res

    def coefficient(self, mp: MultiPartition) -> RatFunc2:
        return self.terms.get(mp, RatFunc2.zero())

    def __eq__(self, other) -> bool:
        return isinstance(other, CRClass) and self.n == other.n and self.terms == other.terms

    def __repr__(self) -> str:
        return f"CRClass(n={self.n}, {len(self.terms)} fixed-point terms)"


def t_weight(mp: MultiPartition, w: TangentWeights) -> RatFunc2:
    """Product of tangent weights (L_k R_k)^(length of sigma_k)."""
    out = RatFunc2.one()
    for k, comp in enumerate(mp, start=1):
        if comp:
            out = out * w.LR(k) ** len(comp)
    return out


_EXPAND_CACHE: dict[tuple, CRClass] = {}


def expand(wp: WeightedPartition, w: TangentWeights) -> CRClass:
    """Fixed-point expansion of a cohomology-weighted partition.

    Every cycle i(eta) is distributed over the fixed points through
    eta = sum_k (eta|_{x_k} / L_k R_k) [x_k]; identical multipartitions
    are merged, with the automorphism-ratio normalization that makes the
    coefficients exactly the components in the fixed-point basis.
    """
    cache_key = (w.r, wp)
    cached = _EXPAND_CACHE.get(cache_key)
    if cached is not None:
        return cached
    r = w.r
    n = wp_size(wp)
    slots = list(wp)
    rows = []
    for _, label in slots:
        sc = class_of(label, w)
        rows.append([sc.coords[k - 1] / w.LR(k) for k in w.points()])
    acc: dict[MultiPartition, RatFunc2] = {}
    assignment = [0] * len(slots)

    def rec(m: int, coeff: RatFunc2):
        if m == len(slots):
            groups: list[list[int]] = [[] for _ in range(r + 1)]
            for slot, k in enumerate(assignment):
                groups[k].append(slots[slot][0])
            mp = multipartition(groups)
            prev = acc.get(mp)
            acc[mp] = coeff if prev is None else prev + coeff
            return
        for k in range(r + 1):
            c = rows[m][k]
            if c.is_zero():
                continue
            assignment[m] = k
            rec(m + 1, coeff * c)

    rec(0, RatFunc2.one())
    aut_wp = aut_order_weighted(wp)
    terms = {
        mp: v * Fraction(mp_aut_order(mp), aut_wp)
        for mp, v in acc.items()
        if not v.is_zero()
    }
    result = CRClass(n, terms)
    _EXPAND_CACHE[cache_key] = result
    return result


def coefficient(wp: WeightedPartition, mp: MultiPartition, w: TangentWeights) -> RatFunc2:
    """Component of the weighted partition on one fixed-point class."""
    return expand(wp, w).coefficient(mp)


def pairing_fixed(mp1: MultiPartition, mp2: MultiPartition, w: TangentWeights) -> RatFunc2:
    """Orbifold pairing of fixed-point classes: diagonal, H(sigma)t(sigma)."""
    if mp_size(mp1) != mp_size(mp2):
        raise ValueError("fixed-point classes of different total size")
    if mp1 != mp2:
        return RatFunc2.zero()
    h = Fraction(1)
    for comp in mp1:
        if comp:
            h /= centralizer_order(comp)
    return t_weight(mp1, w) * h


_PAIRING_CACHE: dict[tuple, RatFunc2] = {}


def pairing(wp1: WeightedPartition, wp2: WeightedPartition, w: TangentWeights) -> RatFunc2:
    """Orbifold Poincare pairing through the fixed-point basis."""
    if wp_size(wp1) != wp_size(wp2):
        raise ValueError("weighted partitions of different sizes")
    key = (w.r, wp1, wp2)
    cached = _PAIRING_CACHE.get(key)
    if cached is not None:
        return cached
    a = expand(wp1, w)
    b = expand(wp2, w)
    total = RatFunc2.zero()
    small, big = (a.terms, b.terms) if len(a.terms) <= len(b.terms) else (b.terms, a.terms)
    for mp, ca in small.items():
        cb = big.get(mp)
        if cb is None:
            continue
        total = total + ca * cb * pairing_fixed(mp, mp, w)
    _PAIRING_CACHE[key] = total
    _PAIRING_CACHE[(w.r, wp2, wp1)] = total
    return total


_INT_CACHE: dict[tuple, RatFunc2] = {}


def _integral(l1: Label, l2: Label, w: TangentWeights) -> RatFunc2:
    key = (w.r, l1, l2)
    cached = _INT_CACHE.get(key)
    if cached is None:
        cached = integrate(class_of(l1, w), class_of(l2, w), w)
        _INT_CACHE[key] = cached
        _INT_CACHE[(w.r, l2, l1)] = cached
    return cached


def pairing_direct(wp1: WeightedPartition, wp2: WeightedPartition, w: TangentWeights) -> RatFunc2:
    """Matching-sum pairing: vanishes unless the cycle-type multiplicities
    agree, and otherwise sums surface integrals over length-preserving
    matchings of cycles, normalized by the part product and both
    automorphism orders. Validated against the fixed-basis path."""
    by_size1: dict[int, list[Label]] = defaultdict(list)
    by_size2: dict[int, list[Label]] = defaultdict(list)
    for p, label in wp1:
        by_size1[p].append(label)
    for p, label in wp2:
        by_size2[p].append(label)
    if {p: len(v) for p, v in by_size1.items()} != {p: len(v) for p, v in by_size2.items()}:
        return RatFunc2.zero()
    total = RatFunc2.one()
    for p, labels1 in by_size1.items():
        labels2 = by_size2[p]
        block = RatFunc2.zero()
        for perm in permutations(range(len(labels2))):
            term = RatFunc2.one()
            for j, l1 in enumerate(labels1):
                term = term * _integral(l1, labels2[perm[j]], w)
                if term.is_zero():
                    break
            block = block + term
        if block.is_zero():
            return RatFunc2.zero()
        total = total * block
    parts_product = 1
    for p, _ in wp1:
        parts_product *= p
    norm = Fraction(
        1, parts_product * aut_order_weighted(wp1) * aut_order_weighted(wp2)
    )
    return total * norm


# ---------------------------------------------------------------------------
# Gram matrices and dual bases
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PairingMatrix:
    """An ordered basis together with its pairing Gram matrix.

    The matrix is symmetric and block-diagonal across underlying
    partitions (the pairing vanishes on cycle-type multiplicity mismatch).
    """

    basis: tuple[WeightedPartition, ...]
    gram: tuple[tuple[RatFunc2, ...], ...]


def pairing_matrix(basis, w: TangentWeights) -> PairingMatrix:
    basis = tuple(basis)
    gram = gram_matrix(basis, w)
    return PairingMatrix(basis=basis, gram=tuple(tuple(row) for row in gram))


def _blocks(basis: list[WeightedPartition]) -> list[list[int]]:
    groups: dict[tuple, list[int]] = defaultdict(list)
    for idx, wp in enumerate(basis):
        groups[underlying(wp)].append(idx)
    return list(groups.values())


def gram_matrix(basis, w: TangentWeights) -> list[list[RatFunc2]]:
    """Pairing Gram matrix; block-diagonal across underlying partitions."""
    basis = list(basis)
    size = len(basis)
    zero = RatFunc2.zero()
    gram = [[zero] * size for _ in range(size)]
    for block in _blocks(basis):
        for pos, i in enumerate(block):
            for j in block[pos:]:
                val = pairing(basis[i], basis[j], w)
                gram[i][j] = val
                gram[j][i] = val
    return gram


def _invert(matrix: list[list[RatFunc2]]) -> list[list[RatFunc2]]:
    size = len(matrix)
    zero, one = RatFunc2.zero(), RatFunc2.one()
    aug = [
        list(row) + [one if i == j else zero for j in range(size)]
        for i, row in enumerate(matrix)
    ]
    for col in range(size):
        pivot = next(
            (row for row in range(col, size) if not aug[row][col].is_zero()), None
        )
        if pivot is None:
            raise DegenerateBasisError("singular Gram block")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for row in range(size):
            if row != col and not aug[row][col].is_zero():
                f = aug[row][col]
                aug[row] = [x - f * y for x, y in zip(aug[row], aug[col])]
    return [row[size:] for row in aug]


def gram_inverse(basis, w: TangentWeights) -> list[list[RatFunc2]]:
    """Inverse of the Gram matrix, computed blockwise."""
    basis = list(basis)
    size = len(basis)
    zero = RatFunc2.zero()
    out = [[zero] * size for _ in range(size)]
    gram = gram_matrix(basis, w)
    for block in _blocks(basis):
        sub = [[gram[i][j] for j in block] for i in block]
        inv = _invert(sub)
        for a, i in enumerate(block):
            for b, j in enumerate(block):
                out[i][j] = inv[a][b]
    return out


def dual_basis(basis, w: TangentWeights) -> list[CRClass]:
    """Classes dual to the basis under the orbifold pairing."""
    basis = list(basis)
    if not basis:
        raise ValueError("empty basis")
    n = wp_size(basis[0])
    inv = gram_inverse(basis, w)
    expansions = [expand(wp, w) for wp in basis]
    duals = []
    for j in range(len(basis)):
        acc = CRClass(n)
        for c in range(len(basis)):
            if not inv[c][j].is_zero():
                acc = acc + expansions[c].scale(inv[c][j])
        duals.append(acc)
    return duals


def clear_caches() -> None:
    _PAIRING_CACHE.clear()
    _INT_CACHE.clear()
    _EXPAND_CACHE.clear()
