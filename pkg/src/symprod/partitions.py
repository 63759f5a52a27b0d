"""Partitions, cohomology-weighted partitions and multipartitions.

Conventions:
  * a Partition is a tuple of positive ints, weakly decreasing;
  * a weight label is one of
        ("1",)        the identity class
        ("E", i)      the i-th exceptional curve
        ("w", k)      the k-th dual divisor
        ("x", k)      the k-th fixed-point class
        ("gen", obj)  an arbitrary localized surface class
  * a WeightedPartition is a tuple of (part, label) pairs in canonical order;
  * a MultiPartition is a tuple of partitions, one per fixed point.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import product
from math import factorial, lcm

Partition = tuple[int, ...]
Label = tuple
WeightedPair = tuple[int, Label]
WeightedPartition = tuple[WeightedPair, ...]
MultiPartition = tuple[Partition, ...]

ONE: Label = ("1",)


def ecurve(i: int) -> Label:
    return ("E", int(i))


def omega(k: int) -> Label:
    return ("w", int(k))


def fixedpt(k: int) -> Label:
    return ("x", int(k))


def general(surface_class) -> Label:
    return ("gen", surface_class)


_KIND_RANK = {"1": 0, "E": 1, "w": 2, "x": 3, "gen": 4}


def label_key(label: Label):
    kind = label[0]
    rank = _KIND_RANK[kind]
    if kind == "1":
        return (rank, 0)
    if kind == "gen":
        return (rank, repr(label[1]))
    return (rank, label[1])


def partition(parts) -> Partition:
    ps = tuple(sorted((int(p) for p in parts), reverse=True))
    if any(p <= 0 for p in ps):
        raise ValueError("partition parts must be positive")
    return ps


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n, in a fixed deterministic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[Partition] = []

    def rec(remaining: int, cap: int, acc: list[int]):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(min(cap, remaining), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(n, n, [])
    return out


def aut_order(lam: Partition) -> int:
    """Order of Aut(lambda): the product of multiplicity factorials."""
    out = 1
    for m in Counter(lam).values():
        out *= factorial(m)
    return out


def centralizer_order(lam: Partition) -> int:
    """z_lambda = prod_i i^{m_i} m_i!, the centralizer order in S_n."""
    out = 1
    for part, m in Counter(lam).items():
        out *= part**m * factorial(m)
    return out


def cycle_order(lam: Partition) -> int:
    """lcm of the parts: the order of any permutation of this cycle type."""
    if not lam:
        return 1
    return lcm(*lam)


def age(lam: Partition, n: int) -> int:
    if sum(lam) != n:
        raise ValueError(f"partition {lam} is not a partition of {n}")
    return n - len(lam)


# ---------------------------------------------------------------------------
# weighted partitions
# ---------------------------------------------------------------------------

def weighted_partition(pairs) -> WeightedPartition:
    wp = tuple(
        sorted(
            ((int(p), label) for p, label in pairs),
            key=lambda pl: (-pl[0], label_key(pl[1])),
        )
    )
    if any(p <= 0 for p, _ in wp):
        raise ValueError("weighted-partition parts must be positive")
    return wp


def wp_size(wp: WeightedPartition) -> int:
    return sum(p for p, _ in wp)


def underlying(wp: WeightedPartition) -> Partition:
    return partition(p for p, _ in wp)


def aut_order_weighted(wp: WeightedPartition) -> int:
    """Order of the stabilizer of the multiset of (part, weight) pairs."""
    out = 1
    for m in Counter(wp).values():
        out *= factorial(m)
    return out


def enumerate_sub_splittings(
    wp: WeightedPartition,
) -> list[tuple[WeightedPartition, WeightedPartition]]:
    """All ordered pairs (theta, nu) of complementary sub-multisets of wp.

    Each distinct multiset pair is listed exactly once; the count is the
    product of (multiplicity + 1) over distinct weighted pairs.
    """
    distinct = sorted(Counter(wp).items(), key=lambda kv: (-kv[0][0], label_key(kv[0][1])))
    out = []
    ranges = [range(m + 1) for _, m in distinct]
    for picks in product(*ranges):
        theta = []
        nu = []
        for (pair, m), take in zip(distinct, picks):
            theta.extend([pair] * take)
            nu.extend([pair] * (m - take))
        out.append((weighted_partition(theta), weighted_partition(nu)))
    return out


# ---------------------------------------------------------------------------
# multipartitions (fixed-point classes)
# ---------------------------------------------------------------------------

def multipartition(components) -> MultiPartition:
    return tuple(partition(c) for c in components)


def mp_size(mp: MultiPartition) -> int:
    return sum(sum(c) for c in mp)


def mp_length(mp: MultiPartition) -> int:
    return sum(len(c) for c in mp)


def mp_aut_order(mp: MultiPartition) -> int:
    out = 1
    for c in mp:
        out *= aut_order(c)
    return out


def is_subpartition(small: Partition, big: Partition) -> bool:
    cs, cb = Counter(small), Counter(big)
    return all(cb[p] >= m for p, m in cs.items())


def partition_diff(big: Partition, small: Partition) -> Partition:
    cb = Counter(big)
    cb.subtract(Counter(small))
    if any(m < 0 for m in cb.values()):
        raise ValueError("not a subpartition")
    parts = []
    for p, m in cb.items():
        parts.extend([p] * m)
    return partition(parts)


def mp_contains(big: MultiPartition, small: MultiPartition) -> bool:
    return len(big) == len(small) and all(
        is_subpartition(s, b) for s, b in zip(small, big)
    )


def mp_diff(big: MultiPartition, small: MultiPartition) -> MultiPartition:
    return tuple(partition_diff(b, s) for b, s in zip(big, small))


def class_equation_check(n: int) -> Fraction:
    """sum over partitions of n of n!/z_lambda (equals n! iff consistent)."""
    total = Fraction(0)
    for lam in partitions_of(n):
        total += Fraction(factorial(n), centralizer_order(lam))
    return total
