"""Shared random builders and oracles for the test suite (seeded, deterministic)."""

from __future__ import annotations

import random
from fractions import Fraction

from symprod.algebra import Poly2, RatFunc2, TruncSeries
from symprod.hurwitz import hurwitz
from symprod.partitions import (
    ONE,
    ecurve,
    fixedpt,
    partition,
    partitions_of,
    weighted_partition,
)


def brute_one_part(sigma, b: int) -> Fraction:
    """Enumeration value of H(sigma, (2)^b, (k)); 0 when no (2)-class exists."""
    sigma = partition(sigma)
    k = sum(sigma)
    if k < 2:
        return hurwitz([sigma, [1] * k], k) if b == 0 else Fraction(0)
    transposition = [2] + [1] * (k - 2)
    return hurwitz([sigma] + [transposition] * b + [[k]], k)


def random_fraction(rng: random.Random, span: int = 6) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, 4))


def random_poly2(rng: random.Random, terms: int = 3, degree: int = 3) -> Poly2:
    out = {}
    for _ in range(rng.randint(0, terms)):
        out[(rng.randint(0, degree), rng.randint(0, degree))] = random_fraction(rng)
    return Poly2(out)


def random_nonzero_poly2(rng: random.Random, terms: int = 3, degree: int = 3) -> Poly2:
    while True:
        p = random_poly2(rng, terms, degree)
        if not p.is_zero():
            return p


def random_ratfunc(rng: random.Random) -> RatFunc2:
    return RatFunc2(random_poly2(rng, 3, 2), random_nonzero_poly2(rng, 2, 2))


def random_series(
    rng: random.Random, u_order: int = 2, s_orders=(2,), terms: int = 4
) -> TruncSeries:
    coeffs = {}
    for _ in range(rng.randint(0, terms)):
        key = (
            rng.randint(0, u_order),
            tuple(rng.randint(0, d) for d in s_orders),
        )
        coeffs[key] = RatFunc2.const(random_fraction(rng))
    return TruncSeries(u_order, s_orders, coeffs)


def divisor_labels(r: int) -> list:
    return [ONE] + [ecurve(i) for i in range(1, r + 1)]


def all_labels(r: int) -> list:
    return divisor_labels(r) + [fixedpt(k) for k in range(1, r + 2)]


def random_weighted_partition(rng: random.Random, n: int, labels) -> tuple:
    lam = rng.choice(partitions_of(n)) if n else ()
    return weighted_partition((p, rng.choice(labels)) for p in lam)


def all_weighted_partitions(n: int, labels) -> list:
    """Every weighted partition of n over the given labels."""
    from itertools import combinations_with_replacement

    out = set()
    for lam in partitions_of(n):
        grouped = sorted(set(lam), reverse=True)
        choices_per_part = []
        for part in grouped:
            mult = lam.count(part)
            choices_per_part.append(
                list(combinations_with_replacement(range(len(labels)), mult))
            )

        def rec(level, acc):
            if level == len(grouped):
                out.add(weighted_partition(acc))
                return
            part = grouped[level]
            for combo in choices_per_part[level]:
                rec(level + 1, acc + [(part, labels[i]) for i in combo])

        rec(0, [])
    return sorted(out)
