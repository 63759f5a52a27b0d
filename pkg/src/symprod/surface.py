"""Equivariant geometry of the A_r resolution.

The surface carries r exceptional (-2)-curves E_1..E_r in a chain and
r+1 torus-fixed points x_1..x_{r+1}. Everything is done in the localized
fixed-point basis: a class is its vector of restrictions to the x_k, and
integration is the localization sum over fixed points.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import UnsupportedWeightError
from .partitions import Label
from .algebra import Poly2, RatFunc2

CurveClass = tuple[int, ...]


class TangentWeights:
    """Tangent weights L_i, R_i at the fixed points x_1..x_{r+1}.

    L_i = (r-i+2) t1 + (1-i) t2 and R_i = (-r+i-1) t1 + i t2, so that
    L_i + R_i = t1 + t2, R_i = -L_{i+1}, L_1 = (r+1) t1, R_{r+1} = (r+1) t2.
    """

    __slots__ = ("r", "_L", "_R", "_LR")

    def __init__(self, r: int):
        if r < 1:
            raise ValueError("r must be at least 1")
        self.r = r
        self._L = tuple(
            Poly2.linear(r - i + 2, 1 - i) for i in range(1, r + 2)
        )
        self._R = tuple(
            Poly2.linear(-r + i - 1, i) for i in range(1, r + 2)
        )
        self._LR = tuple(
            RatFunc2(l * rr) for l, rr in zip(self._L, self._R)
        )

    def L(self, i: int) -> Poly2:
        return self._L[i - 1]

    def R(self, i: int) -> Poly2:
        return self._R[i - 1]

    def LR(self, i: int) -> RatFunc2:
        """The full tangent weight product L_i R_i at x_i."""
        return self._LR[i - 1]

    def points(self) -> range:
        return range(1, self.r + 2)


@lru_cache(maxsize=None)
def tangent_weights(r: int) -> TangentWeights:
    return TangentWeights(r)


class SurfaceClass:
    """Equivariant class on A_r in the localized fixed-point basis."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(RatFunc2.lift(c) for c in coords)

    def __add__(self, other: SurfaceClass) -> SurfaceClass:
        return SurfaceClass(a + b for a, b in zip(self.coords, other.coords))

    def scale(self, c) -> SurfaceClass:
        c = RatFunc2.lift(c)
        return SurfaceClass(a * c for a in self.coords)

    def __eq__(self, other) -> bool:
        return isinstance(other, SurfaceClass) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return f"SurfaceClass({', '.join(str(c) for c in self.coords)})"


def intersection_number(i: int, j: int) -> int:
    """E_i . E_j: -2 on the diagonal, 1 for neighbours, 0 otherwise."""
    if i == j:
        return -2
    if abs(i - j) == 1:
        return 1
    return 0


@lru_cache(maxsize=None)
def omega_coefficients(r: int) -> tuple[tuple[Fraction, ...], ...]:
    """Rows of the inverse intersection matrix: omega_k = sum_m c_m E_m."""
    size = r
    aug = [
        [Fraction(intersection_number(i + 1, j + 1)) for j in range(size)]
        + [Fraction(1) if c == i else Fraction(0) for c in range(size)]
        for i in range(size)
    ]
    for col in range(size):
        pivot = next(row for row in range(col, size) if aug[row][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for row in range(size):
            if row != col and aug[row][col] != 0:
                f = aug[row][col]
                aug[row] = [x - f * y for x, y in zip(aug[row], aug[col])]
    return tuple(tuple(row[size:]) for row in aug)


@lru_cache(maxsize=None)
def _class_of_cached(label: Label, r: int) -> SurfaceClass:
    w = tangent_weights(r)
    zero = RatFunc2.zero()
    kind = label[0]
    if kind == "1":
        return SurfaceClass([RatFunc2.one()] * (r + 1))
    if kind == "x":
        k = label[1]
        if not 1 <= k <= r + 1:
            raise IndexError(f"fixed point index {k} out of range 1..{r + 1}")
        coords = [zero] * (r + 1)
        coords[k - 1] = w.LR(k)
        return SurfaceClass(coords)
    if kind == "E":
        i = label[1]
        if not 1 <= i <= r:
            raise IndexError(f"exceptional curve index {i} out of range 1..{r}")
        coords = [zero] * (r + 1)
        coords[i - 1] = RatFunc2(w.L(i))
        coords[i] = RatFunc2(w.R(i + 1))
        return SurfaceClass(coords)
    if kind == "w":
        k = label[1]
        if not 1 <= k <= r:
            raise IndexError(f"dual divisor index {k} out of range 1..{r}")
        coeffs = omega_coefficients(r)[k - 1]
        out = SurfaceClass([zero] * (r + 1))
        for m, c in enumerate(coeffs, start=1):
            if c:
                out = out + _class_of_cached(("E", m), r).scale(c)
        return out
    raise UnsupportedWeightError(f"no localized class for label {label!r}")


def class_of(label: Label, w: TangentWeights) -> SurfaceClass:
    """Localized class of a weight label (identity, E_i, omega_k, [x_k])."""
    if label[0] == "gen":
        sc = label[1]
        if len(sc.coords) != w.r + 1:
            raise ValueError("general class has wrong number of restrictions")
        return sc
    return _class_of_cached(label, w.r)


def integrate(alpha: SurfaceClass, beta: SurfaceClass | None, w: TangentWeights) -> RatFunc2:
    """Localization sum over fixed points of alpha*beta / (L_k R_k)."""
    total = RatFunc2.zero()
    for k in w.points():
        a = alpha.coords[k - 1]
        if a.is_zero():
            continue
        if beta is not None:
            a = a * beta.coords[k - 1]
            if a.is_zero():
                continue
        total = total + a / w.LR(k)
    return total


# ---------------------------------------------------------------------------
# curve classes
# ---------------------------------------------------------------------------

def e_chain(i: int, j: int, d: int, r: int) -> CurveClass:
    """d(E_i + ... + E_j) as a coefficient vector on E_1..E_r."""
    if not (1 <= i <= j <= r):
        raise ValueError(f"chain indices ({i}, {j}) out of range for r = {r}")
    return tuple(d if i <= k <= j else 0 for k in range(1, r + 1))


def curve_exponents(beta: CurveClass) -> tuple[int, ...]:
    """Exponents of s_1..s_r attached to beta (its E-coefficient vector)."""
    return tuple(int(b) for b in beta)


def beta_as_chain(beta: CurveClass) -> tuple[int, int, int] | None:
    """Decompose beta as d(E_i + ... + E_j) with d > 0, or None."""
    support = [k for k, b in enumerate(beta, start=1) if b]
    if not support:
        return None
    i, j = support[0], support[-1]
    if len(support) != j - i + 1:
        return None
    d = beta[i - 1]
    if d <= 0 or any(beta[k - 1] != d for k in support):
        return None
    return i, j, d


def e_dot(label: Label, i: int, j: int) -> Fraction:
    """Intersection of the chain E_i + ... + E_j with a divisor weight.

    The identity weight pairs to zero; fixed-point or general weights are
    not divisors and are rejected.
    """
    if i > j:
        raise ValueError("need i <= j")
    kind = label[0]
    if kind == "1":
        return Fraction(0)
    if kind == "E":
        m = label[1]
        return Fraction(sum(intersection_number(k, m) for k in range(i, j + 1)))
    if kind == "w":
        return Fraction(1) if i <= label[1] <= j else Fraction(0)
    raise UnsupportedWeightError(
        f"label {label!r} is not 1 or a divisor on the surface"
    )
