"""Exact characteristic polynomials and squarefreeness certificates."""

from __future__ import annotations

from fractions import Fraction

from .gaussian import GaussRational
from .poly import Poly1


def _char_poly_generic(matrix, zero, one):
    """Faddeev-LeVerrier over any exact field; coefficients ascending."""
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ValueError("characteristic polynomial needs a square matrix")
    ident = [[one if i == j else zero for j in range(n)] for i in range(n)]
    aux = [row[:] for row in ident]
    coeffs = [zero] * (n + 1)
    coeffs[n] = one  # coefficient of x^n
    for k in range(1, n + 1):
        prod = [
            [
                sum((matrix[i][m] * aux[m][j] for m in range(n)), zero)
                for j in range(n)
            ]
            for i in range(n)
        ]
        trace = sum((prod[i][i] for i in range(n)), zero)
        ck = -trace / k
        coeffs[n - k] = ck
        aux = [
            [prod[i][j] + (ck if i == j else zero) for j in range(n)]
            for i in range(n)
        ]
    return coeffs


def char_poly(matrix: list[list[Fraction]]) -> Poly1:
    """Characteristic polynomial det(xI - M) of a rational matrix."""
    coeffs = _char_poly_generic(
        [[Fraction(x) for x in row] for row in matrix], Fraction(0), Fraction(1)
    )
    return Poly1(coeffs)


def char_poly_gaussian(matrix: list[list[GaussRational]]):
    """Characteristic polynomial over Q(i); list of GaussRational, ascending."""
    return _char_poly_generic(matrix, GaussRational(0), GaussRational(1))


def is_squarefree(p: Poly1) -> bool:
    if p.is_zero():
        return False
    return p.gcd(p.derivative()).degree() == 0


def char_poly_squarefree(matrix: list[list[Fraction]]) -> tuple[Poly1, bool]:
    """Exact characteristic polynomial and whether gcd(p, p') is constant."""
    p = char_poly(matrix)
    return p, is_squarefree(p)
