"""Exact-arithmetic foundation: polynomials, rational functions, series,
closed-form expansion, characteristic polynomials."""

import random
from fractions import Fraction

import pytest

from helpers import (
    random_fraction,
    random_nonzero_poly2,
    random_poly2,
    random_ratfunc,
    random_series,
)
from symprod.algebra import (
    GaussRational,
    Poly1,
    Poly2,
    QExpr,
    Q,
    RatFunc2,
    T1,
    T2,
    TruncSeries,
    char_poly_squarefree,
    expand_q_closed_form,
    poly2_divexact,
    poly2_from_text,
    poly2_gcd,
    poly2_to_text,
    ratfunc_from_text,
    ratfunc_normalize,
    ratfunc_to_text,
    s_atom,
    series_arith,
    series_d_du,
    series_s_scale_d,
)
from symprod.errors import (
    EmptyOrderError,
    MalformedInputError,
    PoleAtOriginError,
    RealnessViolationError,
    ShapeError,
)

T1P, T2P = Poly2.t1(), Poly2.t2()


# ---------------------------------------------------------------------------
# rational-function canonical form
# ---------------------------------------------------------------------------

def test_normalize_cancels_common_factor():
    f = RatFunc2(T1P * T1P - T2P * T2P, T1P + T2P)
    assert f == RatFunc2(T1P - T2P)
    assert f.den == Poly2.one()


def test_normalize_zero_numerator():
    f = RatFunc2(Poly2.zero(), T1P)
    assert f.is_zero()
    assert f.den == Poly2.one()


def test_normalize_sign_convention():
    f = RatFunc2(T1P.scale(Fraction(2)), T2P.scale(Fraction(-2)))
    assert f.num == -T1P
    assert f.den == T2P
    assert f.den.leading_coefficient() > 0


def test_zero_denominator_rejected():
    with pytest.raises(MalformedInputError):
        RatFunc2(T1P, Poly2.zero())


def test_normalize_idempotent():
    rng = random.Random(11)
    for _ in range(40):
        f = random_ratfunc(rng)
        assert ratfunc_normalize(f) == f


def test_gcd_and_divexact_random():
    rng = random.Random(5)
    for _ in range(60):
        a = random_nonzero_poly2(rng)
        b = random_nonzero_poly2(rng)
        g = random_nonzero_poly2(rng, 2, 2)
        assert poly2_divexact(a * g, g) == a
        joint = poly2_gcd(a * g, b * g)
        # the gcd divides both products and contains the planted factor
        assert poly2_divexact(a * g, joint) * joint == a * g
        assert poly2_divexact(b * g, joint) * joint == b * g
        poly2_divexact(joint, g.primitive())  # exact: g divides the gcd


def test_ring_axioms_poly2():
    rng = random.Random(7)
    for _ in range(50):
        a, b, c = (random_poly2(rng) for _ in range(3))
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a


def test_field_axioms_ratfunc():
    rng = random.Random(9)
    for _ in range(30):
        a, b, c = (random_ratfunc(rng) for _ in range(3))
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        if not b.is_zero():
            assert (a / b) * b == a


def test_ratfunc_equality_by_cross_multiplication():
    rng = random.Random(13)
    for _ in range(30):
        f = random_ratfunc(rng)
        scale = random_nonzero_poly2(rng, 2, 2)
        g = RatFunc2(f.num * scale, f.den * scale)
        assert f == g
        assert f.num * g.den == g.num * f.den


def test_ratfunc_text_roundtrip():
    rng = random.Random(17)
    for _ in range(40):
        f = random_ratfunc(rng)
        assert ratfunc_from_text(ratfunc_to_text(f)) == f
    assert poly2_from_text(poly2_to_text(Poly2.zero())) == Poly2.zero()


# ---------------------------------------------------------------------------
# truncated series
# ---------------------------------------------------------------------------

def _u(a, coeff=1, u_order=2, s_orders=(2,)):
    return TruncSeries.monomial(a, (0,) * len(s_orders), RatFunc2.const(coeff), u_order, s_orders)


def test_series_product_truncates():
    one = TruncSeries.one(2, ())
    u = TruncSeries.monomial(1, (), RatFunc2.one(), 2, ())
    prod = series_arith(one + u, one - u, "*")
    assert prod == one - u * u


def test_series_geometric_telescope():
    s_orders = (5,)
    geo = TruncSeries(0, s_orders, {
        (0, (d,)): RatFunc2.one() for d in range(6)
    })
    one = TruncSeries.one(0, s_orders)
    s = TruncSeries.monomial(0, (1,), RatFunc2.one(), 0, s_orders)
    assert geo * (one - s) == one


def test_series_truncation_contract():
    u = TruncSeries.monomial(1, (), RatFunc2.one(), 1, ())
    assert (u * u).is_zero()


def test_series_shape_error():
    with pytest.raises(ShapeError):
        series_arith(TruncSeries.one(2, (1,)), TruncSeries.one(2, (2,)), "+")


def test_derivative_examples():
    f = TruncSeries.monomial(2, (), RatFunc2.const(3), 3, ())
    assert series_d_du(f) == TruncSeries.monomial(1, (), RatFunc2.const(6), 2, ())
    const = TruncSeries.one(3, ())
    assert series_d_du(const).is_zero()
    # d/du of the truncated exponential drops one order and matches
    expo4 = TruncSeries(4, (), {
        (a, ()): RatFunc2.const(Fraction(1, _fact(a))) for a in range(5)
    })
    expo3 = TruncSeries(3, (), {
        (a, ()): RatFunc2.const(Fraction(1, _fact(a))) for a in range(4)
    })
    assert series_d_du(expo4) == expo3


def _fact(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def test_derivative_empty_order():
    with pytest.raises(EmptyOrderError):
        series_d_du(TruncSeries.one(0, ()))


def test_s_scale_examples():
    s_orders = (3, 3)
    cubed = TruncSeries.monomial(0, (3, 0), RatFunc2.one(), 0, s_orders)
    assert series_s_scale_d(cubed, 1) == cubed.scale(3)
    other = TruncSeries.monomial(0, (0, 1), RatFunc2.one(), 0, s_orders)
    assert series_s_scale_d(other, 1).is_zero()
    mixed = TruncSeries(0, (3,), {
        (0, (d,)): RatFunc2.const(Fraction(1, d)) for d in range(1, 4)
    })
    flat = TruncSeries(0, (3,), {
        (0, (d,)): RatFunc2.one() for d in range(1, 4)
    })
    assert series_s_scale_d(mixed, 1) == flat


def test_s_scale_index_error():
    with pytest.raises(IndexError):
        series_s_scale_d(TruncSeries.one(0, (2,)), 2)


def test_derivatives_commute():
    rng = random.Random(23)
    for _ in range(25):
        f = random_series(rng, u_order=3, s_orders=(2, 2))
        assert series_s_scale_d(series_d_du(f), 1) == series_d_du(
            series_s_scale_d(f, 1)
        )


def test_series_ring_axioms():
    rng = random.Random(29)
    for _ in range(25):
        a = random_series(rng)
        b = random_series(rng)
        c = random_series(rng)
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)


# ---------------------------------------------------------------------------
# closed-form expansion under q = -e^{iu}
# ---------------------------------------------------------------------------

def test_expand_single_factor_is_not_real():
    s = s_atom(1)
    with pytest.raises(RealnessViolationError):
        expand_q_closed_form(1 / (1 + s * Q), 2, (2,))


def test_expand_paired_entry_sine_slope():
    s = s_atom(1)
    theta = T1 + T2
    i_unit = QExpr.const(GaussRational(0, 1))
    entry = i_unit * theta * (1 / (1 + s * Q) - 1 / (1 + s / Q))
    series = expand_q_closed_form(entry, 3, (3,))
    minus_two_theta = RatFunc2(Poly2.linear(-2, -2))
    assert series.coefficient(1, (1,)) == minus_two_theta
    # full sine expansion: coefficient of u^a s^d is -2 theta (-1)^((a-1)/2) d^a / a!
    for d in range(1, 4):
        for a in (1, 3):
            want = minus_two_theta * Fraction((-1) ** ((a - 1) // 2) * d**a, _fact(a))
            assert series.coefficient(a, (d,)) == want
        assert series.coefficient(2, (d,)).is_zero()


def test_expand_u_independent_geometric():
    s = s_atom(1)
    series = expand_q_closed_form(QExpr.const(2) / (1 - s), 2, (4,))
    for d in range(5):
        assert series.coefficient(0, (d,)) == RatFunc2.const(2)
        assert series.coefficient(1, (d,)).is_zero()
        assert series.coefficient(2, (d,)).is_zero()


def test_expand_cosine_layer():
    s = s_atom(1)
    entry = 1 / (1 + s * Q) + 1 / (1 + s / Q)
    series = expand_q_closed_form(entry, 2, (4,))
    for d in range(1, 5):
        assert series.coefficient(2, (d,)) == RatFunc2.const(-d * d)


def test_expand_pole_at_origin():
    s = s_atom(1)
    with pytest.raises(PoleAtOriginError):
        expand_q_closed_form(1 / s, 1, (2,))
    with pytest.raises(PoleAtOriginError):
        expand_q_closed_form(1 / (1 + Q), 1, (2,))


def test_expand_without_q_matches_pointwise_evaluation():
    # division-free closed forms without q are polynomials: the expansion,
    # summed at rational points, must equal direct evaluation
    rng = random.Random(31)
    s1, s2 = s_atom(1), s_atom(2)
    atoms = [s1, s2, T1, T2]
    for _ in range(20):
        expr = QExpr.const(random_fraction(rng))
        for _ in range(rng.randint(1, 4)):
            pick = rng.choice(atoms)
            op = rng.choice(["add", "mul", "sub"])
            if op == "add":
                expr = expr + pick
            elif op == "sub":
                expr = expr - pick
            else:
                expr = expr * pick
        series = expand_q_closed_form(expr, 0, (4, 4))
        t1v, t2v = Fraction(3), Fraction(5)
        s1v, s2v = Fraction(1, 2), Fraction(1, 3)
        direct = expr.evaluate({
            "t1": GaussRational(t1v), "t2": GaussRational(t2v),
            "s1": GaussRational(s1v), "s2": GaussRational(s2v),
        })
        summed = Fraction(0)
        for a, ds, c in series.monomials():
            assert a == 0  # no q, no u-dependence
            summed += c.evaluate(t1v, t2v) * s1v ** ds[0] * s2v ** ds[1]
        assert direct == GaussRational(summed)


def test_expand_division_remultiplies():
    rng = random.Random(37)
    s1 = s_atom(1)
    for _ in range(10):
        num = QExpr.const(random_fraction(rng)) + s1 * QExpr.const(random_fraction(rng))
        den = QExpr.const(1) + s1 * Q * QExpr.const(rng.randint(1, 3))
        orders = (3, (3,))
        product = _expand_complex_ok(num / den, *orders) * _expand_complex_ok(den, *orders)
        want = _expand_complex_ok(num, *orders)
        assert product.re == want.re and product.im == want.im


def _expand_complex_ok(expr, u_order, s_orders):
    """Expansion that tolerates imaginary parts by pairing with conjugates."""
    from symprod.algebra.qexpr import _expand, _CSeries, _minus_exp_iu
    from symprod.algebra import TruncSeries as TS

    env = {
        "q": _minus_exp_iu(u_order, s_orders),
        "t1": _CSeries.real(TS.const(RatFunc2(Poly2.t1()), u_order, s_orders)),
        "t2": _CSeries.real(TS.const(RatFunc2(Poly2.t2()), u_order, s_orders)),
    }
    for k in range(1, len(s_orders) + 1):
        ds = tuple(1 if j == k - 1 else 0 for j in range(len(s_orders)))
        env[f"s{k}"] = _CSeries.real(
            TS.monomial(0, ds, RatFunc2.one(), u_order, s_orders)
        )
    out = _expand(expr, env)
    return out


# ---------------------------------------------------------------------------
# characteristic polynomials
# ---------------------------------------------------------------------------

def test_char_poly_identity_not_squarefree():
    ident = [[Fraction(int(i == j)) for j in range(5)] for i in range(5)]
    p, squarefree = char_poly_squarefree(ident)
    assert not squarefree
    # (x-1)^5
    want = Poly1([-1, 1])
    prod = Poly1([1])
    for _ in range(5):
        prod = prod * want
    assert p == prod


def test_char_poly_distinct_diagonal():
    diag = [[Fraction(i + 1 if i == j else 0) for j in range(5)] for i in range(5)]
    p, squarefree = char_poly_squarefree(diag)
    assert squarefree
    prod = Poly1([1])
    for k in range(1, 6):
        prod = prod * Poly1([-k, 1])
    assert p == prod


def test_char_poly_companion():
    companion = [[Fraction(0), Fraction(2)], [Fraction(1), Fraction(0)]]
    p, squarefree = char_poly_squarefree(companion)
    assert squarefree
    assert p == Poly1([-2, 0, 1])


def test_char_poly_block_duplication():
    rng = random.Random(41)
    for _ in range(10):
        m = [[random_fraction(rng) for _ in range(2)] for _ in range(2)]
        doubled = [
            [m[i % 2][j % 2] if (i < 2) == (j < 2) else Fraction(0) for j in range(4)]
            for i in range(4)
        ]
        _, squarefree = char_poly_squarefree(doubled)
        assert not squarefree


def test_char_poly_rejects_nonsquare():
    with pytest.raises(ValueError):
        char_poly_squarefree([[Fraction(1), Fraction(2)]])


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------

def test_gaussian_arithmetic():
    i = GaussRational(0, 1)
    assert i * i == GaussRational(-1)
    z = GaussRational(Fraction(1, 2), Fraction(-3, 4))
    assert z.conjugate().conjugate() == z
    assert (z * z.conjugate()).is_real()
    assert z / z == GaussRational(1)


def test_gaussian_inverse_random():
    rng = random.Random(43)
    for _ in range(30):
        z = GaussRational(random_fraction(rng), random_fraction(rng))
        if z.is_zero():
            continue
        assert z * z.inverse() == GaussRational(1)
