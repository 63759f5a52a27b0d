"""Divisor-operator matrices, the n=2 r=1 closed-form benchmark, the
Nakajima-side bookkeeping map and eigenvalue certification.

The operator of quantum multiplication by a divisor D in an ordered
weighted-partition basis has columns D * b_j expanded through dual
classes: M = G^{-1} T with G the pairing Gram matrix and T the matrix
of three-point series <<b_j, D, b_a>>. The beta != 0 layers of T are
computed from the splitting/connected machinery; beta = 0 layers come
from a ZeroDegreeTable and propagate as gaps when absent.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import (
    GaussRational,
    Poly1,
    QExpr,
    Q,
    RatFunc2,
    T1,
    T2,
    TruncSeries,
    char_poly_gaussian,
    char_poly_squarefree,
    expand_q_closed_form,
    is_squarefree,
    s_atom,
)
from .chenruan import gram_inverse, gram_matrix
from .errors import RealnessViolationError
from .invariants import ThreePointResult, ZeroDegreeTable, three_point_divisor_series
from .partitions import (
    ONE,
    WeightedPartition,
    age,
    ecurve,
    underlying,
    weighted_partition,
    wp_size,
)
from .surface import TangentWeights, tangent_weights
from .textforms import series_from_json, series_to_json, wp_to_text, parse_wp


@dataclass
class OperatorMatrix:
    """Square matrix of truncated series for D * (-) in an ordered basis."""

    n: int
    r: int
    divisor: str
    basis: tuple[WeightedPartition, ...]
    u_order: int
    s_orders: tuple[int, ...]
    entries: list[list[TruncSeries]]
    gaps: set[tuple[int, int]] = field(default_factory=set)

    def entry(self, i: int, j: int) -> TruncSeries:
        return self.entries[i][j]

    def size(self) -> int:
        return len(self.basis)


def divisor_operator(
    n: int,
    r: int,
    divisor: str,
    basis,
    u_order: int,
    s_orders,
    w: TangentWeights | None = None,
    table: ZeroDegreeTable | None = None,
) -> OperatorMatrix:
    """Assemble the divisor-operator matrix in the given basis."""
    if w is None:
        w = tangent_weights(r)
    basis = tuple(weighted_partition(wp) for wp in basis)
    if not basis:
        raise ValueError("empty basis")
    if any(wp_size(b) != n for b in basis):
        raise ValueError(f"basis elements must have size {n}")
    s_orders = tuple(s_orders)
    size = len(basis)
    ginv = gram_inverse(basis, w)
    tmat: list[list[ThreePointResult]] = [[None] * size for _ in range(size)]
    for j in range(size):
        for a in range(j, size):
            res = three_point_divisor_series(
                basis[j], divisor, basis[a], u_order, s_orders, w, table
            )
            tmat[a][j] = res
            if a != j:
                tmat[j][a] = res
    entries = []
    gaps: set[tuple[int, int]] = set()
    zero = TruncSeries.zero(u_order, s_orders)
    for i in range(size):
        row = []
        for j in range(size):
            acc = zero
            for a in range(size):
                c = ginv[i][a]
                if c.is_zero():
                    continue
                acc = acc + tmat[a][j].series.scale(c)
                if tmat[a][j].gap:
                    gaps.add((i, j))
            row.append(acc)
        entries.append(row)
    return OperatorMatrix(
        n=n,
        r=r,
        divisor=divisor,
        basis=basis,
        u_order=u_order,
        s_orders=s_orders,
        entries=entries,
        gaps=gaps,
    )


# ---------------------------------------------------------------------------
# the n = 2, r = 1 benchmark: closed-form first divisor operator
# ---------------------------------------------------------------------------

def default_divisor_basis(n: int, r: int) -> list[WeightedPartition]:
    """All weighted partitions of n with weights in {1, E_1..E_r}, ordered by
    descending orbifold degree (longer partitions first within a degree)."""
    from itertools import combinations_with_replacement

    from .partitions import partitions_of

    labels = [ONE] + [ecurve(i) for i in range(1, r + 1)]
    out = []
    for lam in partitions_of(n):
        slots = sorted(set(lam), reverse=True)
        per_part = []
        for part in slots:
            mult = lam.count(part)
            per_part.append(
                [list(combo) for combo in combinations_with_replacement(labels, mult)]
            )

        def assemble(level: int, acc: list):
            if level == len(slots):
                out.append(weighted_partition(acc))
                return
            part = slots[level]
            for combo in per_part[level]:
                assemble(level + 1, acc + [(part, lab) for lab in combo])

        assemble(0, [])
    out = sorted(set(out), key=lambda wp: (-grading(wp, n), -len(wp), wp_to_text(wp)))
    return out


def a1n2_basis() -> list[WeightedPartition]:
    """The ordered degree basis {1(E1)1(E1), 2(E1), 1(1)1(E1), 2(1), 1(1)1(1)}."""
    e1 = ecurve(1)
    return [
        weighted_partition([(1, e1), (1, e1)]),
        weighted_partition([(2, e1)]),
        weighted_partition([(1, ONE), (1, e1)]),
        weighted_partition([(2, ONE)]),
        weighted_partition([(1, ONE), (1, ONE)]),
    ]


def closed_form_matrix_a1n2() -> list[list[QExpr]]:
    """The known 5x5 closed-form matrix of the first divisor operator on
    [Sym^2(A_1)], in the a1n2_basis ordering, over atoms q, s1, t1, t2."""
    s = s_atom(1)
    theta = T1 + T2
    one = QExpr.const(1)
    two = QExpr.const(2)
    i_unit = QExpr.const(GaussRational(0, 1))
    f_plus = one / (one + s * Q)      # 1/(1+sq)
    f_minus = one / (one + s / Q)     # 1/(1+s/q)
    g_inv = one / (one - s)           # 1/(1-s)
    zero = QExpr.const(0)
    return [
        [
            two * theta * (one - f_plus - f_minus),
            i_unit * theta * (f_plus - f_minus),
            QExpr.const(-1),
            zero,
            zero,
        ],
        [
            QExpr.const(-2) * i_unit * theta * (f_plus - f_minus),
            theta * (two - f_plus - f_minus - two * g_inv),
            zero,
            QExpr.const(-1),
            zero,
        ],
        [
            two * T1 * T2,
            zero,
            QExpr.const(-1) * theta * (one + s) * g_inv,
            zero,
            QExpr.const(Fraction(-1, 2)),
        ],
        [zero, QExpr.const(4) * T1 * T2, zero, zero, zero],
        [zero, zero, QExpr.const(4) * T1 * T2, zero, zero],
    ]


def _expand_matrix(matrix, u_order: int, s_orders) -> list[list[TruncSeries]]:
    return [
        [expand_q_closed_form(e, u_order, s_orders) for e in row] for row in matrix
    ]


def zero_degree_table_a1n2() -> ZeroDegreeTable:
    """Degree-zero data for the n=2, r=1 first divisor operator.

    The s = 0 layer of the closed-form matrix is u-independent; pushing it
    through the exact Gram matrix gives the beta = 0 three-point values
    T = G * M|_{s=0}, which is all the table has to hold.
    """
    basis = a1n2_basis()
    w = tangent_weights(1)
    gram = gram_matrix(basis, w)
    m0 = _expand_matrix(closed_form_matrix_a1n2(), 2, (0,))
    size = len(basis)
    consts: list[list[RatFunc2]] = [[None] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            series = m0[i][j]
            for a, ds, _ in series.monomials():
                if a != 0:
                    raise RuntimeError("s=0 layer of the benchmark matrix "
                                       "should be u-independent")
            consts[i][j] = series.coefficient(0, (0,))
    table = ZeroDegreeTable()
    for a in range(size):
        for j in range(size):
            val = RatFunc2.zero()
            for c in range(size):
                val = val + gram[a][c] * consts[c][j]
            table.set(
                wp_to_text(basis[j]), "D1", wp_to_text(basis[a]), [(0, val)]
            )
    return table


@dataclass
class VerifyReport:
    u_order: int
    s_order: int
    entries_total: int
    mismatches: list  # (i, j, a, ds, got, want) with 1-based i, j
    gaps: set

    @property
    def nonzero_degree_ok(self) -> bool:
        return not [m for m in self.mismatches if any(m[3])]

    @property
    def full_ok(self) -> bool:
        return not self.mismatches and not self.gaps

    @property
    def entries_matched(self) -> int:
        bad = {(m[0], m[1]) for m in self.mismatches}
        return self.entries_total - len(bad)

    def summary(self) -> str:
        head = f"{self.entries_matched}/{self.entries_total} entries match"
        if self.full_ok:
            return head + f" (u-order {self.u_order}, s-order {self.s_order})"
        lines = [head]
        for i, j, a, ds, got, want in self.mismatches[:20]:
            mono = f"u^{a} " + " ".join(
                f"s{k}^{d}" for k, d in enumerate(ds, start=1) if d
            )
            lines.append(f"  entry ({i},{j}) at {mono.strip()}: got {got}, expected {want}")
        if len(self.mismatches) > 20:
            lines.append(f"  ... {len(self.mismatches) - 20} more mismatches")
        for i, j in sorted(self.gaps):
            lines.append(f"  entry ({i + 1},{j + 1}): degree-zero gap")
        return "\n".join(lines)


def verify_a1n2(
    u_order: int,
    s_order: int,
    table: ZeroDegreeTable | None = None,
) -> VerifyReport:
    """Check the computed n=2, r=1 divisor operator against the closed forms.

    Every beta != 0 coefficient is computed independently of the table;
    with the degree-zero table loaded the full matrices must agree.
    """
    basis = a1n2_basis()
    w = tangent_weights(1)
    expected = _expand_matrix(closed_form_matrix_a1n2(), u_order, (s_order,))
    if table is None:
        table = zero_degree_table_a1n2()
    built = divisor_operator(
        2, 1, "D1", basis, u_order, (s_order,), w, table
    )
    mismatches = []
    for i in range(5):
        for j in range(5):
            diff = expected[i][j] - built.entries[i][j]
            for a, ds, _ in diff.monomials():
                mismatches.append(
                    (
                        i + 1,
                        j + 1,
                        a,
                        ds,
                        str(built.entries[i][j].coefficient(a, ds)),
                        str(expected[i][j].coefficient(a, ds)),
                    )
                )
    return VerifyReport(
        u_order=u_order,
        s_order=s_order,
        entries_total=25,
        mismatches=mismatches,
        gaps=set(built.gaps),
    )


# ---------------------------------------------------------------------------
# basis bookkeeping for the Hilbert-scheme side
# ---------------------------------------------------------------------------

_LABEL_DEGREE = {"1": 0, "E": 1, "w": 1, "x": 2}


@dataclass(frozen=True)
class NakajimaSymbol:
    """A weighted partition together with the (-i)^age power carried by
    the correspondence to the Nakajima basis."""

    wp: WeightedPartition
    i_power: int  # exponent of i mod 4


def l_map(wp: WeightedPartition, n: int) -> NakajimaSymbol:
    """Bookkeeping map to the Nakajima side: attaches (-i)^age(wp)."""
    lam = underlying(wp)
    a = age(lam, n)
    return NakajimaSymbol(wp=weighted_partition(wp), i_power=(-a) % 4)


def grading(wp: WeightedPartition, n: int) -> int:
    """Orbifold degree: age plus the sum of the weight degrees."""
    total = age(underlying(wp), n)
    for _, label in wp:
        kind = label[0]
        if kind not in _LABEL_DEGREE:
            raise ValueError(f"no grading for label {label!r}")
        total += _LABEL_DEGREE[kind]
    return total


def pairing_sign(wp: WeightedPartition, n: int) -> int:
    """(-1)^age: the sign relating orbifold and Nakajima-side pairings."""
    return (-1) ** age(underlying(wp), n)


# ---------------------------------------------------------------------------
# eigenvalue certification
# ---------------------------------------------------------------------------

@dataclass
class EigenReport:
    char_poly: Poly1
    squarefree: bool
    approximate: bool
    values: dict

    @property
    def distinct_eigenvalues(self) -> bool:
        return self.squarefree

    def summary(self) -> str:
        kind = "truncated-series (approximate)" if self.approximate else "exact"
        verdict = (
            "squarefree: distinct eigenvalues certified"
            if self.squarefree
            else "NOT squarefree: repeated eigenvalue (derogatory at this point)"
        )
        return f"{kind} characteristic polynomial {self.char_poly}\n{verdict}"


def eigen_certify(matrix: list[list[QExpr]], values: dict) -> EigenReport:
    """Evaluate a closed-form matrix at exact rational values and certify
    distinct eigenvalues through a squarefree characteristic polynomial.

    values maps atom names (t1, t2, s1..sr, q) to rationals; evaluation at
    a pole raises ZeroDivisionError.
    """
    env = {k: GaussRational.lift(v) for k, v in values.items()}
    evaluated = [[e.evaluate(env) for e in row] for row in matrix]
    coeffs = char_poly_gaussian(evaluated)
    for c in coeffs:
        if not c.is_real():
            raise RealnessViolationError(
                "characteristic polynomial has a nonreal coefficient"
            )
    p = Poly1([c.re for c in coeffs])
    return EigenReport(
        char_poly=p, squarefree=is_squarefree(p), approximate=False, values=dict(values)
    )


def eigen_certify_series(op: OperatorMatrix, values: dict) -> EigenReport:
    """Certify on a series-valued operator by exact evaluation of the
    truncation; flagged approximate since the series is cut off.

    values needs t1, t2, u and s1..sr.
    """
    if op.gaps:
        raise ValueError("operator has degree-zero gaps; load a table first")
    t1 = Fraction(values["t1"])
    t2 = Fraction(values["t2"])
    u = Fraction(values["u"])
    svals = [Fraction(values[f"s{k}"]) for k in range(1, op.r + 1)]
    size = op.size()
    numeric = []
    for i in range(size):
        row = []
        for j in range(size):
            total = Fraction(0)
            for a, ds, c in op.entries[i][j].monomials():
                term = c.evaluate(t1, t2) * u**a
                for v, d in zip(svals, ds):
                    term *= v**d
                total += term
            row.append(total)
        numeric.append(row)
    p, sqfree = char_poly_squarefree(numeric)
    return EigenReport(
        char_poly=p, squarefree=sqfree, approximate=True, values=dict(values)
    )


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def op_matrix_to_json(op: OperatorMatrix) -> dict:
    return {
        "n": op.n,
        "r": op.r,
        "divisor": op.divisor,
        "basis": [wp_to_text(b) for b in op.basis],
        "u_order": op.u_order,
        "s_orders": list(op.s_orders),
        "entries": [
            {"row": i + 1, "col": j + 1, **series_to_json(op.entries[i][j])}
            for i in range(op.size())
            for j in range(op.size())
        ],
        "gaps": sorted([i + 1, j + 1] for i, j in op.gaps),
    }


def op_matrix_from_json(payload: dict) -> OperatorMatrix:
    basis = tuple(parse_wp(b) for b in payload["basis"])
    size = len(basis)
    u_order = payload["u_order"]
    s_orders = tuple(payload["s_orders"])
    entries = [
        [TruncSeries.zero(u_order, s_orders) for _ in range(size)] for _ in range(size)
    ]
    for item in payload["entries"]:
        entries[item["row"] - 1][item["col"] - 1] = series_from_json(item)
    return OperatorMatrix(
        n=payload["n"],
        r=payload["r"],
        divisor=payload["divisor"],
        basis=basis,
        u_order=u_order,
        s_orders=s_orders,
        entries=entries,
        gaps={(i - 1, j - 1) for i, j in payload["gaps"]},
    )


def op_matrix_to_latex(op: OperatorMatrix) -> str:
    lines = [
        "% operator of quantum multiplication by " + op.divisor,
        "\\begin{pmatrix}",
    ]
    for i in range(op.size()):
        cells = []
        for j in range(op.size()):
            s = str(op.entries[i][j])
            if (i, j) in op.gaps:
                s += " + [\\text{gap}]"
            cells.append(s)
        tail = " \\\\" if i < op.size() - 1 else ""
        lines.append(" & ".join(cells) + tail)
    lines.append("\\end{pmatrix}")
    return "\n".join(lines)


def op_matrix_to_csv(op: OperatorMatrix) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(
        ["row", "col", "u"]
        + [f"s{k}" for k in range(1, op.r + 1)]
        + ["coefficient"]
    )
    for i in range(op.size()):
        for j in range(op.size()):
            for a, ds, c in op.entries[i][j].monomials():
                writer.writerow([i + 1, j + 1, a, *ds, str(c)])
    return buf.getvalue()


def op_matrix_dumps(op: OperatorMatrix) -> str:
    return json.dumps(op_matrix_to_json(op), indent=1, sort_keys=True)
