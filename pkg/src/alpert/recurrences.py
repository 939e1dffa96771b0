"""Shift-operator recurrences satisfied by the entries of ``C_1``.

Operators act on an entry accessor ``entry(i, j)``; taps that land outside
the lower triangle read the structural zero and their coefficient is never
evaluated (several coefficients are singular exactly where the tap is zero).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .exact import ONE, ZERO, SurdValue
from .refinement import (
    CoeffMatrixPair,
    build_coeff_matrices,
    c1_entry_first_column,
    sign_mirror,
    subdiagonal_closed_forms,
)

Coef = Optional[Callable[[int], SurdValue]]


def _inv_root(a: int, b: int) -> SurdValue:
    """``1 / sqrt(a*b)``."""
    return SurdValue.sqrt(Fraction(1, a * b))


def _root_ratio(a: int, b: int) -> SurdValue:
    """``sqrt(a / b)``."""
    return SurdValue.sqrt(Fraction(a, b))


@dataclass(frozen=True)
class ShiftOperatorSpec:
    """``minus(k) E_- + center(k) + plus(k) E_+`` along one index axis."""

    name: str
    axis: str  # "i" or "j"
    minus: Coef = None
    center: Coef = None
    plus: Coef = None

    def apply(self, entry: Callable[[int, int], SurdValue], i: int, j: int) -> SurdValue:
        k = i if self.axis == "i" else j
        out = ZERO
        for coef, step in ((self.minus, -1), (self.center, 0), (self.plus, 1)):
            if coef is None:
                continue
            ii, jj = (i + step, j) if self.axis == "i" else (i, j + step)
            if ii < 0 or jj < 0 or jj > ii:
                continue
            v = entry(ii, jj)
            if v:
                out = out + coef(k) * v
        return out


A_I = ShiftOperatorSpec(
    "A", "i",
    minus=lambda i: _inv_root(2 * i + 1, 2 * i - 1) * ((i - 1) * i * (i + 1)),
    plus=lambda i: _inv_root(2 * i + 3, 2 * i + 1) * (i * (i + 1) * (i + 2)),
)
B_I = ShiftOperatorSpec(
    "B", "i",
    minus=lambda i: _inv_root(2 * i + 1, 2 * i - 1) * (i + 1),
    center=lambda i: ONE,
    plus=lambda i: _inv_root(2 * i + 3, 2 * i + 1) * i,
)
A_HAT_J = ShiftOperatorSpec(
    "A_hat", "j",
    minus=lambda j: _inv_root(2 * j + 1, 2 * j - 1) * ((j - 1) * j * (j + 1)),
    center=lambda j: SurdValue.from_rational(3 * j * (j + 1)),
    plus=lambda j: _inv_root(2 * j + 3, 2 * j + 1) * (j * (j + 1) * (j + 2)),
)
B_HAT_J = ShiftOperatorSpec(
    "B_hat", "j",
    minus=lambda j: _inv_root(2 * j + 1, 2 * j - 1) * (j + 1),
    center=lambda j: ONE,
    plus=lambda j: _inv_root(2 * j + 3, 2 * j + 1) * j,
)
A_TILDE_J = ShiftOperatorSpec(
    "A_tilde", "j",
    minus=lambda j: _inv_root(2 * j + 1, 2 * j - 1) * j,
    center=lambda j: ONE,
    plus=lambda j: _inv_root(2 * j + 3, 2 * j + 1) * (j + 1),
)
B_TILDE_I = ShiftOperatorSpec(
    "B_tilde", "i",
    minus=lambda i: _inv_root(2 * i + 1, 2 * i - 1) * (2 * i),
    plus=lambda i: _inv_root(2 * i + 3, 2 * i + 1) * (2 * (i + 1)),
)
K_I = ShiftOperatorSpec(
    "K", "i",
    minus=lambda i: _root_ratio(2 * i + 1, 2 * i - 1),
    plus=lambda i: _root_ratio(2 * i + 1, 2 * i + 3),
)
J_J = ShiftOperatorSpec(
    "J", "j",
    minus=lambda j: _root_ratio(2 * j - 1, 2 * j + 1) * Fraction(1, 2),
    center=lambda j: ONE,
    plus=lambda j: _root_ratio(2 * j + 3, 2 * j + 1) * Fraction(1, 2),
)


def _residual_gen_eig_i(C, i, j):
    return A_I.apply(C.entry, i, j), B_I.apply(C.entry, i, j) * (j * (j + 1))


def _residual_gen_eig_j(C, i, j):
    return A_HAT_J.apply(C.entry, i, j), B_HAT_J.apply(C.entry, i, j) * (i * (i + 1))


def _residual_mixed(C, i, j):
    return A_TILDE_J.apply(C.entry, i, j), B_TILDE_I.apply(C.entry, i, j)


def _residual_bessel(C, i, j):
    return K_I.apply(C.entry, i, j), J_J.apply(C.entry, i, j)


EQUATIONS = {
    "geneigi": _residual_gen_eig_i,
    "geneigj": _residual_gen_eig_j,
    "recurij": _residual_mixed,
    "pdde": _residual_bessel,
}


def _violations(equation: str, C: CoeffMatrixPair, points) -> list[dict]:
    fn = EQUATIONS[equation]
    out = []
    for i, j in points:
        lhs, rhs = fn(C, i, j)
        if lhs != rhs:
            out.append({"equation": equation, "i": i, "j": j, "lhs": lhs.to_json(), "rhs": rhs.to_json()})
    return out


def _triangle(n, j_min=0):
    # 0 <= j <= i < n; every i-axis tap i+1 stays inside an order-n matrix
    return [(i, j) for i in range(n) for j in range(j_min, i + 1)]


def check_gen_eig_i(C: CoeffMatrixPair) -> list[dict]:
    return _violations("geneigi", C, _triangle(C.order))


def check_gen_eig_j(C: CoeffMatrixPair) -> list[dict]:
    return _violations("geneigj", C, _triangle(C.order, j_min=1))


def check_mixed_recurrence(C: CoeffMatrixPair) -> list[dict]:
    return _violations("recurij", C, _triangle(C.order))


BESSEL_RANGES = {
    "0<i<j<n": lambda i, j, n: 0 < i < j < n,
    "0<j<i<n": lambda i, j, n: 0 < j < i < n,
    "0<i<n, 0<j<n": lambda i, j, n: 0 < i < n and 0 < j < n,
    "0<i<n, 0<=j<n": lambda i, j, n: 0 < i < n and 0 <= j < n,
}


def check_bessel_difference(C: CoeffMatrixPair) -> dict:
    """Probe the difference equation over each candidate index range.

    Returns the violations per range together with the list of candidate
    ranges on which the identity holds without exception.
    """
    n = C.order
    grid = [(i, j) for i in range(n) for j in range(n)]
    per_range = {}
    for name, pred in BESSEL_RANGES.items():
        pts = [(i, j) for i, j in grid if pred(i, j, n)]
        per_range[name] = {"points": len(pts), "violations": _violations("pdde", C, pts)}
    holds = [name for name, r in per_range.items() if not r["violations"]]
    widest = max(holds, key=lambda name: per_range[name]["points"], default=None)
    return {"equation": "pdde", "n": n, "ranges": per_range, "valid_ranges": holds, "maximal_range": widest}


def probe_gen_eig_j_boundary(C: CoeffMatrixPair) -> dict:
    """Whether the j-direction eigen-equation also holds at ``j = 0`` and on row ``i = n``."""
    n = C.order
    j_zero = [(i, 0) for i in range(n + 1)]
    last_row = [(n, j) for j in range(1, n + 1)]
    return {
        "j=0": not _violations("geneigj", C, j_zero),
        "i=n": not _violations("geneigj", C, last_row),
    }


def regenerate_via_recurrence(n: int) -> CoeffMatrixPair:
    """Rebuild ``C_1`` column by column from the i-direction eigen-equation.

    Column ``j > 0`` is seeded with the diagonal and subdiagonal closed forms
    and marched upward in ``i``; column 0 comes from the Kummer closed form.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    C = [[ZERO] * (n + 1) for _ in range(n + 1)]
    C[0][0] = ONE
    for i in range(1, n + 1):
        C[i][0] = c1_entry_first_column(i)
    for j in range(1, n + 1):
        lam = j * (j + 1)
        C[j][j] = subdiagonal_closed_forms(j)[0]
        if j + 1 <= n:
            C[j + 1][j] = subdiagonal_closed_forms(j + 1)[1]
        for i in range(j + 1, n):
            # (plus_A - lam plus_B) C[i+1] = lam (C[i] + minus_B C[i-1]) - minus_A C[i-1]
            lead = A_I.plus(i) - B_I.plus(i) * lam
            rest = (C[i][j] + B_I.minus(i) * C[i - 1][j]) * lam - A_I.minus(i) * C[i - 1][j]
            C[i + 1][j] = rest / lead
    C1 = tuple(tuple(r) for r in C)
    return CoeffMatrixPair(n, C1, sign_mirror(C1))


def recurrence_report(n: int, C: CoeffMatrixPair | None = None) -> dict:
    C = C or build_coeff_matrices(n)
    bessel = check_bessel_difference(C)
    return {
        "n": n,
        "geneigi": check_gen_eig_i(C),
        "geneigj": check_gen_eig_j(C),
        "geneigj_boundary": probe_gen_eig_j_boundary(C),
        "recurij": check_mixed_recurrence(C),
        "pdde": bessel,
        "regenerated_equals_direct": regenerate_via_recurrence(n) == C,
    }
