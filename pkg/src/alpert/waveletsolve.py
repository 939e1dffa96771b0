"""Wavelet matrices ``(D_1, D_-1)`` by an exact row-by-row orthogonality solve.

With ``(C_-1)_{ij} = (-1)^{i+j} (C_1)_{ij}`` and
``(D_-1)_{ij} = (-1)^{i+j+1} (D_1)_{ij}`` the two wavelet orthogonality
identities reduce, row by row, to: row ``r`` of ``D_1`` is orthogonal to the
rows of ``C_1`` of opposite parity and to the later rows of ``D_1`` of the
same parity, and has unit length.  Upper triangularity leaves exactly one
free direction per row.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .exact import DEFAULT_MAX_RADICALS, ONE, ZERO, SurdDivisionError, SurdValue, surd_div
from .legendre import PolyExact, eval_scaling_vector, monic_legendre, orthonormal_scale
from .refinement import CoeffMatrixPair, build_coeff_matrices, mat_mul_t, sign_mirror

FALLBACK_PREC = 256


class WaveletSolveError(ArithmeticError):
    """The orthogonality system does not pin down a unique row."""


@dataclass(frozen=True)
class WaveletMatrixPair:
    order: int
    D1: tuple
    Dm1: tuple
    exact: bool = True
    fallback_rows: tuple = field(default=())

    def entry(self, i: int, j: int):
        return self.D1[i][j]


def _is_zero(x) -> bool:
    if isinstance(x, SurdValue):
        return not x
    return abs(x) < mpmath.mpf(2) ** (-(FALLBACK_PREC - 32))


def _magnitude(x) -> float:
    return abs(float(x))


def _div(x, y, max_radicals):
    if isinstance(x, SurdValue) and isinstance(y, SurdValue):
        return surd_div(x, y, max_radicals)
    return x / y


def nullspace_vector(rows: list[list], ncols: int, max_radicals: int = DEFAULT_MAX_RADICALS) -> list:
    """Basis vector of a one-dimensional nullspace, by Gauss-Jordan elimination.

    The pivot in each column is the candidate with the largest magnitude.
    """
    M = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        cand = [k for k in range(r, len(M)) if not _is_zero(M[k][c])]
        if not cand:
            continue
        p = max(cand, key=lambda k: _magnitude(M[k][c]))
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        M[r] = [_div(x, piv, max_radicals) if not _is_zero(x) else x for x in M[r]]
        for k in range(len(M)):
            if k != r and not _is_zero(M[k][c]):
                f = M[k][c]
                M[k] = [a - f * b for a, b in zip(M[k], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    free = [c for c in range(ncols) if c not in pivots]
    if len(free) != 1:
        raise WaveletSolveError(f"nullspace has dimension {len(free)}, expected 1")
    (fc,) = free
    one = ONE if isinstance(M[0][0] if M else ONE, SurdValue) else mpmath.mpf(1)
    v = [None] * ncols
    v[fc] = one
    for row, c in enumerate(pivots):
        v[c] = -M[row][fc]
    return v


def _normalize_exact(v: list[SurdValue], max_radicals: int) -> list[SurdValue]:
    norm2 = sum((x * x for x in v), ZERO)
    if not norm2.is_rational():
        raise SurdDivisionError("squared row norm is irrational; no exact square root available")
    norm = SurdValue.sqrt(norm2.as_rational())
    if v[0].sign() < 0:
        norm = -norm
    return [surd_div(x, norm, max_radicals) for x in v]


def _normalize_float(v: list) -> list:
    norm = mpmath.sqrt(mpmath.fsum(x * x for x in v))
    if v[0] < 0:
        norm = -norm
    return [x / norm for x in v]


def _solve_rows(C1, n: int, exact: bool, max_radicals: int):
    """Rows of ``D_1`` from ``r = n`` downward; entries SurdValue or mpf."""
    zero = ZERO if exact else mpmath.mpf(0)
    one = ONE if exact else mpmath.mpf(1)
    D = [[zero] * (n + 1) for _ in range(n + 1)]
    D[n][n] = one
    for r in range(n - 1, -1, -1):
        cols = range(r, n + 1)
        eqs = [[C1[i][c] for c in cols] for i in range(r + 1, n + 1) if (i - r) % 2]
        eqs += [[D[s][c] for c in cols] for s in range(r + 1, n + 1) if (s - r) % 2 == 0]
        v = nullspace_vector(eqs, n - r + 1, max_radicals)
        d = _normalize_exact(v, max_radicals) if exact else _normalize_float(v)
        for k, c in enumerate(cols):
            D[r][c] = d[k]
    return D


def build_wavelet_matrices(C: CoeffMatrixPair | int, max_radicals: int = DEFAULT_MAX_RADICALS,
                           force_fallback: bool = False) -> WaveletMatrixPair:
    """The unique upper-triangular ``D_1`` with positive diagonal and ``(D_1)_{n,n} = 1``.

    Order 0 is the Haar case ``D_1 = (-1)``, ``D_-1 = (1)``.  If exact
    arithmetic hits the radical limit the whole solve is repeated in
    256-bit floating point and the result is marked inexact.
    """
    if not isinstance(C, CoeffMatrixPair):
        C = build_coeff_matrices(int(C))
    n = C.order
    if n == 0:
        D1 = ((SurdValue.from_rational(-1),),)
        return WaveletMatrixPair(0, D1, sign_mirror(D1, odd=True))
    try:
        if force_fallback:
            raise SurdDivisionError("float solve requested")
        D = _solve_rows(C.C1, n, True, max_radicals)
    except SurdDivisionError:
        with mpmath.workprec(FALLBACK_PREC):
            C1f = [[x.to_mpf(FALLBACK_PREC) for x in row] for row in C.C1]
            D = _solve_rows(C1f, n, False, max_radicals)
            # mpf negation rounds to the working precision, so mirror inside the block
            D1 = tuple(tuple(r) for r in D)
            Dm1 = sign_mirror(D1, odd=True)
        return WaveletMatrixPair(n, D1, Dm1, exact=False, fallback_rows=tuple(range(n)))
    D1 = tuple(tuple(r) for r in D)
    return WaveletMatrixPair(n, D1, sign_mirror(D1, odd=True))


def _float_close(A, B, tol) -> bool:
    as_mpf = lambda x: x.to_mpf(FALLBACK_PREC) if isinstance(x, SurdValue) else x
    with mpmath.workprec(FALLBACK_PREC):
        return all(abs(as_mpf(a) - as_mpf(b)) <= tol for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def _mat_mul_t_any(A, B):
    if all(isinstance(x, SurdValue) for row in A + B for x in row):
        return mat_mul_t(A, B)
    with mpmath.workprec(FALLBACK_PREC):
        conv = lambda M: [[x.to_mpf(FALLBACK_PREC) if isinstance(x, SurdValue) else x for x in r] for r in M]
        A, B = conv(A), conv(B)
        return [[mpmath.fsum(x * y for x, y in zip(ra, rb)) for rb in B] for ra in A]


def verify_wavelet_orthogonality(C: CoeffMatrixPair, D: WaveletMatrixPair, tol: float = 1e-30) -> bool:
    """Scaling/wavelet orthogonality, wavelet orthonormality and ``M M^T = I``.

    ``M = 2^{-1/2} [[C_-1, C_1], [D_-1, D_1]]``; the ``1/2`` from squaring the
    prefactor is applied to rational sums so the check stays exact.
    """
    if C.order != D.order:
        raise ValueError("matrix orders differ")
    with mpmath.workprec(FALLBACK_PREC):
        n = C.order
        CD = _add(_mat_mul_t_any(C.Cm1, D.Dm1), _mat_mul_t_any(C.C1, D.D1))
        DD = _add(_mat_mul_t_any(D.Dm1, D.Dm1), _mat_mul_t_any(D.D1, D.D1))
        CC = _add(_mat_mul_t_any(C.Cm1, C.Cm1), _mat_mul_t_any(C.C1, C.C1))
        zero = [[ZERO] * (n + 1) for _ in range(n + 1)]
        two = [[SurdValue.from_rational(2) if i == j else ZERO for j in range(n + 1)] for i in range(n + 1)]
        # rows of M M^T: [[CC, CD], [CD^T, DD]] / 2 must be the identity
        top = [list(a) + list(b) for a, b in zip(CC, CD)]
        bottom = [[CD[j][i] for j in range(n + 1)] + list(DD[i]) for i in range(n + 1)]
        MMt = [[x * Fraction(1, 2) if isinstance(x, SurdValue) else x / 2 for x in row] for row in top + bottom]
        ident = [[ONE if i == j else ZERO for j in range(2 * n + 2)] for i in range(2 * n + 2)]
        if D.exact:
            return CD == zero and DD == two and MMt == ident
        return _float_close(CD, zero, tol) and _float_close(DD, two, tol) and _float_close(MMt, ident, tol)


def _add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def dnm1_closed_form(n: int) -> list[SurdValue]:
    """Row ``n-1`` of ``D_1`` in columns ``n-1, n``."""
    return [SurdValue.from_rational(Fraction(1, 2 * n)),
            SurdValue.sqrt((2 * n + 1) * (2 * n - 1)) * Fraction(-1, 2 * n)]


def dnm2_closed_form(n: int) -> list[SurdValue]:
    """Row ``n-2`` of ``D_1`` in columns ``n-2, n-1, n``."""
    return [SurdValue.from_rational(Fraction(1, 2 * n - 2)),
            SurdValue.sqrt((2 * n - 1) * (2 * n - 3)) * Fraction(-1, 2 * n - 2),
            ZERO]


def wavelet_row_nm3_closed_form(n: int) -> list[SurdValue]:
    """Row ``n-3`` of ``D_1`` in columns ``n-3 .. n``."""
    if n < 3:
        raise ValueError("row n-3 needs n >= 3")
    a = Fraction(1, 4 * (n - 1) * (n - 2))
    b = Fraction(1, 4 * n * (n - 1))
    return [SurdValue.from_rational(3 * a),
            SurdValue.sqrt((2 * n - 3) * (2 * n - 5)) * (-3 * a),
            SurdValue.sqrt((2 * n - 1) * (2 * n - 5)) * ((2 * n + 1) * b),
            SurdValue.sqrt((2 * n + 1) * (2 * n - 5)) * b]


def verify_lemma_even(n: int) -> dict:
    """Zero pattern in the last column and agreement with the order ``n-1`` solution.

    For every even offset row ``r = n - 2j`` (``j >= 1``) this records whether
    ``(D^n)_{r,n} = 0`` and, for the columns ``r .. n-1``, whether the entries
    agree with ``D^{n-1}`` at the same indices or at indices shifted by one.
    """
    if n < 2:
        raise ValueError("lemma needs n >= 2")
    Dn = build_wavelet_matrices(n).D1
    Dp = build_wavelet_matrices(n - 1).D1
    rows = []
    for j in range(1, n // 2 + 1):
        r = n - 2 * j
        same = all(Dn[r][c] == Dp[r][c] for c in range(r, n))
        shifted = r >= 1 and all(Dn[r][c] == Dp[r - 1][c - 1] for c in range(r, n))
        rows.append({"row": r, "last_column_zero": Dn[r][n] == 0,
                     "same_index": same, "shifted_index": shifted})
    return {
        "n": n,
        "rows": rows,
        "zero_pattern": all(r["last_column_zero"] for r in rows),
        "correspondence": ("same_index" if all(r["same_index"] for r in rows)
                           else "shifted_index" if all(r["shifted_index"] for r in rows) else None),
    }


def eval_wavelet_vector(D: WaveletMatrixPair, n: int, t) -> list[SurdValue]:
    """``Psi_n((t+1)/2) = D_-1 Phi_n(t+1) + D_1 Phi_n(t)`` for rational ``t``."""
    t = Fraction(t)
    left = eval_scaling_vector(n, t + 1)
    right = eval_scaling_vector(n, t)
    out = []
    for i in range(n + 1):
        acc = ZERO
        for j in range(n + 1):
            if left[j]:
                acc = acc + D.Dm1[i][j] * left[j]
            if right[j]:
                acc = acc + D.D1[i][j] * right[j]
        out.append(acc)
    return out


def wavelet_moments(D: WaveletMatrixPair, m: int) -> list[SurdValue]:
    """``int_{-1}^{1} t^m psi_i((t+1)/2) dt`` for each row ``i``, exactly."""
    n = D.order
    tm = PolyExact.monomial(m)
    left = [orthonormal_scale(j) * (tm * monic_legendre(j).affine(2, 1)).integrate(-1, 0) for j in range(n + 1)]
    right = [orthonormal_scale(j) * (tm * monic_legendre(j).affine(2, -1)).integrate(0, 1) for j in range(n + 1)]
    return [sum((D.Dm1[i][j] * left[j] + D.D1[i][j] * right[j] for j in range(n + 1)), ZERO)
            for i in range(n + 1)]


def parity_basis_complete(C: CoeffMatrixPair, D: WaveletMatrixPair) -> bool:
    """Rows of ``C_1`` with index parity ``p`` plus rows of ``D_1`` of the other parity form an orthonormal set."""
    n = C.order
    for p in (0, 1):
        vecs = [C.C1[i] for i in range(n + 1) if i % 2 == p] + [D.D1[i] for i in range(n + 1) if i % 2 != p]
        if len(vecs) != n + 1:
            return False
        G = mat_mul_t(vecs, vecs)
        for a in range(n + 1):
            for b in range(n + 1):
                if G[a][b] != (ONE if a == b else ZERO):
                    return False
    return True
