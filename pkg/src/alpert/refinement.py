"""Refinement matrices ``(C_1, C_-1)`` of the Legendre multiresolution analysis.

Every entry of ``C_1`` is available through four independent routes: two
2F1 forms, a balanced 4F3 form split by row parity, and the defining
integral.  ``C_-1`` follows from ``(C_-1)_{ij} = (-1)^{i+j} (C_1)_{ij}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exact import ONE, ZERO, SurdValue, double_factorial, pochhammer
from .hypergeom import HypTerminatingSpec, hyp, hyp_eval
from .legendre import eval_scaling_vector, integrate_shifted_product, orthonormal_legendre

PATHS = ("2f1-half", "2f1-two", "4f3", "oracle")
DEFAULT_PATH = "2f1-half"

HALF = Fraction(1, 2)


def _check_lower(i: int, j: int) -> None:
    if not 0 <= j <= i:
        raise ValueError(f"entry ({i},{j}) is not in the lower triangle; it is structurally zero")


def _root(m: int) -> SurdValue:
    return SurdValue.sqrt(m)


@lru_cache(maxsize=None)
def c1_entry_2f1_half(i: int, j: int) -> SurdValue:
    """2F1 at argument 1/2."""
    _check_lower(i, j)
    pre = Fraction(factorial(i + j), 2 ** j * factorial(2 * j + 1) * factorial(i - j))
    f = hyp((j - i, i + j + 1), (2 * j + 2,), HALF)
    return _root((2 * i + 1) * (2 * j + 1)) * (pre * f)


@lru_cache(maxsize=None)
def c1_entry_2f1_two(i: int, j: int) -> SurdValue:
    """2F1 at argument 2, polynomial in ``j`` for fixed ``i``."""
    _check_lower(i, j)
    pre = Fraction((-1) ** (i - j) * factorial(2 * i), 2 ** i * factorial(i + j + 1) * factorial(i - j))
    f = hyp((j - i, -i - j - 1), (-2 * i,), 2)
    return _root((2 * i + 1) * (2 * j + 1)) * (pre * f)


def _k_weight(i: int, j: int) -> SurdValue:
    """``(2i-1)!! (2j-1)!! sqrt((2i+1)(2j+1)) / (i! j!)``."""
    q = Fraction(double_factorial(2 * i - 1) * double_factorial(2 * j - 1), factorial(i) * factorial(j))
    return _root((2 * i + 1) * (2 * j + 1)) * q


def balanced_4f3_spec(row: int, j: int) -> HypTerminatingSpec:
    """The balanced 4F3 attached to entry ``(row, j)``; parameters depend on row parity."""
    i, odd = divmod(row, 2)
    lo, hi = j // 2, (j + 1) // 2
    if odd:
        num = (-i + lo, -i + hi - HALF, -i - lo - 1, -i - hi - HALF)
        den = (-2 * i - HALF, -i, -i - HALF)
    else:
        num = (-i + hi, -i + lo + HALF, -i - lo - HALF, -i - hi)
        den = (-2 * i + HALF, -i, -i + HALF)
    return HypTerminatingSpec(num, den, 1, require_balanced=True)


def weight_4f3(row: int, j: int) -> SurdValue:
    """Prefactor multiplying the balanced 4F3 for entry ``(row, j)``."""
    i, odd = divmod(row, 2)
    lo, hi = j // 2, (j + 1) // 2
    common = Fraction((-1) ** j * factorial(j)) * Fraction(2) ** (j - 1) / pochhammer(j + 1, j)
    if odd:
        q = pochhammer(-i, lo) * pochhammer(-i - HALF, hi) / (pochhammer(i + 3 * HALF, hi) * pochhammer(i + 1, lo + 1))
    else:
        q = pochhammer(-i, hi) * pochhammer(-i + HALF, lo) / (pochhammer(i + HALF, lo + 1) * pochhammer(i + 1, hi))
    return _k_weight(row, j) * (common * q)


@lru_cache(maxsize=None)
def c1_entry_4f3(i: int, j: int) -> SurdValue:
    """Balanced 4F3 form, dispatched on the parity of the row."""
    _check_lower(i, j)
    return weight_4f3(i, j) * hyp_eval(balanced_4f3_spec(i, j))


def c1_entry_oracle(i: int, j: int) -> SurdValue:
    _check_lower(i, j)
    return integrate_shifted_product(i, j)


def c1_entry_first_column(i: int) -> SurdValue:
    """Closed form for ``(C_1)_{i,0}``, ``i >= 1``, from Kummer's theorem."""
    if i < 1:
        raise ValueError("first-column closed form needs i >= 1")
    if i % 2 == 0:
        return ZERO
    h = (i - 1) // 2
    q = Fraction((-1) ** h, 2) * pochhammer(HALF, h) / factorial((i + 1) // 2)
    return _root(2 * i + 1) * q


_ENTRY = {
    "2f1-half": c1_entry_2f1_half,
    "2f1-two": c1_entry_2f1_two,
    "4f3": c1_entry_4f3,
    "oracle": c1_entry_oracle,
}


def c1_entry(i: int, j: int, path: str = DEFAULT_PATH) -> SurdValue:
    """Entry of ``C_1`` for any ``i, j >= 0``; zero above the diagonal."""
    if j > i:
        return ZERO
    try:
        fn = _ENTRY[path]
    except KeyError:
        raise ValueError(f"unknown formula path {path!r}; choose from {PATHS}") from None
    return fn(i, j)


Matrix = tuple  # tuple of row tuples of SurdValue


@dataclass(frozen=True)
class CoeffMatrixPair:
    order: int
    C1: Matrix
    Cm1: Matrix

    @property
    def size(self) -> int:
        return self.order + 1

    def entry(self, i: int, j: int) -> SurdValue:
        """``(C_1)_{i,j}``, reading structural zeros outside the matrix."""
        if 0 <= j <= i <= self.order:
            return self.C1[i][j]
        return ZERO


def sign_mirror(M: Matrix, odd: bool = False) -> Matrix:
    """Apply ``(-1)^{i+j}`` (or ``(-1)^{i+j+1}`` when ``odd``) entrywise."""
    s = 1 if odd else 0
    return tuple(tuple(x if (i + j + s) % 2 == 0 else -x for j, x in enumerate(row))
                 for i, row in enumerate(M))


def build_coeff_matrices(n: int, path: str = DEFAULT_PATH) -> CoeffMatrixPair:
    if n < 0:
        raise ValueError("order must be nonnegative")
    if path not in _ENTRY:
        raise ValueError(f"unknown formula path {path!r}; choose from {PATHS}")
    C1 = tuple(tuple(c1_entry(i, j, path) for j in range(n + 1)) for i in range(n + 1))
    return CoeffMatrixPair(n, C1, sign_mirror(C1))


def mat_mul_t(A: Matrix, B: Matrix) -> list[list[SurdValue]]:
    """``A @ B.T`` over SurdValue."""
    out = []
    for ra in A:
        row = []
        for rb in B:
            acc = ZERO
            for x, y in zip(ra, rb):
                if x and y:
                    acc = acc + x * y
            row.append(acc)
        out.append(row)
    return out


def _coerce_pair(C) -> CoeffMatrixPair:
    return C if isinstance(C, CoeffMatrixPair) else build_coeff_matrices(int(C))


def verify_orthogonality(C) -> bool:
    """Gram identity, same-parity row orthogonality and unit row norms."""
    C = _coerce_pair(C)
    n = C.order
    G = mat_mul_t(C.C1, C.C1)
    Gm = mat_mul_t(C.Cm1, C.Cm1)
    two = SurdValue.from_rational(2)
    for i in range(n + 1):
        for k in range(n + 1):
            if G[i][k] + Gm[i][k] != (two if i == k else ZERO):
                return False
            if i != k and (i - k) % 2 == 0 and G[i][k]:
                return False
        if G[i][i] != ONE:
            return False
    return True


def verify_refinement_pointwise(n: int, sample_count: int = 9, C: CoeffMatrixPair | None = None) -> dict:
    """Check ``phat_i(t)`` against its two half-interval expansions at rational samples in [-1, 1]."""
    C = C or build_coeff_matrices(n)
    polys = [orthonormal_legendre(j) for j in range(n + 1)]
    if sample_count < 2:
        ts = [Fraction(0)]
    else:
        ts = [Fraction(-1) + Fraction(2 * k, sample_count - 1) for k in range(sample_count)]
    failures = []
    for t in ts:
        for i in range(n + 1):
            lhs = polys[i](t)
            if t < 0:
                rhs = sum((C.Cm1[i][j] * polys[j](2 * t + 1) for j in range(i + 1)), ZERO)
            else:
                rhs = sum((C.C1[i][j] * polys[j](2 * t - 1) for j in range(i + 1)), ZERO)
            if lhs != rhs:
                failures.append({"t": str(t), "i": i, "lhs": str(lhs), "rhs": str(rhs)})
    return {"n": n, "samples": [str(t) for t in ts], "failures": failures, "ok": not failures}


def subdiagonal_closed_forms(i: int) -> tuple[SurdValue, SurdValue]:
    """``(C_1)_{i,i} = 2^-i`` and ``(C_1)_{i,i-1} = sqrt((2i+1)(2i-1)) / 2^i``."""
    d = SurdValue.from_rational(Fraction(1, 2 ** i))
    sub = _root((2 * i + 1) * (2 * i - 1)) * Fraction(1, 2 ** i) if i >= 1 else ZERO
    return d, sub


def subsubdiagonal_candidates(i: int) -> dict[str, SurdValue]:
    """Both candidate radicands ``r`` in ``(i-2) sqrt(r) / 2^i`` for ``(C_1)_{i,i-2}``."""
    q = Fraction(i - 2, 2 ** i)
    return {
        "(2i+1)(2i-1)": _root((2 * i + 1) * (2 * i - 1)) * q,
        "(2i+1)(2i-3)": _root((2 * i + 1) * (2 * i - 3)) * q,
    }


def resolve_subsubdiagonal(max_i: int = 12) -> dict:
    """Compare ``(C_1)_{i,i-2}`` from the oracle with both candidate radicands."""
    holds = {}
    for i in range(2, max_i + 1):
        truth = integrate_shifted_product(i, i - 2)
        for name, value in subsubdiagonal_candidates(i).items():
            holds.setdefault(name, []).append(value == truth)
    valid = [name for name, flags in holds.items() if all(flags)]
    return {
        "entry": "(C1)_{i,i-2}",
        "range": f"2 <= i <= {max_i}",
        "formula": "(i-2)*sqrt(radicand)/2^i",
        "radicands": {name: all(flags) for name, flags in holds.items()},
        "resolved": valid[0] if len(valid) == 1 else None,
    }


def scaling_values(n: int, t) -> list[SurdValue]:
    return eval_scaling_vector(n, t)
