"""Exact Legendre polynomials, the scaling vector and the integration oracle."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exact import ZERO, SurdValue, double_factorial, pochhammer
from .hypergeom import hyp


class PolyExact:
    """Polynomial with rational coefficients, ascending degree."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        c = [Fraction(x) for x in coefficients]
        while c and not c[-1]:
            c.pop()
        self.coefficients = tuple(c)

    @classmethod
    def monomial(cls, k: int, coef=1) -> "PolyExact":
        return cls([0] * k + [coef])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, t):
        out = Fraction(0) if not isinstance(t, SurdValue) else ZERO
        for c in reversed(self.coefficients):
            out = out * t + c
        return out

    def __add__(self, other):
        other = _as_poly(other)
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return PolyExact([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return PolyExact([-c for c in self.coefficients])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PolyExact([c * other for c in self.coefficients])
        other = _as_poly(other)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return PolyExact()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return PolyExact(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyExact([other])
        if not isinstance(other, PolyExact):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"PolyExact({[str(c) for c in self.coefficients]})"

    def affine(self, scale, shift) -> "PolyExact":
        """Return ``t -> self(scale*t + shift)``."""
        lin = PolyExact([shift, scale])
        out = PolyExact()
        for c in reversed(self.coefficients):
            out = out * lin + PolyExact([c])
        return out

    def antiderivative(self) -> "PolyExact":
        return PolyExact([0] + [c / (k + 1) for k, c in enumerate(self.coefficients)])

    def integrate(self, lo, hi) -> Fraction:
        F = self.antiderivative()
        return F(Fraction(hi)) - F(Fraction(lo))


def _as_poly(x) -> PolyExact:
    if isinstance(x, PolyExact):
        return x
    return PolyExact([x])


class PolySurd:
    """Polynomial with SurdValue coefficients, ascending degree."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        c = [x if isinstance(x, SurdValue) else SurdValue.from_rational(x) for x in coefficients]
        while c and not c[-1]:
            c.pop()
        self.coefficients = tuple(c)

    @classmethod
    def scaled(cls, scale: SurdValue, p: PolyExact) -> "PolySurd":
        return cls([scale * c for c in p.coefficients])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, t) -> SurdValue:
        out = ZERO
        for c in reversed(self.coefficients):
            out = out * t + c
        return out

    def __mul__(self, other: "PolySurd") -> "PolySurd":
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return PolySurd()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return PolySurd(out)

    def integrate(self, lo, hi) -> SurdValue:
        lo, hi = Fraction(lo), Fraction(hi)
        out = ZERO
        for k, c in enumerate(self.coefficients):
            out = out + c * ((hi ** (k + 1) - lo ** (k + 1)) / (k + 1))
        return out

    def __repr__(self):
        return f"PolySurd({[str(c) for c in self.coefficients]})"


@lru_cache(maxsize=None)
def monic_legendre(n: int) -> PolyExact:
    """Monic Legendre polynomial via the three-term recurrence."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    prev, cur = PolyExact([1]), PolyExact([0, 1])
    if n == 0:
        return prev
    t = PolyExact([0, 1])
    for k in range(1, n):
        prev, cur = cur, t * cur - prev * Fraction(k * k, (2 * k + 1) * (2 * k - 1))
    return cur


@lru_cache(maxsize=None)
def orthonormal_scale(n: int) -> SurdValue:
    """Factor taking the monic ``p_n`` to the orthonormal one on [-1, 1].

    ``sqrt(2n+1) (2n-1)!! / (sqrt(2) n!) = (2n-1)!!/(2 n!) * sqrt(2(2n+1))``.
    """
    return SurdValue.sqrt(2 * (2 * n + 1)) * Fraction(double_factorial(2 * n - 1), 2 * factorial(n))


@lru_cache(maxsize=None)
def orthonormal_legendre(n: int) -> PolySurd:
    return PolySurd.scaled(orthonormal_scale(n), monic_legendre(n))


def monic_legendre_hypergeometric(n: int, t) -> Fraction:
    """``p_n(t)`` through ``2^n n!/(n+1)_n * 2F1(-n, n+1; 1; (1-t)/2)``."""
    t = Fraction(t)
    return Fraction(2 ** n * factorial(n)) / pochhammer(n + 1, n) * hyp((-n, n + 1), (1,), (1 - t) / 2)


def monic_legendre_symmetric(n: int, x) -> Fraction:
    """``p_n(x)`` through the 2F1 in ``x**2`` that makes the parity explicit."""
    x = Fraction(x)
    m, odd = divmod(n, 2)
    half = Fraction(1, 2)
    if odd:
        c = Fraction((-1) ** m) * pochhammer(3 * half, m) / pochhammer(m + 3 * half, m)
        return c * x * hyp((-m, m + 3 * half), (3 * half,), x * x)
    c = Fraction((-1) ** m) * pochhammer(half, m) / pochhammer(m + half, m)
    return c * hyp((-m, m + half), (half,), x * x)


def eval_scaling_vector(n: int, t) -> list[SurdValue]:
    """``(phi_0(t), ..., phi_n(t))`` with ``phi_j(t) = phat_j(2t-1)`` on [0, 1)."""
    t = Fraction(t)
    if not (0 <= t < 1):
        return [ZERO] * (n + 1)
    u = 2 * t - 1
    return [orthonormal_legendre(j)(u) for j in range(n + 1)]


@lru_cache(maxsize=None)
def _shifted_monic_integral(i: int, j: int) -> Fraction:
    return (monic_legendre(i) * monic_legendre(j).affine(2, -1)).integrate(0, 1)


@lru_cache(maxsize=None)
def integrate_shifted_product(i: int, j: int) -> SurdValue:
    """Refinement entry ``(C_1)_{i,j}`` straight from its defining integral.

    ``2 * int_0^1 phat_i(t) phat_j(2t-1) dt``; the factor 2 undoes the squared
    norm 1/2 of the half-interval basis ``phat_j(2t-1)`` on [0, 1].
    """
    if i < 0 or j < 0:
        raise ValueError("indices must be nonnegative")
    return 2 * orthonormal_scale(i) * orthonormal_scale(j) * _shifted_monic_integral(i, j)


def inner_product(i: int, j: int) -> SurdValue:
    """``int_{-1}^{1} phat_i phat_j dt`` computed exactly."""
    return orthonormal_scale(i) * orthonormal_scale(j) * (monic_legendre(i) * monic_legendre(j)).integrate(-1, 1)


__all__ = [
    "PolyExact", "PolySurd", "monic_legendre", "orthonormal_legendre", "orthonormal_scale",
    "monic_legendre_hypergeometric", "monic_legendre_symmetric", "eval_scaling_vector",
    "integrate_shifted_product", "inner_product",
]
