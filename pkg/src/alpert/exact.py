"""Exact rational and surd arithmetic.

Rationals are :class:`fractions.Fraction`.  A :class:`SurdValue` is a finite
sum ``sum(q_m * sqrt(m))`` over squarefree positive integers ``m`` with
rational ``q_m``; the rational part is stored under ``m = 1``.  Distinct
square roots of squarefree integers are linearly independent over the
rationals, so equality of canonical term maps is equality of numbers.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC

Rational = Fraction

DEFAULT_MAX_RADICALS = 8


class SurdDivisionError(ArithmeticError):
    """Raised when rationalizing a denominator would need too many radicals."""


def pochhammer(a, k: int) -> Fraction:
    """Rising factorial ``(a)_k = a (a+1) ... (a+k-1)``; ``(a)_0 = 1``."""
    if k < 0:
        raise ValueError("pochhammer length must be nonnegative")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(k):
        out *= a + i
        if not out:
            break
    return out


def double_factorial(k: int) -> int:
    """``k!!`` for ``k = -1`` or odd positive ``k``."""
    if k < -1 or (k >= 0 and k % 2 == 0):
        raise ValueError(f"double_factorial expects -1 or an odd positive integer, got {k}")
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


@lru_cache(maxsize=4096)
def squarefree_split(m: int) -> tuple[int, int]:
    """Return ``(s, r)`` with ``m = s*s*r`` and ``r`` squarefree."""
    if m <= 0:
        raise ValueError("radicand must be positive")
    s, r = 1, 1
    p = 2
    while p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            r *= p
        p += 1 if p == 2 else 2
    return s, r * m


@lru_cache(maxsize=4096)
def prime_factors(m: int) -> frozenset:
    out = set()
    p = 2
    while p * p <= m:
        while m % p == 0:
            out.add(p)
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        out.add(m)
    return frozenset(out)


def _coerce(x) -> "SurdValue":
    if isinstance(x, SurdValue):
        return x
    if isinstance(x, (int, _RationalABC)):
        return SurdValue.from_rational(x)
    return NotImplemented


class SurdValue:
    """Immutable element of the multi-quadratic field over the rationals."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        acc: dict[int, Fraction] = {}
        for rad, coef in dict(terms or {}).items():
            rad = int(rad)
            coef = Fraction(coef)
            if not coef:
                continue
            s, r = squarefree_split(rad)
            acc[r] = acc.get(r, Fraction(0)) + coef * s
        self._terms = {r: q for r, q in acc.items() if q}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "SurdValue":
        # terms already canonical and zero-free
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def from_rational(cls, q) -> "SurdValue":
        q = Fraction(q)
        return cls._raw({1: q} if q else {})

    @classmethod
    def sqrt(cls, q) -> "SurdValue":
        """Exact ``sqrt(q)`` for a nonnegative rational ``q``."""
        q = Fraction(q)
        if q < 0:
            raise ValueError("square root of a negative rational")
        if not q:
            return cls._raw({})
        # sqrt(p/d) = sqrt(p*d)/d
        s, r = squarefree_split(q.numerator * q.denominator)
        return cls._raw({r: Fraction(s, q.denominator)})

    # -- inspection ------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return not self._terms or set(self._terms) == {1}

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._terms.get(1, Fraction(0))

    def radicals(self) -> frozenset:
        """Primes appearing under some square root."""
        out = set()
        for r in self._terms:
            out |= prime_factors(r)
        return frozenset(out)

    def conjugate(self, p: int) -> "SurdValue":
        """Flip the sign of every term whose radicand contains the prime ``p``."""
        return SurdValue._raw({r: (-q if r % p == 0 else q) for r, q in self._terms.items()})

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for r, q in other._terms.items():
            v = out.get(r, 0) + q
            if v:
                out[r] = v
            else:
                out.pop(r, None)
        return SurdValue._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return SurdValue._raw({r: -q for r, q in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, _RationalABC)):
            if not other:
                return SurdValue._raw({})
            return SurdValue._raw({r: q * other for r, q in self._terms.items()})
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, Fraction] = {}
        for r1, q1 in self._terms.items():
            for r2, q2 in other._terms.items():
                if r1 == 1 or r2 == 1:
                    s, r = 1, r1 * r2
                else:
                    g = math.gcd(r1, r2)
                    # both squarefree: r1*r2 = g^2 * (r1/g)*(r2/g)
                    s, r = g, (r1 // g) * (r2 // g)
                v = out.get(r, 0) + q1 * q2 * s
                if v:
                    out[r] = v
                else:
                    out.pop(r, None)
        return SurdValue._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return surd_div(self, other)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return surd_div(other, self)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return SurdValue.from_rational(1) / self ** (-k)
        out = SurdValue.from_rational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def enclosure(self, bits: int) -> tuple[Fraction, Fraction]:
        """Rational interval ``[lo, hi]`` guaranteed to contain the value."""
        lo = hi = Fraction(0)
        scale = 1 << bits
        for r, q in self._terms.items():
            if r == 1:
                lo += q
                hi += q
                continue
            root = math.isqrt(r * scale * scale)
            a = Fraction(root, scale)
            b = Fraction(root + 1, scale)
            if q > 0:
                lo += q * a
                hi += q * b
            else:
                lo += q * b
                hi += q * a
        return lo, hi

    def sign(self) -> int:
        """Exact sign, refining the enclosure until it excludes zero."""
        if not self._terms:
            return 0
        if self.is_rational():
            return 1 if self._terms[1] > 0 else -1
        bits = 64
        while True:
            lo, hi = self.enclosure(bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2

    def approx(self, bits: int = 128) -> Fraction:
        """Rational approximation with absolute error below ``sum|q| * 2**-bits``."""
        lo, hi = self.enclosure(bits)
        return (lo + hi) / 2

    def __float__(self):
        return float(self.approx(128))

    def to_mpf(self, prec: int = 256):
        import mpmath

        with mpmath.workprec(prec):
            return mpmath.fsum(mpmath.mpf(q.numerator) / q.denominator * mpmath.sqrt(r)
                               for r, q in self._terms.items())

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- formatting & serialization --------------------------------------
    def __repr__(self):
        return f"SurdValue({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for r, q in self.items():
            if r == 1:
                parts.append(str(q))
            elif q == 1:
                parts.append(f"sqrt({r})")
            elif q == -1:
                parts.append(f"-sqrt({r})")
            else:
                parts.append(f"{q}*sqrt({r})")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {"terms": [{"rad": r, "num": str(q.numerator), "den": str(q.denominator)}
                          for r, q in self.items()]}

    @classmethod
    def from_json(cls, obj: dict) -> "SurdValue":
        return cls({t["rad"]: Fraction(int(t["num"]), int(t["den"])) for t in obj["terms"]})


ZERO = SurdValue.from_rational(0)
ONE = SurdValue.from_rational(1)


def surd_add(x: SurdValue, y: SurdValue) -> SurdValue:
    return _coerce(x) + _coerce(y)


def surd_mul(x: SurdValue, y: SurdValue) -> SurdValue:
    return _coerce(x) * _coerce(y)


def surd_div(x: SurdValue, y: SurdValue, max_radicals: int = DEFAULT_MAX_RADICALS) -> SurdValue:
    """Exact quotient ``x / y``.

    The denominator is rationalized by multiplying through with the conjugate
    that flips one prime radical at a time.  Each step can double the term
    count, so more than ``max_radicals`` distinct primes is refused.
    """
    x, y = _coerce(x), _coerce(y)
    if not y:
        raise ZeroDivisionError("SurdValue division by zero")
    if len(y._terms) == 1:
        ((r, q),) = y._terms.items()
        # 1/(q sqrt r) = sqrt(r) / (q r)
        return x * SurdValue._raw({r: 1 / (q * r)})
    primes = sorted(y.radicals())
    if len(primes) > max_radicals:
        raise SurdDivisionError(
            f"denominator involves {len(primes)} prime radicals (limit {max_radicals})")
    num, den = x, y
    for p in primes:
        if not any(r % p == 0 for r in den._terms):
            continue
        conj = den.conjugate(p)
        num = num * conj
        den = den * conj
    d = den.as_rational()
    return num * (1 / d)


def sqrt_rational_surd(x: SurdValue) -> SurdValue:
    """Square root of a nonnegative SurdValue that happens to be rational."""
    return SurdValue.sqrt(x.as_rational())
