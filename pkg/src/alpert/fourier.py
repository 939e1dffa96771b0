"""Half-integer Bessel functions and the Fourier-side identities of ``C_1``.

Conventions.  ``P~_n(a) = int_{-1}^{1} exp(-i a t) phat(t) dt`` is the
Fourier transform of the symmetric scaling vector; it satisfies
``P~_n(a) = T_n(a) P~_n(a/2)`` with
``T_n(a) = (C_-1 exp(ia/2) + C_1 exp(-ia/2)) / 2``.  Writing
``P^_n(a) = G_n J_n(a)`` this becomes ``P^_n(a) = sqrt(2) T_n(a) P^_n(a/2)``
when ``G_n = diag((-i)^k sqrt(2k+1))``; the phase ``(-i)^k`` (rather than
``i^k``) is what makes the identity hold with ``T_n(a)`` instead of its
conjugate.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .refinement import build_coeff_matrices

DEFAULT_GRID = np.geomspace(1e-3, 20.0, 100)


@dataclass(frozen=True)
class BesselHalfVector:
    order_count: int
    argument: float
    values: np.ndarray  # J_{k+1/2}(argument), k = 0 .. order_count-1


@dataclass(frozen=True)
class TwoScaleSymbol:
    order: int
    argument: float
    matrix: np.ndarray


def _spherical_upward(kmax: int, x: float) -> np.ndarray:
    out = np.empty(kmax + 1)
    s, c = math.sin(x), math.cos(x)
    out[0] = s / x
    if kmax >= 1:
        out[1] = s / (x * x) - c / x
    for k in range(1, kmax):
        out[k + 1] = (2 * k + 1) / x * out[k] - out[k - 1]
    return out


def _spherical_miller(kmax: int, x: float) -> np.ndarray:
    """Downward recurrence normalized by ``sum (2k+1) j_k^2 = 1``."""
    top = kmax + int(x) + 40
    f = np.zeros(top + 2)
    f[top] = 1e-200
    for k in range(top, 0, -1):
        f[k - 1] = (2 * k + 1) / x * f[k] - f[k + 1]
        if abs(f[k - 1]) > 1e100:
            f *= 1e-100
    f /= np.max(np.abs(f))
    weights = 2 * np.arange(top + 2) + 1
    scale = 1.0 / math.sqrt(float(np.sum(weights * f * f)))
    j0 = math.sin(x) / x
    j1 = (math.sin(x) / x - math.cos(x)) / x if x > 1e-3 else x / 3 - x ** 3 / 30
    ref, got = (j0, f[0]) if abs(j0) >= abs(j1) else (j1, f[1])
    if ref * got < 0:
        scale = -scale
    return f[: kmax + 1] * scale


def spherical_bessel(kmax: int, x: float) -> np.ndarray:
    """``j_k(x)`` for ``k = 0..kmax``: upward for ``k <= x``, downward above."""
    if x <= 0:
        raise ValueError("argument must be positive")
    kup = min(kmax, int(math.floor(x)))
    if kup >= kmax:
        return _spherical_upward(kmax, x)
    out = _spherical_miller(kmax, x)
    if kup >= 1:
        out[: kup + 1] = _spherical_upward(kup, x)
    return out


def bessel_half_vector(n: int, a: float) -> BesselHalfVector:
    """``J_{k+1/2}(a)`` for ``k = 0..n``."""
    if a <= 0:
        raise ValueError("argument must be positive")
    vals = math.sqrt(2 * a / math.pi) * spherical_bessel(n, a)
    return BesselHalfVector(n + 1, float(a), vals)


def bessel_minus_half(a: float) -> float:
    """``J_{-1/2}(a) = sqrt(2/(pi a)) cos a``."""
    return math.sqrt(2 / (math.pi * a)) * math.cos(a)


@lru_cache(maxsize=None)
def c1_float(n: int) -> np.ndarray:
    C = build_coeff_matrices(n)
    return np.array([[float(x) for x in row] for row in C.C1])


def _mirror(C1: np.ndarray) -> np.ndarray:
    idx = np.arange(C1.shape[0])
    return C1 * (-1.0) ** (idx[:, None] + idx[None, :])


def two_scale_symbol(n: int, a: float, C1: np.ndarray | None = None) -> TwoScaleSymbol:
    C1 = c1_float(n) if C1 is None else C1
    T = (_mirror(C1) * np.exp(0.5j * a) + C1 * np.exp(-0.5j * a)) / 2
    return TwoScaleSymbol(n, float(a), T)


def _two_scale_derivative(C1: np.ndarray, a: float) -> np.ndarray:
    return (_mirror(C1) * (0.5j * np.exp(0.5j * a)) - C1 * (0.5j * np.exp(-0.5j * a))) / 2


def scaling_fourier_vector(n: int, a: float) -> np.ndarray:
    """``sqrt(2k+1) sqrt(2 pi) i^k J_{k+1/2}(a/2) / sqrt(a)``, ``k = 0..n``.

    This equals ``int_{-1}^{1} exp(i a t / 2) phat_k(t) dt``.
    """
    if a == 0:
        raise ValueError("a = 0 is a removable singularity; take the limit in the caller")
    if a < 0:
        return np.conj(scaling_fourier_vector(n, -a))
    k = np.arange(n + 1)
    J = bessel_half_vector(n, a / 2).values
    return np.sqrt(2 * k + 1) * math.sqrt(2 * math.pi) * (1j) ** k * J / math.sqrt(a)


def scaling_transform(n: int, a: float) -> np.ndarray:
    """``P~_n(a) = int_{-1}^{1} exp(-i a t) phat(t) dt``."""
    return np.conj(scaling_fourier_vector(n, 2 * a))


def _gain(n: int) -> np.ndarray:
    k = np.arange(n + 1)
    return (-1j) ** k * np.sqrt(2 * k + 1)


def _p_hat(n: int, a: float) -> np.ndarray:
    return _gain(n) * bessel_half_vector(n, a).values


def _grid(samples):
    return DEFAULT_GRID if samples is None else np.asarray(samples, dtype=float)


def verify_two_scale(n: int, samples=None, C1: np.ndarray | None = None) -> float:
    """Max residual of ``P~(a) = T(a) P~(a/2)`` and ``P^(a) = sqrt(2) T(a) P^(a/2)``."""
    C1 = c1_float(n) if C1 is None else C1
    worst = 0.0
    for a in _grid(samples):
        T = two_scale_symbol(n, a, C1).matrix
        r1 = scaling_transform(n, a) - T @ scaling_transform(n, a / 2)
        r2 = _p_hat(n, a) - math.sqrt(2) * T @ _p_hat(n, a / 2)
        worst = max(worst, float(np.max(np.abs(r1))), float(np.max(np.abs(r2))))
    return worst


def addition_residuals(n: int, a: float, C1: np.ndarray | None = None) -> dict:
    """Residuals of the row-wise addition formula and its two real parity forms at one ``a``."""
    C1 = c1_float(n) if C1 is None else C1
    Ja = bessel_half_vector(n, a).values
    Jh = bessel_half_vector(n, a / 2).values
    k = np.arange(n + 1)
    root = np.sqrt(2 * k + 1)
    ph = (-1j) ** k
    ea, eb = np.exp(0.5j * a), np.exp(-0.5j * a)
    sq_a, sq_h = math.sqrt(a), math.sqrt(a / 2)
    res_complex = 0.0
    for j in range(n + 1):
        lhs = root[j] * ph[j] * Ja[j] / sq_a
        kk = k[: j + 1]
        rhs = 0.5 * np.sum(C1[j, : j + 1] * ((-1.0) ** (j + kk) * ea + eb) * ph[kk] * root[kk] * Jh[kk]) / sq_h
        res_complex = max(res_complex, abs(lhs - rhs))
    c, s = math.cos(a / 2), math.sin(a / 2)
    res_even = res_odd = 0.0
    for row in range(n + 1):
        m = row // 2
        ev = np.arange(0, row + 1, 2)
        od = np.arange(1, row + 1, 2)
        even_sum = np.sum((-1.0) ** (ev // 2) * C1[row, ev] * root[ev] * Jh[ev]) / sq_h
        odd_sum = np.sum((-1.0) ** (od // 2) * C1[row, od] * root[od] * Jh[od]) / sq_h
        lhs = root[row] * (-1.0) ** m * Ja[row] / sq_a
        if row % 2 == 0:
            res_even = max(res_even, abs(lhs - (c * even_sum - s * odd_sum)))
        else:
            res_odd = max(res_odd, abs(lhs - (s * even_sum + c * odd_sum)))
    return {"complex": res_complex, "even_rows": res_even, "odd_rows": res_odd}


def verify_addition_formula(n: int, samples=None, C1: np.ndarray | None = None) -> float:
    worst = 0.0
    for a in _grid(samples):
        worst = max(worst, max(addition_residuals(n, a, C1).values()))
    return worst


def _edge_terms(n: int, a: float) -> np.ndarray:
    r = np.zeros(n + 1, dtype=complex)
    r[0] += bessel_minus_half(a)
    r[n] -= bessel_half_vector(n + 1, a).values[n + 1]
    return r


def derivative_residual(n: int, a: float, C1: np.ndarray | None = None) -> float:
    """Residual of the differentiated two-scale relation at one ``a``.

    ``2 T'(a) P^(a/2) = (H T - T H / 2) P^(a/2) + G r(a) / sqrt(2) - T G r(a/2) / 2``
    with ``H = G L G^{-1}``, ``L`` tridiagonal (+1 below, -1 above) and ``r``
    the two boundary terms left over by ``2 J'_{k+1/2} = J_{k-1/2} - J_{k+3/2}``.
    """
    C1 = c1_float(n) if C1 is None else C1
    g = _gain(n)
    L = np.diag(np.ones(n), -1) - np.diag(np.ones(n), 1)
    H = (g[:, None] * L) / g[None, :]
    T = two_scale_symbol(n, a, C1).matrix
    dT = _two_scale_derivative(C1, a)
    ph = _p_hat(n, a / 2)
    lhs = 2 * dT @ ph
    rhs = (H @ T - 0.5 * T @ H) @ ph + g * _edge_terms(n, a) / math.sqrt(2) - 0.5 * T @ (g * _edge_terms(n, a / 2))
    return float(np.max(np.abs(lhs - rhs)))


def verify_derivative_relation(n: int, samples=None, C1: np.ndarray | None = None) -> float:
    return max(derivative_residual(n, a, C1) for a in _grid(samples))


def qmf_residual(n: int, a: float, C1: np.ndarray | None = None) -> float:
    """``|| T(a) T(a)^* + T(a+pi) T(a+pi)^* - I ||_max``."""
    T0 = two_scale_symbol(n, a, C1).matrix
    T1 = two_scale_symbol(n, a + math.pi, C1).matrix
    S = T0 @ T0.conj().T + T1 @ T1.conj().T
    return float(np.max(np.abs(S - np.eye(n + 1))))


def fourier_report(n: int, samples=None) -> dict:
    return {
        "n": n,
        "two_scale": verify_two_scale(n, samples),
        "addition": verify_addition_formula(n, samples),
        "derivative": verify_derivative_relation(n, samples),
    }
