import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from alpert.fourier import (
    DEFAULT_GRID,
    addition_residuals,
    bessel_half_vector,
    bessel_minus_half,
    c1_float,
    derivative_residual,
    qmf_residual,
    scaling_fourier_vector,
    scaling_transform,
    two_scale_symbol,
    verify_addition_formula,
    verify_derivative_relation,
    verify_two_scale,
)
from alpert.legendre import orthonormal_legendre


def _ref(nu, a):
    with mpmath.workdps(60):
        return float(mpmath.besselj(nu, a))


def test_default_grid():
    assert len(DEFAULT_GRID) == 100
    assert DEFAULT_GRID[0] == pytest.approx(1e-3) and DEFAULT_GRID[-1] == pytest.approx(20.0)


def test_closed_forms():
    assert abs(bessel_half_vector(0, math.pi).values[0]) < 1e-12
    a = 1.0
    expected = math.sqrt(2 / (math.pi * a)) * (math.sin(a) / a - math.cos(a))
    assert bessel_half_vector(1, a).values[1] == pytest.approx(expected, rel=1e-14)
    assert bessel_half_vector(2, 0.1).values[2] == pytest.approx(_ref(2.5, 0.1), rel=1e-13)


def test_relative_accuracy_against_reference():
    worst = 0.0
    for a in np.concatenate([np.geomspace(1e-6, 50, 120), [0.5, 1.0, 7.0, 19.99, 20.0, 50.0]]):
        v = bessel_half_vector(20, a).values
        for k in range(21):
            ref = _ref(k + 0.5, a)
            if ref:
                worst = max(worst, abs(v[k] - ref) / abs(ref))
    assert worst <= 1e-12


@pytest.mark.parametrize("a", [0.0, -1.0])
def test_nonpositive_argument(a):
    with pytest.raises(ValueError):
        bessel_half_vector(3, a)


def test_symbol_at_zero():
    T = two_scale_symbol(5, 0.0).matrix
    assert np.allclose(T.imag, 0)
    assert T[0, 0] == pytest.approx(1.0)


def test_scaling_fourier_vector():
    v = scaling_fourier_vector(3, 2 * math.pi)
    assert abs(v[0]) < 1e-12
    assert abs(scaling_fourier_vector(3, 1.7)[1].real) < 1e-15
    with pytest.raises(ValueError):
        scaling_fourier_vector(2, 0.0)


def test_scaling_fourier_vector_is_a_transform():
    # component k equals int_{-1}^{1} exp(i a t / 2) phat_k(t) dt
    a = 3.3
    x, w = np.polynomial.legendre.leggauss(40)
    for k in range(5):
        coeffs = [float(c) for c in orthonormal_legendre(k).coefficients]
        vals = np.polynomial.polynomial.polyval(x, coeffs)
        quad = np.sum(w * np.exp(0.5j * a * x) * vals)
        assert abs(scaling_fourier_vector(4, a)[k] - quad) < 1e-13
    assert np.allclose(scaling_transform(4, a), np.conj(scaling_fourier_vector(4, 2 * a)))


def test_two_scale():
    assert verify_two_scale(0) < 1e-12
    assert verify_two_scale(3, [1.0]) < 1e-10
    assert verify_two_scale(3, [1e-6]) < 1e-10
    for n in range(11):
        assert verify_two_scale(n, np.linspace(0.05, 20, 40)) < 1e-10


def test_addition_formula():
    assert addition_residuals(0, 2.0)["complex"] < 1e-12
    assert verify_addition_formula(4, [3.0]) < 1e-10
    assert verify_addition_formula(2, [0.5]) < 1e-10
    for n in range(11):
        assert verify_addition_formula(n) < 1e-10


def test_derivative_relation():
    assert verify_derivative_relation(1, [1.0]) < 1e-9
    assert verify_derivative_relation(3, [5.0]) < 1e-9
    for n in range(7):
        assert verify_derivative_relation(n) < 1e-9


def test_derivative_sensitivity_is_linear():
    base = c1_float(4)
    res = []
    for eps in (1e-7, 1e-6, 1e-5):
        C = base.copy()
        C[3, 1] += eps
        res.append(max(derivative_residual(4, a, C) for a in (0.7, 2.0, 6.0)))
    assert res[1] / res[0] == pytest.approx(10, rel=0.05)
    assert res[2] / res[1] == pytest.approx(10, rel=0.05)


def test_bessel_minus_half():
    assert bessel_minus_half(1.3) == pytest.approx(_ref(-0.5, 1.3), rel=1e-14)


@given(st.integers(0, 10), st.floats(0.5, 20))
def test_differential_difference(k, a):
    h = 1e-6
    J = lambda x: bessel_half_vector(11, x).values
    deriv = (J(a + h)[k] - J(a - h)[k]) / (2 * h)
    lower = bessel_minus_half(a) if k == 0 else J(a)[k - 1]
    assert abs(2 * deriv - (lower - J(a)[k + 1])) < 1e-9


@given(st.integers(0, 10), st.floats(-20, 20))
def test_quadrature_mirror(n, a):
    # T(a) T(a)^* + T(a+pi) T(a+pi)^* = I
    assert qmf_residual(n, a) < 1e-10
