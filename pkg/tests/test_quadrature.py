"""Adaptive quadrature against closed-form integrals.

Every expected value here is a pencil-and-paper antiderivative or a
Gamma-function identity, so these tests are independent of the rest of
the package.
"""

import math

import numpy as np

import pytest

from framescope import quadrature


def test_polynomial_exact():
    # integral of x^2 over [-1/2, 1/2] = 1/12
    val = quadrature.integrate(lambda x: x * x, -0.5, 0.5)
    assert val.real == pytest.approx(1.0 / 12.0, abs=1e-12)
    assert abs(val.imag) < 1e-14


def test_complex_exponential_integrates_to_zero():
    val = quadrature.integrate(lambda x: np.exp(2j * math.pi * x), 0.0, 1.0)
    assert abs(val) < 1e-12


@pytest.mark.parametrize("n", [1, 2, 3, -1, -4])
def test_sawtooth_coefficient_closed_form(n):
    # integral of x e^{-2 pi i n x} over [-1/2, 1/2] = (-1)^n i / (2 pi n)
    val = quadrature.integrate(
        lambda x: x * np.exp(-2j * math.pi * n * x), -0.5, 0.5)
    expected = ((-1) ** n) * 1j / (2 * math.pi * n)
    assert val == pytest.approx(expected, abs=1e-11)


def test_oscillatory_cancellation():
    val = quadrature.integrate(lambda x: np.cos(20 * math.pi * x), 0.0, 1.0)
    assert abs(val) < 1e-10


@pytest.mark.parametrize("p", [-0.4, 0.5])
def test_endpoint_refined_power_singularity(p):
    # integral of x^p over [0, 1/2] = (1/2)^{p+1} / (p+1); the integrand
    # (or its derivative) blows up at 0, which plain adaptive splitting
    # cannot reach at full accuracy
    val = quadrature.integrate_endpoint_refined(lambda x: x ** p, 0.0, 0.5)
    expected = 0.5 ** (p + 1) / (p + 1)
    assert val.real == pytest.approx(expected, abs=1e-9)


@pytest.mark.parametrize("p", [0.5, 2.0, 3.0])
def test_cosine_power_gamma_identity(p):
    # integral of cos(pi x)^p over [-1/2, 1/2]
    #   = Gamma((p+1)/2) / (sqrt(pi) Gamma(p/2 + 1))
    val = quadrature.integrate_endpoint_refined(
        lambda x: np.cos(math.pi * x) ** p, -0.5, 0.5)
    expected = math.gamma((p + 1) / 2) / (math.sqrt(math.pi) * math.gamma(p / 2 + 1))
    assert val.real == pytest.approx(expected, abs=1e-9)


def test_interval_additivity():
    f = lambda x: np.exp(-2j * math.pi * 3 * x) * x
    whole = quadrature.integrate(f, -0.5, 0.5)
    split = quadrature.integrate(f, -0.5, 0.1) + quadrature.integrate(f, 0.1, 0.5)
    assert whole == pytest.approx(split, abs=1e-11)
