"""Scalar special-function layer: values, identities, pole behaviour."""

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galstruve import special
from galstruve.errors import DomainError, PoleError


def test_log_gamma_at_one_and_five():
    assert special.log_gamma(1.0) == pytest.approx(0.0, abs=1e-14)
    assert special.log_gamma(5.0) == pytest.approx(math.log(24.0), rel=1e-14)


def test_log_gamma_half():
    assert abs(special.log_gamma(0.5) - 0.5 * math.log(math.pi)) <= 1e-13


def test_log_gamma_negative_sign():
    lg, sign = special.log_gamma_sign(-0.5)
    assert sign == -1.0
    assert math.exp(lg) * sign == pytest.approx(math.gamma(-0.5), rel=1e-13)
    _, sign2 = special.log_gamma_sign(-1.5)
    assert sign2 == 1.0


@pytest.mark.parametrize("x", [0.0, -1.0, -2.0, -7.0])
def test_log_gamma_pole_errors(x):
    with pytest.raises(PoleError):
        special.log_gamma(x)


def test_gamma_recurrence_grid():
    xs = np.linspace(0.1, 30.0, 120)
    for x in xs:
        lhs = special.gamma(x + 1.0)
        rhs = x * special.gamma(x)
        assert abs(lhs - rhs) <= 1e-12 * abs(lhs)


def test_gamma_reflection():
    for x in np.linspace(-4.9, 4.9, 99):
        if abs(x - round(x)) < 1e-9:
            continue
        lhs = special.gamma(x) * special.gamma(1.0 - x)
        rhs = math.pi / math.sin(math.pi * x)
        assert abs(lhs - rhs) <= 1e-10 * abs(rhs)


def test_recip_gamma_examples():
    assert special.recip_gamma(0.0) == 0.0
    assert special.recip_gamma(-3.0) == 0.0
    assert special.recip_gamma(1.0) == pytest.approx(1.0, rel=1e-14)


def test_recip_gamma_product_is_one():
    for x in np.linspace(0.12, 20.0, 60):
        assert special.recip_gamma(x) * special.gamma(x) == pytest.approx(1.0, rel=1e-12)
    for x in (-0.7, -2.3, -5.5):
        assert special.recip_gamma(x) * special.gamma(x) == pytest.approx(1.0, rel=1e-11)


def test_log_gamma_complex_examples():
    v = special.log_gamma_complex(complex(2.0, 0.0))
    assert abs(v) <= 1e-13
    v = special.log_gamma_complex(complex(0.5, 0.0))
    assert v.real == pytest.approx(0.5 * math.log(math.pi), rel=1e-13)
    assert v.imag == 0.0
    # |Gamma(1+iy)|^2 = pi y / sinh(pi y)
    v = special.log_gamma_complex(complex(1.0, 1.0))
    expected = math.sqrt(math.pi / math.sinh(math.pi))
    assert abs(cmath.exp(v)) == pytest.approx(expected, rel=1e-12)


def test_log_gamma_complex_matches_real_gamma_on_axis():
    for x in np.linspace(0.1, 30.0, 75):
        v = cmath.exp(special.log_gamma_complex(complex(x, 0.0)))
        assert v.real == pytest.approx(special.gamma(x), rel=1e-12)
        assert abs(v.imag) <= 1e-12 * abs(v.real)


def test_log_gamma_complex_pole():
    with pytest.raises(PoleError):
        special.log_gamma_complex(complex(-2.0, 0.0))


def test_recip_gamma_complex():
    z = complex(0.3, 0.7)
    prod = special.recip_gamma(z) * cmath.exp(special.log_gamma_complex(z))
    assert abs(prod - 1.0) <= 1e-12


def test_beta_examples():
    assert special.beta(1.0, 1.0) == pytest.approx(1.0, rel=1e-14)
    assert special.beta(2.0, 3.0) == pytest.approx(1.0 / 12.0, rel=1e-13)
    assert special.beta(0.5, 0.5) == pytest.approx(math.pi, rel=1e-13)


def test_beta_domain():
    with pytest.raises(DomainError):
        special.beta(-1.0, 2.0)
    with pytest.raises(DomainError):
        special.beta(1.0, 0.0)


def test_rising_factorial():
    assert special.rising_factorial(3.0, 0) == 1.0
    assert special.rising_factorial(2.0, 3) == 2.0 * 3.0 * 4.0
    assert special.rising_factorial(-2.0, 4) == 0.0  # crosses zero


def test_nan_rejected():
    with pytest.raises(DomainError):
        special.log_gamma(float("nan"))
    with pytest.raises(DomainError):
        special.beta(float("inf"), 1.0)


@settings(max_examples=150, deadline=None)
@given(st.floats(min_value=0.1, max_value=30.0))
def test_recurrence_property(x):
    lhs = special.gamma(x + 1.0)
    assert abs(lhs - x * special.gamma(x)) <= 1e-12 * abs(lhs)


@settings(max_examples=100, deadline=None)
@given(st.floats(min_value=0.05, max_value=0.95))
def test_reflection_property_fractional(frac):
    # scan the strip x in (-5, 5) through its fractional offset
    for n in range(-5, 5):
        x = n + frac
        lhs = special.gamma(x) * special.gamma(1.0 - x)
        rhs = math.pi / math.sin(math.pi * x)
        assert abs(lhs - rhs) <= 1e-10 * abs(rhs)
