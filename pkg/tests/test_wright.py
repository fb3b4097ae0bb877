"""Fox-Wright evaluator: reductions, convergence gate, stopping rule."""

import math

import numpy as np
import pytest

from galstruve.errors import ConvergenceViolation, DomainError, NumeratorPole
from galstruve.wright import WrightParams, eval_wright, kappa, radius

from oracles import direct_wright

EXP_PARAMS = WrightParams(((1.0, 1.0),), ((1.0, 1.0),))


def test_kappa_examples():
    # Euler-identity shape at lam = a = 1
    p = WrightParams(
        upper=((3.5, 2.0), (1.0, 1.0)),
        lower=((1.5, 1.0), (2.0, 1.0), (6.5, 2.0)),
    )
    assert kappa(p) == pytest.approx(1.0)
    assert kappa(EXP_PARAMS) == pytest.approx(0.0)
    assert kappa(WrightParams(((1.0, 3.0),), ((1.0, 1.0),))) == pytest.approx(-2.0)


def test_exp_reduction():
    for z in (-2.0, 0.5, 3.0):
        res = eval_wright(EXP_PARAMS, z)
        assert abs(res.value - math.exp(z)) <= 1e-10 * math.exp(z)


def test_z_zero_is_gamma_product():
    p = WrightParams(((2.0, 1.0), (0.7, 2.0)), ((1.3, 1.0),))
    res = eval_wright(p, 0.0)
    expected = math.gamma(2.0) * math.gamma(0.7) / math.gamma(1.3)
    assert res.value == pytest.approx(expected, rel=1e-13)
    assert res.terms_used == 1
    assert res.tail_estimate == 0.0


def test_convergence_gate_rejects_kappa_below_minus_one():
    p = WrightParams(((1.0, 3.0),), ((1.0, 1.0),))
    with pytest.raises(ConvergenceViolation):
        eval_wright(p, 0.5)
    with pytest.raises(ConvergenceViolation):
        eval_wright(p, -2.0)


def test_boundary_kappa_inside_radius_evaluates():
    # Laplace-identity shape at lam = a = 1: kappa = -1, radius 1/4
    p = WrightParams(
        upper=((2.5, 2.0), (1.0, 1.0)),
        lower=((1.5, 1.0), (2.0, 1.0)),
    )
    assert kappa(p) == pytest.approx(-1.0)
    assert radius(p) == pytest.approx(0.25, rel=1e-12)
    res = eval_wright(p, -0.05)
    assert res.value == pytest.approx(direct_wright([(2.5, 2.0), (1.0, 1.0)],
                                                    [(1.5, 1.0), (2.0, 1.0)], -0.05),
                                      rel=1e-12)


def test_boundary_kappa_outside_radius_rejected():
    p = WrightParams(
        upper=((2.5, 2.0), (1.0, 1.0)),
        lower=((1.5, 1.0), (2.0, 1.0)),
    )
    with pytest.raises(ConvergenceViolation):
        eval_wright(p, 0.25)
    with pytest.raises(ConvergenceViolation):
        eval_wright(p, -0.3)


def test_tail_estimate_bounds_exp_remainder():
    for z in np.linspace(-5.0, 5.0, 21):
        res = eval_wright(EXP_PARAMS, float(z))
        remainder = abs(math.exp(z) - res.value)
        assert remainder <= max(res.tail_estimate, 1e-15 * math.exp(abs(z)))


def test_term_monotonicity_after_decrease():
    # once |term_k| decreases 3 times running, it keeps decreasing (exp family)
    for z in (1.7, 4.2, -3.1):
        terms = [abs(z) ** k / math.factorial(k) for k in range(60)]
        decreasing = 0
        tail_started = None
        for k in range(1, 60):
            if terms[k] < terms[k - 1]:
                decreasing += 1
                if decreasing == 3:
                    tail_started = k
                    break
            else:
                decreasing = 0
        assert tail_started is not None
        for k in range(tail_started, 59):
            assert terms[k + 1] < terms[k]


def test_k0_matches_gamma_product_closed_form():
    p = WrightParams(((0.4, 2.0), (2.2, 1.0)), ((1.1, 1.0), (3.0, 2.0)))
    res = eval_wright(p, 0.0)
    expected = (math.gamma(0.4) * math.gamma(2.2)) / (math.gamma(1.1) * math.gamma(3.0))
    assert res.value == pytest.approx(expected, rel=1e-13)


def test_numerator_pole_raises():
    p = WrightParams(((-2.0, 1.0),), ((1.0, 1.0),))  # upper hits 0 at k = 2
    with pytest.raises(NumeratorPole):
        eval_wright(p, 0.5)


def test_denominator_pole_vanishes_term():
    # lower -1 + k: poles at k = 0, 1 zero those terms; series still finite
    p = WrightParams(((1.0, 1.0),), ((-1.0, 1.0),))
    res = eval_wright(p, 0.5)
    expected = direct_wright([(1.0, 1.0)], [(-1.0, 1.0)], 0.5)
    assert res.value == pytest.approx(expected, rel=1e-12)


def test_complex_argument_matches_real():
    p = WrightParams(((1.3, 1.0), (0.8, 2.0)), ((1.9, 2.0), (1.1, 1.0), (2.0, 1.0)))
    zr = eval_wright(p, 0.8).value
    zc = eval_wright(p, complex(0.8, 0.0)).value
    assert isinstance(zc, complex)
    assert zc.real == pytest.approx(zr, rel=1e-13)
    assert abs(zc.imag) <= 1e-13 * abs(zr)


def test_complex_parameters_smoke():
    p = WrightParams(((complex(1.2, 0.4), 1.0),), ((2.0, 1.0), (1.0, 1.0)))
    res = eval_wright(p, 0.3)
    assert isinstance(res.value, complex)
    assert math.isfinite(res.value.real) and math.isfinite(res.value.imag)
    oracle = direct_wright([(1.2, 1.0)], [(2.0, 1.0), (1.0, 1.0)], 0.3)
    # imaginary perturbation of a keeps |value| near the real-parameter one
    assert abs(res.value) == pytest.approx(oracle, rel=0.3)


def test_zero_weight_rejected():
    with pytest.raises(DomainError):
        WrightParams(((1.0, 0.0),), ((1.0, 1.0),))


def test_bad_tol_rejected():
    with pytest.raises(DomainError):
        eval_wright(EXP_PARAMS, 1.0, tol=0.0)


def test_against_direct_oracle_random_params():
    rng = np.random.default_rng(42)
    for _ in range(25):
        a1 = float(rng.uniform(0.5, 3.0))
        b1 = float(rng.uniform(0.5, 3.0))
        b2 = float(rng.uniform(0.5, 3.0))
        z = float(rng.uniform(-2.0, 2.0))
        p = WrightParams(((a1, 1.0),), ((b1, 1.0), (b2, 1.0)))
        res = eval_wright(p, z)
        oracle = direct_wright([(a1, 1.0)], [(b1, 1.0), (b2, 1.0)], z)
        assert res.value == pytest.approx(oracle, rel=1e-11, abs=1e-13)
