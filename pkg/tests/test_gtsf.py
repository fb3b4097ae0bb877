"""Galue-type Struve evaluation: reductions, scaling structure, oracles."""

import math

import numpy as np
import pytest

from galstruve.errors import DomainError
from galstruve.gtsf import GtsfParams, eval_gtsf, eval_h_pbc, gtsf_inner_series

from oracles import direct_gtsf, direct_h_pbc

STRUVE_H0_1 = 0.5686566269278946  # classical Struve H_0(1), series to machine precision


def test_struve_h0_reduction():
    res = eval_h_pbc(0.0, 1.0, 1.0, 1.0)
    assert res.value == pytest.approx(STRUVE_H0_1, rel=1e-12)
    assert res.value == pytest.approx(0.5686566, abs=1e-6)
    assert res.value == pytest.approx(direct_h_pbc(0.0, 1.0, 1.0, 1.0), rel=1e-12)


def test_modified_struve_l0():
    l0 = eval_h_pbc(0.0, 1.0, -1.0, 1.0).value
    h0 = eval_h_pbc(0.0, 1.0, 1.0, 1.0).value
    assert l0 == pytest.approx(direct_h_pbc(0.0, 1.0, -1.0, 1.0), rel=1e-12)
    assert l0 > h0 > 0.0


def test_zero_argument():
    params = GtsfParams(2, 0.3, 0.7, 1.2, 1.5, 0.9, 2.0)
    res = eval_gtsf(params, 0.0)
    assert res.value == 0.0
    assert res.terms_used == 1


def test_zero_argument_needs_p_above_minus_one():
    params = GtsfParams(1, -1.5, 1.0, 1.0, 1.0, 1.5, 1.0)
    with pytest.raises(DomainError):
        eval_gtsf(params, 0.0)


def test_negative_z_rejected():
    params = GtsfParams(1, 0.0, 1.0, 1.0, 1.0, 1.5, 1.0)
    with pytest.raises(DomainError):
        eval_gtsf(params, -1.0)


def test_param_validation():
    with pytest.raises(DomainError):
        GtsfParams(0, 0.0, 1.0, 1.0, 1.0, 1.5, 1.0)
    with pytest.raises(DomainError):
        GtsfParams(1, 0.0, 1.0, 1.0, -1.0, 1.5, 1.0)
    with pytest.raises(DomainError):
        GtsfParams(1, 0.0, 1.0, 1.0, 1.0, 1.5, 0.0)


def test_reduction_identity_bit_for_bit_and_oracle():
    rng = np.random.default_rng(7)
    for _ in range(50):
        p = float(rng.uniform(-0.9, 3.0))
        b = float(rng.uniform(-2.0, 2.0))
        c = float(rng.uniform(-2.0, 2.0))
        z = float(rng.uniform(0.01, 5.0))
        via_gtsf = eval_gtsf(GtsfParams(1, p, b, c, 1.0, 1.5, 1.0), z)
        via_h = eval_h_pbc(p, b, c, z)
        assert via_gtsf.value == via_h.value  # same code path, 0 ulps
        oracle = direct_h_pbc(p, b, c, z)
        assert via_h.value == pytest.approx(oracle, rel=1e-12, abs=1e-300)


def test_general_params_against_oracle():
    rng = np.random.default_rng(11)
    for _ in range(20):
        a = int(rng.integers(1, 4))
        lam = float(rng.uniform(0.5, 2.5))
        mu = float(rng.uniform(0.3, 2.0))
        xi = float(rng.uniform(0.5, 2.0))
        p = float(rng.uniform(-0.5, 2.0))
        b = float(rng.uniform(-1.0, 2.0))
        c = float(rng.uniform(-2.0, 2.0))
        z = float(rng.uniform(0.1, 4.0))
        params = GtsfParams(a, p, b, c, lam, mu, xi)
        mine = eval_gtsf(params, z).value
        oracle = direct_gtsf(a, p, b, c, lam, mu, xi, z)
        assert mine == pytest.approx(oracle, rel=1e-11, abs=1e-300)


def test_even_inner_series_scaling_structure():
    # GTSF(z)/(z/2)^(p+1) is an even power series in z: the inner series
    # depends on z only through w = -c z^2/4
    params = GtsfParams(1, 0.7, 0.5, 1.3, 1.0, 1.5, 1.0)
    for z in (0.5, 1.7, 3.2):
        w = -params.c * z * z / 4.0
        inner = gtsf_inner_series(params, w).value
        full = eval_gtsf(params, z).value
        assert full == pytest.approx((z / 2.0) ** (params.p + 1.0) * inner, rel=1e-13)
        # same |z| from the negative side maps to the same w by construction
        assert gtsf_inner_series(params, -params.c * (-z) * (-z) / 4.0).value == inner


def test_sign_flip_c_negates_inner_argument():
    base = GtsfParams(1, 0.4, 0.8, 1.1, 1.0, 1.5, 1.0)
    flipped = GtsfParams(1, 0.4, 0.8, -1.1, 1.0, 1.5, 1.0)
    for z in (0.3, 1.0, 2.4):
        w = -base.c * z * z / 4.0
        a = gtsf_inner_series(base, w).value
        b = gtsf_inner_series(flipped, -w).value
        assert a == pytest.approx(b, rel=1e-13)
