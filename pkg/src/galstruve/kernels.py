"""Kernel functions of the LHS integrals: Kummer 1F1, Whittaker M and W,
and the modified Bessel function of the second kind K_nu.

W is built from the standard two-term combination of M functions

    W(tau, omega; z) = Gamma(-2 omega)/Gamma(1/2 - omega - tau) M_{tau,omega}(z)
                     + Gamma(2 omega)/Gamma(1/2 + omega - tau) M_{tau,-omega}(z)

whose gamma prefactors blow up pairwise at integer 2*omega; orders inside a
narrow window around those points are evaluated by averaging two offset
evaluations across the removable singularity.  K_nu goes through W(0, nu; 2z)
except at (near-)integer 2*nu where the combination degenerates; half-integer
orders use their exact finite closed form and integer orders the classical
log series.
"""

from __future__ import annotations

import math

from ._backend import kernels as _k
from .errors import DomainError, EvaluationUnstable, NonConvergence, PoleError
from .wright import DEFAULT_MAX_TERMS, DEFAULT_TOL

# |2*omega - nearest integer| below this uses the offset-average fallback
_WINDOW = 1e-3
_OFFSET = 1e-6
_FALLBACK_REL = 1e-4

# switch from the two-term combination to the large-argument series; the
# combination's cancellation grows like e^z while the asymptotic series'
# optimal-truncation error shrinks like e^-z, crossing near z ~ 24
_ASYM_SWITCH = 24.0

# integer-order K: classical series below, asymptotic route above
_K_INT_SWITCH = 14.0


def kummer_1f1(
    alpha: float,
    gamma_: float,
    z: float,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> float:
    """Confluent hypergeometric 1F1(alpha; gamma_; z) by direct summation."""
    if gamma_ <= 0.5 and gamma_ == round(gamma_) and round(gamma_) <= 0:
        raise PoleError(f"1F1 lower parameter is a non-positive integer: {gamma_}")
    value, terms, _tail, status = _k.kummer_sum(alpha, gamma_, z, tol, max_terms)
    if status == _k.NO_CONVERGENCE:
        raise NonConvergence(f"1F1 stopping rule not met within {terms} terms (z={z})")
    return value


def whittaker_m(tau: float, omega: float, z: float) -> float:
    """Whittaker M(tau, omega; z) = z^(1/2+omega) e^(-z/2) 1F1(...)."""
    if z <= 0.0:
        raise DomainError(f"whittaker_m needs z > 0, got {z}")
    g = 2.0 * omega + 1.0
    if g <= 0.5 and g == round(g) and round(g) <= 0:
        raise PoleError(f"whittaker_m undefined: 2*omega + 1 = {g} is a non-positive integer")
    f = kummer_1f1(0.5 + omega - tau, g, z)
    return z ** (0.5 + omega) * math.exp(-0.5 * z) * f


def whittaker_w(tau: float, omega: float, z: float) -> float:
    """Whittaker W(tau, omega; z) for z > 0.

    Near-integer 2*omega (within 1e-3) is evaluated by averaging the
    combination at the two points omega0 +- 1e-6 around the nearest
    half-integer omega0; the two evaluations must agree to 1e-4 relative or
    :class:`EvaluationUnstable` is raised.  Arguments z >= 24 switch to the
    optimally truncated large-z series.
    """
    if z <= 0.0:
        raise DomainError(f"whittaker_w needs z > 0, got {z}")
    if z >= _ASYM_SWITCH:
        value, _err = _k.whittaker_w_asym(tau, omega, z)
        return value
    m = round(2.0 * omega)
    if abs(2.0 * omega - m) < _WINDOW:
        om0 = m / 2.0
        f1 = _k.whittaker_w_combo(tau, om0 + _OFFSET, z)
        f2 = _k.whittaker_w_combo(tau, om0 - _OFFSET, z)
        avg = 0.5 * (f1 + f2)
        if abs(f1 - f2) > _FALLBACK_REL * max(abs(avg), 1e-300):
            raise EvaluationUnstable(
                f"offset evaluations at omega={om0}+-{_OFFSET} disagree: {f1!r} vs {f2!r}"
            )
        return avg
    return _k.whittaker_w_combo(tau, omega, z)


def _bessel_k_half_int(n: int, z: float) -> float:
    # K_{n+1/2}(z): exact finite sum
    total = 0.0
    term = 1.0
    for j in range(n + 1):
        total += term
        if j < n:
            # (n+j+1)! / ((j+1)! (n-j-1)!)  from  (n+j)! / (j! (n-j)!)
            term *= (n + j + 1) * (n - j) / ((j + 1) * 2.0 * z)
    return math.sqrt(math.pi / (2.0 * z)) * math.exp(-z) * total


def bessel_k(nu: float, z: float) -> float:
    """Modified Bessel K_nu(z), z > 0, through W(0, nu; 2z).

    (Near-)integer 2*nu avoids the degenerate combination: half-integer
    orders use the exact closed form, integer orders the classical log
    series (or the large-z route above z = 14).
    """
    if z <= 0.0:
        raise DomainError(f"bessel_k needs z > 0, got {z}")
    nu = abs(nu)  # K is even in the order
    m = round(2.0 * nu)
    if abs(2.0 * nu - m) < _WINDOW:
        if m % 2 == 1:
            return _bessel_k_half_int((m - 1) // 2, z)
        n = m // 2
        if z <= _K_INT_SWITCH:
            return _k.bessel_k_int_series(n, z)
        value, _err = _k.whittaker_w_asym(0.0, float(n), 2.0 * z)
        return math.sqrt(math.pi / (2.0 * z)) * value
    return math.sqrt(math.pi / (2.0 * z)) * whittaker_w(0.0, nu, 2.0 * z)
