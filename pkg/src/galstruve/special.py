"""Scalar special functions: log-gamma, gamma, reciprocal gamma, beta.

All gamma products elsewhere in the library are formed in log space and
exponentiated once per series term; these are the primitives that make that
possible.  Everything here is pure and reentrant.
"""

from __future__ import annotations

import cmath
import math

from ._backend import kernels
from .errors import DomainError, PoleError

_LN_PI = 1.1447298858494001741
_LN_SQRT_2PI = 0.9189385332046727418
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _check_finite(x: float, name: str = "argument") -> None:
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")


def _is_pole(x: float) -> bool:
    return x <= 0.5 and x == round(x) and round(x) <= 0


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0; ln |Gamma(x)| for negative non-integer x.

    The sign stripped on the negative axis is recoverable through
    :func:`log_gamma_sign`.  Raises :class:`PoleError` at 0, -1, -2, ...
    """
    _check_finite(x)
    if _is_pole(x):
        raise PoleError(f"log_gamma pole at x={x}")
    return kernels.log_abs_gamma(x)


def log_gamma_sign(x: float) -> tuple[float, float]:
    """(ln |Gamma(x)|, sign of Gamma(x)).  Same pole behaviour as log_gamma."""
    _check_finite(x)
    if _is_pole(x):
        raise PoleError(f"log_gamma pole at x={x}")
    return kernels.log_abs_gamma(x), kernels.gamma_sign(x)


def gamma(x: float) -> float:
    """Gamma(x) for real non-pole x.  Overflows to inf above ~171.6."""
    lg, sign = log_gamma_sign(x)
    return sign * math.exp(lg)


def _lanczos_complex(z: complex) -> complex:
    acc: complex = _LANCZOS[0]
    for i in range(1, 9):
        acc += _LANCZOS[i] / (z - 1.0 + i)
    t = z + _LANCZOS_G - 0.5
    return _LN_SQRT_2PI + (z - 0.5) * cmath.log(t) - t + cmath.log(acc)


def log_gamma_complex(z: complex) -> complex:
    """Principal branch of ln Gamma(z); reflection is used for Re z < 0.5.

    Accurate over moderate arguments (|Im z| up to a few hundred); on the
    real axis exp(log_gamma_complex(x)) matches the real gamma.
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"argument must be finite, got {z!r}")
    if z.imag == 0.0 and _is_pole(z.real):
        raise PoleError(f"log_gamma pole at z={z}")
    if z.real >= 0.5:
        return _lanczos_complex(z)
    return _LN_PI - cmath.log(cmath.sin(cmath.pi * z)) - _lanczos_complex(1.0 - z)


def recip_gamma(z: complex | float) -> complex | float:
    """1/Gamma(z), entire: returns exactly 0 at the non-positive integers."""
    if isinstance(z, complex) and z.imag != 0.0:
        return cmath.exp(-log_gamma_complex(z))
    x = z.real if isinstance(z, complex) else float(z)
    _check_finite(x)
    if _is_pole(x) or kernels.is_nonpositive_int(x):
        return 0.0 if not isinstance(z, complex) else 0.0 + 0.0j
    value = kernels.gamma_sign(x) * math.exp(-kernels.log_abs_gamma(x))
    return complex(value) if isinstance(z, complex) else value


def beta(a: float, b: float) -> float:
    """Euler beta B(a, b) = Gamma(a)Gamma(b)/Gamma(a+b), a, b > 0."""
    _check_finite(a, "a")
    _check_finite(b, "b")
    if a <= 0.0 or b <= 0.0:
        raise DomainError(f"beta requires a > 0 and b > 0, got ({a}, {b})")
    return math.exp(
        kernels.log_abs_gamma(a) + kernels.log_abs_gamma(b) - kernels.log_abs_gamma(a + b)
    )


def rising_factorial(x: float, n: int) -> float:
    """Pochhammer symbol (x)_n = x (x+1) ... (x+n-1) for integer n >= 0."""
    if n < 0:
        raise DomainError("rising_factorial needs n >= 0")
    out = 1.0
    for j in range(n):
        out *= x + j
    return out
