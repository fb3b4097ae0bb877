"""Fox-Wright generalized hypergeometric series pPsi_q.

The series sum_k prod_i Gamma(a_i + alpha_i k) / prod_j Gamma(b_j + beta_j k)
* z^k / k! is entire in z whenever the convergence index

    kappa = sum_j beta_j - sum_i alpha_i

exceeds -1.  At kappa == -1 the series has the finite radius
R = prod beta_j^beta_j / prod alpha_i^alpha_i; all of the Laplace, Whittaker
and K-transform closed forms of this library sit exactly on that boundary
case, so evaluation inside the radius is supported and gated.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from ._backend import kernels
from .errors import ConvergenceViolation, DomainError, NonConvergence, NumeratorPole
from .special import log_gamma_complex

Pair = tuple[complex | float, float]

DEFAULT_TOL = 1e-12
DEFAULT_MAX_TERMS = 10_000

# Fraction of the kappa == -1 convergence radius beyond which evaluation is
# refused (terms decay like (|z|/R)^k; past this the term budget explodes).
RADIUS_GUARD = 0.999


@dataclass(frozen=True)
class WrightParams:
    """Upper pairs (a_i, alpha_i) and lower pairs (b_j, beta_j)."""

    upper: tuple[Pair, ...]
    lower: tuple[Pair, ...]

    def __post_init__(self):
        upper = tuple((a, float(al)) for a, al in self.upper)
        lower = tuple((b, float(be)) for b, be in self.lower)
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "lower", lower)
        for _, al in upper:
            if al == 0.0 or not math.isfinite(al):
                raise DomainError("upper weights alpha_i must be nonzero and finite")
        for _, be in lower:
            if be == 0.0 or not math.isfinite(be):
                raise DomainError("lower weights beta_j must be nonzero and finite")


@dataclass(frozen=True)
class SeriesResult:
    """Partial sum with its bookkeeping."""

    value: complex | float
    terms_used: int
    tail_estimate: float

    def __post_init__(self):
        if self.terms_used < 1:
            raise DomainError("terms_used must be >= 1")
        if self.tail_estimate < 0.0:
            raise DomainError("tail_estimate must be >= 0")


def kappa(params: WrightParams) -> float:
    """Convergence index sum(beta_j) - sum(alpha_i)."""
    return sum(be for _, be in params.lower) - sum(al for _, al in params.upper)


def radius(params: WrightParams) -> float:
    """Convergence radius: inf for kappa > -1, the boundary radius at -1, 0 below."""
    k = kappa(params)
    if k > -1.0 + 1e-12:
        return math.inf
    if k < -1.0 - 1e-12:
        return 0.0
    lr = 0.0
    for _, be in params.lower:
        lr += be * math.log(abs(be))
    for _, al in params.upper:
        lr -= al * math.log(abs(al))
    return math.exp(lr)


def _gate(params: WrightParams, z: complex | float) -> None:
    if z == 0:  # only the k = 0 term contributes
        return
    k = kappa(params)
    if k < -1.0 - 1e-12:
        raise ConvergenceViolation(f"kappa = {k:.6g} <= -1: series diverges for z != 0")
    if abs(k + 1.0) <= 1e-12 and z != 0:
        r = radius(params)
        if abs(z) >= RADIUS_GUARD * r:
            raise ConvergenceViolation(
                f"kappa = -1 and |z| = {abs(z):.6g} >= radius {r:.6g}: outside the convergence disc"
            )


def _is_real(params: WrightParams, z: complex | float) -> bool:
    if isinstance(z, complex) and z.imag != 0.0:
        return False
    for a, _ in params.upper + params.lower:
        if isinstance(a, complex) and a.imag != 0.0:
            return False
    return True


def eval_wright(
    params: WrightParams,
    z: complex | float,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> SeriesResult:
    """Evaluate pPsi_q(z) by direct summation.

    Stops when |term| <= tol * |partial sum| for 3 consecutive terms.  Lower
    gamma poles zero the corresponding term (reciprocal-gamma semantics);
    an upper gamma pole raises :class:`NumeratorPole`.
    """
    if tol <= 0.0:
        raise DomainError("tol must be positive")
    _gate(params, z)
    if _is_real(params, z):
        a = tuple(float(p[0].real if isinstance(p[0], complex) else p[0]) for p in params.upper)
        al = tuple(p[1] for p in params.upper)
        b = tuple(float(p[0].real if isinstance(p[0], complex) else p[0]) for p in params.lower)
        be = tuple(p[1] for p in params.lower)
        zr = z.real if isinstance(z, complex) else float(z)
        value, terms, tail, status, info = kernels.wright_sum_real(
            a, al, b, be, zr, tol, max_terms
        )
        _raise_for_status(status, info, terms, z)
        out = complex(value) if isinstance(z, complex) else value
        return SeriesResult(out, terms, tail)
    return _eval_complex(params, complex(z), tol, max_terms)


def _raise_for_status(status, info, terms, z):
    if status == kernels.NUMERATOR_POLE:
        raise NumeratorPole(f"upper gamma argument hits a pole at term k={info}")
    if status == kernels.OVERFLOW:
        raise NonConvergence(f"series term overflow at k={info} (z={z!r})")
    if status == kernels.NO_CONVERGENCE:
        raise NonConvergence(f"stopping rule not met within {terms} terms (z={z!r})")


def _term_complex(params: WrightParams, logz: complex, k: int, z_zero: bool) -> complex:
    if z_zero and k > 0:
        return 0.0j
    acc = -math.lgamma(k + 1.0) + (0.0 if z_zero else k * logz)
    for a, al in params.upper:
        xa = complex(a) + al * k
        if xa.imag == 0.0 and kernels.is_nonpositive_int(xa.real):
            raise NumeratorPole(f"upper gamma argument hits a pole at term k={k}")
        acc += log_gamma_complex(xa)
    for b, be in params.lower:
        xb = complex(b) + be * k
        if xb.imag == 0.0 and kernels.is_nonpositive_int(xb.real):
            return 0.0j
        acc -= log_gamma_complex(xb)
    if acc.real > 709.0:
        raise NonConvergence(f"series term overflow at k={k}")
    return cmath.exp(acc)


def _eval_complex(params: WrightParams, z: complex, tol: float, max_terms: int) -> SeriesResult:
    z_zero = z == 0
    logz = 0.0j if z_zero else cmath.log(z)
    total = 0.0j
    consecutive = 0
    prev_abs = 0.0
    for k in range(max_terms):
        term = _term_complex(params, logz, k, z_zero)
        total += term
        ta = abs(term)
        if z_zero:
            return SeriesResult(total, 1, 0.0)
        if ta <= tol * abs(total):
            consecutive += 1
        else:
            consecutive = 0
        if consecutive >= 3:
            na = abs(_term_complex(params, logz, k + 1, z_zero))
            base = ta if ta > 0.0 else prev_abs
            ratio = na / base if base > 0.0 else 0.0
            tail = 2.0 * na / (1.0 - min(ratio, 0.9))
            return SeriesResult(total, k + 1, tail)
        if ta > 0.0:
            prev_abs = ta
    raise NonConvergence(f"stopping rule not met within {max_terms} terms (z={z!r})")
