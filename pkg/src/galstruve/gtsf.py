"""The generalized Galue-type Struve function and its named reductions.

The five-parameter series

    sum_k (-c)^k / (Gamma(lam k + mu) Gamma(a k + p/xi + (b+2)/2)) (z/2)^(2k+p+1)

is a power prefactor (z/2)^(p+1) times a Fox-Wright series 1Psi2 evaluated at
w = -c z^2 / 4; the reduction lam = a = xi = 1, mu = 3/2 gives the Struve
family (classical Struve H for b = c = 1, modified Struve L for c = -1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._backend import kernels
from .errors import DomainError, NonConvergence
from .wright import DEFAULT_MAX_TERMS, DEFAULT_TOL, SeriesResult


@dataclass(frozen=True)
class GtsfParams:
    """Parameter tuple (a, p, b, c, lam, mu, xi); a is a positive integer."""

    a: int
    p: float
    b: float
    c: float
    lam: float
    mu: float
    xi: float

    def __post_init__(self):
        if not isinstance(self.a, int) or isinstance(self.a, bool) or self.a < 1:
            raise DomainError(f"a must be an integer >= 1, got {self.a!r}")
        if not (self.lam > 0.0):
            raise DomainError(f"lam must be positive, got {self.lam}")
        if not (self.xi > 0.0):
            raise DomainError(f"xi must be positive, got {self.xi}")
        for name in ("p", "b", "c", "lam", "mu", "xi"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")

    @property
    def inner_second(self) -> float:
        """Second lower-gamma offset p/xi + (b+2)/2."""
        return self.p / self.xi + (self.b + 2.0) / 2.0


def eval_gtsf(
    params: GtsfParams,
    z: float,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> SeriesResult:
    """Evaluate the Galue-type Struve function at real z >= 0.

    Delegates to the shared Wright summation kernel with lower pairs
    (mu, lam), (p/xi + (b+2)/2, a) at argument -c z^2/4, scaled by the
    power prefactor (z/2)^(p+1).
    """
    if z < 0.0:
        raise DomainError(f"z must be >= 0, got {z}")
    if z == 0.0:
        if params.p <= -1.0:
            raise DomainError("z = 0 needs p > -1 (prefactor power must vanish)")
        return SeriesResult(0.0, 1, 0.0)
    w = -params.c * z * z / 4.0
    value, terms, tail, status, info = kernels.gtsf_inner(
        w, params.lam, params.mu, float(params.a), params.inner_second, tol, max_terms
    )
    if status == kernels.OVERFLOW:
        raise NonConvergence(f"inner series overflow at k={info} (z={z})")
    if status == kernels.NO_CONVERGENCE:
        raise NonConvergence(f"stopping rule not met within {terms} terms (z={z})")
    pref = (z / 2.0) ** (params.p + 1.0)
    return SeriesResult(pref * value, terms, pref * tail)


def gtsf_inner_series(
    params: GtsfParams,
    w: float,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> SeriesResult:
    """The even inner series sum_k w^k / (Gamma(lam k+mu) Gamma(a k+q)).

    Exposed so callers can evaluate the prefactor-free part directly (the
    transform verifier absorbs the power prefactor into quadrature weights).
    """
    value, terms, tail, status, info = kernels.gtsf_inner(
        w, params.lam, params.mu, float(params.a), params.inner_second, tol, max_terms
    )
    if status == kernels.OVERFLOW:
        raise NonConvergence(f"inner series overflow at k={info} (w={w})")
    if status == kernels.NO_CONVERGENCE:
        raise NonConvergence(f"stopping rule not met within {terms} terms (w={w})")
    return SeriesResult(value, terms, tail)


def eval_h_pbc(
    p: float,
    b: float,
    c: float,
    z: float,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> SeriesResult:
    """Three-parameter Struve-type reduction H_{p,b,c}: lam=a=xi=1, mu=3/2.

    Shares the code path of eval_gtsf exactly, so the reduction identity
    holds bit for bit.
    """
    return eval_gtsf(GtsfParams(1, p, b, c, 1.0, 1.5, 1.0), z, tol, max_terms)
