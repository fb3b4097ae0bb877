"""Quadrature engine for the transform verifications.

Three entry points cover the three LHS integral shapes:

* :func:`integrate_finite` -- adaptive panel quadrature on [a, b].  Endpoint
  power weights (x-a)^ea (b-x)^eb are absorbed into Gauss-Jacobi rules so
  beta-kernel integrands with singular or merely non-smooth endpoints
  converge at the Gauss rate.
* :func:`integrate_semi_infinite` -- truncate [0, inf) at a T chosen from a
  sampled amplitude and the caller's decay-rate hint, then integrate [0, T]
  and confirm with a [T, 2T] doubling check.
* :func:`integrate_regularized_oscillatory` -- assign a value to
  int_0^inf e^{i w t} g(t) dt by damping with e^{-eps t}, evaluating on a
  decreasing eps sequence and extrapolating to eps = 0.  Oscillatory tails
  are summed half-period by half-period and accelerated with Wynn's
  epsilon algorithm, so the damped integrals stay accurate even when eps is
  far too small for direct truncation.

The integrand argument `f` is always the *smooth* factor: the engine
multiplies the absorbed endpoint weight back in itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.special import roots_jacobi

from .errors import (
    DomainError,
    ExtrapolationDiverged,
    MaxSubdivisions,
    TruncationUnstable,
)

_BASE_N = 12  # panel rule size; refinement compares against 2*_BASE_N


@dataclass
class QuadratureSpec:
    """Controls for one integral evaluation."""

    kind: str = "finite"  # finite | semi_infinite | regularized_oscillatory
    endpoint_exponents: tuple[float, float] = (0.0, 0.0)
    rel_tol: float = 1e-10
    abs_tol: float = 1e-13
    max_subdivisions: int = 4000
    truncation_point: float | None = None
    regularization_eps_sequence: tuple[float, ...] = (0.2, 0.1, 0.05, 0.025)

    def __post_init__(self):
        if self.rel_tol <= 0.0 or self.abs_tol <= 0.0:
            raise DomainError("rel_tol and abs_tol must be positive")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be >= 1")


@dataclass
class QuadratureResult:
    value: complex | float
    error_estimate: float
    evaluations: int
    truncation_used: float | None = None

    def __post_init__(self):
        if self.error_estimate < 0.0:
            raise DomainError("error_estimate must be >= 0")


@lru_cache(maxsize=128)
def legendre_rule(n: int) -> tuple[np.ndarray, np.ndarray]:
    """n-point Gauss-Legendre nodes and weights on [-1, 1]."""
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


@lru_cache(maxsize=512)
def jacobi_rule(n: int, alpha: float, beta: float) -> tuple[np.ndarray, np.ndarray]:
    """n-point Gauss-Jacobi rule for weight (1-x)^alpha (1+x)^beta on [-1, 1]."""
    x, w = roots_jacobi(n, alpha, beta)
    return x, w


class _CountedF:
    __slots__ = ("f", "count")

    def __init__(self, f):
        self.f = f
        self.count = 0

    def __call__(self, x):
        self.count += 1
        return self.f(x)


def _panel_estimate(f, a, b, lo, hi, ea, eb, n):
    """One fixed-rule estimate of int_lo^hi (x-a)^ea (b-x)^eb f(x) dx."""
    mid = 0.5 * (lo + hi)
    hl = 0.5 * (hi - lo)
    at_a = lo == a and ea != 0.0
    at_b = hi == b and eb != 0.0
    if at_a and at_b:
        x, w = jacobi_rule(n, eb, ea)
        scale = hl ** (ea + eb + 1.0)
        return scale * sum(wi * f(mid + hl * xi) for xi, wi in zip(x, w))
    if at_a:
        x, w = jacobi_rule(n, 0.0, ea)
        scale = hl ** (ea + 1.0)
        if eb == 0.0:
            return scale * sum(wi * f(mid + hl * xi) for xi, wi in zip(x, w))
        return scale * sum(
            wi * f(mid + hl * xi) * (b - (mid + hl * xi)) ** eb for xi, wi in zip(x, w)
        )
    if at_b:
        x, w = jacobi_rule(n, eb, 0.0)
        scale = hl ** (eb + 1.0)
        if ea == 0.0:
            return scale * sum(wi * f(mid + hl * xi) for xi, wi in zip(x, w))
        return scale * sum(
            wi * f(mid + hl * xi) * ((mid + hl * xi) - a) ** ea for xi, wi in zip(x, w)
        )
    x, w = legendre_rule(n)
    if ea == 0.0 and eb == 0.0:
        return hl * sum(wi * f(mid + hl * xi) for xi, wi in zip(x, w))
    total = 0.0
    for xi, wi in zip(x, w):
        t = mid + hl * xi
        g = f(t)
        if ea != 0.0:
            g *= (t - a) ** ea
        if eb != 0.0:
            g *= (b - t) ** eb
        total += wi * g
    return hl * total


def _adaptive_finite(f, a, b, ea, eb, rel_tol, abs_tol, max_subdivisions):
    coarse = _panel_estimate(f, a, b, a, b, ea, eb, 2 * _BASE_N)
    scale = abs(coarse)
    for _ in range(3):
        total = 0.0
        err_total = 0.0
        splits = 0
        stack = [(a, b)]
        tol_global = max(abs_tol, rel_tol * scale)
        while stack:
            lo, hi = stack.pop()
            c1 = _panel_estimate(f, a, b, lo, hi, ea, eb, _BASE_N)
            c2 = _panel_estimate(f, a, b, lo, hi, ea, eb, 2 * _BASE_N)
            perr = abs(c2 - c1)
            budget = tol_global * (hi - lo) / (b - a)
            if perr <= budget or (hi - lo) <= 1e-14 * (b - a):
                total += c2
                err_total += perr
            else:
                splits += 1
                if splits > max_subdivisions:
                    raise MaxSubdivisions(
                        f"no convergence within {max_subdivisions} subdivisions on [{a}, {b}]"
                    )
                midp = 0.5 * (lo + hi)
                stack.append((lo, midp))
                stack.append((midp, hi))
        if err_total <= max(abs_tol, rel_tol * abs(total)) or abs(total) >= scale:
            return total, err_total
        scale = abs(total)  # cancellation shrank the result; retighten
    return total, err_total


def integrate_finite(f, a: float, b: float, spec: QuadratureSpec) -> QuadratureResult:
    """Adaptive Gauss-Legendre / Gauss-Jacobi integral of the weighted f.

    Computes int_a^b (x-a)^ea (b-x)^eb f(x) dx with (ea, eb) taken from
    spec.endpoint_exponents.  Error estimates come from comparing each
    panel's n-point and 2n-point rules; converged means the accumulated
    estimate is below max(abs_tol, rel_tol * |value|).
    """
    if not a < b:
        raise DomainError(f"need a < b, got [{a}, {b}]")
    ea, eb = spec.endpoint_exponents
    if ea <= -1.0 or eb <= -1.0:
        raise DomainError("endpoint exponents must exceed -1 for integrability")
    cf = _CountedF(f)
    value, err = _adaptive_finite(
        cf, a, b, ea, eb, spec.rel_tol, spec.abs_tol, spec.max_subdivisions
    )
    return QuadratureResult(value, err, cf.count)


def _sample_amplitude(f_weighted, t):
    return max(abs(f_weighted(t * u)) for u in (1.0, 1.048, 1.11, 1.23, 1.37))


def integrate_semi_infinite(
    f, decay_rate_hint: float, spec: QuadratureSpec
) -> QuadratureResult:
    """Integral of t^e0 * f(t) over [0, inf) for exponentially damped f.

    The truncation point T is grown until the sampled tail amplitude divided
    by the decay hint falls below abs_tol/10; a [T, 2T] recomputation must
    then agree within tolerance or :class:`TruncationUnstable` is raised.
    """
    if decay_rate_hint <= 0.0:
        raise DomainError("decay_rate_hint must be positive")
    e0 = spec.endpoint_exponents[0]
    if e0 <= -1.0:
        raise DomainError("left endpoint exponent must exceed -1")
    cf = _CountedF(f)

    def f_weighted(t):
        return (t ** e0) * cf(t) if e0 != 0.0 else cf(t)

    if spec.truncation_point is not None:
        t_end = spec.truncation_point
    else:
        t_end = max(1.0, 4.0 / decay_rate_hint)
        for _ in range(200):
            amp = _sample_amplitude(f_weighted, t_end)
            if amp / decay_rate_hint < spec.abs_tol / 10.0:
                break
            t_end *= 1.5
        else:
            raise TruncationUnstable("no admissible truncation point found")

    head, err_head = _adaptive_finite(
        cf, 0.0, t_end, e0, 0.0, spec.rel_tol, spec.abs_tol, spec.max_subdivisions
    )

    def f_shift(t):
        return (t ** e0) * cf(t)

    extra, err_extra = _adaptive_finite(
        f_shift, t_end, 2.0 * t_end, 0.0, 0.0, spec.rel_tol, spec.abs_tol, spec.max_subdivisions
    )
    total = head + extra
    if abs(extra) > max(spec.abs_tol, spec.rel_tol * abs(total)) * 10.0:
        raise TruncationUnstable(
            f"doubling check failed: [T, 2T] contributes {abs(extra):.3e} at T={t_end:.6g}"
        )
    tail_bound = _sample_amplitude(f_weighted, 2.0 * t_end) / decay_rate_hint
    return QuadratureResult(
        total, err_head + err_extra + abs(extra) + tail_bound, cf.count, t_end
    )


# ---------------------------------------------------------------------------
# regularized oscillatory integrals
# ---------------------------------------------------------------------------

def _wynn_epsilon(seq):
    """Limit estimate for a sequence of partial sums (Wynn's epsilon table).

    Returns (value, error_estimate); robust against the usual rounding
    blow-up by walking even columns and keeping the most stable entry.
    """
    n = len(seq)
    if n == 1:
        return seq[0], abs(seq[0])
    cur = [complex(s) for s in seq]
    prev = [0.0j] * (n + 1)
    best = cur[-1]
    best_err = abs(cur[-1] - cur[-2]) if n >= 2 else abs(cur[-1])
    col = 0
    while len(cur) >= 2 and col < 24:
        nxt = []
        for j in range(len(cur) - 1):
            d = cur[j + 1] - cur[j]
            if abs(d) < 1e-300:
                return cur[j + 1], 0.0
            nxt.append(prev[j + 1] + 1.0 / d)
        prev = cur
        cur = nxt
        col += 1
        if col % 2 == 0 and len(cur) >= 2:
            err = abs(cur[-1] - cur[-2])
            if err < best_err:
                best_err = err
                best = cur[-1]
    return best, best_err


def _segment_integral(f_weighted, lo, hi, s_complex):
    x, w = legendre_rule(16)
    mid = 0.5 * (lo + hi)
    hl = 0.5 * (hi - lo)
    total = 0.0j
    for xi, wi in zip(x, w):
        t = mid + hl * xi
        total += wi * f_weighted(t) * np.exp(s_complex * t)
    return hl * total


def _damped_integral(cf, e0, freq, eps, t0, t_cap, spec):
    """int_0^inf t^e0 f(t) e^{(i freq - eps) t} dt, tail accelerated."""
    s = complex(-eps, freq)

    def head_f(t):
        return cf(t) * np.exp(s * t)

    head, err_head = _adaptive_finite(
        head_f, 0.0, t0, e0, 0.0, spec.rel_tol, spec.abs_tol, spec.max_subdivisions
    )

    def f_weighted(t):
        return (t ** e0) * cf(t) if e0 != 0.0 else cf(t)

    h = math.pi / (2.0 * freq)  # quarter periods: denser tail sampling helps Wynn
    n_seg = int((t_cap - t0) / h)
    if n_seg < 6:
        raise DomainError("oscillatory truncation window leaves fewer than 6 tail segments")
    n_seg = min(n_seg, 120)
    partials = []
    acc = complex(head)
    lo = t0
    natural = None
    for j in range(n_seg):
        seg = _segment_integral(f_weighted, lo, lo + h, s)
        acc += seg
        partials.append(acc)
        lo += h
        if abs(seg) < spec.abs_tol / 10.0 and j >= 3:
            natural = acc
            break
    if natural is not None:
        return natural, err_head + abs(partials[-1] - partials[-2]), lo
    tail_limit, err_tail = _wynn_epsilon(partials[-min(len(partials), 56):])
    return tail_limit, err_head + err_tail, lo


def integrate_regularized_oscillatory(
    f, frequency: float, spec: QuadratureSpec
) -> QuadratureResult:
    """eps -> 0 limit of int_0^inf t^e0 f(t) e^{(i frequency - eps) t} dt.

    Each damped integral is evaluated for eps in
    spec.regularization_eps_sequence and the sequence is polynomial
    extrapolated to eps = 0 (the damped integral is analytic in eps near 0
    whenever the regularized limit exists).  spec.truncation_point, when
    set, caps integrand evaluation; the tail beyond the adaptive head is
    reconstructed from half-period sums via Wynn's epsilon algorithm.
    """
    if frequency == 0.0:
        raise DomainError("frequency must be nonzero")
    if frequency < 0.0:
        raise DomainError("negative frequencies are outside the supported domain")
    e0 = spec.endpoint_exponents[0]
    if e0 <= -1.0:
        raise DomainError("left endpoint exponent must exceed -1")
    eps_seq = tuple(spec.regularization_eps_sequence)
    if len(eps_seq) < 2 or any(e <= 0 for e in eps_seq):
        raise DomainError("need a decreasing sequence of positive regularization eps")
    cf = _CountedF(f)
    period = 2.0 * math.pi / frequency
    t_cap = spec.truncation_point if spec.truncation_point is not None else 40.0 * period
    t0 = min(max(6.0 * period, 10.0), 0.45 * t_cap)

    values = []
    err_quad = 0.0
    t_used = 0.0
    for eps in eps_seq:
        v, e, t_last = _damped_integral(cf, e0, frequency, eps, t0, t_cap, spec)
        values.append(v)
        err_quad = max(err_quad, e)
        t_used = max(t_used, t_last)

    # Neville polynomial extrapolation of (eps_j, F_j) to eps = 0.
    m = len(values)
    tab = [list(values)]
    diag_diffs = []
    for lvl in range(1, m):
        row = []
        for j in range(m - lvl):
            e_hi = eps_seq[j]
            e_lo = eps_seq[j + lvl]
            row.append((e_hi * tab[lvl - 1][j + 1] - e_lo * tab[lvl - 1][j]) / (e_hi - e_lo))
        tab.append(row)
        diag_diffs.append(abs(tab[lvl][0] - tab[lvl - 1][0]))
    value = tab[m - 1][0]
    err_extra = diag_diffs[-1] if diag_diffs else abs(value)
    if len(diag_diffs) >= 3:
        floor = 10.0 * max(spec.abs_tol, spec.rel_tol * abs(value)) + 4.0 * err_quad
        if diag_diffs[-1] > diag_diffs[-2] > diag_diffs[-3] and diag_diffs[-1] > floor:
            raise ExtrapolationDiverged(
                f"extrapolants fail to contract: last diffs {diag_diffs[-3:]}"
            )
    return QuadratureResult(value, err_extra + err_quad, cf.count, t_used)
