"""Pure-Python series kernels.

Same call surface as the compiled twin (``galstruve._ckernels``); the active
implementation is chosen once, at import, by ``galstruve._backend``.  These
are the hot loops: every quadrature node evaluation of a Galue-type Struve
integrand lands here, so the functions stay scalar, allocation-free and
exception-free (status codes instead of raises).

Internals: series terms are assembled in log space with explicit sign
tracking (gamma products overflow long before the terms themselves are
large), and the Whittaker two-term combination runs in 80-bit extended
precision because its cancellation grows like exp(z).
"""

from __future__ import annotations

import math

import numpy as np

NAME = "python"

# status codes shared with the compiled twin
OK = 0
NO_CONVERGENCE = 1
NUMERATOR_POLE = 2
OVERFLOW = 3

_LN_PI = 1.1447298858494001741
_LN_SQRT_2PI = 0.9189385332046727418

# Lanczos rational approximation, g = 7, 9 terms.  This is the classic
# double-precision coefficient set (Godfrey / Numerical Recipes lineage);
# relative accuracy is ~1e-14 over the reflection-reduced domain.
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

# Threshold below which a gamma argument is snapped to a lattice pole.
_POLE_SNAP = 1e-9


def sinpi(x: float) -> float:
    """sin(pi*x) with the argument reduced in x, exact at (half-)integers."""
    r = math.fmod(x, 2.0)
    if r > 1.0:
        r -= 2.0
    elif r < -1.0:
        r += 2.0
    if r > 0.5:
        r = 1.0 - r
    elif r < -0.5:
        r = -1.0 - r
    return math.sin(math.pi * r)


def is_nonpositive_int(x: float) -> bool:
    """True when x sits (numerically) on a pole of Gamma."""
    if x > 0.5:
        return False
    r = round(x)
    return r <= 0 and abs(x - r) <= _POLE_SNAP * max(1.0, abs(x))


def _lanczos_pos(x: float) -> float:
    # ln Gamma(x) for x >= 0.5
    acc = _LANCZOS[0]
    for i in range(1, 9):
        acc += _LANCZOS[i] / (x - 1.0 + i)
    t = x + _LANCZOS_G - 0.5
    return _LN_SQRT_2PI + (x - 0.5) * math.log(t) - t + math.log(acc)


def log_abs_gamma(x: float) -> float:
    """ln|Gamma(x)|; +inf at the poles.  Lanczos plus reflection."""
    if x >= 0.5:
        return _lanczos_pos(x)
    s = abs(sinpi(x))
    if s == 0.0:
        return math.inf
    return _LN_PI - math.log(s) - _lanczos_pos(1.0 - x)


def gamma_sign(x: float) -> float:
    """Sign of Gamma(x): +-1.0, or 0.0 exactly at a pole."""
    if x > 0.0:
        return 1.0
    s = sinpi(x)
    if s == 0.0:
        return 0.0
    return 1.0 if s > 0.0 else -1.0


# ---------------------------------------------------------------------------
# generic Fox-Wright partial sum (real parameters, real argument)
# ---------------------------------------------------------------------------

def _wright_term(a, alpha, b, beta, lnz, zneg, k):
    """k-th series term; returns (value, status).

    status -1 flags a vanishing term (lower-row gamma pole, reciprocal-gamma
    semantics); NUMERATOR_POLE flags an upper-row pole.
    """
    logmag = k * lnz - math.lgamma(k + 1.0)
    sign = -1.0 if (zneg and k % 2 == 1) else 1.0
    for i in range(len(a)):
        xa = a[i] + alpha[i] * k
        if xa > 0.5:
            logmag += math.lgamma(xa)
        elif is_nonpositive_int(xa):
            return 0.0, NUMERATOR_POLE
        else:
            s = sinpi(xa)
            logmag += _LN_PI - math.log(abs(s)) - math.lgamma(1.0 - xa)
            if s < 0.0:
                sign = -sign
    for j in range(len(b)):
        xb = b[j] + beta[j] * k
        if xb > 0.5:
            logmag -= math.lgamma(xb)
        elif is_nonpositive_int(xb):
            return 0.0, -1
        else:
            s = sinpi(xb)
            logmag -= _LN_PI - math.log(abs(s)) - math.lgamma(1.0 - xb)
            if s < 0.0:
                sign = -sign
    if logmag > 709.0:
        return math.copysign(math.inf, sign), OVERFLOW
    return sign * math.exp(logmag), OK


def wright_sum_real(a, alpha, b, beta, z, tol, max_terms):
    """Sum_k prod Gamma(a_i + alpha_i k) / prod Gamma(b_j + beta_j k) z^k/k!.

    Stops once |term| <= tol*|partial| holds for 3 consecutive terms; the
    tail estimate is a geometric bound built from the first omitted term.
    Returns (value, terms_used, tail_estimate, status, info_k).
    """
    if z == 0.0:
        t0, st = _wright_term(a, alpha, b, beta, 0.0, False, 0)
        if st == NUMERATOR_POLE:
            return 0.0, 1, 0.0, NUMERATOR_POLE, 0
        return t0, 1, 0.0, OK, 0
    lnz = math.log(abs(z))
    zneg = z < 0.0
    total = 0.0
    consecutive = 0
    prev_abs = 0.0
    for k in range(max_terms):
        term, st = _wright_term(a, alpha, b, beta, lnz, zneg, k)
        if st == NUMERATOR_POLE:
            return total, k + 1, 0.0, NUMERATOR_POLE, k
        if st == OVERFLOW:
            return total, k + 1, math.inf, OVERFLOW, k
        total += term
        ta = abs(term)
        if ta <= tol * abs(total):
            consecutive += 1
        else:
            consecutive = 0
        if consecutive >= 3:
            nxt, st2 = _wright_term(a, alpha, b, beta, lnz, zneg, k + 1)
            if st2 == NUMERATOR_POLE:
                return total, k + 1, 0.0, NUMERATOR_POLE, k + 1
            na = abs(nxt)
            base = ta if ta > 0.0 else prev_abs
            ratio = na / base if base > 0.0 else 0.0
            tail = 2.0 * na / (1.0 - min(ratio, 0.9))
            return total, k + 1, tail, OK, 0
        if ta > 0.0:
            prev_abs = ta
    return total, max_terms, math.inf, NO_CONVERGENCE, max_terms


# ---------------------------------------------------------------------------
# specialized inner series of the Galue-type Struve function
# ---------------------------------------------------------------------------

def gtsf_inner(w, lam, mu, a, q, tol, max_terms):
    """Sum_k w^k / (Gamma(lam*k + mu) * Gamma(a*k + q)).

    This is the even part of the Galue-type Struve series after the power
    prefactor is pulled out; it is the innermost loop of every transform
    verification.  Returns (value, terms_used, tail_estimate, status, k).
    """
    if w == 0.0:
        v = _recip_pair(mu, q)
        return v, 1, 0.0, OK, 0
    lnw = math.log(abs(w))
    wneg = w < 0.0
    total = 0.0
    consecutive = 0
    prev_abs = 0.0
    for k in range(max_terms):
        term = _gtsf_term(lnw, wneg, lam, mu, a, q, k)
        if term == math.inf or term == -math.inf:
            return total, k + 1, math.inf, OVERFLOW, k
        total += term
        ta = abs(term)
        if ta <= tol * abs(total):
            consecutive += 1
        else:
            consecutive = 0
        if consecutive >= 3:
            na = abs(_gtsf_term(lnw, wneg, lam, mu, a, q, k + 1))
            base = ta if ta > 0.0 else prev_abs
            ratio = na / base if base > 0.0 else 0.0
            tail = 2.0 * na / (1.0 - min(ratio, 0.9))
            return total, k + 1, tail, OK, 0
        if ta > 0.0:
            prev_abs = ta
    return total, max_terms, math.inf, NO_CONVERGENCE, max_terms


def _gtsf_term(lnw, wneg, lam, mu, a, q, k):
    logmag = k * lnw
    sign = -1.0 if (wneg and k % 2 == 1) else 1.0
    for x in (mu + lam * k, q + a * k):
        if x > 0.5:
            logmag -= math.lgamma(x)
        elif is_nonpositive_int(x):
            return 0.0
        else:
            s = sinpi(x)
            logmag -= _LN_PI - math.log(abs(s)) - math.lgamma(1.0 - x)
            if s < 0.0:
                sign = -sign
    if logmag > 709.0:
        return math.copysign(math.inf, sign)
    return sign * math.exp(logmag)


def _recip_pair(mu, q):
    v = 1.0
    for x in (mu, q):
        if is_nonpositive_int(x):
            return 0.0
        if x > 0.5:
            v *= math.exp(-math.lgamma(x))
        else:
            s = sinpi(x)
            v *= s * math.exp(math.lgamma(1.0 - x) - _LN_PI)
    return v


# ---------------------------------------------------------------------------
# Kummer 1F1 by the term-ratio recurrence
# ---------------------------------------------------------------------------

def kummer_sum(al, ga, z, tol, max_terms):
    """1F1(al; ga; z) partial sum; ga must not be a non-positive integer.

    Returns (value, terms_used, tail_estimate, status).
    """
    term = 1.0
    total = 1.0
    consecutive = 0
    for k in range(1, max_terms):
        term *= (al + k - 1.0) * z / ((ga + k - 1.0) * k)
        total += term
        ta = abs(term)
        if ta <= tol * abs(total):
            consecutive += 1
        else:
            consecutive = 0
        if consecutive >= 3:
            nxt = term * (al + k) * z / ((ga + k) * (k + 1.0))
            na = abs(nxt)
            ratio = na / ta if ta > 0.0 else 0.0
            tail = 2.0 * na / (1.0 - min(ratio, 0.9))
            return total, k + 1, tail, OK
    return total, max_terms, math.inf, NO_CONVERGENCE


# ---------------------------------------------------------------------------
# Whittaker W: extended-precision two-term combination and the large-z
# asymptotic series
# ---------------------------------------------------------------------------

_LD = np.longdouble
_PI_LD = _LD("3.14159265358979323846264338327950288")
_LN_SQRT_2PI_LD = _LD("0.91893853320467274178032973640561764")

# B_{2n} / (2n (2n-1)) for the Stirling series, n = 1..11 (exact rationals)
_STIRLING_LD = tuple(
    _LD(p) / _LD(q)
    for p, q in (
        (1, 12),
        (-1, 360),
        (1, 1260),
        (-1, 1680),
        (1, 1188),
        (-691, 360360),
        (1, 156),
        (-3617, 122400),
        (43867, 244188),
        (-174611, 125400),
        (854513, 63756),
    )
)

_STIRLING_SHIFT = 12.0


def _lgamma_ld_pos(x):
    # ln Gamma(x) for x > 0 in longdouble: Stirling series after shifting the
    # argument above 12 (no cancellation, unlike Spouge at this precision).
    shift = _LD(1)
    y = x
    while y < _STIRLING_SHIFT:
        shift *= y
        y += 1
    acc = (y - _LD("0.5")) * np.log(y) - y + _LN_SQRT_2PI_LD
    y2 = y * y
    ypow = y
    for coef in _STIRLING_LD:
        acc += coef / ypow
        ypow *= y2
    return acc - np.log(shift)


def _sinpi_ld(x):
    r = np.fmod(x, _LD(2))
    if r > 1:
        r -= _LD(2)
    elif r < -1:
        r += _LD(2)
    if r > 0.5:
        r = _LD(1) - r
    elif r < -0.5:
        r = -_LD(1) - r
    return np.sin(_PI_LD * r)


def _gamma_ld(x):
    # signed Gamma(x) in longdouble; caller avoids poles
    if x > 0:
        return np.exp(_lgamma_ld_pos(x))
    s = _sinpi_ld(x)
    return _PI_LD / (s * np.exp(_lgamma_ld_pos(_LD(1) - x)))


def _recip_gamma_ld(x):
    if is_nonpositive_int(float(x)):
        return _LD(0)
    return 1 / _gamma_ld(x)


def _kummer_ld(al, ga, z, max_terms=700):
    term = _LD(1)
    total = _LD(1)
    consecutive = 0
    for k in range(1, max_terms):
        term = term * (al + k - 1) * z / ((ga + k - 1) * k)
        total += term
        if abs(term) <= _LD("1e-25") * abs(total):
            consecutive += 1
            if consecutive >= 3:
                break
        else:
            consecutive = 0
    return total


def whittaker_w_combo(tau, omega, z):
    """W(tau, omega; z) from the two-term M-function combination.

    Requires 2*omega away from the integers (the caller gates that) and is
    used for z below the asymptotic switch.  Runs in extended precision:
    the two M terms grow like exp(z/2) while W decays like exp(-z/2), so
    double precision loses ~z/ln(10) digits to cancellation.
    """
    t = _LD(tau)
    om = _LD(omega)
    u = _LD(z)
    half = _LD("0.5")
    c1 = _gamma_ld(-2 * om) * _recip_gamma_ld(half - om - t)
    c2 = _gamma_ld(2 * om) * _recip_gamma_ld(half + om - t)
    m1 = _kummer_ld(half + om - t, 1 + 2 * om, u) if c1 != 0 else _LD(0)
    m2 = _kummer_ld(half - om - t, 1 - 2 * om, u) if c2 != 0 else _LD(0)
    w = np.exp(-u / 2) * (c1 * u ** (half + om) * m1 + c2 * u ** (half - om) * m2)
    return float(w)


def whittaker_w_asym(tau, omega, z):
    """Large-z series W ~ exp(-z/2) z^tau 2F0(...; -1/z), optimally truncated.

    Returns (value, error_estimate).
    """
    a1 = 0.5 + omega - tau
    a2 = 0.5 - omega - tau
    term = 1.0
    total = 1.0
    prev = 1.0
    k = 1
    while k < 300:
        term *= (a1 + k - 1.0) * (a2 + k - 1.0) / (k * (-z))
        ta = abs(term)
        if ta >= prev:
            break
        total += term
        prev = ta
        if ta <= 1e-18 * abs(total):
            break
        k += 1
    scale = math.exp(-0.5 * z + tau * math.log(z))
    return scale * total, scale * prev


# ---------------------------------------------------------------------------
# modified Bessel K at integer order: classical log series (longdouble)
# ---------------------------------------------------------------------------

_EULER_LD = _LD("0.57721566490153286060651209008240243")


def bessel_k_int_series(n, z):
    """K_n(z) for integer n >= 0, z <= ~14, by the classical log series."""
    zl = _LD(z)
    q = zl * zl / 4
    lhalf = np.log(zl / 2)
    half_pow = (zl / 2) ** _LD(n)

    # finite part: (1/2)(z/2)^{-n} sum_{j<n} (n-j-1)!/j! (-q)^j
    s1 = _LD(0)
    if n > 0:
        num = _LD(1)
        for i in range(1, n):
            num *= i  # (n-1)!
        fact_j = _LD(1)
        qpow = _LD(1)
        for j in range(n):
            s1 += num / fact_j * qpow
            if j < n - 1:
                num /= (n - 1 - j)
                fact_j *= (j + 1)
                qpow *= -q
        s1 *= _LD("0.5") / half_pow

    # I_n and the psi-weighted series
    inz = _LD(0)
    s2 = _LD(0)
    psi_a = -_EULER_LD  # psi(j+1), starts at psi(1)
    psi_b = -_EULER_LD
    for i in range(1, n + 1):
        psi_b += _LD(1) / i  # psi(n+1)
    fact_j = _LD(1)
    fact_nj = _LD(1)
    for i in range(1, n + 1):
        fact_nj *= i  # n!
    qpow = _LD(1)
    for j in range(0, 200):
        base = qpow / (fact_j * fact_nj)
        inz += base
        s2 += (psi_a + psi_b) * base
        if base < _LD("1e-28") * (abs(inz) + 1):
            break
        qpow *= q
        fact_j *= (j + 1)
        fact_nj *= (n + j + 1)
        psi_a += _LD(1) / (j + 1)
        psi_b += _LD(1) / (n + j + 1)
    inz *= half_pow
    s2 *= half_pow

    sgn = -1.0 if n % 2 == 0 else 1.0  # (-1)^{n+1}
    k = s1 + _LD(sgn) * lhalf * inz + _LD(-sgn) * _LD("0.5") * s2
    return float(k)
