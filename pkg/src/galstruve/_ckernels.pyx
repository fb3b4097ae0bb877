# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled series kernels; call-compatible twin of galstruve._pykernels.

The hot loops (Wright/GTSF series terms at quadrature nodes, the Whittaker
two-term combination) run as tight C loops; the Whittaker path uses native
``long double`` (80-bit on x86) for the same cancellation reasons documented
in the pure module.
"""

from libc.math cimport (
    INFINITY,
    exp,
    fabs,
    floor,
    fmod,
    lgamma,
    log,
    pow,
    sin,
    copysign,
)

cdef extern from "math.h" nogil:
    long double lgammal(long double)
    long double expl(long double)
    long double logl(long double)
    long double powl(long double, long double)
    long double fabsl(long double)
    long double sinl(long double)
    long double fmodl(long double, long double)
    long double sqrtl(long double)

NAME = "c"

OK = 0
NO_CONVERGENCE = 1
NUMERATOR_POLE = 2
OVERFLOW = 3

cdef int _OK = 0
cdef int _NO_CONVERGENCE = 1
cdef int _NUMERATOR_POLE = 2
cdef int _OVERFLOW = 3
cdef int _VANISH = -1

cdef double _LN_PI = 1.1447298858494001741
cdef double _LN_SQRT_2PI = 0.9189385332046727418
cdef double _PI = 3.141592653589793238462643383279503
cdef long double _PI_L = <long double>3.141592653589793 + <long double>1.22514845490862e-16
cdef double _POLE_SNAP = 1e-9

cdef double[9] _LANCZOS
_LANCZOS[0] = 0.99999999999980993
_LANCZOS[1] = 676.5203681218851
_LANCZOS[2] = -1259.1392167224028
_LANCZOS[3] = 771.32342877765313
_LANCZOS[4] = -176.61502916214059
_LANCZOS[5] = 12.507343278686905
_LANCZOS[6] = -0.13857109526572012
_LANCZOS[7] = 9.9843695780195716e-6
_LANCZOS[8] = 1.5056327351493116e-7


cdef double _sinpi(double x) nogil:
    cdef double r = fmod(x, 2.0)
    if r > 1.0:
        r -= 2.0
    elif r < -1.0:
        r += 2.0
    if r > 0.5:
        r = 1.0 - r
    elif r < -0.5:
        r = -1.0 - r
    return sin(_PI * r)


cdef bint _is_nonpos_int(double x) nogil:
    cdef double r
    if x > 0.5:
        return 0
    r = floor(x + 0.5)
    if r > 0.0:
        return 0
    return fabs(x - r) <= _POLE_SNAP * (1.0 if fabs(x) < 1.0 else fabs(x))


cdef double _lanczos_pos(double x) nogil:
    cdef double acc = _LANCZOS[0]
    cdef int i
    for i in range(1, 9):
        acc += _LANCZOS[i] / (x - 1.0 + i)
    cdef double t = x + 6.5
    return _LN_SQRT_2PI + (x - 0.5) * log(t) - t + log(acc)


cdef double _log_abs_gamma(double x) nogil:
    cdef double s
    if x >= 0.5:
        return _lanczos_pos(x)
    s = fabs(_sinpi(x))
    if s == 0.0:
        return INFINITY
    return _LN_PI - log(s) - _lanczos_pos(1.0 - x)


def sinpi(double x):
    """sin(pi*x), reduced in x."""
    return _sinpi(x)


def is_nonpositive_int(double x):
    """True when x sits (numerically) on a pole of Gamma."""
    return bool(_is_nonpos_int(x))


def log_abs_gamma(double x):
    """ln|Gamma(x)|; +inf at the poles (Lanczos plus reflection)."""
    return _log_abs_gamma(x)


def gamma_sign(double x):
    """Sign of Gamma(x): +-1.0, or 0.0 exactly at a pole."""
    cdef double s
    if x > 0.0:
        return 1.0
    s = _sinpi(x)
    if s == 0.0:
        return 0.0
    return 1.0 if s > 0.0 else -1.0


# ---------------------------------------------------------------------------
# generic Fox-Wright partial sum
# ---------------------------------------------------------------------------

cdef int _MAXP = 8


cdef int _wright_term(double* a, double* alpha, int p, double* b, double* beta,
                      int q, double lnz, bint zneg, long k, double* out) nogil:
    cdef double logmag = k * lnz - lgamma(k + 1.0)
    cdef double sign = -1.0 if (zneg and k % 2 == 1) else 1.0
    cdef double xa, xb, s
    cdef int i, j
    for i in range(p):
        xa = a[i] + alpha[i] * k
        if xa > 0.5:
            logmag += lgamma(xa)
        elif _is_nonpos_int(xa):
            return _NUMERATOR_POLE
        else:
            s = _sinpi(xa)
            logmag += _LN_PI - log(fabs(s)) - lgamma(1.0 - xa)
            if s < 0.0:
                sign = -sign
    for j in range(q):
        xb = b[j] + beta[j] * k
        if xb > 0.5:
            logmag -= lgamma(xb)
        elif _is_nonpos_int(xb):
            out[0] = 0.0
            return _VANISH
        else:
            s = _sinpi(xb)
            logmag -= _LN_PI - log(fabs(s)) - lgamma(1.0 - xb)
            if s < 0.0:
                sign = -sign
    if logmag > 709.0:
        out[0] = copysign(INFINITY, sign)
        return _OVERFLOW
    out[0] = sign * exp(logmag)
    return _OK


def wright_sum_real(tuple a_t, tuple alpha_t, tuple b_t, tuple beta_t,
                    double z, double tol, long max_terms):
    """Fox-Wright partial sum with the 3-consecutive-small stopping rule.

    Returns (value, terms_used, tail_estimate, status, info_k).
    """
    cdef int p = len(a_t)
    cdef int q = len(b_t)
    if p > _MAXP or q > _MAXP:
        raise ValueError("at most 8 upper and 8 lower pairs supported")
    cdef double[8] a
    cdef double[8] alpha
    cdef double[8] b
    cdef double[8] beta
    cdef int i
    for i in range(p):
        a[i] = a_t[i]
        alpha[i] = alpha_t[i]
    for i in range(q):
        b[i] = b_t[i]
        beta[i] = beta_t[i]

    cdef double term = 0.0
    cdef int st
    if z == 0.0:
        st = _wright_term(a, alpha, p, b, beta, q, 0.0, 0, 0, &term)
        if st == _NUMERATOR_POLE:
            return 0.0, 1, 0.0, NUMERATOR_POLE, 0
        return term, 1, 0.0, OK, 0

    cdef double lnz = log(fabs(z))
    cdef bint zneg = z < 0.0
    cdef double total = 0.0
    cdef int consecutive = 0
    cdef double prev_abs = 0.0
    cdef double ta, na, base, ratio, tail, nxt
    cdef long k
    for k in range(max_terms):
        st = _wright_term(a, alpha, p, b, beta, q, lnz, zneg, k, &term)
        if st == _NUMERATOR_POLE:
            return total, k + 1, 0.0, NUMERATOR_POLE, k
        if st == _OVERFLOW:
            return total, k + 1, INFINITY, OVERFLOW, k
        total += term
        ta = fabs(term)
        if ta <= tol * fabs(total):
            consecutive += 1
        else:
            consecutive = 0
        if consecutive >= 3:
            st = _wright_term(a, alpha, p, b, beta, q, lnz, zneg, k + 1, &nxt)
            if st == _NUMERATOR_POLE:
                return total, k + 1, 0.0, NUMERATOR_POLE, k + 1
            na = fabs(nxt) if st != _OVERFLOW else INFINITY
            base = ta if ta > 0.0 else prev_abs
            ratio = na / base if base > 0.0 else 0.0
            if ratio > 0.9:
                ratio = 0.9
            tail = 2.0 * na / (1.0 - ratio)
            return total, k + 1, tail, OK, 0
        if ta > 0.0:
            prev_abs = ta
    return total, max_terms, INFINITY, NO_CONVERGENCE, max_terms


# ---------------------------------------------------------------------------
# specialized inner series of the Galue-type Struve function
# ---------------------------------------------------------------------------

cdef double _gtsf_term(double lnw, bint wneg, double lam, double mu,
                       double a, double q, long k) nogil:
    cdef double logmag = k * lnw
    cdef double sign = -1.0 if (wneg and k % 2 == 1) else 1.0
    cdef double x, s
    cdef int idx
    for idx in range(2):
        x = mu + lam * k if idx == 0 else q + a * k
        if x > 0.5:
            logmag -= lgamma(x)
        elif _is_nonpos_int(x):
            return 0.0
        else:
            s = _sinpi(x)
            logmag -= _LN_PI - log(fabs(s)) - lgamma(1.0 - x)
            if s < 0.0:
                sign = -sign
    if logmag > 709.0:
        return copysign(INFINITY, sign)
    return sign * exp(logmag)


def gtsf_inner(double w, double lam, double mu, double a, double q,
               double tol, long max_terms):
    """sum_k w^k / (Gamma(lam k + mu) Gamma(a k + q)).

    Returns (value, terms_used, tail_estimate, status, k).
    """
    cdef double v
    cdef double x
    cdef int idx
    if w == 0.0:
        v = 1.0
        for idx in range(2):
            x = mu if idx == 0 else q
            if _is_nonpos_int(x):
                return 0.0, 1, 0.0, OK, 0
            if x > 0.5:
                v *= exp(-lgamma(x))
            else:
                v *= _sinpi(x) * exp(lgamma(1.0 - x) - _LN_PI)
        return v, 1, 0.0, OK, 0

    cdef double lnw = log(fabs(w))
    cdef bint wneg = w < 0.0
    cdef double total = 0.0
    cdef int consecutive = 0
    cdef double prev_abs = 0.0
    cdef double term, ta, na, base, ratio, tail
    cdef long k
    for k in range(max_terms):
        term = _gtsf_term(lnw, wneg, lam, mu, a, q, k)
        if term == INFINITY or term == -INFINITY:
            return total, k + 1, INFINITY, OVERFLOW, k
        total += term
        ta = fabs(term)
        if ta <= tol * fabs(total):
            consecutive += 1
        else:
            consecutive = 0
        if consecutive >= 3:
            na = fabs(_gtsf_term(lnw, wneg, lam, mu, a, q, k + 1))
            base = ta if ta > 0.0 else prev_abs
            ratio = na / base if base > 0.0 else 0.0
            if ratio > 0.9:
                ratio = 0.9
            tail = 2.0 * na / (1.0 - ratio)
            return total, k + 1, tail, OK, 0
        if ta > 0.0:
            prev_abs = ta
    return total, max_terms, INFINITY, NO_CONVERGENCE, max_terms


# ---------------------------------------------------------------------------
# Kummer 1F1
# ---------------------------------------------------------------------------

def kummer_sum(double al, double ga, double z, double tol, long max_terms):
    """1F1(al; ga; z) partial sum; returns (value, terms, tail, status)."""
    cdef double term = 1.0
    cdef double total = 1.0
    cdef int consecutive = 0
    cdef double ta, na, ratio, tail, nxt
    cdef long k
    for k in range(1, max_terms):
        term *= (al + k - 1.0) * z / ((ga + k - 1.0) * k)
        total += term
        ta = fabs(term)
        if ta <= tol * fabs(total):
            consecutive += 1
        else:
            consecutive = 0
        if consecutive >= 3:
            nxt = term * (al + k) * z / ((ga + k) * (k + 1.0))
            na = fabs(nxt)
            ratio = na / ta if ta > 0.0 else 0.0
            if ratio > 0.9:
                ratio = 0.9
            tail = 2.0 * na / (1.0 - ratio)
            return total, k + 1, tail, OK
    return total, max_terms, INFINITY, NO_CONVERGENCE


# ---------------------------------------------------------------------------
# Whittaker W pieces (long double internals)
# ---------------------------------------------------------------------------

cdef long double _sinpi_l(long double x) nogil:
    cdef long double r = fmodl(x, 2.0)
    if r > 1.0:
        r -= 2.0
    elif r < -1.0:
        r += 2.0
    if r > 0.5:
        r = 1.0 - r
    elif r < -0.5:
        r = -1.0 - r
    return sinl(_PI_L * r)


cdef long double _gamma_l(long double x) nogil:
    # signed Gamma in long double; caller keeps arguments off the poles
    if x > 0.0:
        return expl(lgammal(x))
    return _PI_L / (_sinpi_l(x) * expl(lgammal(1.0 - x)))


cdef long double _kummer_l(long double al, long double ga, long double z) nogil:
    cdef long double term = 1.0
    cdef long double total = 1.0
    cdef int consecutive = 0
    cdef long k
    for k in range(1, 700):
        term = term * (al + k - 1) * z / ((ga + k - 1) * k)
        total += term
        if fabsl(term) <= 1e-25 * fabsl(total):
            consecutive += 1
            if consecutive >= 3:
                break
        else:
            consecutive = 0
    return total


def whittaker_w_combo(double tau, double omega, double z):
    """Two-term M combination for W(tau, omega; z), long double internals."""
    cdef long double t = tau
    cdef long double om = omega
    cdef long double u = z
    cdef long double half = 0.5
    cdef long double c1, c2, m1, m2, w
    if _is_nonpos_int(0.5 - omega - tau):
        c1 = 0.0
    else:
        c1 = _gamma_l(-2.0 * om) / _gamma_l(half - om - t)
    if _is_nonpos_int(0.5 + omega - tau):
        c2 = 0.0
    else:
        c2 = _gamma_l(2.0 * om) / _gamma_l(half + om - t)
    m1 = _kummer_l(half + om - t, 1.0 + 2.0 * om, u) if c1 != 0.0 else 0.0
    m2 = _kummer_l(half - om - t, 1.0 - 2.0 * om, u) if c2 != 0.0 else 0.0
    w = expl(-u / 2.0) * (c1 * powl(u, half + om) * m1 + c2 * powl(u, half - om) * m2)
    return <double> w


def whittaker_w_asym(double tau, double omega, double z):
    """Optimally truncated large-z series; returns (value, error_estimate)."""
    cdef double a1 = 0.5 + omega - tau
    cdef double a2 = 0.5 - omega - tau
    cdef double term = 1.0
    cdef double total = 1.0
    cdef double prev = 1.0
    cdef double ta, scale
    cdef long k = 1
    while k < 300:
        term *= (a1 + k - 1.0) * (a2 + k - 1.0) / (k * (-z))
        ta = fabs(term)
        if ta >= prev:
            break
        total += term
        prev = ta
        if ta <= 1e-18 * fabs(total):
            break
        k += 1
    scale = exp(-0.5 * z + tau * log(z))
    return scale * total, scale * prev


# ---------------------------------------------------------------------------
# integer-order K: classical log series in long double
# ---------------------------------------------------------------------------

cdef long double _EULER_L = <long double>0.5772156649015329 + <long double>(-4.933119884809045e-18)


def bessel_k_int_series(int n, double z):
    """K_n(z) for integer n >= 0 and moderate z, classical log series."""
    cdef long double zl = z
    cdef long double q = zl * zl / 4.0
    cdef long double lhalf = logl(zl / 2.0)
    cdef long double half_pow = powl(zl / 2.0, <long double> n)

    cdef long double s1 = 0.0
    cdef long double num = 1.0
    cdef long double fact_j = 1.0
    cdef long double qpow = 1.0
    cdef int i, j
    if n > 0:
        for i in range(1, n):
            num *= i
        for j in range(n):
            s1 += num / fact_j * qpow
            if j < n - 1:
                num /= (n - 1 - j)
                fact_j *= (j + 1)
                qpow *= -q
        s1 *= 0.5 / half_pow

    cdef long double inz = 0.0
    cdef long double s2 = 0.0
    cdef long double psi_a = -_EULER_L
    cdef long double psi_b = -_EULER_L
    for i in range(1, n + 1):
        psi_b += 1.0 / i
    cdef long double fj = 1.0
    cdef long double fnj = 1.0
    for i in range(1, n + 1):
        fnj *= i
    cdef long double qp = 1.0
    cdef long double base
    for j in range(200):
        base = qp / (fj * fnj)
        inz += base
        s2 += (psi_a + psi_b) * base
        if base < 1e-28 * (fabsl(inz) + 1.0):
            break
        qp *= q
        fj *= (j + 1)
        fnj *= (n + j + 1)
        psi_a += 1.0 / (j + 1)
        psi_b += 1.0 / (n + j + 1)
    inz *= half_pow
    s2 *= half_pow

    cdef long double sgn = -1.0 if n % 2 == 0 else 1.0
    cdef long double k = s1 + sgn * lhalf * inz + (-sgn) * 0.5 * s2
    return <double> k
