# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numeric kernel: hot path of the exponent maximization.

Function-for-function twin of ``sumdiff._kernel_py``; same algorithms, same
accumulation order, C doubles throughout.  Built with -ffp-contract=off so
results match the pure-Python twin bit for bit.
"""

from libc.math cimport exp, log, fabs, sqrt, NAN, INFINITY

BACKEND = "compiled"

cdef double _SQRT_EPS = sqrt(2.220446049250313e-16)
cdef double _GOLDEN_MEAN = 0.5 * (3.0 - sqrt(5.0))
cdef double _LOG2 = log(2.0)
cdef long _BRENT_MAXFUN = 500


cdef double _log_mgf(double t, long B) noexcept nogil:
    cdef double shift = B * t if t > 0.0 else 0.0
    cdef double s = 0.0
    cdef long j
    for j in range(B + 1):
        s += exp(j * t - shift)
    return shift + log(s) - log(<double> (B + 1))


cdef double _tilted_mean(double t, long B) noexcept nogil:
    cdef double shift = B * t if t > 0.0 else 0.0
    cdef double num = 0.0
    cdef double den = 0.0
    cdef double e
    cdef long j
    for j in range(B + 1):
        e = exp(j * t - shift)
        den += e
        num += j * e
    return num / den


cdef (double, double, long, double) _rate_value(double c, long B, double tol) noexcept nogil:
    cdef double t_lo, t_hi, t_mid, t_star, value, residual
    cdef long iterations = 0
    if B <= 0 or c >= 0.5 * B:
        return (0.0, NAN, 0, 0.0)
    if c <= 0.0:
        return (log(<double> (B + 1)), -INFINITY, 0, 0.0)
    t_lo = -2.0 * log(<double> (B + 1)) / (c if c > 0.01 else 0.01)
    while _tilted_mean(t_lo, B) >= c:
        t_lo *= 2.0
        iterations += 1
        if t_lo < -1e306:
            break
    t_hi = 0.0
    while t_hi - t_lo > tol:
        t_mid = 0.5 * (t_lo + t_hi)
        if t_mid == t_lo or t_mid == t_hi:
            break
        if _tilted_mean(t_mid, B) < c:
            t_lo = t_mid
        else:
            t_hi = t_mid
        iterations += 1
    t_star = 0.5 * (t_lo + t_hi)
    value = t_star * c - _log_mgf(t_star, B)
    if value < 0.0:
        value = 0.0
    residual = fabs(_tilted_mean(t_star, B) - c)
    return (value, t_star, iterations, residual)


cdef class _Func1D:
    cdef double value(self, double x):
        return 0.0


cdef class _PyFunc(_Func1D):
    cdef object f

    def __cinit__(self, f):
        self.f = f

    cdef double value(self, double x):
        return <double> self.f(x)


cdef class _NegDiffRate(_Func1D):
    cdef long B
    cdef double r, tol

    def __cinit__(self, long B, double r, double tol):
        self.B = B
        self.r = r
        self.tol = tol

    cdef double value(self, double x):
        return -_log_diff_rate(x, self.r, self.B, self.tol)


cdef class _NegInnerMax(_Func1D):
    cdef long B
    cdef double eps, tol
    cdef long evaluations

    def __cinit__(self, long B, double eps, double tol):
        self.B = B
        self.eps = eps
        self.tol = tol
        self.evaluations = 0

    cdef double value(self, double x):
        cdef double a_star, v
        cdef long num
        a_star, v, num = _maximize_a(self.B, x, self.eps, self.tol)
        self.evaluations += num
        return -v


cdef double _sign(double v) noexcept nogil:
    if v > 0.0:
        return 1.0
    if v < 0.0:
        return -1.0
    return 0.0


cdef (double, double, long) _brent_min(_Func1D f, double x1, double x2,
                                       double xatol, long maxfun):
    cdef double a = x1, b = x2
    cdef double fulc = a + _GOLDEN_MEAN * (b - a)
    cdef double nfc = fulc, xf = fulc
    cdef double rat = 0.0, e = 0.0
    cdef double x = xf
    cdef double fx = f.value(x)
    cdef long num = 1
    cdef double ffulc = fx, fnfc = fx
    cdef double xm = 0.5 * (a + b)
    cdef double tol1 = _SQRT_EPS * fabs(xf) + xatol / 3.0
    cdef double tol2 = 2.0 * tol1
    cdef double fu, si, p, q, r
    cdef bint golden

    while fabs(xf - xm) > (tol2 - 0.5 * (b - a)):
        golden = True
        if fabs(e) > tol1:
            golden = False
            r = (xf - nfc) * (fx - ffulc)
            q = (xf - fulc) * (fx - fnfc)
            p = (xf - fulc) * q - (xf - nfc) * r
            q = 2.0 * (q - r)
            if q > 0.0:
                p = -p
            q = fabs(q)
            r = e
            e = rat
            if (fabs(p) < fabs(0.5 * q * r)) and (p > q * (a - xf)) and (p < q * (b - xf)):
                rat = p / q
                x = xf + rat
                if ((x - a) < tol2) or ((b - x) < tol2):
                    si = _sign(xm - xf) + (1.0 if xm == xf else 0.0)
                    rat = tol1 * si
            else:
                golden = True
        if golden:
            e = (a - xf) if xf >= xm else (b - xf)
            rat = _GOLDEN_MEAN * e

        si = _sign(rat) + (1.0 if rat == 0.0 else 0.0)
        x = xf + si * max(fabs(rat), tol1)
        fu = f.value(x)
        num += 1

        if fu <= fx:
            if x >= xf:
                a = xf
            else:
                b = xf
            fulc = nfc
            ffulc = fnfc
            nfc = xf
            fnfc = fx
            xf = x
            fx = fu
        else:
            if x < xf:
                a = x
            else:
                b = x
            if (fu <= fnfc) or (nfc == xf):
                fulc = nfc
                ffulc = fnfc
                nfc = x
                fnfc = fu
            elif (fu <= ffulc) or (fulc == xf) or (fulc == nfc):
                fulc = x
                ffulc = fu

        xm = 0.5 * (a + b)
        tol1 = _SQRT_EPS * fabs(xf) + xatol / 3.0
        tol2 = 2.0 * tol1
        if num >= maxfun:
            break
    return (xf, fx, num)


cdef double _log_diff_rate(double a, double r, long B, double tol):
    cdef double ar = a * r
    cdef double v = _LOG2
    v += ar * log(<double> B)
    v += (1.0 - ar) * log(<double> (B + 1))
    v -= _rate_value(ar, 1, tol)[0]
    v -= ar * _rate_value((1.0 - a) / a, B - 1, tol)[0]
    v -= (1.0 - ar) * _rate_value(r / (1.0 - ar), B, tol)[0]
    return v


cdef (double, double, long) _maximize_a(long B, double r, double eps, double tol):
    cdef double inset = max(eps, 1e-12)
    cdef double lo = inset
    cdef double hi = min(1.0, 1.0 / r) - inset
    cdef double a_star, neg, value
    cdef long num
    a_star, neg, num = _brent_min(_NegDiffRate(B, r, tol), lo, hi, eps, _BRENT_MAXFUN)
    value = (-neg - log(<double> (2 * B + 1))) + _rate_value(2.0 * r, 2 * B, tol)[0]
    return (a_star, value, num)


def log_mgf(double t, long B):
    """log of the mean of e^(j*t) over j = 0..B (shift-stabilized)."""
    return _log_mgf(t, B)


def tilted_mean(double t, long B):
    """Mean of the exponentially tilted uniform distribution on {0,...,B}."""
    return _tilted_mean(t, B)


def rate_value(double c, long B, double tol):
    """Rate function by bisection on the tilt; (value, t_star, iters, residual)."""
    return _rate_value(c, B, tol)


def brent_min(f, double x1, double x2, double xatol, long maxfun=_BRENT_MAXFUN):
    """Bracketed golden-section/parabolic minimizer; (x_min, f_min, evals)."""
    return _brent_min(_PyFunc(f), x1, x2, xatol, maxfun)


def log_diff_rate(double a, double r, long B, double tol):
    """a-dependent part of the bound numerator."""
    return _log_diff_rate(a, r, B, tol)


def bound_numerator(double a, double r, long B, double tol):
    """Full bound numerator at (a, r, B)."""
    cdef double v = _log_diff_rate(a, r, B, tol)
    v -= log(<double> (2 * B + 1))
    v += _rate_value(2.0 * r, 2 * B, tol)[0]
    return v


def maximize_a(long B, double r, double eps, double tol):
    """Inner maximization over a; (a_star, numerator_value, evaluations)."""
    return _maximize_a(B, r, eps, tol)


def maximize_r(long B, double eps, double tol):
    """Nested maximization over r in [0.5, 2]; (r_star, a_star, value, evals)."""
    cdef _NegInnerMax outer = _NegInnerMax(B, eps, tol)
    cdef double r_star, a_star, value
    cdef long num
    r_star, _, _ = _brent_min(outer, 0.5, 2.0, eps, _BRENT_MAXFUN)
    a_star, value, num = _maximize_a(B, r_star, eps, tol)
    outer.evaluations += num
    return (r_star, a_star, value, outer.evaluations)
