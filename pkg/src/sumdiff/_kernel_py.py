"""Pure-Python twin of the compiled numeric kernel.

Hot path of the exponent maximization: the log-moment-generating function of
the uniform distribution on {0,...,B}, its Legendre dual solved by monotone
bisection, and the bracketed 1-D maximizer driving the nested (a, r) search.

The compiled extension (``sumdiff._kernel``) implements function-for-function
the same algorithms over C doubles; results of the two backends agree to the
last bit on IEEE-754 hardware.  Keep any change here mirrored there.
"""
from __future__ import annotations

import math

BACKEND = "python"

_SQRT_EPS = math.sqrt(2.220446049250313e-16)
_GOLDEN_MEAN = 0.5 * (3.0 - math.sqrt(5.0))
_LOG2 = math.log(2.0)
_BRENT_MAXFUN = 500


def log_mgf(t: float, B: int) -> float:
    """log of the mean of e^(j*t) over j = 0..B.

    The max exponent max(0, B*t) is shifted out before exponentiating, so the
    sum stays in range for any representable t; underflow of far terms is
    harmless.
    """
    shift = B * t if t > 0.0 else 0.0
    s = 0.0
    for j in range(B + 1):
        s += math.exp(j * t - shift)
    return shift + math.log(s) - math.log(B + 1)


def tilted_mean(t: float, B: int) -> float:
    """Mean of the exponentially tilted uniform distribution on {0,...,B}.

    Equals the derivative of log_mgf in t; strictly increasing, B/2 at t=0.
    """
    shift = B * t if t > 0.0 else 0.0
    num = 0.0
    den = 0.0
    for j in range(B + 1):
        e = math.exp(j * t - shift)
        den += e
        num += j * e
    return num / den


def rate_value(c: float, B: int, tol: float) -> tuple[float, float, int, float]:
    """Large-deviation rate of the event (mean of B+1-point uniforms) <= c.

    Returns (value, t_star, iterations, residual).  Branches:
      * c >= B/2 (or B == 0): the event is typical, rate 0, t_star = NaN.
      * c == 0: supremum attained only as t -> -inf; log(B+1) analytically,
        t_star = -inf.
      * 0 < c < B/2: solve tilted_mean(t, B) = c by bisection on t < 0;
        the initial bracket low end -2*log(B+1)/max(c, 0.01) is expanded
        geometrically until it straddles the root.
    """
    if B <= 0 or c >= 0.5 * B:
        return (0.0, math.nan, 0, 0.0)
    if c <= 0.0:
        return (math.log(B + 1), -math.inf, 0, 0.0)
    iterations = 0
    t_lo = -2.0 * math.log(B + 1) / max(c, 0.01)
    while tilted_mean(t_lo, B) >= c:
        t_lo *= 2.0
        iterations += 1
        if t_lo < -1e306:
            break
    t_hi = 0.0
    while t_hi - t_lo > tol:
        t_mid = 0.5 * (t_lo + t_hi)
        if t_mid == t_lo or t_mid == t_hi:
            break
        if tilted_mean(t_mid, B) < c:
            t_lo = t_mid
        else:
            t_hi = t_mid
        iterations += 1
    t_star = 0.5 * (t_lo + t_hi)
    value = t_star * c - log_mgf(t_star, B)
    if value < 0.0:
        value = 0.0
    residual = abs(tilted_mean(t_star, B) - c)
    return (value, t_star, iterations, residual)


def brent_min(f, x1: float, x2: float, xatol: float, maxfun: int = _BRENT_MAXFUN):
    """Bracketed 1-D minimizer: golden section with parabolic acceleration.

    Classic Forsythe-Malcolm-Moler bounded search.  Never evaluates the
    endpoints; stops once the best point sits within
    2*(sqrt(machine eps)*|x| + xatol/3) of the bracket midpoint.

    Returns (x_min, f_min, evaluations).
    """
    a, b = x1, x2
    fulc = a + _GOLDEN_MEAN * (b - a)
    nfc, xf = fulc, fulc
    rat = e = 0.0
    x = xf
    fx = f(x)
    num = 1
    ffulc = fnfc = fx
    xm = 0.5 * (a + b)
    tol1 = _SQRT_EPS * abs(xf) + xatol / 3.0
    tol2 = 2.0 * tol1

    while abs(xf - xm) > (tol2 - 0.5 * (b - a)):
        golden = True
        if abs(e) > tol1:
            # try a parabola through the three best points
            golden = False
            r = (xf - nfc) * (fx - ffulc)
            q = (xf - fulc) * (fx - fnfc)
            p = (xf - fulc) * q - (xf - nfc) * r
            q = 2.0 * (q - r)
            if q > 0.0:
                p = -p
            q = abs(q)
            r = e
            e = rat
            if (abs(p) < abs(0.5 * q * r)) and (p > q * (a - xf)) and (p < q * (b - xf)):
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
        x = xf + si * max(abs(rat), tol1)
        fu = f(x)
        num += 1

        if fu <= fx:
            if x >= xf:
                a = xf
            else:
                b = xf
            fulc, ffulc = nfc, fnfc
            nfc, fnfc = xf, fx
            xf, fx = x, fu
        else:
            if x < xf:
                a = x
            else:
                b = x
            if (fu <= fnfc) or (nfc == xf):
                fulc, ffulc = nfc, fnfc
                nfc, fnfc = x, fu
            elif (fu <= ffulc) or (fulc == xf) or (fulc == nfc):
                fulc, ffulc = x, fu

        xm = 0.5 * (a + b)
        tol1 = _SQRT_EPS * abs(xf) + xatol / 3.0
        tol2 = 2.0 * tol1
        if num >= maxfun:
            break
    return xf, fx, num


def _sign(v: float) -> float:
    if v > 0.0:
        return 1.0
    if v < 0.0:
        return -1.0
    return 0.0


def log_diff_rate(a: float, r: float, B: int, tol: float) -> float:
    """Exponential growth rate of the difference-set count at split fraction a.

    log2 + ar*log(B) + (1-ar)*log(B+1) - I(ar,1) - ar*I((1-a)/a, B-1)
        - (1-ar)*I(r/(1-ar), B)

    Accumulation order is fixed; the objective composition elsewhere relies
    on reproducing it bit for bit.
    """
    ar = a * r
    v = _LOG2
    v += ar * math.log(B)
    v += (1.0 - ar) * math.log(B + 1)
    v -= rate_value(ar, 1, tol)[0]
    v -= ar * rate_value((1.0 - a) / a, B - 1, tol)[0]
    v -= (1.0 - ar) * rate_value(r / (1.0 - ar), B, tol)[0]
    return v


def bound_numerator(a: float, r: float, B: int, tol: float) -> float:
    """Numerator of the exponent bound: log_diff_rate - log(2B+1) + I(2r, 2B)."""
    v = log_diff_rate(a, r, B, tol)
    v -= math.log(2 * B + 1)
    v += rate_value(2.0 * r, 2 * B, tol)[0]
    return v


def maximize_a(B: int, r: float, eps: float, tol: float):
    """Maximize the bound numerator in a over (0, min(1, 1/r)).

    Endpoints are inset by max(eps, 1e-12): a=0 and a=1/r are poles of the
    rate arguments.  Returns (a_star, numerator_value, evaluations).
    """
    inset = max(eps, 1e-12)
    lo = inset
    hi = min(1.0, 1.0 / r) - inset
    a_star, neg, num = brent_min(lambda a: -log_diff_rate(a, r, B, tol), lo, hi, eps)
    value = (-neg - math.log(2 * B + 1)) + rate_value(2.0 * r, 2 * B, tol)[0]
    return a_star, value, num


def maximize_r(B: int, eps: float, tol: float):
    """Maximize over r in [0.5, 2] of the inner a-maximum.

    The inner value is a non-smooth function of r at coarse eps, so the outer
    search is the same derivative-free bracketed scheme.  Returns
    (r_star, a_star, numerator_value, total_inner_evaluations).
    """
    count = [0]

    def outer(r):
        _, value, num = maximize_a(B, r, eps, tol)
        count[0] += num
        return -value

    r_star, _, _ = brent_min(outer, 0.5, 2.0, eps)
    a_star, value, num = maximize_a(B, r_star, eps, tol)
    count[0] += num
    return r_star, a_star, value, count[0]
