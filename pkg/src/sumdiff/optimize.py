"""Nested maximization of the growth-exponent bound over (a, r, B).

For fixed B the bound on theta - 1 is

    [ log2 + ar log B + (1-ar) log(B+1) - I(ar, 1) - ar I((1-a)/a, B-1)
      - (1-ar) I(r/(1-ar), B) - log(2B+1) + I(2r, 2B) ] / log(2B+1)

maximized first in a over (0, min(1, 1/r)), then in r over [0.5, 2], both by
the same bracketed derivative-free search with x-tolerance eps.  The inner
rate solves run at a fixed tolerance (1e-12) regardless of eps, so the eps
columns of the result table measure only the 1-D search.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from ._backend import kernel
from .ratefn import RateQuery, rate_I

#: tilt-solve tolerance used inside the objective, independent of eps
DEFAULT_RATE_TOL = 1e-12

#: tolerance columns of the reference table
TABLE_EPS = (1e-4, 1e-6, 1e-8, 1e-10)

_LOG2 = math.log(2.0)


@dataclass(frozen=True)
class NumeratorTerms:
    """The seven a/r-dependent terms of the bound numerator."""

    log2: float
    ar_log_B: float
    one_minus_ar_log_B1: float
    I_ar_1: float
    ar_I_inner: float
    one_minus_ar_I_outer: float
    I_2r_2B: float


@dataclass(frozen=True)
class ThetaPoint:
    """One evaluation of the bound at (B, r, a), decomposed term by term."""

    B: int
    r: float
    a: float
    terms: NumeratorTerms
    theta_minus_1: float

    def recompose(self) -> float:
        """theta - 1 rebuilt from the stored terms (same accumulation order)."""
        t = self.terms
        v = t.log2
        v += t.ar_log_B
        v += t.one_minus_ar_log_B1
        v -= t.I_ar_1
        v -= t.ar_I_inner
        v -= t.one_minus_ar_I_outer
        v -= math.log(2 * self.B + 1)
        v += t.I_2r_2B
        return v / math.log(2 * self.B + 1)


@dataclass(frozen=True)
class OptimizationReport:
    """Per-B optimum at a given search tolerance: one table cell."""

    B: int
    epsilon: float
    r_star: float
    a_star: float
    theta_minus_1: float
    evaluations: int


def _check_B(B) -> None:
    if not isinstance(B, int) or isinstance(B, bool) or B < 1:
        raise ValueError(f"B must be a positive integer, got {B!r}")


def theta_objective(B: int, r: float, a: float, tol: float = DEFAULT_RATE_TOL) -> ThetaPoint:
    """Evaluate the bound at a single point (B, r, a).

    a must lie strictly inside (0, min(1, 1/r)): both endpoints are poles of
    the rate arguments.  For B = 1 the inner rate I(., 0) is identically
    zero (single-point support).
    """
    _check_B(B)
    if not (r > 0.0 and math.isfinite(r)):
        raise ValueError(f"r must be a positive finite real, got {r!r}")
    if not 0.0 < a < min(1.0, 1.0 / r):
        raise ValueError(f"a={a!r} outside the open interval (0, min(1, 1/r)) for r={r!r}")
    ar = a * r
    terms = NumeratorTerms(
        log2=_LOG2,
        ar_log_B=ar * math.log(B),
        one_minus_ar_log_B1=(1.0 - ar) * math.log(B + 1),
        I_ar_1=rate_I(RateQuery(ar, 1), tol).value,
        ar_I_inner=ar * rate_I(RateQuery((1.0 - a) / a, B - 1), tol).value,
        one_minus_ar_I_outer=(1.0 - ar) * rate_I(RateQuery(r / (1.0 - ar), B), tol).value,
        I_2r_2B=rate_I(RateQuery(2.0 * r, 2 * B), tol).value,
    )
    point = ThetaPoint(B, r, a, terms, 0.0)
    theta_minus_1 = point.recompose()
    if not math.isfinite(theta_minus_1):
        raise ArithmeticError(f"non-finite objective at B={B}, r={r}, a={a}")
    return ThetaPoint(B, r, a, terms, theta_minus_1)


def maximize_a(B: int, r: float, eps: float, tol: float = DEFAULT_RATE_TOL) -> tuple[float, float]:
    """Maximize the bound numerator in a at fixed (B, r).

    Returns (a_star, numerator value).  Dividing the value by log(2B+1)
    gives theta - 1 at (B, r, a_star).
    """
    _check_B(B)
    if not (r > 0.0 and math.isfinite(r)):
        raise ValueError(f"r must be a positive finite real, got {r!r}")
    if not (eps > 0.0):
        raise ValueError(f"eps must be positive, got {eps!r}")
    a_star, value, _ = kernel.maximize_a(B, r, eps, tol)
    return a_star, value


def maximize_r(B: int, eps: float, tol: float = DEFAULT_RATE_TOL) -> OptimizationReport:
    """Maximize over r in [0.5, 2] of the inner a-maximum at tolerance eps."""
    _check_B(B)
    if not (eps > 0.0):
        raise ValueError(f"eps must be positive, got {eps!r}")
    r_star, a_star, value, evaluations = kernel.maximize_r(B, eps, tol)
    margin = 10.0 * max(eps, 1e-8)
    if r_star - 0.5 < margin or 2.0 - r_star < margin:
        warnings.warn(f"r* = {r_star} sits at the edge of [0.5, 2] for B={B}", stacklevel=2)
    theta_minus_1 = value / math.log(2 * B + 1)
    return OptimizationReport(B, eps, r_star, a_star, theta_minus_1, evaluations)


def table1(
    eps_list: tuple[float, ...] = TABLE_EPS,
    b_range: tuple[int, int] = (3, 10),
    tol: float = DEFAULT_RATE_TOL,
) -> list[list[OptimizationReport]]:
    """The reference table: one row per B, one column per eps.

    Rows are B = b_range[0]..b_range[1] (within 1..10), columns follow
    eps_list; evaluation order is row-major and the output is deterministic.
    """
    if len(eps_list) == 0:
        raise ValueError("eps_list must be nonempty")
    lo, hi = b_range
    if not (1 <= lo <= hi <= 10):
        raise ValueError(f"b_range must satisfy 1 <= lo <= hi <= 10, got {b_range!r}")
    return [[maximize_r(B, eps, tol) for eps in eps_list] for B in range(lo, hi + 1)]
