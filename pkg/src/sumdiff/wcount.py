"""Exact counting and enumeration of bounded simplex sets.

W(m, L, B) is the set of vectors x in N^m with every coordinate <= B and
coordinate sum <= L; V(m, L) = W(m, L, L) is the unbounded special case with
|V(m, L)| = C(m+L, m).  Counts are exact arbitrary-precision integers; for
large m a log-domain dynamic program provides the growth rate directly.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterator

import numpy as np

#: coordinate vector of a lattice point
LatticeVector = tuple[int, ...]

ENUM_CAP_ENV = "SUMDIFF_ENUM_CAP"
DEFAULT_ENUM_CAP = 10_000_000

#: switch from exact big-integer DP to the log-domain DP once
#: m * min(L, m*B) exceeds this many cells
EXACT_DP_CELL_LIMIT = 1_000_000


class EnumerationCapError(ValueError):
    """Raised when an enumeration would exceed the configured cap."""

    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(f"enumeration of {count} vectors exceeds the cap of {cap}")


@dataclass(frozen=True)
class WParams:
    """Parameter triple (m, L, B): dimension, sum bound, coordinate bound."""

    m: int
    L: int
    B: int

    def __post_init__(self):
        for name in ("m", "L", "B"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {v!r}")

    @property
    def effective_L(self) -> int:
        """Sum bound after saturation: coordinates cannot exceed m*B in total."""
        return min(self.L, self.m * self.B)


@dataclass(frozen=True)
class CountValue:
    """An exact nonnegative integer count with its natural logarithm."""

    exact: int
    log_value: float

    @classmethod
    def of(cls, n: int) -> "CountValue":
        return cls(n, math.log(n) if n > 0 else -math.inf)


def _count(m: int, L: int, B: int) -> int:
    """|W(m, L, B)| by the coordinate-peeling recurrence.

    count(i, l) = sum_{j=0}^{min(B,l)} count(i-1, l-j) with count(0, .) = 1;
    one rolling row over l, window sums via prefix sums, O(m*L) exact
    big-integer operations.
    """
    L = min(L, m * B)
    row = [1] * (L + 1)
    for _ in range(m):
        prefix = list(accumulate(row))
        row = [prefix[l] - (prefix[l - B - 1] if l > B else 0) for l in range(L + 1)]
    return row[L]


def _log_count(m: int, L: int, B: int) -> float:
    """log |W(m, L, B)| by the same recurrence in the log domain.

    Each new row is a width-(B+1) window log-sum-exp over the previous row,
    stabilized by the columnwise maximum.
    """
    L = min(L, m * B)
    width = min(B, L)
    row = np.zeros(L + 1)
    for _ in range(m):
        stack = np.full((width + 1, L + 1), -np.inf)
        for j in range(width + 1):
            stack[j, j:] = row[: L + 1 - j]
        mx = stack.max(axis=0)
        row = mx + np.log(np.exp(stack - mx).sum(axis=0))
    return float(row[L])


def count_W(p: WParams) -> CountValue:
    """Exact |W(m, L, B)|.

    Saturates the sum bound at m*B first (counts are invariant under that
    replacement), then runs the prefix-sum DP.
    """
    return CountValue.of(_count(p.m, p.L, p.B))


def binomial(m: int, k: int) -> CountValue:
    """Exact binomial coefficient C(m, k); zero for k > m."""
    if k > m:
        return CountValue.of(0)
    return CountValue.of(math.comb(m, k))


def _vectors(m: int, L: int, B: int) -> Iterator[LatticeVector]:
    # lexicographic odometer: bump the rightmost coordinate that stays
    # within both bounds, zero everything after it
    if m == 0:
        yield ()
        return
    x = [0] * m
    prefix = [0] * (m + 1)  # prefix[i] = x[0] + ... + x[i-1]
    while True:
        yield tuple(x)
        for i in range(m - 1, -1, -1):
            if x[i] < B and prefix[i] + x[i] + 1 <= L:
                x[i] += 1
                prefix[i + 1] = prefix[i] + x[i]
                for j in range(i + 1, m):
                    x[j] = 0
                    prefix[j + 1] = prefix[j]
                break
        else:
            return


def enumerate_W(p: WParams, cap: int | None = None) -> list[LatticeVector]:
    """All members of W(m, L, B) in lexicographic order.

    The cap (default 10^7, overridable via the SUMDIFF_ENUM_CAP environment
    variable) is checked against the exact count before any vector is built.
    """
    if cap is None:
        cap = int(os.environ.get(ENUM_CAP_ENV, DEFAULT_ENUM_CAP))
    n = _count(p.m, p.L, p.B)
    if n > cap:
        raise EnumerationCapError(n, cap)
    return list(_vectors(p.m, p.L, p.B))


def log_count_rate(m: int, r: float, B: int, method: str = "auto") -> float:
    """log |W(m, floor(r*m), B)| / m, the finite-m growth rate.

    Uses the exact big-integer DP while m * min(floor(r*m), m*B) stays within
    EXACT_DP_CELL_LIMIT, the log-domain DP beyond that.  ``method`` may force
    "exact" or "log".
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"m must be a positive integer, got {m!r}")
    if not isinstance(B, int) or B < 1:
        raise ValueError(f"B must be a positive integer, got {B!r}")
    if not (r > 0.0 and math.isfinite(r)):
        raise ValueError(f"r must be a positive finite real, got {r!r}")
    L = math.floor(r * m)
    if method == "auto":
        method = "exact" if m * min(L, m * B) <= EXACT_DP_CELL_LIMIT else "log"
    if method == "exact":
        return math.log(_count(m, L, B)) / m
    if method == "log":
        return _log_count(m, L, B) / m
    raise ValueError(f"method must be 'auto', 'exact' or 'log', got {method!r}")
