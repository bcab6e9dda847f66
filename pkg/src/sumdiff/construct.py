"""Integer sets built from bounded simplex vectors by carry-free digit maps.

The base-(2B+1) map g sends (x_1,...,x_m) to sum_k x_k (2B+1)^k.  Digit
windows of width 2B+1 make vector addition and subtraction carry-free, so g
is injective on W+W and W-W and the sumset/difference-set cardinalities of
U = g(W(m,L,B)) equal lattice counts:

    |U+U| = |W(m, 2L, 2B)|
    |U-U| = sum_k C(m,k) |W(k, L-k, B-1)| |W(m-k, L, B)|

Both identities, and injectivity itself, are verified here by exhaustive
pair enumeration at desk scale.  The legacy radix map f with weights
w_0 = 1, w_k = 2L*w_{k-1} + 1 plays the same role for the unbounded sets
V(m, L).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .wcount import CountValue, LatticeVector, WParams, binomial, count_W, enumerate_W

#: strictly increasing tuple of integers
IntegerSet = tuple[int, ...]


@dataclass(frozen=True)
class BoundReport:
    """Difference/sum counts of U and the exponent bound they certify."""

    d: CountValue  # |U - U|
    s: CountValue  # |U + U|
    q: int  # 2*max(U) + 1
    theta: float  # 1 + (log d - log s)/log q


def encode_g(x: LatticeVector, B: int) -> int:
    """Base-(2B+1) positional value of x.

    Injective on any vector family whose coordinates stay inside a fixed
    window of width 2B+1; accepts [-2B, 2B], which covers sums of two
    W-vectors as well as their differences.
    """
    if not isinstance(B, int) or B < 1:
        raise ValueError(f"B must be a positive integer, got {B!r}")
    base = 2 * B + 1
    value = 0
    for coord in reversed(x):
        if not -2 * B <= coord <= 2 * B:
            raise ValueError(f"coordinate {coord} outside the injectivity window [-{2*B}, {2*B}]")
        value = value * base + coord
    return value


def encode_f(x: LatticeVector, L: int) -> int:
    """Radix value of x under the weights w_0 = 1, w_k = 2L*w_{k-1} + 1.

    Coordinate x[i] is paired with weight w_i.
    """
    if not isinstance(L, int) or L < 1:
        raise ValueError(f"L must be a positive integer, got {L!r}")
    value = 0
    weight = 1
    for coord in x:
        if not 0 <= coord <= L:
            raise ValueError(f"coordinate {coord} outside [0, {L}]")
        value += coord * weight
        weight = 2 * L * weight + 1
    return value


def build_U(p: WParams, cap: int | None = None) -> IntegerSet:
    """U = g(W(m, L, B)), sorted ascending.

    |U| must equal |W(m, L, B)|, certifying injectivity of g on W itself.
    """
    vectors = enumerate_W(p, cap)
    if p.m == 0 or p.B == 0:
        return (0,)
    U = tuple(sorted(encode_g(x, p.B) for x in vectors))
    if len(U) != len(vectors):
        raise AssertionError(f"digit map collided on W{(p.m, p.L, p.B)}")
    return U


def sumset(U: IntegerSet) -> IntegerSet:
    """{u + v : u, v in U} over all pairs, deduplicated and sorted."""
    return tuple(sorted({u + v for u in U for v in U}))


def diffset(U: IntegerSet) -> IntegerSet:
    """{u - v : u, v in U}; symmetric about 0."""
    return tuple(sorted({u - v for u in U for v in U}))


def theta_bound_exact(U: IntegerSet) -> BoundReport:
    """Exponent bound 1 + log(|U-U|/|U+U|) / log(2*max(U)+1) for a concrete U."""
    if len(U) == 0:
        raise ValueError("U must be nonempty")
    if 0 not in U:
        raise ValueError("U must contain zero")
    if max(U) < 1:
        raise ValueError("U = {0} has no meaningful scale (log q = 0)")
    d = len(diffset(U))
    s = len(sumset(U))
    q = 2 * max(U) + 1
    theta = 1.0 + (math.log(d) - math.log(s)) / math.log(q)
    return BoundReport(CountValue.of(d), CountValue.of(s), q, theta)


def verify_sumset_identity(p: WParams, cap: int | None = None) -> bool:
    """Check |U+U| = |W(m, 2L, 2B)| by exhaustive pair enumeration."""
    lhs = len(sumset(build_U(p, cap)))
    rhs = count_W(WParams(p.m, 2 * p.L, 2 * p.B)).exact
    return lhs == rhs


def verify_diffset_identity(p: WParams, cap: int | None = None) -> bool:
    """Check the difference-set convolution formula by exhaustive enumeration.

    |U-U| = sum_{k=0}^{min(m,L)} C(m,k) |W(k, L-k, B-1)| |W(m-k, L, B)|
    """
    if p.B < 1:
        raise ValueError("the convolution formula needs B >= 1")
    lhs = len(diffset(build_U(p, cap)))
    rhs = 0
    for k in range(min(p.m, p.L) + 1):
        rhs += (
            binomial(p.m, k).exact
            * count_W(WParams(k, p.L - k, p.B - 1)).exact
            * count_W(WParams(p.m - k, p.L, p.B)).exact
        )
    return lhs == rhs


def verify_injectivity(p: WParams, encoding: str = "g", cap: int | None = None) -> bool:
    """Check that the digit map separates pairwise sums and differences.

    encoding "g": base-(2B+1) map on W(m, L, B).
    encoding "f": legacy radix map on V(m, L) (i.e. W with B = L).
    A map is injective on W+W exactly when distinct vector sums get distinct
    integers, so cardinalities of the two images are compared; likewise W-W.
    """
    if encoding == "g":
        vectors = enumerate_W(p, cap)
        if p.B >= 1:
            images = [encode_g(x, p.B) for x in vectors]
        else:
            images = [0] * len(vectors)  # B = 0: W is the single zero vector
    elif encoding == "f":
        if p.L < 1:
            raise ValueError("the radix map needs L >= 1")
        vectors = enumerate_W(WParams(p.m, p.L, p.L), cap)
        images = [encode_f(x, p.L) for x in vectors]
    else:
        raise ValueError(f"encoding must be 'g' or 'f', got {encoding!r}")

    vec_sums = set()
    vec_diffs = set()
    int_sums = set()
    int_diffs = set()
    for i, x in enumerate(vectors):
        for j, y in enumerate(vectors):
            vec_sums.add(tuple(a + b for a, b in zip(x, y)))
            vec_diffs.add(tuple(a - b for a, b in zip(x, y)))
            int_sums.add(images[i] + images[j])
            int_diffs.add(images[i] - images[j])
    return len(vec_sums) == len(int_sums) and len(vec_diffs) == len(int_diffs)
