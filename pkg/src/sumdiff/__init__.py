"""Sumset vs difference-set growth: counting, construction, and the exponent bound.

Subpackages by role:
    wcount    exact counting/enumeration of the bounded simplex sets W(m, L, B)
    construct digit-map integer sets, sumsets/difference sets, identity checks
    ratefn    large-deviation rate function I(c, B) via its convex dual
    optimize  nested maximization of the exponent bound over (a, r, B)
    cli       command-line entry point

The numeric hot path runs on a compiled extension when built, with a pure
Python fallback selected at import (see sumdiff._backend.BACKEND_NAME).
"""
from ._backend import BACKEND_NAME
from .construct import (
    BoundReport,
    IntegerSet,
    build_U,
    diffset,
    encode_f,
    encode_g,
    sumset,
    theta_bound_exact,
    verify_diffset_identity,
    verify_injectivity,
    verify_sumset_identity,
)
from .optimize import (
    NumeratorTerms,
    OptimizationReport,
    ThetaPoint,
    maximize_a,
    maximize_r,
    table1,
    theta_objective,
)
from .ratefn import RateQuery, RateResult, log_mgf, log_W_rate_limit, rate_I, tilted_mean
from .wcount import (
    CountValue,
    EnumerationCapError,
    LatticeVector,
    WParams,
    binomial,
    count_W,
    enumerate_W,
    log_count_rate,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND_NAME",
    "BoundReport",
    "CountValue",
    "EnumerationCapError",
    "IntegerSet",
    "LatticeVector",
    "NumeratorTerms",
    "OptimizationReport",
    "RateQuery",
    "RateResult",
    "ThetaPoint",
    "WParams",
    "binomial",
    "build_U",
    "count_W",
    "diffset",
    "encode_f",
    "encode_g",
    "enumerate_W",
    "log_W_rate_limit",
    "log_count_rate",
    "log_mgf",
    "maximize_a",
    "maximize_r",
    "rate_I",
    "sumset",
    "table1",
    "theta_bound_exact",
    "theta_objective",
    "tilted_mean",
    "verify_diffset_identity",
    "verify_injectivity",
    "verify_sumset_identity",
    "__version__",
]
