"""Exact q-poly-Bernoulli and q-poly-Cauchy polynomials with a parameter rho."""

from ._qpbc import (
    DenominatorVanishes,
    NonconvergedTruncation,
    ParamPoly,
    ParseError,
    classical_number,
    family_value,
    generating_function,
    identity_sweep,
    jackson_integral,
    oracle_family,
    poly_bernoulli,
    poly_cauchy1,
    poly_cauchy2,
    run_cli,
    stirling1,
    stirling2,
    weighted_stirling,
)

__all__ = [
    "DenominatorVanishes",
    "NonconvergedTruncation",
    "ParamPoly",
    "ParseError",
    "classical_number",
    "family_value",
    "generating_function",
    "identity_sweep",
    "jackson_integral",
    "oracle_family",
    "poly_bernoulli",
    "poly_cauchy1",
    "poly_cauchy2",
    "run_cli",
    "stirling1",
    "stirling2",
    "weighted_stirling",
]
