"""Density, tail probabilities and quantiles of sums of products of
correlated normal variables."""

from .errors import (BracketError, ConvergenceError, DomainError, ParameterError,
                     ProductNormalError, RegimeError, SeriesTruncationError, SingularPointError)
from .exact import (DEFAULT_EVAL, EvalConfig, cdf, pdf, pdf_cui, pdf_integral, pdf_series,
                    pdf_values, quantile_numeric, quantiles_numeric, tail, total_mass)
from .params import DerivedParams, DistParams, derive

__version__ = "0.1.0"

__all__ = [
    "BracketError", "ConvergenceError", "DEFAULT_EVAL", "DerivedParams", "DistParams",
    "DomainError", "EvalConfig", "ParameterError", "ProductNormalError", "RegimeError",
    "SeriesTruncationError", "SingularPointError", "cdf", "derive", "pdf", "pdf_cui",
    "pdf_integral", "pdf_series", "pdf_values", "quantile_numeric", "quantiles_numeric",
    "tail", "total_mass",
]
