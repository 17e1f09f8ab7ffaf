"""Large-|x| expansions of the density, tail and quantile of S_n."""

from .coefficients import (VARIANTS, CoefficientSet, ExplicitCoefficients, coeff_c, coeff_d,
                           coeff_delta, coeff_gamma, explicit_low_order)
from .expansions import (DEFAULT_ORDER, MAX_ORDER, QuantileApproximation, TailSide,
                         inversion_problem, pdf_asym, quantile_asym, tail_asym)
from .lemmas import (AsymptoticInversionProblem, GOrder, asym_invert,
                     lemma1_coeffs, lemma1_kernel)
from .puiseux import PuiseuxTable, puiseux_g

__all__ = [
    "AsymptoticInversionProblem", "CoefficientSet", "DEFAULT_ORDER", "ExplicitCoefficients",
    "GOrder", "MAX_ORDER", "PuiseuxTable", "QuantileApproximation", "TailSide", "VARIANTS",
    "asym_invert", "coeff_c", "coeff_d", "coeff_delta", "coeff_gamma", "explicit_low_order",
    "inversion_problem", "lemma1_coeffs", "lemma1_kernel", "pdf_asym", "puiseux_g",
    "quantile_asym", "tail_asym",
]
