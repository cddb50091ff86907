"""Numerical analytics for Dirichlet series attached to cusp forms."""

from .completed import (
    FunctionalEquationReport,
    completed_L,
    default_grid,
    functional_equation_residual,
    incomplete_mellin_sum,
)
from .dirichlet import DirichletValue, LSeriesContext, dirichlet_value
from .gamma import complex_gamma, upper_incomplete_gamma
from .growth import (
    GrowthFit,
    PartialSummationCheck,
    RankinPartialSums,
    growth_exponent,
    partial_summation_check,
    rankin_partial_sums,
)
from .smoothing import MellinCheck, SmoothedSum, mellin_cross_check, smoothed_sum

__all__ = [
    "DirichletValue",
    "FunctionalEquationReport",
    "GrowthFit",
    "LSeriesContext",
    "MellinCheck",
    "PartialSummationCheck",
    "RankinPartialSums",
    "SmoothedSum",
    "completed_L",
    "complex_gamma",
    "default_grid",
    "dirichlet_value",
    "functional_equation_residual",
    "growth_exponent",
    "incomplete_mellin_sum",
    "mellin_cross_check",
    "partial_summation_check",
    "rankin_partial_sums",
    "smoothed_sum",
    "upper_incomplete_gamma",
]
