"""Exact q-expansions of level-N cusp forms and their normalisation."""

from .eta import EtaQuotient, eta_power, eta_quotient_expansion, fricke_image
from .forms import (
    CoefficientFile,
    FormDescriptor,
    Level1Eigenform,
    expand,
    fricke_partner,
    parse_selector,
    read_coefficients,
    write_coefficients,
)
from .fricke import FrickeReport, default_samples, evaluate, fricke_transform_check
from .hecke import (
    hecke_eigenform,
    hecke_image,
    hecke_matrix,
    hecke_power_coefficient,
    hecke_prime_image,
)
from .level1 import (
    bernoulli,
    cusp_form_dimension,
    delta,
    divisor_power_sums,
    eisenstein_series,
    victor_miller_basis,
)
from .normalize import NormalizedSequence, normalize
from .series import IntegerSeries

__all__ = [
    "CoefficientFile",
    "FormDescriptor",
    "Level1Eigenform",
    "expand",
    "fricke_partner",
    "parse_selector",
    "read_coefficients",
    "write_coefficients",
    "EtaQuotient",
    "FrickeReport",
    "IntegerSeries",
    "NormalizedSequence",
    "bernoulli",
    "cusp_form_dimension",
    "default_samples",
    "delta",
    "divisor_power_sums",
    "eisenstein_series",
    "eta_power",
    "eta_quotient_expansion",
    "evaluate",
    "fricke_image",
    "fricke_transform_check",
    "hecke_eigenform",
    "hecke_image",
    "hecke_matrix",
    "hecke_power_coefficient",
    "hecke_prime_image",
    "normalize",
    "victor_miller_basis",
]
