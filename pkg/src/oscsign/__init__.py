"""Exact cusp-form coefficients and numerical checks of sign-change criteria
for Dirichlet series."""

__version__ = "0.1.0"
