"""Exponentially smoothed sums and their inverse-Mellin representation.

``sum a_n e^{-n/x} = (1/2 pi i) int_{(sigma)} M(s) Gamma(s) x^s ds`` for
``sigma`` beyond the abscissa of absolute convergence of ``M(s) = sum a_n n^{-s}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate
from scipy.special import gamma as _gamma

from ..errors import InsufficientCoefficients, QuadratureFailure, TruncationTooSmall
from ..qexp.normalize import NormalizedSequence

MELLIN_TOLERANCE = 1e-9


def smoothing_cutoff(x: float, alpha: float) -> int:
    return math.ceil(x * (alpha + 2) * math.log(10) * 17)


def _alpha(seq: NormalizedSequence) -> float:
    return max(0.0, seq.alpha) if seq.alpha is not None else 0.0


@dataclass(frozen=True)
class SmoothedSum:
    x: float
    value: float
    cutoff: int
    truncation_bound: float


def smoothed_sum(seq: NormalizedSequence, x: float) -> SmoothedSum:
    """``sum_{n <= N} a_n e^{-n/x}`` with ``N = ceil(17 (alpha+2) x ln 10)``.

    The reported truncation bound majorises the dropped terms by
    ``C n^alpha e^{-n/x}`` with ``C`` read off the data.
    """
    if x < 1:
        raise ValueError("x must be >= 1")
    alpha = _alpha(seq)
    cut = smoothing_cutoff(x, alpha)
    if cut > len(seq):
        raise InsufficientCoefficients(f"x={x} needs {cut} terms, sequence has {len(seq)}")
    n = np.arange(1, cut + 1, dtype=np.float64)
    a = seq.values[:cut]
    terms = a * np.exp(-n / x)
    c = float(np.max(np.abs(a) / n**alpha)) if cut else 0.0
    ratio = ((cut + 2) / (cut + 1)) ** alpha * math.exp(-1 / x)
    bound = c * (cut + 1) ** alpha * math.exp(-(cut + 1) / x) / (1 - ratio)
    return SmoothedSum(x, math.fsum(terms), cut, bound)


@dataclass(frozen=True)
class MellinCheck:
    x: float
    sigma: float
    t_cut: float
    contour: float
    direct: float
    discrepancy: float
    quadrature_error: float
    truncation_bound: float


def _gamma_tail(sigma: float, t_cut: float) -> float:
    """``int_{t_cut}^oo |Gamma(sigma + it)| dt``; beyond ``t_cut + 60`` the rest is below e^{-90} of it."""
    val, _ = integrate.quad(lambda t: abs(_gamma(complex(sigma, t))), t_cut, t_cut + 60, limit=200)
    return val


def mellin_cross_check(seq: NormalizedSequence, x: float, sigma: float = 2.0, t_cut: float = 60.0) -> MellinCheck:
    """Line integral ``(1/2pi) int_{-T}^{T} M(sigma+it) Gamma(sigma+it) x^{sigma+it} dt`` vs :func:`smoothed_sum`.

    ``M`` is truncated at the smoothing cutoff ``N``; the contour integral
    of the truncated series is exactly ``sum_{n <= N} a_n e^{-n/x}``, so the
    truncation costs nothing beyond the (negligible) smoothed tail.
    """
    alpha = _alpha(seq)
    if sigma <= alpha + 1:
        raise ValueError(f"sigma={sigma} must exceed alpha + 1 = {alpha + 1}")
    direct = smoothed_sum(seq, x)
    cut = direct.cutoff
    a = seq.values[:cut]
    logn = np.log(np.arange(1, cut + 1, dtype=np.float64))
    weights = a * np.exp(-sigma * logn)
    log_x = math.log(x)

    bound = float(np.sum(np.abs(weights))) * x**sigma * _gamma_tail(sigma, t_cut) / math.pi
    if bound > MELLIN_TOLERANCE:
        raise TruncationTooSmall(f"|integrand| beyond T={t_cut} may contribute {bound:.3g}")

    def integrand(t: float) -> float:
        m = np.dot(weights, np.exp(-1j * t * logn))
        val = m * complex(_gamma(complex(sigma, t))) * np.exp(complex(sigma, t) * log_x)
        return val.real

    # real coefficients: the integrand at -t is the conjugate of that at t
    val, err = integrate.quad(integrand, 0.0, t_cut, limit=2000, epsabs=1e-13, epsrel=1e-13)
    if err > MELLIN_TOLERANCE:
        raise QuadratureFailure(f"quadrature error estimate {err:.3g} exceeds {MELLIN_TOLERANCE:g}")
    contour = val / math.pi
    return MellinCheck(
        x, sigma, t_cut, contour, direct.value, abs(contour - direct.value), err / math.pi, bound
    )
