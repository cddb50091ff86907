"""Complex upper incomplete gamma function ``Gamma(s, x)`` for real ``x > 0``."""

from __future__ import annotations

import cmath
import math

from scipy.special import gamma as _gamma

from ..errors import NonConvergence

_EPS = 1e-16
_TINY = 1e-300
MAX_ITER = 20000


def complex_gamma(s: complex) -> complex:
    return complex(_gamma(complex(s)))


def _continued_fraction(s: complex, x: float) -> complex:
    # Legendre's fraction, modified Lentz evaluation
    b = x + 1.0 - s
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, MAX_ITER):
        an = -i * (i - s)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            return cmath.exp(-x + s * math.log(x)) * h
    raise NonConvergence(f"continued fraction for Gamma({s}, {x}) did not converge")


def _lower_series(s: complex, x: float) -> complex:
    term = 1.0 / s
    total = term
    for n in range(1, MAX_ITER):
        term *= x / (s + n)
        total += term
        if abs(term) < _EPS * abs(total):
            return cmath.exp(-x + s * math.log(x)) * total
    raise NonConvergence(f"series for gamma({s}, {x}) did not converge")


def _near_pole(s: complex) -> bool:
    return abs(s.imag) < 1e-6 and s.real < 0.5 and abs(s.real - round(s.real)) < 1e-6


def upper_incomplete_gamma(s: complex, x: float) -> complex:
    """``Gamma(s, x) = int_x^oo t^{s-1} e^{-t} dt``.

    Continued fraction for ``x >= |s| + 1`` (and next to the poles of
    ``Gamma(s)``, where ``Gamma(s) - gamma(s, x)`` is unusable); otherwise
    the complement of the lower-gamma power series.
    """
    if x <= 0:
        raise ValueError("x must be positive")
    s = complex(s)
    if x >= abs(s) + 1.0 or _near_pole(s):
        return _continued_fraction(s, x)
    return complex_gamma(s) - _lower_series(s, x)
