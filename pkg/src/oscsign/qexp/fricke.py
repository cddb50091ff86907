"""Direct evaluation of the Fricke slash action ``(sqrt(N) z)^{-k} f(-1/(Nz))``."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from ..errors import InsufficientPrecision
from .series import IntegerSeries

Coefficients = Union[IntegerSeries, Sequence[complex]]

TRUNCATION_LIMIT = 1e-12


def _as_complex(c: Coefficients) -> np.ndarray:
    if isinstance(c, IntegerSeries):
        return np.array([x / c.denominator for x in c.coeffs], dtype=np.complex128)
    return np.asarray(c, dtype=np.complex128)


def coefficient_constant(coeffs: np.ndarray, alpha: float) -> float:
    """Empirical ``C`` in ``|a(n)| <= C n^alpha`` (doubled for headroom)."""
    n = np.arange(1, len(coeffs))
    if len(n) == 0:
        return 0.0
    return 2.0 * float(np.max(np.abs(coeffs[1:]) / n**alpha))


def tail_bound(c: float, alpha: float, order: int, y: float) -> float:
    """Bound on ``sum_{n > order} C n^alpha e^{-2 pi n y}`` by a geometric majorant."""
    if c == 0.0:
        return 0.0
    ratio = ((order + 2) / (order + 1)) ** alpha * math.exp(-2 * math.pi * y)
    if ratio >= 1.0:
        return math.inf
    first = c * (order + 1) ** alpha * math.exp(-2 * math.pi * (order + 1) * y)
    return first / (1.0 - ratio)


def evaluate(coeffs: Coefficients, z: complex) -> complex:
    """Truncated ``sum a(n) e^{2 pi i n z}`` with exactly summed parts."""
    a = _as_complex(coeffs)
    terms = a * np.exp(2j * np.pi * np.arange(len(a)) * z)
    return complex(math.fsum(terms.real), math.fsum(terms.imag))


@dataclass(frozen=True)
class FrickePoint:
    z: complex
    lhs: complex
    rhs: complex
    residual: float
    truncation_bound: float


@dataclass(frozen=True)
class FrickeReport:
    max_residual: float
    max_truncation_bound: float
    points: tuple[FrickePoint, ...]


def fricke_transform_check(
    f: Coefficients,
    g: Coefficients,
    k: int,
    level: int,
    samples: Sequence[complex],
    alpha: float | None = None,
) -> FrickeReport:
    """Compare ``(sqrt(N) z)^{-k} f(-1/(Nz))`` with ``g(z)`` at each sample.

    Both sides are truncated Fourier sums.  The truncation error is bounded
    from ``|a(n)| <= C n^alpha`` (``alpha = k/2`` by default, ``C`` read off
    the available coefficients) and the call refuses points where that
    bound exceeds ``1e-12``.
    """
    fa, ga = _as_complex(f), _as_complex(g)
    alpha = k / 2 if alpha is None else alpha
    cf, cg = coefficient_constant(fa, alpha), coefficient_constant(ga, alpha)
    sqrt_n = math.sqrt(level)
    points = []
    for z in samples:
        z = complex(z)
        if z.imag <= 0:
            raise ValueError(f"sample {z} is not in the upper half-plane")
        w = -1.0 / (level * z)
        factor = (sqrt_n * z) ** (-k)
        bound = abs(factor) * tail_bound(cf, alpha, len(fa) - 1, w.imag) + tail_bound(
            cg, alpha, len(ga) - 1, z.imag
        )
        if not bound <= TRUNCATION_LIMIT:
            raise InsufficientPrecision(
                f"truncation bound {bound:.3g} at z={z} exceeds {TRUNCATION_LIMIT:g}; "
                "use more coefficients or points higher in H"
            )
        lhs = factor * evaluate(fa, w)
        rhs = evaluate(ga, z)
        points.append(FrickePoint(z, lhs, rhs, abs(lhs - rhs), bound))
    return FrickeReport(
        max(p.residual for p in points),
        max(p.truncation_bound for p in points),
        tuple(points),
    )


def default_samples(level: int, count: int = 10) -> list[complex]:
    """Points spread along the arc ``|z| = 1/sqrt(N)`` through the fixed point ``i/sqrt(N)``."""
    r = 1.0 / math.sqrt(level)
    angles = np.linspace(math.pi / 3, 2 * math.pi / 3, count)
    return [r * cmath.exp(1j * t) for t in angles]
