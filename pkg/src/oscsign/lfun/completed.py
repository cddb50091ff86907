"""Completed L-functions ``L*(s) = (sqrt(N)/2pi)^s Gamma(s) L(s)`` and the
functional-equation residual.

For a pair ``g = f|_k W_N`` and any split point ``t > 0``::

    L*(s, f) = N^{s/2} sum a(n) (2 pi n)^{-s} Gamma(s, 2 pi n t)
             + i^k N^{(k-s)/2} sum b(n) (2 pi n)^{s-k} Gamma(k-s, 2 pi n / (N t))

The symmetric split ``t = 1/sqrt(N)`` is the usual rapidly convergent
formula; any other ``t`` gives the same value only if ``g`` really is the
Fricke image of ``f``.  The residual test exploits exactly that.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..errors import InsufficientPrecision, NonCuspidal
from .dirichlet import LSeriesContext
from .gamma import upper_incomplete_gamma

TAIL_LIMIT = 1e-12
_TARGET = 1e-15


def _cutoff(ctx: LSeriesContext, sigma: float, x_unit: float, prefactor: float) -> int:
    """Smallest ``M`` whose dropped tail is below ``_TARGET``; raises if even all data is not enough.

    Uses ``|Gamma(s, x)| <= Gamma(sigma, x) <= x^{sigma-1} e^{-x} / (1 - (sigma-1)/x)``.
    """
    c = ctx.bound_constant()
    alpha = ctx.alpha

    def term(n: float) -> float:
        x = x_unit * n
        if sigma <= 1:
            corr = 1.0
        elif x > sigma - 1:
            corr = 1.0 / (1.0 - (sigma - 1) / x)
        else:
            return math.inf
        log_t = (
            math.log(c) + alpha * math.log(n) - sigma * math.log(2 * math.pi * n)
            + (sigma - 1) * math.log(x) - x
        )
        return prefactor * math.exp(log_t) * corr

    def tail(m: int) -> float:
        first = term(m + 1)
        ratio = term(m + 2) / first if first > 0 else 0.0
        if not ratio < 1.0:
            return math.inf
        # the term ratio keeps decreasing beyond the turning point
        return first / (1.0 - ratio)

    if c == 0.0:
        return 1
    m = 1
    while m < ctx.truncation and not tail(m) < _TARGET:
        m = min(ctx.truncation, m * 2)
    if not tail(m) < TAIL_LIMIT:
        raise InsufficientPrecision(
            f"{ctx.truncation} coefficients leave a tail bound {tail(m):.3g} > {TAIL_LIMIT:g}"
        )
    lo, hi = 1, m
    while lo < hi:
        mid = (lo + hi) // 2
        if tail(mid) < _TARGET:
            hi = mid
        else:
            lo = mid + 1
    return hi


def incomplete_mellin_sum(ctx: LSeriesContext, s: complex, level: int, t: float) -> complex:
    """``N^{s/2} sum_n c(n) (2 pi n)^{-s} Gamma(s, 2 pi n t)``."""
    s = complex(s)
    x_unit = 2 * math.pi * t
    prefactor = level ** (s.real / 2)
    m = _cutoff(ctx, s.real, x_unit, prefactor)
    total = 0j
    comp = 0j
    for n in range(1, m + 1):
        a = ctx.coeffs[n]
        if a == 0:
            continue
        y = a * cmath.exp(-s * math.log(2 * math.pi * n)) * upper_incomplete_gamma(s, x_unit * n) - comp
        tot = total + y
        comp = (tot - total) - y
        total = tot
    return cmath.exp(s * math.log(level) / 2) * total


def _check_cuspidal(*ctxs: LSeriesContext) -> None:
    for c in ctxs:
        if c.coeffs[0] != 0:
            raise NonCuspidal(f"{c.name or 'form'} has a(0) = {c.coeffs[0]}")


def completed_L(
    f: LSeriesContext,
    g: LSeriesContext,
    k: int,
    level: int,
    s: complex,
    split: Optional[float] = None,
) -> complex:
    """``L*(s, f)`` for every complex ``s``, given ``g = f|_k W_N``."""
    _check_cuspidal(f, g)
    t = 1.0 / math.sqrt(level) if split is None else split
    s = complex(s)
    return incomplete_mellin_sum(f, s, level, t) + (1j) ** (k % 4) * incomplete_mellin_sum(
        g, k - s, level, 1.0 / (level * t)
    )


@dataclass(frozen=True)
class ResidualPoint:
    s: complex
    lhs: complex
    rhs: complex
    residual: float


@dataclass(frozen=True)
class FunctionalEquationReport:
    max_residual: float
    points: tuple[ResidualPoint, ...]
    root_number: Optional[complex] = None
    split: float = 0.0


def functional_equation_residual(
    f: LSeriesContext,
    g: Optional[LSeriesContext],
    k: int,
    level: int,
    grid: Sequence[complex],
    split_factor: float = 1.1,
) -> FunctionalEquationReport:
    """``max |L*(s, f) - i^k L*(k - s, g)|`` over ``grid``.

    Both sides are evaluated at the asymmetric split ``t = split_factor/sqrt(N)``
    so the residual is not zero by construction.  With ``g=None`` the
    hypothesis is ``g = eps * f``; the residual is affine in ``eps``, so
    ``eps`` is fitted by complex least squares and the residual reported
    at the fitted value.
    """
    if split_factor <= 0 or split_factor == 1.0:
        raise ValueError("split_factor must be positive and != 1")
    t = split_factor / math.sqrt(level)
    tp = 1.0 / (level * t)
    ik = (1j) ** (k % 4)
    sign = -1 if k % 2 else 1
    grid = [complex(s) for s in grid]

    if g is not None:
        _check_cuspidal(f, g)
        points = []
        for s in grid:
            lhs = incomplete_mellin_sum(f, s, level, t) + ik * incomplete_mellin_sum(g, k - s, level, tp)
            # g|W = (f|W)|W = (-1)^k f
            rhs_inner = incomplete_mellin_sum(g, k - s, level, t) + ik * sign * incomplete_mellin_sum(
                f, s, level, tp
            )
            rhs = ik * rhs_inner
            points.append(ResidualPoint(s, lhs, rhs, abs(lhs - rhs)))
        return FunctionalEquationReport(max(p.residual for p in points), tuple(points), None, t)

    _check_cuspidal(f)
    us, vs, pieces = [], [], []
    for s in grid:
        p_s_t = incomplete_mellin_sum(f, s, level, t)
        p_s_tp = incomplete_mellin_sum(f, s, level, tp)
        p_ks_t = incomplete_mellin_sum(f, k - s, level, t)
        p_ks_tp = incomplete_mellin_sum(f, k - s, level, tp)
        # R(eps) = U + eps V, see module docstring with b = eps a
        us.append(p_s_t - ik * ik * sign * p_s_tp)
        vs.append(ik * (p_ks_tp - p_ks_t))
        pieces.append((p_s_t, p_s_tp, p_ks_t, p_ks_tp))
    u = np.array(us)
    v = np.array(vs)
    eps = complex(-np.vdot(v, u) / np.vdot(v, v).real)
    points = []
    for s, (p_s_t, p_s_tp, p_ks_t, p_ks_tp) in zip(grid, pieces):
        lhs = p_s_t + ik * eps * p_ks_tp
        rhs = ik * (eps * p_ks_t + ik * sign * p_s_tp)
        points.append(ResidualPoint(s, lhs, rhs, abs(lhs - rhs)))
    return FunctionalEquationReport(max(p.residual for p in points), tuple(points), eps, t)


def default_grid(k: int, level: int = 1) -> list[complex]:
    """``sigma + i t`` with ``t = 0..5`` and ``sigma`` stepping through ``[0, k]``."""
    if k >= 4:
        sigmas = list(range(2, k - 1))
    else:
        sigmas = [j * k / 4 for j in range(5)]
    return [complex(sg, tt) for sg in sigmas for tt in range(6)]
