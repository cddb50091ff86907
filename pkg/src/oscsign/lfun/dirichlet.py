"""Dirichlet-series context and truncated evaluation in the region of absolute convergence."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from ..errors import OutsideConvergence
from ..qexp.normalize import NormalizedSequence
from ..qexp.series import IntegerSeries


@dataclass(frozen=True, eq=False)
class LSeriesContext:
    """Coefficients ``a(0..M)`` of a Dirichlet series plus what is known about them.

    ``normalized`` tells whether ``coeffs`` are raw q-expansion coefficients
    or ``a(n)/n^{(k-1)/2}``.  ``alpha`` and ``constant`` state the assumed
    bound ``|a(n)| <= constant * n^alpha``; a missing constant is read off
    the data.  ``root_number`` is ``None`` when unknown.
    """

    coeffs: np.ndarray
    weight: int = 0
    level: int = 1
    normalized: bool = False
    alpha: float = 0.0
    constant: Optional[float] = None
    root_number: Optional[complex] = None
    name: str = ""

    def __post_init__(self):
        arr = np.asarray(self.coeffs)
        arr = np.array(arr, dtype=np.complex128 if np.iscomplexobj(arr) else np.float64)
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)
        if len(arr) < 2:
            raise ValueError("need at least a(0) and a(1)")
        if self.level < 1:
            raise ValueError("level must be >= 1")

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def bound_constant(self, upto: Optional[int] = None) -> float:
        if self.constant is not None:
            return self.constant
        m = self.truncation if upto is None else min(upto, self.truncation)
        n = np.arange(1, m + 1)
        return 2.0 * float(np.max(np.abs(self.coeffs[1 : m + 1]) / n**self.alpha))

    @classmethod
    def from_series(
        cls,
        series: Union[IntegerSeries, Sequence[complex]],
        weight: int,
        level: int = 1,
        scale: complex = 1,
        alpha: Optional[float] = None,
        **kw,
    ) -> "LSeriesContext":
        """Raw coefficients; ``alpha`` defaults to the trivial exponent ``k/2``."""
        if isinstance(series, IntegerSeries):
            den = series.denominator
            vals = [c / den for c in series.coeffs]
        else:
            vals = list(series)
        arr = np.asarray(vals)
        if scale != 1:
            arr = arr * scale
        return cls(
            arr,
            weight=weight,
            level=level,
            normalized=False,
            alpha=weight / 2 if alpha is None else alpha,
            **kw,
        )

    @classmethod
    def from_normalized(cls, seq: NormalizedSequence, weight: int = 0, level: int = 1, **kw):
        alpha = kw.pop("alpha", seq.alpha if seq.alpha is not None else 0.0)
        arr = np.concatenate([[0.0], seq.values])
        return cls(arr, weight=weight, level=level, normalized=True, alpha=alpha, name=seq.name, **kw)


@dataclass(frozen=True)
class DirichletValue:
    value: complex
    tail_bound: float
    truncation: int


def _sum_complex(terms: np.ndarray) -> complex:
    return complex(math.fsum(terms.real), math.fsum(np.imag(terms)))


def dirichlet_value(ctx: LSeriesContext, s: complex, truncation: Optional[int] = None) -> DirichletValue:
    """``sum_{n <= M} a(n) n^{-s}`` with the tail bound ``C M^{alpha+1-Re s}/(Re s - alpha - 1)``."""
    s = complex(s)
    margin = s.real - ctx.alpha - 1.0
    if margin <= 0:
        raise OutsideConvergence(
            f"Re(s) = {s.real} is not beyond alpha + 1 = {ctx.alpha + 1}; "
            "use the completed L-function for continuation"
        )
    m = ctx.truncation if truncation is None else min(truncation, ctx.truncation)
    n = np.arange(1, m + 1, dtype=np.float64)
    terms = ctx.coeffs[1 : m + 1] * np.exp(-s * np.log(n))
    c = ctx.bound_constant(m)
    tail = c * m ** (-margin) / margin
    return DirichletValue(_sum_complex(terms), tail, m)
