"""Passage from exact coefficients to the real sequence ``a(n)/n^{(k-1)/2}``."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from ..errors import NonCuspidal
from .series import IntegerSeries


@dataclass(frozen=True, eq=False)
class NormalizedSequence:
    """Real sequence ``values[n-1] = a_n`` for ``n = 1..len``.

    ``alpha``, ``r`` and ``k`` record the growth hypotheses attached to the
    sequence (coefficient exponent, continuation abscissa, location of the
    Rankin-Selberg singularity); ``None`` means unknown.
    """

    values: np.ndarray
    alpha: Optional[float] = None
    r: Optional[float] = None
    k: Optional[float] = None
    name: str = ""
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        arr = np.asarray(self.values)
        if np.iscomplexobj(arr):
            raise TypeError("normalized sequences are real")
        arr = np.array(arr, dtype=np.float64)
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> float:
        """1-based access: ``seq[n] == a_n``."""
        if n < 1:
            raise IndexError("sequences are indexed from n = 1")
        return float(self.values[n - 1])

    def with_values(self, values, **changes) -> "NormalizedSequence":
        return replace(self, values=values, **changes)

    @classmethod
    def from_values(cls, values, alpha: Optional[float] = 0.0, name: str = "", **kw):
        return cls(np.asarray(values, dtype=np.float64), alpha=alpha, name=name, **kw)


def normalize(raw: IntegerSeries, k: int, name: str = "", alpha: float = 0.0) -> NormalizedSequence:
    """``a_n = a(n) / n^{(k-1)/2}`` for ``n >= 1`` in double precision.

    Each entry costs at most three correctly rounded operations
    (an integer quotient, a square root and a division), so the relative
    error stays below 4 machine epsilons.  ``alpha`` defaults to 0, the
    Deligne exponent of a normalised eigenform (up to ``n^eps``).
    """
    if raw.coeffs[0] != 0:
        raise NonCuspidal(f"a(0) = {raw.coeffs[0]} != 0; not a cusp form")
    den = raw.denominator
    half, odd = divmod(k - 1, 2)
    out = np.empty(raw.truncation_order, dtype=np.float64)
    for n in range(1, raw.truncation_order + 1):
        # int / int is correctly rounded in CPython, even for huge operands
        v = raw.coeffs[n] / (den * n**half)
        out[n - 1] = v / math.sqrt(n) if odd else v
    return NormalizedSequence(out, alpha=alpha, r=0.0, k=1.0, name=name, meta={"weight": k})
