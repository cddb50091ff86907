"""Growth-rate evidence: log-log fits, Rankin-Selberg partial sums and the
partial-summation identity ``sum_{n>T} a_n^2 n^{-s} = s int_T^oo A(u) u^{-s-1} du``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..errors import DegenerateFit, InsufficientCoefficients
from ..qexp.normalize import NormalizedSequence


@dataclass(frozen=True)
class GrowthFit:
    xs: tuple[float, ...]
    values: tuple[float, ...]
    slope: float
    intercept: float
    rms: float
    dropped: int = 0


def growth_exponent(samples: Sequence[tuple[float, float]]) -> GrowthFit:
    """Least-squares slope of ``log|value|`` against ``log x``.

    Zero values are dropped and counted in ``dropped``.
    """
    usable = [(float(x), abs(float(v))) for x, v in samples if v != 0]
    dropped = len(samples) - len(usable)
    if len(usable) < 4:
        raise DegenerateFit(f"{len(usable)} usable points; need at least 4")
    xs = [x for x, _ in usable]
    if any(b <= a for a, b in zip(xs, xs[1:])):
        raise ValueError("sample abscissae must be strictly increasing")
    lx = np.log(xs)
    ly = np.log([v for _, v in usable])
    slope, intercept = np.polyfit(lx, ly, 1)
    rms = float(np.sqrt(np.mean((ly - (slope * lx + intercept)) ** 2)))
    return GrowthFit(
        tuple(xs), tuple(v for _, v in usable), float(slope), float(intercept), rms, dropped
    )


@dataclass(frozen=True)
class RankinPartialSums:
    thresholds: tuple[int, ...]
    sums: tuple[float, ...]
    offset: int


def _squares(seq: NormalizedSequence) -> np.ndarray:
    return np.square(seq.values)


def rankin_partial_sums(seq: NormalizedSequence, thresholds: Sequence[float], offset: int = 0) -> RankinPartialSums:
    """``A(x) = sum_{T < n <= x} a_n^2`` at each threshold, correctly rounded via ``math.fsum``."""
    cuts = [int(math.floor(x)) for x in thresholds]
    if any(b <= a for a, b in zip(cuts, cuts[1:])):
        raise ValueError("thresholds must be increasing")
    if cuts and cuts[0] <= offset:
        raise ValueError("offset T must lie below the first threshold")
    if cuts and cuts[-1] > len(seq):
        raise InsufficientCoefficients(f"threshold {cuts[-1]} beyond {len(seq)} available terms")
    sq = _squares(seq)
    partials: list[float] = []
    sums = []
    lo = offset
    for c in cuts:
        partials.append(math.fsum(sq[lo:c]))
        sums.append(math.fsum(partials))
        lo = c
    return RankinPartialSums(tuple(cuts), tuple(sums), offset)


@dataclass(frozen=True)
class PartialSummationCheck:
    s: complex
    offset: int
    upper: int
    series: complex
    integral: complex
    boundary: complex
    identity_error: float
    discrepancy: float
    tail_bound: float


def _fsum_c(z: np.ndarray) -> complex:
    return complex(math.fsum(z.real), math.fsum(z.imag))


def partial_summation_check(
    seq: NormalizedSequence, s: complex, offset: int, upper: int, growth: float = 1.0
) -> PartialSummationCheck:
    """Both sides of the partial-summation identity, truncated at ``U = upper``.

    ``A`` is a step function, so ``s int_T^U A(u) u^{-s-1} du`` is summed in
    closed form as ``sum_{T <= n < U} A(n) (n^{-s} - (n+1)^{-s})``.  The two
    truncated sides differ by the boundary term ``A(U) U^{-s}`` exactly
    (``identity_error`` measures that), and the full infinite tails differ
    from the truncations by at most ``tail_bound``, computed from
    ``A(u) <= c u^growth`` with ``c = 1.5 A(U)/U^growth``.
    """
    s = complex(s)
    if upper < offset:
        raise ValueError(f"upper cutoff {upper} is below the offset {offset}")
    if upper > len(seq):
        raise InsufficientCoefficients(f"U={upper} beyond {len(seq)} available terms")
    if s.real <= growth:
        raise ValueError(f"Re(s) must exceed the growth exponent {growth}")
    n = np.arange(offset + 1, upper + 1, dtype=np.float64)
    sq = _squares(seq)[offset:upper]
    n_pow = np.exp(-s * np.log(n))
    series = _fsum_c(sq * n_pow)

    # A(n) for n = T..U-1 (A(T) = 0), integrated against n^{-s} - (n+1)^{-s}
    a_steps = np.concatenate([[0.0], np.cumsum(sq)[:-1]]) if len(sq) else np.zeros(0)
    left = np.arange(max(offset, 1), upper, dtype=np.float64)
    if offset == 0 and len(a_steps):
        a_steps = a_steps[1:]  # [0, 1) carries A = 0 and 0^{-s} is undefined
    pieces = a_steps * (np.exp(-s * np.log(left)) - np.exp(-s * np.log(left + 1)))
    integral = _fsum_c(pieces)
    a_upper = math.fsum(sq)
    boundary = a_upper * complex(np.exp(-s * math.log(upper))) if upper > 0 else 0j
    identity_error = abs(series - integral - boundary)

    sigma = s.real
    c = 1.5 * a_upper / upper**growth if upper > 0 else 0.0
    tail = (abs(s) + sigma) * c * upper ** (growth - sigma) / (sigma - growth)
    return PartialSummationCheck(
        s, offset, upper, series, integral, boundary, identity_error, abs(series - integral), tail
    )
