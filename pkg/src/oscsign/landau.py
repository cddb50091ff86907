"""Finite, exact versions of the moment argument for eventually nonnegative
coefficients: if ``sum b_n n^nu`` vanishes for every ``nu`` then all ``b_n``
vanish, and a positive term beyond the last negative one dominates every
scaled moment.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import NoNegativeEntry


@dataclass(frozen=True)
class FiniteSequence:
    """``b_1..b_m`` as exact rationals."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        if not vals:
            raise ValueError("need m >= 1")
        object.__setattr__(self, "values", vals)

    @property
    def m(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n - 1]


def _seq(b) -> FiniteSequence:
    return b if isinstance(b, FiniteSequence) else FiniteSequence(tuple(b))


def moment_vector(seq, nu_list: Iterable[int]) -> list[Fraction]:
    """``sum_{n <= m} b_n n^nu`` for each ``nu``."""
    seq = _seq(seq)
    nus = list(nu_list)
    if not nus:
        raise ValueError("nu_list is empty")
    return [sum((b * n**nu for n, b in enumerate(seq.values, 1)), Fraction(0)) for nu in nus]


def vandermonde_zero_test(moments: Sequence, m: Optional[int] = None) -> FiniteSequence:
    """Solve ``sum_n b_n n^nu = moments[nu-1]`` for ``nu = 1..m`` exactly.

    The matrix ``(n^nu)`` is ``diag(n)`` times a Vandermonde matrix on the
    distinct nodes ``1..m``, hence invertible.
    """
    m = len(moments) if m is None else m
    if len(moments) != m:
        raise ValueError(f"need exactly {m} moments, got {len(moments)}")
    rows = [[Fraction(n**nu) for n in range(1, m + 1)] + [Fraction(moments[nu - 1])] for nu in range(1, m + 1)]
    for c in range(m):
        p = next(i for i in range(c, m) if rows[i][c] != 0)
        rows[c], rows[p] = rows[p], rows[c]
        piv = rows[c][c]
        rows[c] = [x / piv for x in rows[c]]
        for i in range(m):
            if i != c and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return FiniteSequence(tuple(rows[i][m] for i in range(m)))


@dataclass(frozen=True)
class ProbeRow:
    nu: int
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class DominantTermProbe:
    negatives: tuple[int, ...]
    last_negative: int
    rhs_limit: Fraction
    diverges: bool
    certified_at: Optional[int]
    rows: tuple[ProbeRow, ...]

    @property
    def contradiction(self) -> bool:
        """True when some tabulated ``nu`` already shows ``lhs != rhs``."""
        return any(r.lhs != r.rhs for r in self.rows)


def dominant_term_probe(seq, nu_range: Iterable[int]) -> DominantTermProbe:
    """Scaled moment identity split at the last negative index ``m_t``.

    For each ``nu``: ``lhs = sum_{n not negative} b_n (n/m_t)^nu`` and
    ``rhs = -sum_{b_n < 0} b_n (n/m_t)^nu``.  ``rhs -> -b_{m_t} > 0``.  If
    some ``b_n > 0`` with ``n > m_t`` the left side grows without bound;
    ``certified_at`` is the first tabulated ``nu`` where
    ``b_n (n/m_t)^nu > 2 sum |b|``, which forces ``lhs > rhs`` without any limit.
    """
    seq = _seq(seq)
    negatives = tuple(n for n, b in enumerate(seq.values, 1) if b < 0)
    if not negatives:
        raise NoNegativeEntry("sequence has no negative entry")
    mt = negatives[-1]
    neg = set(negatives)
    beyond = [n for n in range(mt + 1, seq.m + 1) if seq[n] > 0]
    diverges = bool(beyond)
    total = sum(abs(b) for b in seq.values)
    rows = []
    certified = None
    for nu in nu_range:
        lhs = sum(
            (seq[n] * Fraction(n, mt) ** nu for n in range(1, seq.m + 1) if n not in neg), Fraction(0)
        )
        rhs = -sum((seq[n] * Fraction(n, mt) ** nu for n in negatives), Fraction(0))
        rows.append(ProbeRow(nu, lhs, rhs))
        if diverges and certified is None:
            top = beyond[-1]
            if seq[top] * Fraction(top, mt) ** nu > 2 * total:
                certified = nu
    return DominantTermProbe(negatives, mt, -seq[mt], diverges, certified, tuple(rows))
