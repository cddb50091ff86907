"""Level-one modular forms: Bernoulli numbers, Eisenstein series, the
Victor-Miller basis of S_k(1)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..errors import EmptySpace, OddWeight, WeightTooSmall
from .eta import EtaQuotient, eta_quotient_expansion
from .series import IntegerSeries, multiply, power


@lru_cache(maxsize=None)
def _bernoulli_row(n: int) -> tuple[Fraction, ...]:
    # Akiyama-Tanigawa; yields B_1 = +1/2, fixed up in bernoulli()
    out = []
    a = []
    for m in range(n + 1):
        a.append(Fraction(1, m + 1))
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return tuple(out)


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number with the ``B_1 = -1/2`` convention."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 1:
        return Fraction(-1, 2)
    if n > 1 and n % 2:
        return Fraction(0)
    return _bernoulli_row(n)[n]


def divisor_power_sums(e: int, order: int) -> list[int]:
    """``sigma_e(n)`` for ``0 <= n <= order`` (``sigma_e(0) = 0``)."""
    sig = [0] * (order + 1)
    for d in range(1, order + 1):
        de = d**e
        for m in range(d, order + 1, d):
            sig[m] += de
    return sig


def eisenstein_series(k: int, order: int) -> IntegerSeries:
    """``E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n``.

    When ``2k/B_k`` is not an integer (``k = 12`` and most larger weights)
    the result carries the common denominator in ``.denominator``.
    """
    if k % 2:
        raise OddWeight(f"Eisenstein series need even weight, got {k}")
    if k < 4:
        raise WeightTooSmall(f"E_{k} is not a modular form; need k >= 4")
    c = Fraction(-2 * k) / bernoulli(k)
    sig = divisor_power_sums(k - 1, order)
    den = c.denominator
    coeffs = [den] + [c.numerator * s for s in sig[1:]]
    return IntegerSeries(tuple(coeffs), den)


def cusp_form_dimension(k: int) -> int:
    """``dim S_k(SL_2(Z))``."""
    if k % 2 or k < 12:
        return 0
    return k // 12 - (1 if k % 12 == 2 else 0)


def delta(order: int) -> IntegerSeries:
    """Ramanujan's ``Delta = q prod (1-q^n)^24``."""
    return eta_quotient_expansion(EtaQuotient(((1, 24),), 1), order)


def victor_miller_basis(k: int, order: int) -> list[IntegerSeries]:
    """Integral basis ``f_i = q^i + O(q^{d+1})`` of ``S_k(1)``, ``i = 1..d``."""
    if k % 2:
        raise EmptySpace(f"S_{k}(1) = 0 for odd k")
    d = cusp_form_dimension(k)
    if d == 0:
        raise EmptySpace(f"S_{k}(1) = 0")
    e4 = list(eisenstein_series(4, order).coeffs)
    e6 = list(eisenstein_series(6, order).coeffs)
    dl = list(delta(order).coeffs)

    rows = []
    for i in range(1, d + 1):
        w = k - 12 * i
        b = 0 if w % 4 == 0 else 1
        a = (w - 6 * b) // 4
        g = power(dl, i, order)
        if a:
            g = multiply(g, power(e4, a, order), order)
        if b:
            g = multiply(g, e6, order)
        rows.append(g)

    # back-substitute so that row i vanishes at q^j for every other j <= d
    for i in range(d - 2, -1, -1):
        for j in range(i + 1, d):
            c = rows[i][j + 1]
            if c:
                rows[i] = [x - c * y for x, y in zip(rows[i], rows[j])]
    return [IntegerSeries(tuple(r)) for r in rows]
