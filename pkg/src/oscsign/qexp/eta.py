"""Dedekind eta products and eta quotients."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import NonIntegralPrefactor, NonIntegralWeight, UsageError
from .series import IntegerSeries, multiply, power, shift, spread


def eta_power(order: int) -> IntegerSeries:
    """Coefficients of ``prod_{n>=1} (1 - q^n)`` up to ``q^order``.

    Uses Euler's pentagonal number theorem: the only nonzero coefficients sit
    at ``m(3m-1)/2`` and ``m(3m+1)/2`` with sign ``(-1)^m``.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    m = 1
    while m * (3 * m - 1) // 2 <= order:
        sign = -1 if m % 2 else 1
        coeffs[m * (3 * m - 1) // 2] = sign
        if m * (3 * m + 1) // 2 <= order:
            coeffs[m * (3 * m + 1) // 2] = sign
        m += 1
    return IntegerSeries(tuple(coeffs))


@dataclass(frozen=True)
class EtaQuotient:
    """``prod_d eta(d z)^{r_d}`` on ``Gamma_0(level)``.

    ``factors`` is a tuple of ``(d, r_d)`` pairs.  Construction validates that
    the weight ``sum(r_d)/2`` and the q-order at infinity ``sum(d r_d)/24``
    are positive integers.
    """

    factors: tuple[tuple[int, int], ...]
    level: int = 0

    def __post_init__(self):
        merged: dict[int, int] = {}
        for d, r in self.factors:
            d, r = int(d), int(r)
            if d <= 0:
                raise UsageError(f"eta divisor must be positive, got {d}")
            merged[d] = merged.get(d, 0) + r
        factors = tuple(sorted((d, r) for d, r in merged.items() if r != 0))
        if not factors:
            raise NonIntegralWeight("empty eta quotient has weight 0")
        object.__setattr__(self, "factors", factors)
        level = self.level or math.lcm(*(d for d, _ in factors))
        if any(level % d for d, _ in factors):
            raise UsageError(f"every eta divisor must divide the level {level}")
        object.__setattr__(self, "level", level)

        total = sum(r for _, r in factors)
        if total % 2 or total <= 0:
            raise NonIntegralWeight(f"weight {Fraction(total, 2)} is not a positive integer")
        pre = sum(d * r for d, r in factors)
        if pre % 24 or pre <= 0:
            raise NonIntegralPrefactor(
                f"q-prefactor exponent {Fraction(pre, 24)} is not a positive integer"
            )

    @property
    def weight(self) -> int:
        return sum(r for _, r in self.factors) // 2

    @property
    def q_order(self) -> int:
        return sum(d * r for d, r in self.factors) // 24

    @classmethod
    def parse(cls, text: str, level: int = 0) -> "EtaQuotient":
        """Parse ``"1^2,11^2"`` style descriptions."""
        factors = []
        for part in text.replace(" ", "").split(","):
            if not part:
                continue
            try:
                d, _, r = part.partition("^")
                factors.append((int(d), int(r) if r else 1))
            except ValueError:
                raise UsageError(f"cannot parse eta factor {part!r}") from None
        return cls(tuple(factors), level)

    def __str__(self) -> str:
        return ",".join(f"{d}^{r}" for d, r in self.factors)


def eta_quotient_expansion(quotient: EtaQuotient, order: int) -> IntegerSeries:
    """Expand ``quotient`` to ``q^order`` with the q-prefactor folded into the indexing."""
    body_order = order - quotient.q_order
    if body_order < 0:
        return IntegerSeries((0,) * (order + 1))
    base = list(eta_power(body_order).coeffs)
    result = None
    for d, r in quotient.factors:
        piece = spread(power(base[: body_order // d + 1], r, body_order // d), d, body_order)
        result = piece if result is None else multiply(result, piece, body_order)
    return IntegerSeries(tuple(shift(result, quotient.q_order, order)))


def fricke_image(quotient: EtaQuotient) -> tuple[complex, EtaQuotient]:
    """Return ``(c, h)`` with ``quotient|_k W_N = c * h``.

    Each ``eta(d z)`` maps to ``eta((N/d) z)``; collecting the square-root
    factors from ``eta(-1/z) = sqrt(z/i) eta(z)`` gives
    ``c = i^{-k} prod_d (sqrt(N)/d)^{r_d/2}``.
    """
    n = quotient.level
    image = EtaQuotient(tuple((n // d, r) for d, r in quotient.factors), n)
    log_mag = sum(r / 2 * (0.5 * math.log(n) - math.log(d)) for d, r in quotient.factors)
    c = cmath.exp(log_mag) * (1j) ** (-quotient.weight % 4)
    c = complex(round(c.real, 15), round(c.imag, 15))
    return c, image
