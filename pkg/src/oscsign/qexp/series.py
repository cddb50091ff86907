"""Truncated power series with exact integer coefficients.

Products use Kronecker substitution: both operands are packed into one big
integer (one fixed-width slot per coefficient), multiplied with GMP, and
unpacked.  This keeps expansions to ~10^5 terms in the sub-second range
while never leaving exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import gmpy2


@dataclass(frozen=True)
class IntegerSeries:
    """Coefficients ``coeffs[n]`` of ``q^n`` for ``0 <= n <= truncation_order``.

    ``denominator`` is 1 for genuinely integral series.  Series whose natural
    normalisation is rational (e.g. ``E_12``) are stored as integer
    numerators over one common positive denominator.
    """

    coeffs: tuple[int, ...]
    denominator: int = 1

    def __post_init__(self):
        if not isinstance(self.coeffs, tuple):
            object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("series needs at least the constant coefficient")
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")

    @property
    def truncation_order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "IntegerSeries":
        if order > self.truncation_order:
            raise ValueError(f"cannot extend order {self.truncation_order} to {order}")
        return IntegerSeries(self.coeffs[: order + 1], self.denominator)

    def __add__(self, other: "IntegerSeries") -> "IntegerSeries":
        _check_integral(self, other)
        m = min(len(self), len(other))
        return IntegerSeries(tuple(a + b for a, b in zip(self.coeffs[:m], other.coeffs[:m])))

    def __sub__(self, other: "IntegerSeries") -> "IntegerSeries":
        _check_integral(self, other)
        m = min(len(self), len(other))
        return IntegerSeries(tuple(a - b for a, b in zip(self.coeffs[:m], other.coeffs[:m])))

    def __neg__(self) -> "IntegerSeries":
        return IntegerSeries(tuple(-a for a in self.coeffs), self.denominator)

    def scale(self, c: int) -> "IntegerSeries":
        return IntegerSeries(tuple(c * a for a in self.coeffs), self.denominator)

    def __mul__(self, other: "IntegerSeries") -> "IntegerSeries":
        _check_integral(self, other)
        order = min(self.truncation_order, other.truncation_order)
        return IntegerSeries(multiply(self.coeffs, other.coeffs, order))

    def __pow__(self, e: int) -> "IntegerSeries":
        return IntegerSeries(power(self.coeffs, e, self.truncation_order))


def _check_integral(*series: IntegerSeries) -> None:
    if any(s.denominator != 1 for s in series):
        raise ValueError("arithmetic is only defined on integral series")


def _pack(coeffs: Sequence[int], nbytes: int) -> gmpy2.mpz:
    pos = b"".join((c if c > 0 else 0).to_bytes(nbytes, "little") for c in coeffs)
    neg = b"".join((-c if c < 0 else 0).to_bytes(nbytes, "little") for c in coeffs)
    return gmpy2.mpz(int.from_bytes(pos, "little")) - gmpy2.mpz(int.from_bytes(neg, "little"))


def multiply(a: Sequence[int], b: Sequence[int], order: int) -> list[int]:
    """Exact product of two coefficient lists, truncated after ``q^order``."""
    a = list(a[: order + 1])
    b = list(b[: order + 1])
    length = min(len(a) + len(b) - 1, order + 1)
    ma = max(abs(c) for c in a)
    mb = max(abs(c) for c in b)
    if ma == 0 or mb == 0:
        return [0] * length
    # every product coefficient is bounded by ma*mb*min(len)
    bits = (ma * mb * min(len(a), len(b))).bit_length() + 2
    nbytes = (bits + 7) // 8
    width = 8 * nbytes
    prod = int(_pack(a, nbytes) * _pack(b, nbytes))
    half = 1 << (width - 1)
    offset = int.from_bytes(half.to_bytes(nbytes, "little") * length, "little")
    packed = ((prod + offset) & ((1 << (width * length)) - 1)).to_bytes(nbytes * length, "little")
    return [
        int.from_bytes(packed[i * nbytes : (i + 1) * nbytes], "little") - half
        for i in range(length)
    ]


def inverse(a: Sequence[int], order: int) -> list[int]:
    """Reciprocal of a series with constant term +-1, via Newton iteration."""
    if a[0] not in (1, -1):
        raise ValueError("constant term must be a unit for an integral inverse")
    g = [a[0]]
    prec = 1
    while prec < order + 1:
        prec = min(2 * prec, order + 1)
        fg = multiply(a, g, prec - 1)
        # g <- g*(2 - f*g)
        corr = [-c for c in fg]
        corr[0] += 2
        g = multiply(g, corr, prec - 1)
    return g[: order + 1]


def power(a: Sequence[int], e: int, order: int) -> list[int]:
    """``a**e`` truncated after ``q^order``; negative ``e`` goes through :func:`inverse`."""
    if e < 0:
        a = inverse(a, order)
        e = -e
    result = [1] + [0] * order
    base = list(a[: order + 1])
    first = True
    while e:
        if e & 1:
            result = base[:] if first else multiply(result, base, order)
            first = False
        e >>= 1
        if e:
            base = multiply(base, base, order)
    return result


def spread(a: Sequence[int], d: int, order: int) -> list[int]:
    """Substitute ``q -> q^d``."""
    out = [0] * (order + 1)
    for i, c in enumerate(a):
        if i * d > order:
            break
        out[i * d] = c
    return out


def shift(a: Iterable[int], by: int, order: int) -> list[int]:
    """Multiply by ``q^by`` (``by >= 0``)."""
    out = [0] * by + list(a)
    out = out[: order + 1]
    return out + [0] * (order + 1 - len(out))
