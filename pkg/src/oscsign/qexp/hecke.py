"""Hecke operators on level-one q-expansions."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from ..errors import InsufficientPrecision, IrrationalEigenvalues, NotOneDimensional
from .level1 import cusp_form_dimension, victor_miller_basis
from .series import IntegerSeries


def hecke_image(coeffs: Sequence[int], k: int, n: int, length: int) -> list[int]:
    """Coefficients ``0..length`` of ``T(n) f`` for a level-one form ``f``.

    ``a_{T(n)f}(m) = sum_{d | (m, n)} d^{k-1} a(mn/d^2)``, which is what one
    gets by composing ``T(p)`` multiplicatively.
    """
    if n * length >= len(coeffs):
        raise InsufficientPrecision(f"T({n}) image to q^{length} needs order {n * length}")
    out = []
    for m in range(length + 1):
        if m == 0:
            # a(0) sum_{d|n} d^{k-1}
            out.append(coeffs[0] * sum(d ** (k - 1) for d in range(1, n + 1) if n % d == 0))
            continue
        g = math.gcd(m, n)
        out.append(
            sum(d ** (k - 1) * coeffs[m * n // (d * d)] for d in range(1, g + 1) if g % d == 0)
        )
    return out


def hecke_prime_image(coeffs: Sequence[int], k: int, p: int, length: int) -> list[int]:
    """``a(pm) + p^{k-1} a(m/p)`` for ``m = 0..length``."""
    if p * length >= len(coeffs):
        raise InsufficientPrecision(f"T({p}) image to q^{length} needs order {p * length}")
    pk = p ** (k - 1)
    return [coeffs[p * m] + (pk * coeffs[m // p] if m % p == 0 else 0) for m in range(length + 1)]


def _pivots(rows: list[list[Fraction]]) -> list[int]:
    rows = [r[:] for r in rows]
    pivots = []
    col = 0
    ncols = len(rows[0]) if rows else 0
    for r in range(len(rows)):
        while col < ncols:
            pr = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
            if pr is not None:
                break
            col += 1
        else:
            break
        rows[r], rows[pr] = rows[pr], rows[r]
        for i in range(r + 1, len(rows)):
            f = rows[i][col] / rows[r][col]
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        col += 1
    return pivots


def solve_exact(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    """Gauss-Jordan solve of a square nonsingular rational system."""
    n = len(a)
    m = [list(map(Fraction, row)) + [Fraction(rhs)] for row, rhs in zip(a, b)]
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular system")
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [x / piv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [m[i][n] for i in range(n)]


def hecke_matrix(k: int, basis: Sequence[IntegerSeries], n: int) -> list[list[Fraction]]:
    """Matrix of ``T(n)`` on ``span(basis)``; column ``j`` holds ``T(n) basis[j]``."""
    dim = len(basis)
    order = min(b.truncation_order for b in basis)
    if order < n * (dim + 1):
        raise InsufficientPrecision(
            f"T({n}) on a {dim}-dimensional space needs order >= {n * (dim + 1)}, have {order}"
        )
    length = order // n
    rows = [[Fraction(c, b.denominator) for c in b.coeffs[1 : length + 1]] for b in basis]
    piv = _pivots(rows)
    if len(piv) < dim:
        raise InsufficientPrecision("basis is not independent within the available order")
    system = [[rows[j][p] for j in range(dim)] for p in piv]
    cols = []
    for b in basis:
        img = hecke_image(b.coeffs, k, n, length)
        rhs = [Fraction(img[p + 1], b.denominator) for p in piv]
        cols.append(solve_exact(system, rhs))
    return [[cols[j][i] for j in range(dim)] for i in range(dim)]


def hecke_power_coefficient(a_p: int, p: int, k: int, m: int) -> int:
    """``a(p^m)`` from ``a(p)`` via ``a(p^{j+1}) = a(p) a(p^j) - p^{k-1} a(p^{j-1})``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    prev, cur = 0, 1
    pk = p ** (k - 1)
    for _ in range(m):
        prev, cur = cur, a_p * cur - pk * prev
    return cur


def hecke_eigenform(k: int, order: int, diagonalize: bool = False) -> IntegerSeries:
    """Normalised (``a(1) = 1``) Hecke eigenform of weight ``k`` on ``SL_2(Z)``.

    One-dimensional spaces return the unique basis element.  For larger
    spaces pass ``diagonalize=True`` to look for a rational eigenvalue of
    ``T(2)``; level one has none in every known case, so this normally
    raises :class:`IrrationalEigenvalues`.
    """
    dim = cusp_form_dimension(k)
    if dim > 1 and not diagonalize:
        raise NotOneDimensional(
            f"dim S_{k}(1) = {dim}; use victor_miller_basis + hecke_matrix and diagonalize"
        )
    basis = victor_miller_basis(k, max(order, 2 * (dim + 1)))
    if dim == 1:
        return basis[0].truncate(order)

    import sympy

    t2 = sympy.Matrix(hecke_matrix(k, basis, 2))
    lam = sympy.Symbol("x")
    rational = [r for r in sympy.Poly(t2.charpoly(lam).as_expr(), lam).ground_roots()]
    for root in rational:
        null = (t2 - root * sympy.eye(dim)).nullspace()
        if len(null) != 1 or null[0][0] == 0:
            continue
        v = [Fraction(int(x.p), int(x.q)) for x in (null[0] / null[0][0])]
        den = math.lcm(*(x.denominator for x in v))
        ints = [int(x * den) for x in v]
        coeffs = [sum(c * b.coeffs[i] for c, b in zip(ints, basis)) for i in range(order + 1)]
        return IntegerSeries(tuple(coeffs), den)
    raise IrrationalEigenvalues(f"T(2) on S_{k}(1) has no rational eigenvalue with a 1-dim eigenspace")
