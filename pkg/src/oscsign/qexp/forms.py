"""Form descriptors: what to expand, at which weight and level, and how to
read and write the ``n,a_n`` coefficient CSV."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from ..errors import DataError, UsageError
from .eta import EtaQuotient, eta_quotient_expansion, fricke_image
from .hecke import hecke_eigenform
from .level1 import cusp_form_dimension
from .series import IntegerSeries

LEVEL1_ONE_DIMENSIONAL = (12, 16, 18, 20, 22, 26)


@dataclass(frozen=True)
class Level1Eigenform:
    weight: int


@dataclass(frozen=True)
class CoefficientFile:
    path: str


Recipe = Union[EtaQuotient, Level1Eigenform, CoefficientFile]


@dataclass(frozen=True)
class FormDescriptor:
    weight: int
    level: int
    recipe: Recipe
    alpha_exponent: Optional[float] = None
    label: str = ""

    def __post_init__(self):
        if self.weight <= 0 or self.level <= 0:
            raise UsageError("weight and level must be positive integers")
        if isinstance(self.recipe, Level1Eigenform) and cusp_form_dimension(self.weight) != 1:
            raise UsageError(
                f"level-1 eigenforms are available for k in {LEVEL1_ONE_DIMENSIONAL}, got {self.weight}"
            )
        if self.alpha_exponent is None:
            # Hecke's trivial bound for raw coefficients
            object.__setattr__(self, "alpha_exponent", self.weight / 2)

    @property
    def slug(self) -> str:
        return "".join(ch if ch.isalnum() else "_" for ch in self.label)


def parse_selector(text: str, weight: Optional[int] = None, level: Optional[int] = None) -> FormDescriptor:
    """``delta`` | ``eigenform:k`` | ``eta:1^2,11^2`` | ``file:path``."""
    kind, _, arg = text.partition(":")
    kind = kind.strip().lower()
    if kind == "delta" and not arg:
        return FormDescriptor(12, 1, Level1Eigenform(12), label="delta")
    if kind == "eigenform":
        try:
            k = int(arg)
        except ValueError:
            raise UsageError(f"eigenform weight must be an integer: {arg!r}") from None
        return FormDescriptor(k, 1, Level1Eigenform(k), label=f"eigenform{k}")
    if kind == "eta":
        q = EtaQuotient.parse(arg.strip("\"'"), level or 0)
        return FormDescriptor(q.weight, q.level, q, label=f"eta_{q}")
    if kind == "file":
        if not arg:
            raise UsageError("file: selector needs a path")
        return FormDescriptor(weight or 12, level or 1, CoefficientFile(arg), label=f"file_{Path(arg).stem}")
    raise UsageError(f"unknown form selector {text!r}")


def expand(form: FormDescriptor, order: int) -> IntegerSeries:
    recipe = form.recipe
    if isinstance(recipe, EtaQuotient):
        return eta_quotient_expansion(recipe, order)
    if isinstance(recipe, Level1Eigenform):
        return hecke_eigenform(recipe.weight, order)
    series = read_coefficients(Path(recipe.path).read_text())
    if series.truncation_order < order:
        raise DataError(f"{recipe.path} holds coefficients to n={series.truncation_order}, need {order}")
    return series.truncate(order)


def fricke_partner(form: FormDescriptor) -> tuple[complex, Optional[FormDescriptor]]:
    """``(c, h)`` with ``form|_k W_N = c * h``; ``h`` is ``None`` when unknown."""
    recipe = form.recipe
    if isinstance(recipe, Level1Eigenform):
        return 1.0 + 0j, form
    if isinstance(recipe, EtaQuotient):
        c, image = fricke_image(recipe)
        return c, FormDescriptor(image.weight, image.level, image, label=f"eta_{image}")
    return 1.0 + 0j, None


def write_coefficients(series: IntegerSeries) -> str:
    if series.denominator != 1:
        raise DataError("the coefficient CSV holds integral series only")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "a_n"])
    for n, c in enumerate(series.coeffs):
        w.writerow([n, c])
    return buf.getvalue()


def read_coefficients(text: str) -> IntegerSeries:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or [h.strip() for h in rows[0]] != ["n", "a_n"]:
        raise DataError("coefficient CSV must start with the header 'n,a_n'")
    coeffs = []
    for i, row in enumerate(rows[1:]):
        if not row:
            continue
        try:
            n, a = int(row[0]), int(row[1])
        except (ValueError, IndexError):
            raise DataError(f"bad coefficient row {row!r}") from None
        if n != i:
            raise DataError(f"rows must run n = 0, 1, 2, ...; found n={n} at row {i}")
        coeffs.append(a)
    if not coeffs:
        raise DataError("coefficient CSV is empty")
    return IntegerSeries(tuple(coeffs))
