"""``oscsign`` command line: coefficients, sign statistics, criterion ledger,
functional-equation and smoothing reports.

Exit codes: 0 ok, 2 usage, 3 precision/data failure, 4 missing ledger entry.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

import numpy as np

from . import landau, reports, signs
from .errors import DataError, MissingLedgerEntry, PrecisionError, UsageError
from .lfun import (
    LSeriesContext,
    default_grid,
    functional_equation_residual,
    growth_exponent,
    mellin_cross_check,
    rankin_partial_sums,
    smoothed_sum,
)
from .lfun.smoothing import smoothing_cutoff
from .qexp import (
    CoefficientFile,
    FormDescriptor,
    IntegerSeries,
    NormalizedSequence,
    expand,
    fricke_partner,
    normalize,
    parse_selector,
    read_coefficients,
    write_coefficients,
)

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_LEDGER = 0, 2, 3, 4


# -- coefficient cache -------------------------------------------------------

def cache_dir(explicit: Optional[str]) -> Path:
    if explicit:
        return Path(explicit)
    env = os.environ.get("OSC_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "oscsign"


def load_coefficients(form: FormDescriptor, order: int, cache: Optional[Path]) -> IntegerSeries:
    """Coefficients ``0..order``, reusing (and extending) the on-disk cache."""
    if isinstance(form.recipe, CoefficientFile) or cache is None:
        return expand(form, order)
    path = cache / f"{form.slug}.csv"
    if path.exists():
        try:
            cached = read_coefficients(path.read_text())
        except DataError:
            cached = None
        if cached is not None and cached.truncation_order >= order:
            return cached.truncate(order)
    series = expand(form, order)
    cache.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(write_coefficients(series))
    tmp.replace(path)
    return series


def _cache_arg(args) -> Optional[Path]:
    return None if args.no_cache else cache_dir(args.cache_dir)


def build_sequence(args, length: int) -> NormalizedSequence:
    """Real sequence ``a_1..a_length`` from ``--form`` or ``--seq``."""
    if getattr(args, "seq", None):
        n = np.arange(1, length + 1)
        kinds = {
            "ones": np.ones(length),
            "alternating": (-1.0) ** n,
            "positive": 1.0 + 1.0 / n,
        }
        if args.seq not in kinds:
            raise UsageError(f"unknown --seq {args.seq!r}; choose from {', '.join(kinds)}")
        return NormalizedSequence(kinds[args.seq], alpha=0.0, name=args.seq)
    if not args.form:
        raise UsageError("need --form or --seq")
    form = parse_selector(args.form, weight=args.weight, level=args.level)
    raw = load_coefficients(form, length, _cache_arg(args))
    if getattr(args, "raw", False):
        vals = [c / raw.denominator for c in raw.coeffs[1:]]
        return NormalizedSequence(np.array(vals, dtype=float), alpha=form.alpha_exponent, name=form.label)
    return normalize(raw, form.weight, name=form.label)


# -- parsing helpers -----------------------------------------------------------

def parse_number_list(text: str) -> list[float]:
    """``"10,20,...,100"`` expands an arithmetic progression; plain lists pass through."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if "..." in parts:
        i = parts.index("...")
        if i < 2 or i != len(parts) - 2:
            raise UsageError(f"progression must look like 'a,b,...,c': {text!r}")
        head = [float(p) for p in parts[:i]]
        stop = float(parts[-1])
        step = head[-1] - head[-2]
        if step <= 0:
            raise UsageError("progression step must be positive")
        out = head[:]
        while out[-1] + step <= stop + 1e-9 * abs(stop):
            out.append(out[-1] + step)
        return out
    try:
        return [float(p) for p in parts]
    except ValueError:
        raise UsageError(f"cannot parse number list {text!r}") from None


def parse_grid(text: str, k: int, level: int) -> list[complex]:
    if text == "default":
        return default_grid(k, level)
    try:
        return [complex(p.strip().replace("i", "j")) for p in text.split(",") if p.strip()]
    except ValueError:
        raise UsageError(f"cannot parse grid {text!r}") from None


def _int_or_float(x: float):
    return int(x) if float(x).is_integer() else x


# -- subcommands ---------------------------------------------------------------

def cmd_coeffs(args) -> str:
    form = parse_selector(args.form, weight=args.weight, level=args.level)
    series = load_coefficients(form, args.limit, _cache_arg(args))
    return write_coefficients(series)


def cmd_signs(args) -> str:
    j = args.j
    needed = args.limit**j
    seq = build_sequence(args, needed)
    if len(seq) < needed:
        raise DataError(f"need {needed} coefficients for n^{j} up to n={args.limit}")
    sub = signs.power_subsequence(seq, j, args.limit)
    policy = signs.ZeroPolicy.ZERO_BREAKS_RUN if args.policy == "break" else signs.ZeroPolicy.SKIP_ZEROS
    rep = signs.sign_changes(sub, policy=policy)
    out = rep.to_dict()
    out["j"] = j
    ledger = {"alpha": sub.alpha, "r": sub.r, "k": sub.k, "provenance": "asserted"}
    out["ledger"] = ledger
    if None in (sub.alpha, sub.r, sub.k):
        out["verdict"] = None
    else:
        out["verdict"] = signs.criterion_report(sub.alpha, sub.r, sub.k).verdict.value
    return reports.dumps(out)


def cmd_criterion(args) -> str:
    entries: dict = {}
    if args.preset:
        try:
            entries.update(signs.preset(args.preset))
        except KeyError as e:
            raise UsageError(str(e.args[0])) from None
    for name in ("alpha", "r", "k"):
        v = getattr(args, name)
        if v is not None:
            entries[name] = signs.LedgerEntry(v)

    fits = {}
    sign_rep = None
    measure = {m.strip() for m in (args.measure or "").split(",") if m.strip()}
    if measure - {"r", "k"}:
        raise UsageError(f"--measure accepts r and/or k, got {sorted(measure)}")
    if measure or args.form:
        seq = build_sequence(args, args.limit)
        sign_rep = signs.sign_changes(seq)
        if "r" in measure:
            xs = [x for x in range(10, 201, 10) if smoothing_cutoff(x, seq.alpha or 0.0) <= len(seq)]
            fit = growth_exponent([(x, smoothed_sum(seq, x).value) for x in xs])
            fits["smoothed_sum"] = fit
            entries["r"] = signs.LedgerEntry(max(0.0, fit.slope), "measured", fit.rms, "slope of |S(x)|")
        if "k" in measure:
            top = math.log10(len(seq))
            xs = [10 ** (2 + (top - 2) * i / 8) for i in range(9)]
            sums = rankin_partial_sums(seq, xs)
            fit = growth_exponent(list(zip(sums.thresholds, sums.sums)))
            fits["rankin"] = fit
            entries["k"] = signs.LedgerEntry(fit.slope, "measured", fit.rms, "slope of A(x)")
    led = signs.criterion_report(
        entries.get("alpha"), entries.get("r"), entries.get("k"), growth_fits=fits or None, signs=sign_rep
    )
    out = led.to_dict()
    out["preset"] = args.preset
    return reports.dumps(out)


def cmd_funceq(args) -> str:
    form = parse_selector(args.form, weight=args.weight, level=args.level)
    cache = _cache_arg(args)
    raw = load_coefficients(form, args.limit, cache)
    k, level = form.weight, form.level
    f = LSeriesContext.from_series(raw, k, level, name=form.label)
    grid = parse_grid(args.grid, k, level)
    if args.fit_root_number:
        g = None
    else:
        c, partner = fricke_partner(form)
        if partner is None:
            raise UsageError("no Fricke image known for this form; use --fit-root-number")
        g = LSeriesContext.from_series(load_coefficients(partner, args.limit, cache), k, level, scale=c)
    rep = functional_equation_residual(f, g, k, level, grid, split_factor=args.split_factor)
    samples = [
        {"s": p.s, "lhs": p.lhs, "rhs": p.rhs, "residual": p.residual} for p in rep.points
    ]
    values = {"max_residual": rep.max_residual, "root_number": rep.root_number, "split": rep.split}
    return reports.dumps(
        reports.report(
            "functional_equation_residual",
            {"form": form.label, "weight": k, "level": level, "limit": args.limit, "grid": args.grid,
             "split_factor": args.split_factor, "fit_root_number": args.fit_root_number},
            values,
            {"tail_limit_per_sum": 1e-12},
            samples,
        )
    )


def cmd_smooth(args) -> str:
    if args.x_list:
        xs = parse_number_list(args.x_list)
    elif args.x is not None:
        xs = [args.x]
    else:
        raise UsageError("need --x or --x-list")
    if args.kind == "rankin":
        length = args.limit or int(max(xs))
        seq = build_sequence(args, length)
        sums = rankin_partial_sums(seq, xs, args.offset)
        rows = list(zip(sums.thresholds, sums.sums))
        fit = growth_exponent(rows) if args.fit else None
        if args.format == "csv":
            return reports.table_csv(["x", "A_x"], rows)
        values = {"A": [{"x": x, "A": a} for x, a in rows]}
        if fit:
            values["fit"] = {"slope": fit.slope, "intercept": fit.intercept, "rms": fit.rms}
        return reports.dumps(
            reports.report("rankin_partial_sums", {"source": seq.name, "offset": args.offset}, values,
                           {"summation": "correctly rounded (fsum)"}, rows)
        )

    alpha_guess = 0.0
    length = args.limit or smoothing_cutoff(max(xs), alpha_guess)
    seq = build_sequence(args, length)
    results = [smoothed_sum(seq, x) for x in xs]
    rows = [(_int_or_float(r.x), r.value) for r in results]
    if args.format == "csv":
        return reports.table_csv(["x", "S_x"], rows)
    values: dict = {"S": [{"x": x, "S": v} for x, v in rows]}
    if len(results) == 1:
        values["value"] = results[0].value
    if args.fit:
        fit = growth_exponent([(r.x, r.value) for r in results])
        values["fit"] = {"slope": fit.slope, "intercept": fit.intercept, "rms": fit.rms, "dropped": fit.dropped}
    samples = [{"x": _int_or_float(r.x), "S": r.value, "cutoff": r.cutoff} for r in results]
    if args.mellin:
        checks = [mellin_cross_check(seq, r.x) for r in results]
        values["mellin"] = [
            {"x": _int_or_float(c.x), "contour": c.contour, "direct": c.direct, "discrepancy": c.discrepancy}
            for c in checks
        ]
    budget = {"truncation": max(r.truncation_bound for r in results)}
    return reports.dumps(reports.report("smoothed_sum", {"source": seq.name, "x": xs}, values, budget, samples))


def cmd_landau_demo(args) -> str:
    try:
        b = [Fraction(p.strip()) for p in args.b.split(",") if p.strip()]
    except ValueError:
        raise UsageError(f"cannot parse --b {args.b!r}") from None
    if not b:
        raise UsageError("--b is empty")
    nus = list(range(1, args.nu_max + 1))
    m = len(b)
    moments = landau.moment_vector(b, range(1, m + 1))
    solved = landau.vandermonde_zero_test(moments, m)
    out: dict = {
        "b": b,
        "moments": moments,
        "round_trip_exact": list(solved.values) == b,
    }
    if any(x < 0 for x in b):
        probe = landau.dominant_term_probe(b, nus)
        out["probe"] = {
            "last_negative": probe.last_negative,
            "rhs_limit": probe.rhs_limit,
            "diverges": probe.diverges,
            "certified_at": probe.certified_at,
            "rows": [{"nu": r.nu, "lhs": float(r.lhs), "rhs": float(r.rhs)} for r in probe.rows],
        }
    return reports.dumps(reports.report("landau_demo", {"b": args.b, "nu_max": args.nu_max}, out))


# -- parser --------------------------------------------------------------------

def _form_options(p: argparse.ArgumentParser, seq: bool = False) -> None:
    p.add_argument("--form", help="delta | eigenform:k | eta:1^2,11^2 | file:path")
    if seq:
        p.add_argument("--seq", help="synthetic sequence: ones | alternating | positive")
    p.add_argument("--weight", type=int, help="weight for file: forms")
    p.add_argument("--level", type=int, help="level for file:/eta: forms")
    p.add_argument("--cache-dir", help="coefficient cache (default $OSC_CACHE_DIR or ~/.cache/oscsign)")
    p.add_argument("--no-cache", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="oscsign", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="write n,a_n CSV")
    _form_options(p)
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("signs", help="sign-change report")
    _form_options(p, seq=True)
    p.add_argument("--limit", type=int, default=1000, help="scan n <= limit (of the subsequence)")
    p.add_argument("--j", type=int, default=1, choices=(1, 2, 3, 4))
    p.add_argument("--policy", choices=("skip", "break"), default="skip")
    p.add_argument("--raw", action="store_true", help="skip a(n)/n^((k-1)/2) normalisation")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_signs)

    p = sub.add_parser("criterion", help="alpha + r < k ledger")
    _form_options(p, seq=True)
    p.add_argument("--preset", help=", ".join(signs.PRESET_NAMES))
    p.add_argument("--alpha", type=float)
    p.add_argument("--r", type=float)
    p.add_argument("--k", type=float)
    p.add_argument("--measure", help="comma list of entries to measure from data: r,k")
    p.add_argument("--limit", type=int, default=20000)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_criterion)

    p = sub.add_parser("funceq", help="functional-equation residual")
    _form_options(p)
    p.add_argument("--grid", default="default")
    p.add_argument("--limit", type=int, default=200)
    p.add_argument("--split-factor", type=float, default=1.1)
    p.add_argument("--fit-root-number", action="store_true", help="hypothesise g = eps f and fit eps")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_funceq)

    p = sub.add_parser("smooth", help="smoothed sums / Rankin partial sums")
    _form_options(p, seq=True)
    p.add_argument("--x", type=float)
    p.add_argument("--x-list")
    p.add_argument("--fit", action="store_true")
    p.add_argument("--mellin", action="store_true", help="add the contour-integral cross-check")
    p.add_argument("--kind", choices=("smoothed", "rankin"), default="smoothed")
    p.add_argument("--offset", type=int, default=0)
    p.add_argument("--limit", type=int)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--raw", action="store_true")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_smooth)

    p = sub.add_parser("landau-demo", help="exact moment / Vandermonde demonstration")
    p.add_argument("--b", default="1,-1,1")
    p.add_argument("--nu-max", type=int, default=20)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_landau_demo)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "limit", None) is not None and args.limit < 1:
        print("oscsign: error: --limit must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        text = args.func(args)
    except MissingLedgerEntry as e:
        print(f"oscsign: missing ledger entry: {e.args[0]}", file=sys.stderr)
        return EXIT_LEDGER
    except UsageError as e:
        print(f"oscsign: usage: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (PrecisionError, DataError) as e:
        print(f"oscsign: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_DATA
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
