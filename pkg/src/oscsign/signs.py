"""Sign-change statistics and the ``alpha + r < k`` criterion ledger.

A sign change is a pair of consecutive nonzero terms with negative product.
How zero terms interrupt that scan is an explicit :class:`ZeroPolicy`.
"""

from __future__ import annotations

import enum
import json
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import EmptySequence, InsufficientCoefficients, MissingLedgerEntry
from .qexp.normalize import NormalizedSequence

RMS_THRESHOLD = 0.15
EPSILON_PROXY = 0.01


class ZeroPolicy(str, enum.Enum):
    SKIP_ZEROS = "SkipZeros"
    ZERO_BREAKS_RUN = "ZeroBreaksRun"


@dataclass(frozen=True)
class SignChangeReport:
    count: int
    first_change_index: Optional[int]
    change_positions_sample: tuple[int, ...]
    scanned_length: int
    zero_count: int
    policy: ZeroPolicy
    sequence_id: str = ""

    def to_dict(self) -> dict:
        return {
            "sequence_id": self.sequence_id,
            "policy": self.policy.value,
            "count": self.count,
            "first_change": self.first_change_index,
            "positions_sample": list(self.change_positions_sample),
            "scanned_length": self.scanned_length,
            "zero_count": self.zero_count,
        }


def _values(seq) -> np.ndarray:
    arr = seq.values if isinstance(seq, NormalizedSequence) else np.asarray(seq)
    if np.iscomplexobj(arr):
        raise TypeError("sign changes are only defined for real sequences")
    return np.asarray(arr, dtype=np.float64)


def sign_changes(
    seq, upto: Optional[int] = None, policy: ZeroPolicy = ZeroPolicy.SKIP_ZEROS
) -> SignChangeReport:
    """Count sign changes among ``a_1..a_upto``.

    Positions are the 1-based index of the later term of each flipping pair.
    """
    vals = _values(seq)
    if upto is not None:
        if upto > len(vals):
            raise InsufficientCoefficients(f"upto={upto} beyond {len(vals)} available terms")
        vals = vals[:upto]
    if len(vals) == 0:
        raise EmptySequence("nothing to scan")
    signs = np.sign(vals)
    zeros = int(np.count_nonzero(signs == 0))
    idx = np.flatnonzero(signs)
    nz = signs[idx]
    flips = np.flatnonzero(nz[1:] != nz[:-1])
    if policy == ZeroPolicy.ZERO_BREAKS_RUN:
        # the pair must be adjacent in the original sequence
        flips = flips[idx[flips + 1] - idx[flips] == 1]
    positions = idx[flips + 1] + 1
    name = seq.name if isinstance(seq, NormalizedSequence) else ""
    return SignChangeReport(
        count=int(len(positions)),
        first_change_index=int(positions[0]) if len(positions) else None,
        change_positions_sample=tuple(int(p) for p in positions[:100]),
        scanned_length=int(len(vals)),
        zero_count=zeros,
        policy=ZeroPolicy(policy),
        sequence_id=name,
    )


def power_subsequence(seq: NormalizedSequence, j: int, max_n: Optional[int] = None) -> NormalizedSequence:
    """``n -> a_{n^j}`` for ``n <= max_n``; the growth exponent scales to ``j * alpha``."""
    if j not in (1, 2, 3, 4):
        raise ValueError(f"power j must be 1..4, got {j}")
    if max_n is None:
        max_n = int(round(len(seq) ** (1.0 / j)))
        while max_n**j > len(seq):
            max_n -= 1
        while (max_n + 1) ** j <= len(seq):
            max_n += 1
    if max_n**j > len(seq):
        raise InsufficientCoefficients(f"a_(n^{j}) up to n={max_n} needs {max_n**j} terms, have {len(seq)}")
    if j == 1:
        return seq.with_values(seq.values[:max_n])
    idx = np.arange(1, max_n + 1, dtype=np.int64) ** j - 1
    alpha = None if seq.alpha is None else j * seq.alpha
    name = f"{seq.name}[n^{j}]" if seq.name else f"[n^{j}]"
    return seq.with_values(seq.values[idx], alpha=alpha, r=None, name=name)


class Verdict(str, enum.Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class LedgerEntry:
    value: float
    provenance: str = "asserted"
    rms: Optional[float] = None
    symbolic: str = ""

    def __post_init__(self):
        if self.provenance not in ("asserted", "measured"):
            raise ValueError("provenance is 'asserted' or 'measured'")
        if self.provenance == "measured" and self.rms is None:
            raise ValueError("measured entries carry the fit RMS")


@dataclass(frozen=True)
class CriterionLedger:
    alpha: LedgerEntry
    r: LedgerEntry
    k: LedgerEntry
    verdict: Verdict
    narrative: str
    evidence: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "ledger": {name: asdict(getattr(self, name)) for name in ("alpha", "r", "k")},
            "verdict": self.verdict.value,
            "narrative": self.narrative,
            "evidence": self.evidence,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def _entry(x) -> Optional[LedgerEntry]:
    if x is None or isinstance(x, LedgerEntry):
        return x
    return LedgerEntry(float(x))


def criterion_report(
    alpha=None,
    r=None,
    k=None,
    growth_fits: Optional[dict] = None,
    signs: Optional[SignChangeReport] = None,
) -> CriterionLedger:
    """Evaluate ``alpha + r < k`` (strict) and attach empirical corroboration.

    Any measured entry whose fit RMS exceeds 0.15 makes the verdict
    Inconclusive instead of risking a wrong one.
    """
    entries = {"alpha": _entry(alpha), "r": _entry(r), "k": _entry(k)}
    missing = [n for n, e in entries.items() if e is None]
    if missing:
        raise MissingLedgerEntry(f"ledger lacks {', '.join(missing)}")
    a, rr, kk = entries["alpha"], entries["r"], entries["k"]
    if a.value < 0 or rr.value < 0 or kk.value <= 0:
        raise ValueError("need alpha >= 0, r >= 0, k > 0")

    shaky = [n for n, e in entries.items() if e.provenance == "measured" and e.rms > RMS_THRESHOLD]
    lhs = a.value + rr.value
    if shaky:
        verdict = Verdict.INCONCLUSIVE
        why = f"measured {', '.join(shaky)} fit RMS above {RMS_THRESHOLD}"
    elif lhs < kk.value:
        verdict = Verdict.HOLDS
        why = f"alpha + r = {lhs:.6g} < k = {kk.value:.6g}"
    else:
        verdict = Verdict.FAILS
        why = f"alpha + r = {lhs:.6g} >= k = {kk.value:.6g}"

    evidence: dict = {}
    if growth_fits:
        evidence["growth_fits"] = {
            name: {"slope": fit.slope, "intercept": fit.intercept, "rms": fit.rms, "points": len(fit.xs)}
            for name, fit in sorted(growth_fits.items())
        }
    if signs is not None:
        evidence["sign_changes"] = signs.to_dict()

    if verdict is Verdict.HOLDS:
        tail = "hypotheses consistent at this scale; infinitely many sign changes are predicted"
    elif verdict is Verdict.FAILS:
        tail = "hypotheses violated at this scale; the criterion gives no conclusion"
    else:
        tail = "evidence too noisy to decide"
    if signs is not None:
        tail += f"; observed {signs.count} sign changes in {signs.scanned_length} terms"
    return CriterionLedger(a, rr, kk, verdict, f"{why}: {tail}", evidence)


def _eps(mult: float = 1.0, base: float = 0.0, label: str = "eps") -> LedgerEntry:
    sym = f"{label} (eps ~ {EPSILON_PROXY} proxy)"
    return LedgerEntry(mult * (base + EPSILON_PROXY), symbolic=sym)


def preset(name: str) -> dict:
    """Ledger tuples for the families in which the criterion is applied.

    ``eps`` wherever a bound reads ``O(n^eps)`` is represented by 0.01 and
    the symbolic form is kept beside it.
    """
    name = name.lower()
    presets = {
        "elliptic": dict(alpha=_eps(), r=LedgerEntry(0.0, symbolic="0"), k=LedgerEntry(1.0, symbolic="1")),
        "siegel": dict(alpha=_eps(), r=LedgerEntry(0.0, symbolic="0"), k=LedgerEntry(1.0, symbolic="1")),
        "zeta": dict(
            alpha=LedgerEntry(0.0, symbolic="0"),
            r=LedgerEntry(1.0, symbolic="1"),
            k=LedgerEntry(1.0, symbolic="1"),
        ),
        "maass": dict(
            alpha=LedgerEntry(7 / 64 + EPSILON_PROXY, symbolic="7/64 + eps (eps ~ 0.01 proxy)"),
            r=LedgerEntry(0.0, symbolic="0"),
            k=LedgerEntry(1.0, symbolic="1"),
        ),
    }
    for j in (2, 3, 4):
        presets[f"sympower{j}"] = dict(
            alpha=_eps(j, label=f"{j} eps"),
            r=LedgerEntry(0.5, symbolic="1/2"),
            k=LedgerEntry(1.0, symbolic="1"),
        )
        presets[f"maass-sympower{j}"] = dict(
            alpha=LedgerEntry(
                j * (7 / 64 + EPSILON_PROXY), symbolic=f"{j}(7/64 + eps) (eps ~ 0.01 proxy)"
            ),
            r=LedgerEntry(0.5, symbolic="1/2"),
            k=LedgerEntry(1.0, symbolic="1"),
        )
    presets["sym-power"] = presets["sympower3"]
    if name not in presets:
        raise KeyError(f"unknown preset {name!r}; choose from {', '.join(sorted(presets))}")
    return presets[name]


PRESET_NAMES = (
    "elliptic",
    "siegel",
    "zeta",
    "maass",
    "sympower2",
    "sympower3",
    "sympower4",
    "maass-sympower2",
    "maass-sympower3",
    "maass-sympower4",
)

# Coefficient bound for second-order cusp forms, O(n^{k/2} log n); recorded, not generated.
SECOND_ORDER_BOUND = {"exponent": "k/2", "log_power": 1}
