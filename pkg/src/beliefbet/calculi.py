"""Seven ways from sample statements to a degree of belief.

Every calculus consumes the same evidence bundle (the sample statements for
one query, the closed given-property set, the target, a confidence level)
and produces either a point belief or an interval belief:

``naive-average``
    mean of the sample frequencies r/s, one vote per class.
``maximal-average``
    the same mean, but a class is dropped when a strictly more specific
    class was also sampled (the general class is supplanted).
``similarity``
    frequencies pooled with weights: each class counts its properties shared
    with the given set, and contributes weight*r over weight*s.
``naive-dempster``
    every sample's confidence interval becomes a mass function over
    {target, not-target, don't-know}; masses are combined by Dempster's
    rule; belief is [m_yes, m_yes + m_unknown].
``maximal-dempster``
    naive-dempster over the specificity-maximal samples only.
``kyburg``
    confidence intervals for all samples plus the pairwise cross-product
    combinations of property-disjoint ones; the specificity selection picks
    one interval, falling back to the always-true class's interval when
    mutual disagreement disqualifies everything.
``loui``
    same candidate pool, but unresolved disagreement yields the convex hull
    of the undefeated candidates instead of a fallback.

``kyburg-adaptive`` is kyburg with the confidence level tied to the pot at
stake: the smallest pot uses the high level, the largest the low one,
linear in between.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Mapping, Optional, Sequence

from .intervals import (
    FrequencyInterval,
    NoConsideredIntervalError,
    combine_xp,
    confidence_interval,
    kyburg_select,
    loui_select,
)
from .props import ALWAYS_TRUE, Atom
from .refclass import SampleStatement, common_count

__all__ = [
    "Belief",
    "MassFunction",
    "EvidenceBundle",
    "CalculusError",
    "TotalConflictError",
    "ZeroWeightError",
    "CalculusSettings",
    "naive_average",
    "maximal_average",
    "similarity",
    "interval_to_mass",
    "dempster_combine",
    "naive_dempster",
    "maximal_dempster",
    "kyburg_belief",
    "loui_belief",
    "adaptive_confidence",
    "REGISTRY",
    "METHOD_NAMES",
]

_TOL = 1e-9


class CalculusError(ValueError):
    """A calculus could not produce a belief from this bundle."""


class TotalConflictError(CalculusError):
    """Dempster combination of flatly contradictory masses (K = 1)."""


class ZeroWeightError(CalculusError):
    """Similarity pooling found no shared property anywhere."""


@dataclass(frozen=True)
class Belief:
    """A point or interval degree of belief in the target."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.lo <= self.hi <= 1.0:
            raise ValueError(f"bad belief [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, v: float) -> "Belief":
        return cls(v, v)

    @classmethod
    def interval(cls, lo: float, hi: float) -> "Belief":
        return cls(lo, hi)

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def midpoint(self) -> float:
        return (self.lo + self.hi) / 2.0

    def as_dict(self) -> dict:
        if self.is_point:
            return {"kind": "point", "value": self.lo}
        return {"kind": "interval", "lo": self.lo, "hi": self.hi}


@dataclass(frozen=True)
class MassFunction:
    """Mass over the binary frame: target, its complement, and ignorance."""

    yes: float
    no: float
    unknown: float

    def __post_init__(self) -> None:
        for v in (self.yes, self.no, self.unknown):
            if v < -_TOL or v > 1.0 + _TOL:
                raise ValueError(f"mass out of range: {v}")
        if abs(self.yes + self.no + self.unknown - 1.0) > 1e-6:
            raise ValueError(
                f"masses must sum to 1: {self.yes} + {self.no} + {self.unknown}"
            )

    @classmethod
    def vacuous(cls) -> "MassFunction":
        return cls(0.0, 0.0, 1.0)

    @property
    def belief(self) -> float:
        return self.yes

    @property
    def plausibility(self) -> float:
        return self.yes + self.unknown


@dataclass(frozen=True)
class EvidenceBundle:
    """Everything a calculus may look at for one query."""

    samples: tuple[SampleStatement, ...]
    given: frozenset[Atom]
    target: Atom
    confidence: float = 0.9

    def __post_init__(self) -> None:
        if not self.samples:
            raise ValueError("an evidence bundle needs at least one sample")
        if not 0.0 < self.confidence < 1.0:
            raise ValueError(f"confidence must lie in (0,1): {self.confidence}")


def _maximal(samples: Sequence[SampleStatement]) -> list[SampleStatement]:
    return [
        st
        for st in samples
        if not any(
            other.ref.properties > st.ref.properties for other in samples
        )
    ]


def naive_average(e: EvidenceBundle) -> Belief:
    return Belief.point(sum(st.frequency for st in e.samples) / len(e.samples))


def maximal_average(e: EvidenceBundle) -> Belief:
    kept = _maximal(e.samples)
    return Belief.point(sum(st.frequency for st in kept) / len(kept))


def similarity(e: EvidenceBundle) -> Belief:
    """Shared-property-weighted pooling of the sample counts."""
    num = 0.0
    den = 0.0
    for st in e.samples:
        w = common_count(st.ref, e.given)
        num += w * st.r
        den += w * st.s
    if den == 0:
        raise ZeroWeightError("no sample class shares any property with the given set")
    return Belief.point(num / den)


def interval_to_mass(iv: FrequencyInterval | Belief) -> MassFunction:
    """[lo, hi] reads as: lo committed for, 1-hi committed against."""
    return MassFunction(yes=iv.lo, no=1.0 - iv.hi, unknown=iv.hi - iv.lo)


def dempster_combine(a: MassFunction, b: MassFunction) -> MassFunction:
    """Dempster's rule on the binary frame.

    The conflict K = a.yes*b.no + a.no*b.yes is renormalized away; K = 1
    (two certain, opposite sources) has no defined combination and raises
    :class:`TotalConflictError`.  Combining with the vacuous mass changes
    nothing.
    """
    k = a.yes * b.no + a.no * b.yes
    if k >= 1.0 - _TOL:
        raise TotalConflictError("sources are in total conflict (K = 1)")
    scale = 1.0 / (1.0 - k)
    return MassFunction(
        yes=(a.yes * b.yes + a.yes * b.unknown + a.unknown * b.yes) * scale,
        no=(a.no * b.no + a.no * b.unknown + a.unknown * b.no) * scale,
        unknown=(a.unknown * b.unknown) * scale,
    )


def _sample_intervals(e: EvidenceBundle, level: float) -> list[FrequencyInterval]:
    return [
        confidence_interval(st.s, st.r, level, ref=st.ref, target=st.target)
        for st in e.samples
    ]


def _fold_masses(ivs: Sequence[FrequencyInterval]) -> MassFunction:
    ordered = sorted(ivs, key=lambda iv: iv.ref.sort_key())
    mass = MassFunction.vacuous()
    for iv in ordered:
        mass = dempster_combine(mass, interval_to_mass(iv))
    return mass


def naive_dempster(e: EvidenceBundle, level: float | None = None) -> Belief:
    mass = _fold_masses(_sample_intervals(e, level or e.confidence))
    return Belief.interval(mass.belief, mass.plausibility)


def maximal_dempster(e: EvidenceBundle, level: float | None = None) -> Belief:
    kept = _maximal(e.samples)
    ivs = [
        confidence_interval(st.s, st.r, level or e.confidence, ref=st.ref, target=st.target)
        for st in kept
    ]
    mass = _fold_masses(ivs)
    return Belief.interval(mass.belief, mass.plausibility)


def _candidate_pool(e: EvidenceBundle, level: float) -> list[FrequencyInterval]:
    samples = _sample_intervals(e, level)
    pool = list(samples)
    for a, b in combinations(samples, 2):
        if not (a.ref.properties & b.ref.properties) - {ALWAYS_TRUE}:
            pool.append(combine_xp(a, b))
    return pool


def _select_belief(e: EvidenceBundle, level: float, selector) -> Belief:
    pool = _candidate_pool(e, level)
    try:
        chosen = selector(pool)
    except NoConsideredIntervalError:
        fallback = [
            iv
            for iv in pool
            if iv.provenance == "sample" and iv.ref.properties == frozenset({ALWAYS_TRUE})
        ]
        if fallback:
            chosen = fallback[0]
        else:
            return Belief.interval(0.0, 1.0)
    return Belief.interval(chosen.lo, chosen.hi)


def kyburg_belief(e: EvidenceBundle, level: float | None = None) -> Belief:
    return _select_belief(e, level or e.confidence, kyburg_select)


def loui_belief(e: EvidenceBundle, level: float | None = None) -> Belief:
    return _select_belief(e, level or e.confidence, loui_select)


def adaptive_confidence(
    pot: float, c_lo: float, c_hi: float, pot_min: float, pot_max: float
) -> float:
    """Stake-sensitive confidence level.

    The smallest pot gets ``c_hi``, the largest ``c_lo``, linearly in
    between and clamped at the ends; a degenerate pot range returns the
    midpoint of the two levels.
    """
    if not (0.0 < c_lo < 1.0 and 0.0 < c_hi < 1.0):
        raise ValueError("confidence bounds must lie in (0,1)")
    if pot_max <= pot_min:
        return (c_lo + c_hi) / 2.0
    t = (pot - pot_min) / (pot_max - pot_min)
    t = min(1.0, max(0.0, t))
    return c_hi + (c_lo - c_hi) * t


@dataclass(frozen=True)
class CalculusSettings:
    """Run-level knobs the registry wrappers need beyond the bundle."""

    confidence: float = 0.9
    dempster_confidence: float = 0.9
    adaptive_low: float = 0.7
    adaptive_high: float = 0.9
    pot_min: float = 1.0
    pot_max: float = 1.0


Method = Callable[[EvidenceBundle, CalculusSettings, Optional[float]], Belief]


def _wrap_plain(fn) -> Method:
    def method(e: EvidenceBundle, settings: CalculusSettings, pot: Optional[float]) -> Belief:
        return fn(e)

    return method


def _wrap_level(fn, which: str) -> Method:
    def method(e: EvidenceBundle, settings: CalculusSettings, pot: Optional[float]) -> Belief:
        return fn(e, level=getattr(settings, which))

    return method


def _kyburg_adaptive(e: EvidenceBundle, settings: CalculusSettings, pot: Optional[float]) -> Belief:
    if pot is None:
        raise CalculusError("kyburg-adaptive needs the pot at stake")
    level = adaptive_confidence(
        pot, settings.adaptive_low, settings.adaptive_high, settings.pot_min, settings.pot_max
    )
    return kyburg_belief(e, level=level)


REGISTRY: Mapping[str, Method] = {
    "naive-average": _wrap_plain(naive_average),
    "maximal-average": _wrap_plain(maximal_average),
    "similarity": _wrap_plain(similarity),
    "naive-dempster": _wrap_level(naive_dempster, "dempster_confidence"),
    "maximal-dempster": _wrap_level(maximal_dempster, "dempster_confidence"),
    "kyburg": _wrap_level(kyburg_belief, "confidence"),
    "kyburg-adaptive": _kyburg_adaptive,
    "loui": _wrap_level(loui_belief, "confidence"),
}

METHOD_NAMES: tuple[str, ...] = tuple(REGISTRY)
