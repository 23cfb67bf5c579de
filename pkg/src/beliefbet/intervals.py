"""Frequency intervals: estimation, cross-product combination, selection.

A sample statement ``(s, r)`` about a class licenses an interval estimate of
the target frequency.  The rule used here is the equal-tailed exact binomial
interval obtained by inverting the binomial tails (computed through beta
quantiles):

    lo = 0            if r = 0, else the p with P[X >= r | s, p] = (1-c)/2
    hi = 1            if r = s, else the p with P[X <= r | s, p] = (1-c)/2

Its realized coverage is at least ``c`` at every parameter value, it always
contains r/s, and raising ``c`` widens it.

Estimates from property-disjoint classes can be combined through the
cross-product construction: with g(p, q) = pq / (1 - p - q + 2pq), the
combined interval is [g(a.lo, b.lo), g(a.hi, b.hi)].  g is nondecreasing in
each argument (its partial in p has sign q(1-q)), so the endpoints stay
ordered.  g(0, 1) and g(1, 0) are singular; both are taken to be 0, with a
warning, since nothing sensible can be said when one factor is sure and the
other sure of the opposite.

Selection among rival intervals follows the specificity discipline:
intervals disagree when neither nests in the other, and a disagreement only
disqualifies a candidate whose class is not strictly more specific than the
other's.  ``kyburg_select`` returns the narrowest candidate that survives
every disagreement this way, and fails when nothing does; ``loui_select``
falls back to the convex hull of the undefeated candidates instead of
failing.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from scipy.stats import beta as _beta

from .props import ALWAYS_TRUE, Atom
from .refclass import AnyClass, ProductClass, ReferenceClass, fmt_number

__all__ = [
    "FrequencyInterval",
    "NoConsideredIntervalError",
    "confidence_interval",
    "g",
    "combine_xp",
    "kyburg_select",
    "loui_select",
]

_TOL = 1e-12

log = logging.getLogger(__name__)


class NoConsideredIntervalError(ValueError):
    """Every candidate was disqualified by a disagreement it did not dominate."""


@dataclass(frozen=True)
class FrequencyInterval:
    """An interval estimate of the target frequency for one class.

    ``provenance`` is ``"sample"`` for intervals estimated directly from a
    sample statement and ``"combined"`` for cross-product results; combined
    intervals never feed another combination.
    """

    ref: AnyClass
    target: Optional[Atom]
    lo: float
    hi: float
    confidence: float
    provenance: str = "sample"

    def __post_init__(self) -> None:
        if not 0.0 <= self.lo <= self.hi <= 1.0:
            raise ValueError(f"bad interval [{self.lo}, {self.hi}]")
        if not 0.0 < self.confidence < 1.0:
            raise ValueError(f"confidence must lie in (0,1): {self.confidence}")
        if self.provenance not in ("sample", "combined"):
            raise ValueError(f"unknown provenance: {self.provenance!r}")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def midpoint(self) -> float:
        return (self.lo + self.hi) / 2.0

    def nests_in(self, other: "FrequencyInterval") -> bool:
        return other.lo <= self.lo + _TOL and self.hi <= other.hi + _TOL

    def disagrees_with(self, other: "FrequencyInterval") -> bool:
        return not (self.nests_in(other) or other.nests_in(self))

    def sexp(self) -> str:
        if self.target is None:
            tgt = "()"
        elif isinstance(self.ref, ProductClass):
            tgt = f"(X {self.target.sexp()} {self.target.sexp()})"
        else:
            tgt = self.target.sexp()
        return f"(% ({self.ref.sexp()} {tgt}) ({fmt_number(self.lo)} {fmt_number(self.hi)}))"


def confidence_interval(
    s: int,
    r: int,
    c: float,
    ref: AnyClass | None = None,
    target: Optional[Atom] = None,
) -> FrequencyInterval:
    """Exact equal-tailed binomial interval for r successes in s trials.

    Guarantees: contains r/s; coverage >= c for every underlying frequency;
    monotone in c (a higher level yields a superset interval).
    """
    if s < 1:
        raise ValueError("sample size must be at least 1")
    if not 0 <= r <= s:
        raise ValueError(f"bad counts: r={r} s={s}")
    if not 0.0 < c < 1.0:
        raise ValueError(f"confidence level must lie in (0,1): {c}")
    a2 = (1.0 - c) / 2.0
    lo = 0.0 if r == 0 else float(_beta.ppf(a2, r, s - r + 1))
    hi = 1.0 if r == s else float(_beta.ppf(1.0 - a2, r + 1, s - r))
    return FrequencyInterval(
        ref=ref if ref is not None else ReferenceClass.always_true(),
        target=target,
        lo=min(lo, r / s),
        hi=max(hi, r / s),
        confidence=c,
    )


def g(p: float, q: float) -> float:
    """Cross-product frequency: g(p, q) = pq / (1 - p - q + 2pq).

    The denominator equals (1-p)(1-q) + pq, which vanishes on [0,1]^2 only
    at (0,1) and (1,0); those corners are mapped to 0 with a logged warning.
    """
    if not (0.0 <= p <= 1.0 and 0.0 <= q <= 1.0):
        raise ValueError(f"g() arguments must lie in [0,1]: {p}, {q}")
    denom = 1.0 - p - q + 2.0 * p * q
    if denom == 0.0:
        log.warning("g(%s, %s) is singular; returning 0 by convention", p, q)
        return 0.0
    return min(1.0, max(0.0, p * q / denom))


def combine_xp(a: FrequencyInterval, b: FrequencyInterval) -> FrequencyInterval:
    """Cross-product combination of two sample intervals.

    Only direct sample estimates combine, only pairwise, and only when the
    factor classes share no property beyond always-true.  The result's class
    is the paired product, whose property set is the union of the factors'.
    """
    if a.provenance != "sample" or b.provenance != "sample":
        raise ValueError("only sample intervals may be combined")
    if a.target != b.target:
        raise ValueError("cannot combine intervals about different targets")
    overlap = (a.ref.properties & b.ref.properties) - {ALWAYS_TRUE}
    if overlap:
        names = ", ".join(at.compact() for at in sorted(overlap))
        raise ValueError(f"classes share properties beyond always-true: {names}")
    return FrequencyInterval(
        ref=ProductClass("XP", a.ref, b.ref),
        target=a.target,
        lo=g(a.lo, b.lo),
        hi=g(a.hi, b.hi),
        confidence=min(a.confidence, b.confidence),
        provenance="combined",
    )


def _considered(candidates: Sequence[FrequencyInterval]) -> list[FrequencyInterval]:
    out = []
    for x in candidates:
        ok = True
        for y in candidates:
            if y is x or not x.disagrees_with(y):
                continue
            if not x.ref.properties > y.ref.properties:
                ok = False
                break
        if ok:
            out.append(x)
    return out


def _choice_key(iv: FrequencyInterval) -> tuple:
    return (round(iv.width, 12), -round(iv.lo, 12), iv.ref.sort_key())


def kyburg_select(candidates: Sequence[FrequencyInterval]) -> FrequencyInterval:
    """Narrowest candidate whose every disagreement it wins on specificity.

    Ties on width prefer the larger lower endpoint, then the smaller class
    key.  Raises :class:`NoConsideredIntervalError` when mutual disagreement
    among incomparable classes leaves nothing considered.
    """
    if not candidates:
        raise ValueError("no candidate intervals")
    considered = _considered(candidates)
    if not considered:
        raise NoConsideredIntervalError(
            f"none of the {len(candidates)} candidate intervals is considered"
        )
    return min(considered, key=_choice_key)


def loui_select(candidates: Sequence[FrequencyInterval]) -> FrequencyInterval:
    """Like :func:`kyburg_select`, but never fails.

    When no candidate is considered, the undefeated ones (those not
    contradicted by a strictly more specific class) span the answer: the
    result is their convex hull, attributed to the always-true class since
    it pools several classes' claims.
    """
    if not candidates:
        raise ValueError("no candidate intervals")
    try:
        return kyburg_select(candidates)
    except NoConsideredIntervalError:
        undefeated = [
            x
            for x in candidates
            if not any(
                x.disagrees_with(y) and y.ref.properties > x.ref.properties
                for y in candidates
            )
        ]
        assert undefeated, "a specificity-maximal candidate can never be defeated"
        return FrequencyInterval(
            ref=ReferenceClass.always_true(),
            target=undefeated[0].target,
            lo=min(x.lo for x in undefeated),
            hi=max(x.hi for x in undefeated),
            confidence=min(x.confidence for x in undefeated),
            provenance="combined",
        )
