"""The lottery game that scores a belief.

Each query comes with an offer: a pot L and a payoff ratio rho, so the ante
is rho*L.  Three choices are open:

* ante — stake the ante; win L - ante if the target holds, lose the ante
  otherwise;
* offer-pot — take the other side; lose L - ante if the target holds, win
  the ante otherwise;
* abstain — no stake, no score.

The two sides are exact mirrors, so any settlement is zero-sum against an
opponent holding the opposite choice.  A point belief b antes when b exceeds
rho (beyond a hair's tolerance), offers the pot when below, abstains at
indifference; an interval belief abstains whenever the ratio falls inside
it.  Forced play never abstains: the midpoint decides, ties going to the
ante side.

Money is tracked with exact rational arithmetic so a long run of half-unit
(or belief-derived) stakes never drifts.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .calculi import Belief

__all__ = [
    "Choice",
    "LotteryOffer",
    "Ledger",
    "MetricRow",
    "decide",
    "decide_forced",
    "settle",
    "metrics",
    "pareto_frontier",
    "expected_net",
    "expected_yield",
]

POINT_TOL = 1e-12


class Choice(str, enum.Enum):
    ANTE = "ante"
    OFFER_POT = "offer-pot"
    ABSTAIN = "abstain"


@dataclass(frozen=True)
class LotteryOffer:
    pot: float
    ratio: float

    def __post_init__(self) -> None:
        if not self.pot > 0:
            raise ValueError(f"pot must be positive: {self.pot}")
        if not 0.0 < self.ratio < 1.0:
            raise ValueError(f"ratio must lie strictly inside (0,1): {self.ratio}")

    @property
    def ante(self) -> float:
        return self.ratio * self.pot

    def exact_ante(self) -> Fraction:
        return Fraction(self.ratio) * Fraction(self.pot)

    def exact_pot(self) -> Fraction:
        return Fraction(self.pot)


def decide(belief: Belief, offer: LotteryOffer) -> Choice:
    """The abstention-aware choice rule."""
    if belief.is_point:
        b = belief.lo
        if b > offer.ratio + POINT_TOL:
            return Choice.ANTE
        if b < offer.ratio - POINT_TOL:
            return Choice.OFFER_POT
        return Choice.ABSTAIN
    if belief.lo > offer.ratio:
        return Choice.ANTE
    if belief.hi < offer.ratio:
        return Choice.OFFER_POT
    return Choice.ABSTAIN


def decide_forced(belief: Belief, offer: LotteryOffer) -> Choice:
    """Forced play: midpoint against the ratio, ties ante."""
    return Choice.ANTE if belief.midpoint >= offer.ratio else Choice.OFFER_POT


def settle(choice: Choice, offer: LotteryOffer, target_held: bool) -> Fraction:
    """Signed payoff of the choice once the truth is known."""
    if choice is Choice.ABSTAIN:
        return Fraction(0)
    ante = offer.exact_ante()
    spread = offer.exact_pot() - ante
    if choice is Choice.ANTE:
        return spread if target_held else -ante
    return -spread if target_held else ante


@dataclass
class Ledger:
    """Running totals for one subject; gains and losses both accumulate as
    nonnegative magnitudes."""

    gains: Fraction = field(default_factory=lambda: Fraction(0))
    losses: Fraction = field(default_factory=lambda: Fraction(0))
    abstentions: int = 0
    bets: int = 0

    def record(self, choice: Choice, delta: Fraction) -> None:
        if choice is Choice.ABSTAIN:
            if delta != 0:
                raise ValueError("an abstention cannot settle for money")
            self.abstentions += 1
            return
        self.bets += 1
        if delta >= 0:
            self.gains += delta
        else:
            self.losses += -delta

    @property
    def net(self) -> Fraction:
        return self.gains - self.losses

    def yield_rate(self) -> Optional[float]:
        staked = self.gains + self.losses
        return float(self.gains / staked) if staked > 0 else None


@dataclass(frozen=True)
class MetricRow:
    """One line of a results table; None marks an undefined ratio."""

    net: float
    pct_max: Optional[float]
    pct_rel: Optional[float]
    gains: float
    losses: float
    gain_loss: Optional[float]
    yield_rate: Optional[float]
    abstentions: int


def metrics(
    ledger: Ledger,
    perfect: Fraction | float | None = None,
    best_net: Fraction | float | None = None,
) -> MetricRow:
    """Summary statistics; ratios with empty denominators come back None.

    ``perfect`` is the winning side's total gain over the whole stream (the
    score of an omniscient player), ``best_net`` the best net among the rows
    being compared.
    """
    pct_max = None
    if perfect is not None and perfect > 0:
        pct_max = float(100 * ledger.net / Fraction(perfect))
    pct_rel = None
    if best_net is not None and best_net != 0:
        pct_rel = float(100 * ledger.net / Fraction(best_net))
    gl = float(ledger.gains / ledger.losses) if ledger.losses > 0 else None
    return MetricRow(
        net=float(ledger.net),
        pct_max=pct_max,
        pct_rel=pct_rel,
        gains=float(ledger.gains),
        losses=float(ledger.losses),
        gain_loss=gl,
        yield_rate=ledger.yield_rate(),
        abstentions=ledger.abstentions,
    )


def _dominated(p: tuple[float, float], q: tuple[float, float]) -> bool:
    return q[0] >= p[0] and q[1] >= p[1] and q != p


def pareto_frontier(
    points: Sequence[tuple[float, float]],
) -> tuple[list[tuple[float, float]], list[tuple[float, float]]]:
    """Undominated (net, yield) points, and the mixed-strategy hull.

    Returns ``(frontier, hull)``.  The frontier keeps every distinct point
    no other point beats in both coordinates.  The hull keeps the frontier
    points that survive mixing: vertices of the upper-right convex boundary,
    since a blend of two strategies plays a convex combination.
    """
    distinct = sorted(set(points))
    frontier = [p for p in distinct if not any(_dominated(p, q) for q in distinct)]
    if len(frontier) <= 2:
        return frontier, list(frontier)
    # frontier sorted by net ascending has yield strictly descending
    hull: list[tuple[float, float]] = []
    for p in frontier:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            cross = (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1)
            if cross >= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return frontier, hull


def expected_net(pots: Iterable[float], p: float) -> float:
    """Expected net at even odds when every guess is right with chance p."""
    return sum(pots) * (p - 0.5)


def expected_yield(p: float) -> float:
    """Expected yield at even odds equals the per-guess correctness."""
    return p
