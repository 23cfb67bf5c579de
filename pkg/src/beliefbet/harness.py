"""Scenario runner: many queries, every calculus, one fair stream.

A scenario fixes the familiarization record size, how many properties are
announced per query, the lottery pots, how the payoff ratio is set, the
confidence level, and a seed.  Each repetition draws a test snapshot from
the held-out pool, a target, and the announced properties (uniformly from
what actually holds in the test snapshot, never the target or its
complement); the record is summarized once, and every method receives the
identical evidence bundle and offer.  A method that raises a calculus error
abstains on that query and the error is tagged in the trace.

Odds schemes:

* fixed — one ratio for the whole run;
* per-method — the named method's belief (midpoint when interval) sets the
  ratio each query;
* average-of-beliefs — the mean of all methods' midpoints;
* random-sweep — uniform choice from a configured ratio grid.

Belief-derived ratios are clamped to [1e-6, 1 - 1e-6].

Everything downstream of the seed is deterministic: rerunning a config
reproduces the trace byte for byte.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .betting import (
    Choice,
    Ledger,
    LotteryOffer,
    decide,
    decide_forced,
    metrics,
    pareto_frontier,
    settle,
)
from .calculi import (
    Belief,
    CalculusError,
    CalculusSettings,
    EvidenceBundle,
    REGISTRY,
)
from .dataio import ReportLine, SnapshotRecord, close_all, split_corpus
from .props import ALWAYS_TRUE, Atom, Rule, StateDescription, close
from .refclass import fmt_number, summarize

__all__ = [
    "ConfigError",
    "FixedOdds",
    "PerMethodOdds",
    "AverageOdds",
    "RandomSweepOdds",
    "ScenarioConfig",
    "QueryInstance",
    "PreparedQuery",
    "RunResult",
    "set_odds",
    "prepare_queries",
    "run_scenario",
    "confidence_sweep",
    "calibration_run",
    "announced_sweep",
    "subject_label",
    "DEFAULT_METHODS",
]

RATIO_CLAMP = 1e-6

DEFAULT_METHODS = (
    "naive-average",
    "maximal-average",
    "similarity",
    "naive-dempster",
    "maximal-dempster",
    "kyburg",
    "loui",
)


class ConfigError(ValueError):
    """A scenario configuration that cannot be run."""


@dataclass(frozen=True)
class FixedOdds:
    ratio: float


@dataclass(frozen=True)
class PerMethodOdds:
    method: str


@dataclass(frozen=True)
class AverageOdds:
    pass


@dataclass(frozen=True)
class RandomSweepOdds:
    ratios: tuple[float, ...]


OddsScheme = FixedOdds | PerMethodOdds | AverageOdds | RandomSweepOdds


@dataclass(frozen=True)
class ScenarioConfig:
    seed: int
    data_points: int = 60
    announced_count: int = 8
    repetitions: int = 50
    methods: tuple[str, ...] = DEFAULT_METHODS
    lottery_pots: tuple[float, ...] = (10.0,)
    odds: OddsScheme = FixedOdds(0.1)
    confidence: float = 0.9
    dempster_confidence: float = 0.9
    adaptive_range: tuple[float, float] = (0.7, 0.9)
    max_classes: Optional[int] = None
    targets: Optional[tuple[Atom, ...]] = None
    forced: bool = False

    def validate(self) -> None:
        if self.data_points < 1:
            raise ConfigError("data_points must be at least 1")
        if not 1 <= self.announced_count <= 16:
            raise ConfigError("announced_count must lie in 1..16")
        if self.repetitions < 1:
            raise ConfigError("repetitions must be at least 1")
        if not self.methods:
            raise ConfigError("at least one method is required")
        for name in self.methods:
            if name not in REGISTRY:
                raise ConfigError(f"unknown method {name!r}")
        if not self.lottery_pots or any(p <= 0 for p in self.lottery_pots):
            raise ConfigError("lottery pots must be positive")
        if isinstance(self.odds, FixedOdds) and not 0.0 < self.odds.ratio < 1.0:
            raise ConfigError("fixed odds ratio must lie in (0,1)")
        if isinstance(self.odds, PerMethodOdds) and self.odds.method not in REGISTRY:
            raise ConfigError(f"odds method {self.odds.method!r} is unknown")
        if isinstance(self.odds, RandomSweepOdds):
            if not self.odds.ratios or any(not 0.0 < r < 1.0 for r in self.odds.ratios):
                raise ConfigError("sweep ratios must be a nonempty list inside (0,1)")
        for c in (self.confidence, self.dempster_confidence, *self.adaptive_range):
            if not 0.0 < c < 1.0:
                raise ConfigError(f"confidence levels must lie in (0,1): {c}")
        if self.max_classes is not None and self.max_classes < 1:
            raise ConfigError("max_classes must be positive")

    def settings(self) -> CalculusSettings:
        return CalculusSettings(
            confidence=self.confidence,
            dempster_confidence=self.dempster_confidence,
            adaptive_low=self.adaptive_range[0],
            adaptive_high=self.adaptive_range[1],
            pot_min=min(self.lottery_pots),
            pot_max=max(self.lottery_pots),
        )


@dataclass(frozen=True)
class QueryInstance:
    index: int
    snapshot_id: str
    announced: tuple[Atom, ...]
    target: Atom
    pot: float
    ratio: float
    truth: bool
    note: Optional[str] = None

    @property
    def offer(self) -> LotteryOffer:
        return LotteryOffer(self.pot, self.ratio)


@dataclass(frozen=True)
class PreparedQuery:
    query: QueryInstance
    bundle: EvidenceBundle
    beliefs: dict[str, Belief]
    errors: dict[str, str]


def set_odds(
    scheme: OddsScheme,
    beliefs: Mapping[str, Belief],
    rng: Optional[random.Random] = None,
) -> float:
    """Payoff ratio for one query under the scheme, clamped into (0,1)."""
    if isinstance(scheme, FixedOdds):
        return scheme.ratio
    if isinstance(scheme, RandomSweepOdds):
        if rng is None:
            raise ValueError("random-sweep odds need a random stream")
        return rng.choice(scheme.ratios)
    if isinstance(scheme, PerMethodOdds):
        b = beliefs.get(scheme.method)
        raw = b.midpoint if b is not None else 0.5
    elif isinstance(scheme, AverageOdds):
        mids = [b.midpoint for b in beliefs.values()]
        raw = sum(mids) / len(mids) if mids else 0.5
    else:
        raise TypeError(f"unknown odds scheme: {scheme!r}")
    return min(1.0 - RATIO_CLAMP, max(RATIO_CLAMP, raw))


def _derive_targets(snaps: Sequence[StateDescription]) -> tuple[Atom, ...]:
    found = {
        a
        for snap in snaps
        for a in snap.atoms
        if a.predicate == "logged-on" and not a.negated
    }
    return tuple(sorted(found))


def prepare_queries(
    cfg: ScenarioConfig,
    data: Sequence[SnapshotRecord],
    pool: Sequence[SnapshotRecord],
    rules: Sequence[Rule],
) -> list[PreparedQuery]:
    """The frozen query stream: summaries, beliefs, offers, ground truth.

    Only the stream RNG is consumed, and belief computation never touches
    it, so two configs differing in methods or confidence levels see the
    same snapshots, targets, announcements, and pots.
    """
    cfg.validate()
    if not pool:
        raise ConfigError("empty test pool; lower data_points or enlarge the corpus")
    closed_data = close_all(data, rules)
    closed_pool = close_all(pool, rules)
    targets = cfg.targets or _derive_targets(closed_data + closed_pool)
    if not targets:
        raise ConfigError("no target atoms available (nobody ever logged on?)")
    settings = cfg.settings()
    method_names = list(cfg.methods)
    if isinstance(cfg.odds, PerMethodOdds) and cfg.odds.method not in method_names:
        method_names.append(cfg.odds.method)

    rng = random.Random(f"stream:{cfg.seed}")
    out: list[PreparedQuery] = []
    for i in range(cfg.repetitions):
        pick = rng.randrange(len(closed_pool))
        test, test_raw = closed_pool[pick], pool[pick]
        target = targets[rng.randrange(len(targets))]
        available = sorted(test.atoms - {target, target.complement(), ALWAYS_TRUE})
        take = min(cfg.announced_count, len(available))
        announced = tuple(sorted(rng.sample(available, take)))
        note = None if take == cfg.announced_count else f"only {take} properties available"
        pot = rng.choice(cfg.lottery_pots)

        samples = summarize(closed_data, announced, target, rules, cfg.max_classes)
        given = close(frozenset(announced), rules).atoms
        bundle = EvidenceBundle(tuple(samples), given, target, cfg.confidence)
        beliefs: dict[str, Belief] = {}
        errors: dict[str, str] = {}
        for name in method_names:
            try:
                beliefs[name] = REGISTRY[name](bundle, settings, pot)
            except CalculusError as exc:
                errors[name] = type(exc).__name__
        ratio = set_odds(cfg.odds, beliefs, rng)
        query = QueryInstance(
            index=i,
            snapshot_id=test_raw.timestamp.isoformat(timespec="seconds"),
            announced=announced,
            target=target,
            pot=pot,
            ratio=ratio,
            truth=target in test.atoms,
            note=note,
        )
        out.append(PreparedQuery(query, bundle, beliefs, errors))
    return out


def subject_label(name: str, cfg: ScenarioConfig) -> str:
    base = name.replace("-", " ")
    if name == "kyburg-adaptive":
        lo, hi = cfg.adaptive_range
        return f"kyburg ({fmt_number(lo)}, {fmt_number(hi)})"
    if name in ("kyburg", "loui"):
        return f"{base} ({fmt_number(cfg.confidence)})"
    return base


@dataclass
class RunResult:
    config: ScenarioConfig
    lines: list[ReportLine]
    frontier: list[tuple[float, float]]
    hull: list[tuple[float, float]]
    perfect: Fraction
    best_net: Fraction
    trace: list[dict]
    ledgers: dict[str, Ledger]
    deltas: dict[str, list[Fraction]] = field(repr=False, default_factory=dict)
    stable_after: int = 1
    dempster_abstention_ordered: Optional[bool] = None


def run_scenario(
    cfg: ScenarioConfig,
    records: Sequence[SnapshotRecord],
    rules: Sequence[Rule],
) -> RunResult:
    """Split, prepare, play, and tabulate one scenario."""
    cfg.validate()
    try:
        data, pool = split_corpus(records, cfg.data_points, cfg.seed)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    prepared = prepare_queries(cfg, data, pool, rules)

    ledgers = {name: Ledger() for name in cfg.methods}
    deltas: dict[str, list[Fraction]] = {name: [] for name in cfg.methods}
    perfect = Fraction(0)
    trace: list[dict] = []
    rankings: list[tuple[str, ...]] = []
    decide_fn = decide_forced if cfg.forced else decide
    for pq in prepared:
        q = pq.query
        offer = q.offer
        win = offer.exact_pot() - offer.exact_ante() if q.truth else offer.exact_ante()
        perfect += win
        entry_methods = {}
        for name in cfg.methods:
            belief = pq.beliefs.get(name)
            if belief is None:
                choice, delta = Choice.ABSTAIN, Fraction(0)
            else:
                choice = decide_fn(belief, offer)
                delta = settle(choice, offer, q.truth)
            ledgers[name].record(choice, delta)
            deltas[name].append(delta)
            entry_methods[name] = {
                "belief": belief.as_dict() if belief is not None else None,
                "error": pq.errors.get(name),
                "choice": choice.value,
                "delta": float(delta),
            }
        trace.append(
            {
                "query": q.index,
                "snapshot": q.snapshot_id,
                "announced": [a.compact() for a in q.announced],
                "target": q.target.compact(),
                "truth": q.truth,
                "pot": q.pot,
                "ratio": q.ratio,
                "note": q.note,
                "methods": entry_methods,
            }
        )
        rankings.append(
            tuple(sorted(cfg.methods, key=lambda n: (-ledgers[n].net, n)))
        )

    stable_after = 1
    for idx in range(len(rankings) - 1, -1, -1):
        if rankings[idx] != rankings[-1]:
            stable_after = idx + 2
            break

    best_net = max(ledgers[n].net for n in cfg.methods)
    lines = [
        ReportLine(
            subject=subject_label(name, cfg),
            data=str(cfg.data_points),
            row=metrics(ledgers[name], perfect if perfect > 0 else None, best_net),
        )
        for name in cfg.methods
    ]
    scored = [
        (ln.row.net, ln.row.yield_rate) for ln in lines if ln.row.yield_rate is not None
    ]
    frontier, hull = pareto_frontier(scored) if scored else ([], [])
    ordered = None
    if "naive-dempster" in cfg.methods and "maximal-dempster" in cfg.methods:
        ordered = (
            ledgers["maximal-dempster"].abstentions >= ledgers["naive-dempster"].abstentions
        )
    return RunResult(
        config=cfg,
        lines=lines,
        frontier=frontier,
        hull=hull,
        perfect=perfect,
        best_net=best_net,
        trace=trace,
        ledgers=ledgers,
        deltas=deltas,
        stable_after=stable_after,
        dempster_abstention_ordered=ordered,
    )


@dataclass(frozen=True)
class SweepResult:
    lines: list[ReportLine]
    results: dict[str, RunResult]


def confidence_sweep(
    cfg: ScenarioConfig,
    records: Sequence[SnapshotRecord],
    rules: Sequence[Rule],
    levels: Sequence[float | str] = (0.7, 0.9, "adaptive"),
) -> SweepResult:
    """The kyburg family across confidence levels on one identical stream.

    Requires a belief-independent odds scheme so the streams really are
    identical offers; %rel in the combined table is against the best of the
    swept variants.
    """
    if isinstance(cfg.odds, (PerMethodOdds, AverageOdds)):
        raise ConfigError("confidence_sweep needs a belief-independent odds scheme")
    results: dict[str, RunResult] = {}
    for level in levels:
        if level == "adaptive":
            variant = replace(cfg, methods=("kyburg-adaptive",))
            lo, hi = cfg.adaptive_range
            label = f"kyburg ({fmt_number(lo)}, {fmt_number(hi)})"
        else:
            variant = replace(cfg, methods=("kyburg",), confidence=float(level))
            label = f"kyburg ({fmt_number(level)})"
        results[label] = run_scenario(variant, records, rules)
    best = max(res.ledgers[res.config.methods[0]].net for res in results.values())
    lines = []
    for label, res in results.items():
        ledger = res.ledgers[res.config.methods[0]]
        lines.append(
            ReportLine(
                subject=label,
                data=str(cfg.data_points),
                row=metrics(ledger, res.perfect if res.perfect > 0 else None, best),
            )
        )
    return SweepResult(lines=lines, results=results)


@dataclass(frozen=True)
class CalibrationResult:
    queries: int
    guesses: int
    correct: int
    pooled_rate: float
    se: float
    deviation_se: float
    per_method: dict[str, float]


def calibration_run(
    cfg: ScenarioConfig,
    records: Sequence[SnapshotRecord],
    rules: Sequence[Rule],
) -> CalibrationResult:
    """Forced play at average-of-beliefs odds; how far is hit rate from 1/2?

    With the ratio sitting at the methods' own average, the methods split
    around it and pooled correctness should hover at one half.  The standard
    error is clustered by query (all guesses on a query share its truth),
    which is the honest denominator for the deviation.
    """
    if cfg.repetitions < 200:
        raise ConfigError("calibration needs at least 200 repetitions for power")
    run_cfg = replace(cfg, odds=AverageOdds(), forced=True)
    result = run_scenario(run_cfg, records, rules)
    fractions: list[float] = []
    guesses = correct = 0
    per_method_hits = {name: 0 for name in run_cfg.methods}
    per_method_n = {name: 0 for name in run_cfg.methods}
    for entry in result.trace:
        truth = entry["truth"]
        q_correct = q_total = 0
        for name, mrec in entry["methods"].items():
            if mrec["error"] is not None:
                continue
            hit = (mrec["choice"] == Choice.ANTE.value) == truth
            q_total += 1
            q_correct += int(hit)
            per_method_n[name] += 1
            per_method_hits[name] += int(hit)
        if q_total:
            fractions.append(q_correct / q_total)
            guesses += q_total
            correct += q_correct
    n = len(fractions)
    mean = sum(fractions) / n
    var = sum((c - mean) ** 2 for c in fractions) / (n - 1) if n > 1 else 0.0
    se = (var / n) ** 0.5
    dev = abs(mean - 0.5) / se if se > 0 else float("inf")
    return CalibrationResult(
        queries=n,
        guesses=guesses,
        correct=correct,
        pooled_rate=mean,
        se=se,
        deviation_se=dev,
        per_method={
            name: per_method_hits[name] / per_method_n[name]
            for name in run_cfg.methods
            if per_method_n[name]
        },
    )


def announced_sweep(
    cfg: ScenarioConfig,
    records: Sequence[SnapshotRecord],
    rules: Sequence[Rule],
    counts: Sequence[int] = (3, 8, 16),
) -> dict[str, dict[int, Optional[float]]]:
    """%rel per method as the announced-property budget grows."""
    table: dict[str, dict[int, Optional[float]]] = {name: {} for name in cfg.methods}
    for count in counts:
        res = run_scenario(replace(cfg, announced_count=count), records, rules)
        for name, ln in zip(cfg.methods, res.lines):
            table[name][count] = ln.row.pct_rel
    return table
