"""Reference-class evidence, rival readings of it, and a betting table.

The package turns a record of machine-room snapshots into sample statements
about reference classes, runs competing uncertainty calculi over the same
evidence, and scores them all in repeated lotteries.  ``demos/`` in the
source tree walks through each piece.
"""

from .betting import (
    Choice,
    Ledger,
    LotteryOffer,
    MetricRow,
    decide,
    decide_forced,
    expected_net,
    expected_yield,
    metrics,
    pareto_frontier,
    settle,
)
from .calculi import (
    Belief,
    CalculusError,
    CalculusSettings,
    EvidenceBundle,
    MassFunction,
    METHOD_NAMES,
    REGISTRY,
    TotalConflictError,
    ZeroWeightError,
    adaptive_confidence,
    dempster_combine,
    interval_to_mass,
)
from .dataio import (
    GeneratorModel,
    ReportLine,
    SnapshotRecord,
    close_all,
    default_model,
    default_rules,
    generate,
    load_corpus,
    load_model,
    split_corpus,
    store_corpus,
    store_model,
    vocabulary,
    write_report,
    write_trace,
)
from .harness import (
    AverageOdds,
    ConfigError,
    DEFAULT_METHODS,
    FixedOdds,
    PerMethodOdds,
    RandomSweepOdds,
    RunResult,
    ScenarioConfig,
    announced_sweep,
    calibration_run,
    confidence_sweep,
    prepare_queries,
    run_scenario,
    set_odds,
)
from .intervals import (
    FrequencyInterval,
    NoConsideredIntervalError,
    combine_xp,
    confidence_interval,
    g,
    kyburg_select,
    loui_select,
)
from .props import (
    ALWAYS_TRUE,
    Atom,
    InconsistencyError,
    Rule,
    StateDescription,
    close,
    holds,
    load_rules,
    parse_atom,
    parse_rule,
    parse_rules,
    store_rules,
)
from .refclass import (
    AnyClass,
    ProductClass,
    ReferenceClass,
    SampleStatement,
    common_count,
    more_specific,
    summarize,
)
from .service import DEFAULT_ADVISORY, ServiceScenario, create_app

__version__ = "0.1.0"

__all__ = [
    "ALWAYS_TRUE",
    "AnyClass",
    "Atom",
    "AverageOdds",
    "Belief",
    "CalculusError",
    "DEFAULT_ADVISORY",
    "CalculusSettings",
    "Choice",
    "ConfigError",
    "DEFAULT_METHODS",
    "EvidenceBundle",
    "FixedOdds",
    "FrequencyInterval",
    "GeneratorModel",
    "InconsistencyError",
    "Ledger",
    "LotteryOffer",
    "MassFunction",
    "METHOD_NAMES",
    "MetricRow",
    "NoConsideredIntervalError",
    "PerMethodOdds",
    "ProductClass",
    "RandomSweepOdds",
    "REGISTRY",
    "ReferenceClass",
    "ReportLine",
    "Rule",
    "RunResult",
    "SampleStatement",
    "ScenarioConfig",
    "ServiceScenario",
    "SnapshotRecord",
    "StateDescription",
    "TotalConflictError",
    "ZeroWeightError",
    "adaptive_confidence",
    "announced_sweep",
    "calibration_run",
    "close",
    "close_all",
    "combine_xp",
    "common_count",
    "confidence_interval",
    "confidence_sweep",
    "create_app",
    "decide",
    "decide_forced",
    "default_model",
    "default_rules",
    "dempster_combine",
    "expected_net",
    "expected_yield",
    "g",
    "generate",
    "holds",
    "interval_to_mass",
    "kyburg_select",
    "load_corpus",
    "load_model",
    "load_rules",
    "loui_select",
    "metrics",
    "more_specific",
    "parse_atom",
    "parse_rule",
    "parse_rules",
    "pareto_frontier",
    "prepare_queries",
    "run_scenario",
    "set_odds",
    "settle",
    "split_corpus",
    "store_corpus",
    "store_model",
    "store_rules",
    "summarize",
    "vocabulary",
    "write_report",
    "write_trace",
]
