"""Command line front end.

Subcommands:

* ``gen``        draw a synthetic corpus (and optionally its model and rules)
* ``summarize``  print the sample statements a record supports
* ``run``        play a betting scenario and print the results table
* ``compare``    the kyburg confidence sweep on one identical stream
* ``serve``      start the HTTP session service

Exit codes: 0 success, 2 bad configuration or arguments, 3 I/O or file
format trouble.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .dataio import (
    CorpusFormatError,
    ModelFormatError,
    default_model,
    default_rules,
    generate,
    load_corpus,
    load_model,
    store_corpus,
    store_model,
    write_report,
    write_trace,
)
from .harness import (
    AverageOdds,
    ConfigError,
    FixedOdds,
    PerMethodOdds,
    RandomSweepOdds,
    DEFAULT_METHODS,
    ScenarioConfig,
    confidence_sweep,
    run_scenario,
)
from .props import InconsistencyError, load_rules, parse_atom, store_rules
from .refclass import summarize

__all__ = ["main", "build_parser"]


def _parse_odds(text: str):
    kind, _, rest = text.partition(":")
    if kind == "fixed":
        try:
            return FixedOdds(float(rest))
        except ValueError:
            raise ConfigError(f"bad fixed odds ratio: {rest!r}")
    if kind == "method":
        return PerMethodOdds(rest)
    if kind == "average":
        return AverageOdds()
    if kind == "sweep":
        try:
            ratios = tuple(float(tok) for tok in rest.split(",") if tok)
        except ValueError:
            raise ConfigError(f"bad sweep ratios: {rest!r}")
        return RandomSweepOdds(ratios)
    raise ConfigError(
        f"unknown odds scheme {text!r} (use fixed:R, method:NAME, average, sweep:R1,R2,...)"
    )


def _parse_floats(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(tok) for tok in text.split(",") if tok)
    except ValueError:
        raise ConfigError(f"bad number list: {text!r}")


def _split_atom_texts(text: str) -> list[str]:
    tokens, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch.isspace() and depth == 0:
            if cur:
                tokens.append(cur)
            cur = ""
        else:
            cur += ch
    if cur:
        tokens.append(cur)
    return tokens


def _load_inputs(args):
    model = load_model(args.model) if getattr(args, "model", None) else default_model()
    records = load_corpus(args.corpus, model if getattr(args, "check", False) else None)
    if getattr(args, "rules", None):
        rules = load_rules(args.rules)
    else:
        rules = default_rules(model)
    return model, records, rules


def cmd_gen(args) -> int:
    model = load_model(args.model) if args.model else default_model()
    records = generate(model, args.count, args.seed)
    store_corpus(records, args.out)
    if args.write_model:
        store_model(model, args.write_model)
    if args.write_rules:
        store_rules(default_rules(model), args.write_rules)
    print(f"wrote {len(records)} snapshots to {args.out}")
    return 0


def cmd_summarize(args) -> int:
    from .dataio import close_all

    model, records, rules = _load_inputs(args)
    announced = tuple(parse_atom(tok) for tok in _split_atom_texts(args.announced))
    if not announced:
        raise ConfigError("no announced properties given")
    target = parse_atom(args.target)
    samples = summarize(close_all(records, rules), announced, target, rules, args.max_classes)
    for sample in samples:
        print(sample.sexp())
    return 0


def _scenario_config(args) -> ScenarioConfig:
    return ScenarioConfig(
        seed=args.seed,
        data_points=args.data_points,
        announced_count=args.announced_count,
        repetitions=args.repetitions,
        methods=tuple(args.methods.split(",")) if args.methods else DEFAULT_METHODS,
        lottery_pots=_parse_floats(args.pots),
        odds=_parse_odds(args.odds),
        confidence=args.confidence,
        dempster_confidence=args.dempster_confidence,
        adaptive_range=(args.adaptive_low, args.adaptive_high),
        max_classes=args.max_classes,
        forced=args.forced,
    )


def cmd_run(args) -> int:
    _, records, rules = _load_inputs(args)
    result = run_scenario(_scenario_config(args), records, rules)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as f:
            write_report(result.lines, f)
    else:
        write_report(result.lines, sys.stdout)
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as f:
            write_trace(result.trace, f)
    print(f"# perfect {float(result.perfect):.4f}  ranking stable from query {result.stable_after}", file=sys.stderr)
    return 0


def cmd_compare(args) -> int:
    _, records, rules = _load_inputs(args)
    levels = []
    for tok in args.levels.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if tok == "adaptive":
            levels.append(tok)
        else:
            try:
                levels.append(float(tok))
            except ValueError:
                raise ConfigError(f"bad confidence level {tok!r}")
    if not levels:
        raise ConfigError("no confidence levels given")
    sweep = confidence_sweep(_scenario_config(args), records, rules, levels)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as f:
            write_report(sweep.lines, f)
    else:
        write_report(sweep.lines, sys.stdout)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import DEFAULT_ADVISORY, ServiceScenario, create_app

    _, records, rules = _load_inputs(args)
    advisory = DEFAULT_ADVISORY
    if args.advisory_file:
        advisory = Path(args.advisory_file).read_text(encoding="utf-8").strip()
    scenario = ServiceScenario.build(
        args.scenario_id,
        _scenario_config(args),
        records,
        rules,
        advisory=advisory,
    )
    app = create_app(scenario, args.log_dir, static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def _add_scenario_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--corpus", required=True, help="corpus file to play against")
    p.add_argument("--seed", type=int, required=True, help="scenario seed (split and stream)")
    p.add_argument("--model", help="model file (defaults to the built-in department)")
    p.add_argument("--rules", help="rule file (defaults to the model's rules)")
    p.add_argument("--data-points", type=int, default=60)
    p.add_argument("--announced-count", type=int, default=8)
    p.add_argument("--repetitions", type=int, default=50)
    p.add_argument("--methods", help="comma list (default: all seven fixed-level methods)")
    p.add_argument("--pots", default="10", help="comma list of pot sizes")
    p.add_argument("--odds", default="fixed:0.1", help="fixed:R | method:NAME | average | sweep:R1,R2,...")
    p.add_argument("--confidence", type=float, default=0.9)
    p.add_argument("--dempster-confidence", type=float, default=0.9)
    p.add_argument("--adaptive-low", type=float, default=0.7)
    p.add_argument("--adaptive-high", type=float, default=0.9)
    p.add_argument("--max-classes", type=int, default=None)
    p.add_argument("--forced", action="store_true", help="no abstaining; midpoint decides")
    p.add_argument("--check", action="store_true", help="validate corpus atoms against the model")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="beliefbet", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a synthetic corpus")
    p.add_argument("--out", required=True)
    p.add_argument("--count", type=int, default=400)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--model", help="model file to draw from")
    p.add_argument("--write-model", help="also store the model used")
    p.add_argument("--write-rules", help="also store the model's rule set")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("summarize", help="sample statements for one announcement")
    p.add_argument("--corpus", required=True)
    p.add_argument("--announced", required=True, help="space separated atoms, e.g. \"(weekend) !(backup-somewhere)\"")
    p.add_argument("--target", required=True, help="target atom, e.g. \"(logged-on cox)\"")
    p.add_argument("--model")
    p.add_argument("--rules")
    p.add_argument("--max-classes", type=int, default=None)
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_summarize)

    p = sub.add_parser("run", help="play one scenario")
    _add_scenario_flags(p)
    p.add_argument("--report", help="write the table here instead of stdout")
    p.add_argument("--trace", help="write a JSONL trace of every query")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("compare", help="kyburg confidence sweep")
    _add_scenario_flags(p)
    p.add_argument("--levels", default=".7,.9,adaptive")
    p.add_argument("--report")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("serve", help="start the session service")
    _add_scenario_flags(p)
    p.add_argument("--log-dir", required=True, help="directory for append-only session logs")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--static", help="directory with the web ui build")
    p.add_argument("--scenario-id", default="default")
    p.add_argument("--advisory-file", help="text shown verbatim when a session opens")
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CorpusFormatError, ModelFormatError, InconsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
