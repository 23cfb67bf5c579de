"""
Sweeping the confidence knob on one frozen stream
=================================================

The query stream never touches belief computation, so the same offers
can be replayed under different confidence levels.  Higher confidence
widens intervals: more straddling, more abstaining, usually a lower net
and a better yield.  The adaptive variant eases the level with the pot.
"""

import sys

from beliefbet import (
    FixedOdds,
    ScenarioConfig,
    announced_sweep,
    confidence_sweep,
    default_model,
    default_rules,
    generate,
    write_report,
)

model = default_model()
rules = default_rules(model)
corpus = generate(model, 400, seed=1988)

cfg = ScenarioConfig(
    seed=1,
    data_points=60,
    announced_count=5,
    repetitions=200,
    max_classes=12,
    lottery_pots=(5.0, 10.0, 20.0),
    odds=FixedOdds(0.5),
    adaptive_range=(0.7, 0.9),
)

sweep = confidence_sweep(cfg, corpus, rules, levels=(0.7, 0.9, "adaptive"))
write_report(sweep.lines, sys.stdout)

for label, res in sweep.results.items():
    led = res.ledgers[res.config.methods[0]]
    print(f"  {label:16s} abstained {led.abstentions:3d} of {cfg.repetitions}")

# a second knob: how many properties get announced per query.  %rel is
# each method's net relative to the best method on that same stream.
table = announced_sweep(
    ScenarioConfig(seed=1, data_points=60, announced_count=5, repetitions=60,
                   max_classes=12, methods=("naive-average", "kyburg", "loui"),
                   lottery_pots=(10.0,), odds=FixedOdds(0.5)),
    corpus,
    rules,
    counts=(2, 5, 8),
)
print("\n%rel by announced-property budget:")
print(f"{'method':16s}" + "".join(f"{c:>8d}" for c in (2, 5, 8)))
for method, row in table.items():
    cells = "".join(
        f"{row[c]:8.1f}" if row[c] is not None else f"{'-':>8s}" for c in (2, 5, 8)
    )
    print(f"{method:16s}{cells}")
