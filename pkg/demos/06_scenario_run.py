"""
A full scenario: every method plays the same query stream
=========================================================

Split a corpus into a record and a test pool, draw a reproducible stream
of queries (snapshot, announced properties, target, lottery), let every
method bet, and tabulate net, yield, abstentions, and the Pareto picture.
"""

import sys

from beliefbet import (
    FixedOdds,
    ScenarioConfig,
    default_model,
    default_rules,
    generate,
    run_scenario,
    write_report,
)

model = default_model()
rules = default_rules(model)
corpus = generate(model, 400, seed=1988)

cfg = ScenarioConfig(
    seed=11,
    data_points=60,
    announced_count=5,
    repetitions=120,
    max_classes=12,
    lottery_pots=(10.0,),
    odds=FixedOdds(0.5),
)

result = run_scenario(cfg, corpus, rules)

# the table every experiment ends with: one row per betting subject
write_report(result.lines, sys.stdout)

print(f"\nperfect play would net {float(result.perfect):.1f}; "
      f"the ranking settles from query {result.stable_after} on")

# net-vs-yield dominance: points nobody beats on both axes, plus the
# hull a mixed strategy could reach
print("pareto frontier (net, yield):",
      [(round(n, 1), round(y, 3)) for n, y in result.frontier])
print("frontier hull            :",
      [(round(n, 1), round(y, 3)) for n, y in result.hull])

# traces carry everything needed to audit a single query
q = result.trace[0]
print(f"\nquery 0: announced {q['announced']}, target {q['target']}, "
      f"truth {q['truth']}")
for name, played in sorted(q["methods"].items()):
    print(f"  {name:18s} {played['choice']:9s} delta {played['delta']:+.1f}")
