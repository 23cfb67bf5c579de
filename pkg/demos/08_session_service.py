"""
Playing the session service over its wire protocol
==================================================

The HTTP service freezes a scenario, deals the same queries to a human
player that the methods already played, and keeps an append-only log per
session so a restart loses nothing.  This demo drives it in process with
a test client; `beliefbet serve` exposes the identical API over a port.
"""

import tempfile

from fastapi.testclient import TestClient

from beliefbet import (
    FixedOdds,
    ScenarioConfig,
    ServiceScenario,
    create_app,
    default_model,
    default_rules,
    generate,
)

model = default_model()
rules = default_rules(model)
corpus = generate(model, 200, seed=3)

cfg = ScenarioConfig(
    seed=5,
    data_points=40,
    announced_count=4,
    repetitions=6,
    max_classes=10,
    lottery_pots=(10.0,),
    odds=FixedOdds(0.4),
)
scenario = ServiceScenario.build("demo-room", cfg, corpus, rules)

log_dir = tempfile.mkdtemp(prefix="beliefbet-sessions-")
client = TestClient(create_app(scenario, log_dir))

# 1. open a session: the reply carries the advisory and a resume token
opened = client.post("/api/sessions", json={"player": "demo"}).json()
token = opened["token"]
print(f"opened session for {opened['queries']} queries")
print(f"advisory: {opened['advisory'][:72]}...")

# 2. loop: fetch the next query, decide, submit.  The payload tells you
# the announced properties and the lottery, and nothing it shouldn't.
while True:
    nxt = client.get(f"/api/sessions/{token}/next")
    if nxt.status_code == 409:
        break
    q = nxt.json()
    guess = "ante" if q["index"] % 2 == 0 else "offer-pot"
    verdict = client.post(
        f"/api/sessions/{token}/choices", json={"index": q["index"], "choice": guess}
    ).json()
    print(f"  q{q['index']}: target {q['target']:28s} {guess:9s} "
          f"delta {verdict['delta']:+5.1f}  net {verdict['net']:+6.1f}")

# 3. the report ranks the session against every method on the same board
report = client.get(f"/api/sessions/{token}/report").json()
print(f"\nfinal board (answered {report['answered']}/{report['count']}):")
for row in report["rows"]:
    rel = f"{row['pct_rel']:.0f}" if row["pct_rel"] is not None else "-"
    print(f"  {row['subject']:20s} net {row['net']:+7.1f}  %rel {rel:>4s}  "
          f"abstained {row['abstentions']}")

print(f"\nsession log kept under {log_dir}")
