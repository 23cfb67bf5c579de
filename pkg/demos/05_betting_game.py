"""
The betting game: offers, decisions, and the two scores
=======================================================

Every query comes with a lottery: pay ratio*pot to back the target, or
offer the pot (betting against it) and collect the ante when the target
fails.  Point beliefs compare against the ratio; interval beliefs may
straddle it and abstain.  Net rewards volume, yield rewards selectivity.
"""

import math
import random

from beliefbet import (
    Belief,
    Choice,
    Ledger,
    LotteryOffer,
    decide,
    decide_forced,
    expected_net,
    expected_yield,
    metrics,
    settle,
)

# a dyadic ratio keeps the exact rationals below easy on the eyes;
# any float ratio works, carried exactly as the fraction it really is
offer = LotteryOffer(pot=10.0, ratio=0.25)
print(f"pot {offer.pot}, ratio {offer.ratio}, ante {offer.ante}")

# the decision rule in one sweep
for belief in (Belief.point(0.7), Belief.point(0.1), Belief.interval(0.2, 0.8)):
    print(f"  belief {belief.as_dict()} -> {decide(belief, offer).value}")

# forced mode never abstains: the midpoint picks a side
print(f"  forced [0.2, 0.8] -> {decide_forced(Belief.interval(0.2, 0.8), offer).value}")

# settlement is exact rational arithmetic, so books always balance
win = settle(Choice.ANTE, offer, True)
loss = settle(Choice.ANTE, offer, False)
print(f"ante wins {win} or loses {loss}; one of each nets {win + loss}")

# simulate a bettor who antes every time and is right 60% of the time
p, n = 0.6, 100_000
rng = random.Random("demo:betting")
led = Ledger()
pots = []
for _ in range(n):
    truth = rng.random() < p
    led.record(Choice.ANTE, settle(Choice.ANTE, LotteryOffer(10.0, 0.5), truth))
    pots.append(10.0)

row = metrics(led)
print(f"\n{n} even-odds bets at p={p}:")
print(f"  net   {float(led.net):12.1f}  expected {expected_net(pots, p):12.1f}")
print(f"  yield {row.yield_rate:12.4f}  expected {expected_yield(p):12.4f}")

# both land within a few standard errors of the identities
net_se = 10.0 * math.sqrt(n * p * (1 - p))
assert abs(float(led.net) - expected_net(pots, p)) < 3 * net_se
assert abs(row.yield_rate - expected_yield(p)) < 3 * math.sqrt(p * (1 - p) / n)
