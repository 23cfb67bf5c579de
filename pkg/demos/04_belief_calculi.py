"""
Eight ways to turn the same evidence into a degree of belief
============================================================

A worked evidence situation: the target is whether jackson is logged on,
and the record supports four reference classes.  Every calculus in the
registry reads the same bundle and answers with a point or an interval.
"""

from beliefbet import (
    Atom,
    Belief,
    CalculusSettings,
    EvidenceBundle,
    METHOD_NAMES,
    REGISTRY,
    ReferenceClass,
    SampleStatement,
    close,
    default_model,
    default_rules,
    dempster_combine,
    interval_to_mass,
)

rules = default_rules(default_model())
target = Atom("logged-on", ("jackson",))


def rc(*atoms):
    return ReferenceClass.from_atoms(atoms, rules)


# four sample statements: (s r) counts for four classes of past snapshots
samples = (
    SampleStatement(rc(Atom("logged-on", ("cox",)), Atom("logged-on", ("marsh",))), target, 4, 1),
    SampleStatement(rc(Atom("weekend")), target, 3, 1),
    SampleStatement(rc(Atom("in-use", ("castor",)), Atom("logged-on", ("marsh",))), target, 2, 2),
    SampleStatement(ReferenceClass.always_true(), target, 20, 4),
)

# what we know about the hidden snapshot, closed under the rules
given = close(
    {Atom("weekend"), Atom("in-use", ("castor",)),
     Atom("logged-on", ("marsh",)), Atom("on", ("cox", "antares"))},
    rules,
).atoms

bundle = EvidenceBundle(samples, given, target, 0.9)
settings = CalculusSettings()

print(f"target {target.compact()}, four classes, confidence .9\n")
for name in METHOD_NAMES:
    belief = REGISTRY[name](bundle, settings, 10.0)
    if belief.is_point:
        print(f"  {name:18s} point    {belief.lo:.6f}")
    else:
        print(f"  {name:18s} interval [{belief.lo:.6f}, {belief.hi:.6f}]")

# the dempster variants run through mass functions on a binary frame:
# an interval [lo, hi] pledges lo to yes, 1-hi to no, the rest to ignorance
m1 = interval_to_mass(Belief.interval(0.06, 0.63))
m2 = interval_to_mass(Belief.interval(0.08, 0.73))
print(f"\nmass of [.06,.63]: yes {m1.yes:.2f}  no {m1.no:.2f}  unknown {m1.unknown:.2f}")
combined = dempster_combine(m1, m2)
print(f"combined with [.08,.73]: yes {combined.yes:.5f}  no {combined.no:.5f}  "
      f"unknown {combined.unknown:.5f}")
print(f"belief {combined.belief:.5f}, plausibility {combined.plausibility:.5f}")
