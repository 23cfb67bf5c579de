"""
Ground facts, rules, and synthetic machine-room snapshots
=========================================================

A snapshot is a set of ground atoms: who is logged on, which machines are
in use, whether it is the weekend.  A rule set turns the raw atoms into a
deductively closed state, and the generator draws whole corpora of such
snapshots from a small department model.
"""

from beliefbet import (
    Atom,
    InconsistencyError,
    close,
    default_model,
    default_rules,
    generate,
    holds,
    parse_atom,
    parse_rules,
)

# atoms print in a compact lisp-ish form; negation is a leading bang
weekend = Atom("weekend")
on = parse_atom("(on cox antares)")
print("atoms:", weekend.compact(), on.compact(), on.complement().compact())

# rules go body -> head; parse_rules takes one rule per line
rules = parse_rules(
    """
    (weekend) -> !(weekday)
    (weekday) -> !(weekend)
    (on cox antares) -> (logged-on cox) & (in-use antares)
    """
)

# closure is a least fixpoint: everything derivable, nothing else
state = close({weekend, on}, rules)
print("closed state holds (logged-on cox):", holds(state, parse_atom("(logged-on cox)")))
print("closed state holds !(weekday):     ", holds(state, parse_atom("!(weekday)")))

# contradictory facts are refused, with the derivation spelled out
try:
    close({weekend, Atom("weekday")}, rules)
except InconsistencyError as exc:
    print("inconsistent snapshot rejected:", str(exc).splitlines()[0])

# the department model bundles users, machines, logon rates, and habits;
# its rule set is compiled down to ground rules over that vocabulary
model = default_model()
dept_rules = default_rules(model)
print(f"\nmodel: {len(model.users)} users, {len(model.machines)} machines, "
      f"{len(dept_rules)} ground rules")

# corpora are reproducible: the same seed always gives the same snapshots
corpus = generate(model, 5, seed=42)
for rec in corpus:
    print(rec.line())
assert [r.line() for r in generate(model, 5, seed=42)] == [r.line() for r in corpus]
