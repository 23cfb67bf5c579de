"""
Reference classes and sample statements
=======================================

Announce a few properties of a hidden snapshot, pick a target, and the
record of past snapshots is summarized into sample statements: for every
announced-property subset that ever occurred, how many past snapshots
fell in that class (s) and how many of those satisfied the target (r).
"""

from beliefbet import (
    close_all,
    default_model,
    default_rules,
    generate,
    parse_atom,
    summarize,
)

model = default_model()
rules = default_rules(model)
record = close_all(generate(model, 60, seed=1988), rules)

announced = (parse_atom("(weekend)"), parse_atom("(backup-somewhere)"))
target = parse_atom("(logged-on cox)")

samples = summarize(record, announced, target, rules)
print(f"announced {'; '.join(a.compact() for a in announced)}, target {target.compact()}")
for stmt in samples:
    print(f"  {stmt.sexp()}  frequency {stmt.frequency:.3f}")

# (s r) pairs are plain counts; redo one of them by hand to see
weekend_class = [s for s in samples if len(s.ref.label) == 1 and s.ref.label[0].predicate == "weekend"]
stmt = weekend_class[0]
inside = [snap for snap in record if all(p in snap.atoms for p in stmt.ref.properties)]
hits = sum(1 for snap in inside if target in snap.atoms)
print(f"\nrecount of the weekend class: s={len(inside)} r={hits} "
      f"(summarize said s={stmt.s} r={stmt.r})")
assert (len(inside), hits) == (stmt.s, stmt.r)

# the whole-record class is always present, so there is always evidence
top = [s for s in samples if not s.ref.label][0]
print(f"whole-record class: {top.sexp()}")
assert top.s == len(record)
