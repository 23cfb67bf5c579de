"""
Frequency intervals, products, and the selection rules
======================================================

Each sample statement yields an exact binomial confidence interval for
the underlying class frequency.  When two classes overlap only through
property-disjoint evidence, their intervals multiply through the product
formula g; the selection rules then pick one interval to act on.
"""

from beliefbet import (
    Atom,
    FrequencyInterval,
    ReferenceClass,
    combine_xp,
    confidence_interval,
    g,
    kyburg_select,
    loui_select,
)

# a class of three snapshots, one hit: the interval is wide on purpose
iv = confidence_interval(3, 1, 0.9)
print(f"(3 1) at .9 confidence: [{iv.lo:.6f}, {iv.hi:.6f}] width {iv.width:.3f}")

# more data at the same frequency narrows it
iv60 = confidence_interval(60, 20, 0.9)
print(f"(60 20) at .9 confidence: [{iv60.lo:.6f}, {iv60.hi:.6f}] width {iv60.width:.3f}")

# g multiplies frequencies of property-disjoint classes; g(.5, q) = q
print(f"\ng(.2,.3) = {g(0.2, 0.3):.6f} (= 3/31)   g(.5,.7) = {g(0.5, 0.7):.2f}")

weekend = ReferenceClass.from_atoms([Atom("weekend")], ())
castor = ReferenceClass.from_atoms([Atom("in-use", ("castor",))], ())
target = Atom("logged-on", ("jackson",))

a = FrequencyInterval(weekend, target, 0.2, 0.4, 0.9, "sample")
b = FrequencyInterval(castor, target, 0.3, 0.5, 0.9, "sample")

# the product interval applies both endpoints of g and joins the classes
xp = combine_xp(a, b)
print(f"\nweekend x castor product: {xp.sexp()}")

# kyburg: drop any interval contradicted by a more specific class, then
# take the narrowest of what is left; here the product wins
chosen = kyburg_select([a, b, xp])
print(f"kyburg picks  [{chosen.lo:.6f}, {chosen.hi:.6f}] from {chosen.ref.sexp()}")
assert chosen is xp

# loui: when nothing survives kyburg's filter, pool the undefeated
# intervals into their convex hull instead of giving up
c = FrequencyInterval(weekend, target, 0.06, 0.63, 0.9, "sample")
d = FrequencyInterval(castor, target, 0.08, 0.73, 0.9, "sample")
hull = loui_select([c, d])
print(f"loui pools disagreeing [{c.lo},{c.hi}] and [{d.lo},{d.hi}] "
      f"into [{hull.lo:.2f}, {hull.hi:.2f}]")
