import itertools
import random

import pytest
from hypothesis import given, strategies as st

from beliefbet.props import ALWAYS_TRUE, Atom, close, holds, parse_rules
from beliefbet.refclass import (
    ProductClass,
    ReferenceClass,
    SampleStatement,
    common_count,
    fmt_number,
    more_specific,
    summarize,
)

RULES = parse_rules(
    """
    (weekend) -> !(weekday)
    (weekday) -> !(weekend)
    (on cox antares) -> (logged-on cox) & (in-use antares)
    (on marsh castor) -> (logged-on marsh) & (in-use castor)
    """
)


@pytest.mark.parametrize(
    "value,expect",
    [(0.2, ".2"), (20, "20"), (3 / 31, ".096774"), (1.0, "1"), (0.0, "0"), (-0.5, "-.5")],
)
def test_fmt_number(value, expect):
    assert fmt_number(value) == expect


def test_reference_class_construction():
    rc = ReferenceClass.from_atoms([Atom("weekend")], RULES)
    assert rc.label == (Atom("weekend"),)
    assert Atom("weekday", negated=True) in rc.properties
    assert ALWAYS_TRUE in rc.properties
    assert rc.sexp() == "(weekend)"


def test_reference_class_sexp_forms():
    assert ReferenceClass.always_true().sexp() == "(always-true)"
    two = ReferenceClass.from_atoms(
        [Atom("weekend"), Atom("logged-on", ("cox",))], RULES
    )
    assert two.sexp() == "(AND (logged-on 'cox) (weekend))"


def test_always_true_dropped_from_label():
    rc = ReferenceClass.from_atoms([ALWAYS_TRUE, Atom("weekend")], RULES)
    assert rc.label == (Atom("weekend"),)


def test_more_specific_is_strict():
    top = ReferenceClass.always_true()
    wk = ReferenceClass.from_atoms([Atom("weekend")], RULES)
    assert more_specific(wk, top)
    assert not more_specific(top, wk)
    assert not more_specific(wk, wk)


def test_product_class_unions_properties():
    wk = ReferenceClass.from_atoms([Atom("weekend")], RULES)
    cx = ReferenceClass.from_atoms([Atom("logged-on", ("cox",))], RULES)
    xp = ProductClass("XP", wk, cx)
    assert xp.properties == wk.properties | cx.properties
    assert more_specific(xp, wk) and more_specific(xp, cx)
    assert xp.sexp() == "(XP (weekend) (logged-on 'cox))"
    with pytest.raises(ValueError):
        ProductClass("Y", wk, cx)


def test_common_count_uses_raw_label_against_closed_given():
    # announcing a weekend: the weekend class shares weekend and always-true,
    # but not the merely entailed !(weekday)
    given = close({Atom("weekend"), Atom("on", ("cox", "antares"))}, RULES).atoms
    wk = ReferenceClass.from_atoms([Atom("weekend")], RULES)
    assert common_count(wk, given) == 2
    # ...while a class naming (logged-on cox) is credited through the closure
    cx = ReferenceClass.from_atoms([Atom("logged-on", ("cox",))], RULES)
    assert common_count(cx, given) == 2
    assert common_count(ReferenceClass.always_true(), given) == 1


def test_sample_statement_validation_and_sexp():
    rc = ReferenceClass.from_atoms([Atom("weekend")], RULES)
    tgt = Atom("logged-on", ("jackson",))
    stmt = SampleStatement(rc, tgt, 3, 1)
    assert stmt.sexp() == "(s% ((weekend) (logged-on 'jackson)) (3 1))"
    assert stmt.frequency == pytest.approx(1 / 3)
    with pytest.raises(ValueError):
        SampleStatement(rc, tgt, 0, 0)
    with pytest.raises(ValueError):
        SampleStatement(rc, tgt, 3, 4)


def _snapshots(raw_sets):
    return [close(atoms, RULES) for atoms in raw_sets]


WEEKEND, WEEKDAY = Atom("weekend"), Atom("weekday")
COX = Atom("logged-on", ("cox",))
MARSH = Atom("logged-on", ("marsh",))
JACK = Atom("logged-on", ("jackson",))
ONCOX = Atom("on", ("cox", "antares"))

RECORD = _snapshots(
    [
        {WEEKEND, COX, JACK},
        {WEEKEND, COX, MARSH},
        {WEEKEND, MARSH, JACK},
        {WEEKDAY, COX, MARSH, JACK},
        {WEEKDAY, COX},
        {WEEKDAY, MARSH},
        {WEEKDAY},
    ]
)


def brute_counts(record, props, target):
    s = sum(1 for snap in record if all(holds(snap, p) for p in props))
    r = sum(
        1
        for snap in record
        if all(holds(snap, p) for p in props) and holds(snap, target)
    )
    return s, r


def test_summarize_matches_brute_force():
    announced = (WEEKEND, COX, MARSH)
    stmts = summarize(RECORD, announced, JACK, RULES)
    assert stmts, "expected at least the always-true class"
    seen = set()
    for stmt in stmts:
        assert brute_counts(RECORD, stmt.ref.label, JACK) == (stmt.s, stmt.r)
        seen.add(stmt.ref.label)
    assert () in seen  # the whole record
    # every instantiated subset is reported
    for k in range(1, len(announced) + 1):
        for combo in itertools.combinations(announced, k):
            s, r = brute_counts(RECORD, combo, JACK)
            if s == 0:
                continue
            closed = close(frozenset(combo), RULES).atoms
            assert any(
                close(frozenset(st_.ref.label), RULES).atoms == closed
                for st_ in stmts
            ), combo


def test_summarize_never_emits_empty_classes():
    # weekend & weekday never co-occur (they'd be inconsistent anyway)
    stmts = summarize(RECORD, (WEEKEND, COX), JACK, RULES)
    assert all(stmt.s >= 1 for stmt in stmts)


def test_summarize_output_is_sorted_and_deterministic():
    stmts = summarize(RECORD, (WEEKEND, COX, MARSH), JACK, RULES)
    keys = [(len(s.ref.label), s.ref.label) for s in stmts]
    assert keys == sorted(keys)
    again = summarize(RECORD, (WEEKEND, COX, MARSH), JACK, RULES)
    assert [s.sexp() for s in again] == [s.sexp() for s in stmts]


def test_summarize_merges_entailed_duplicates():
    record = _snapshots([{ONCOX, WEEKEND}, {ONCOX, WEEKDAY, JACK}, {WEEKDAY, COX}])
    # (on cox antares) entails (logged-on cox): the pair subset closes to the
    # same class as the singleton, so only the shorter label is reported
    stmts = summarize(record, (ONCOX, COX), JACK, RULES)
    labels = [s.ref.label for s in stmts]
    assert (ONCOX,) in labels
    assert (COX, ONCOX) not in labels and (ONCOX, COX) not in labels
    by_label = {s.ref.label: s for s in stmts}
    assert (by_label[(ONCOX,)].s, by_label[(ONCOX,)].r) == (2, 1)
    assert (by_label[(COX,)].s, by_label[(COX,)].r) == (3, 1)


def test_summarize_validates_inputs():
    with pytest.raises(ValueError):
        summarize(RECORD, (), JACK, RULES)
    with pytest.raises(ValueError):
        summarize(RECORD, (JACK,), JACK, RULES)  # target announced
    with pytest.raises(ValueError):
        summarize(RECORD, tuple(Atom(f"p{i}") for i in range(17)), JACK, RULES)
    from beliefbet.props import StateDescription

    with pytest.raises(ValueError):
        summarize([StateDescription(frozenset({WEEKEND}))], (WEEKEND,), JACK, RULES)
    with pytest.raises(ValueError):
        summarize([], (WEEKEND,), JACK, RULES)


def test_summarize_max_classes_keeps_always_true_and_most_specific():
    announced = (WEEKEND, COX, MARSH)
    full = summarize(RECORD, announced, JACK, RULES)
    capped = summarize(RECORD, announced, JACK, RULES, max_classes=3)
    assert len(capped) == 3
    assert any(s.ref.label == () for s in capped)
    full_by_label = {s.ref.label: s for s in full}
    # caps preserve counts, they only drop classes
    for s in capped:
        kept = full_by_label[s.ref.label]
        assert (s.s, s.r) == (kept.s, kept.r)
    # preference goes to classes naming more properties
    dropped = {s.ref.label for s in full} - {s.ref.label for s in capped}
    kept_sizes = sorted(len(s.ref.label) for s in capped if s.ref.label)
    if dropped:
        assert max(len(lbl) for lbl in dropped) <= max(kept_sizes)


@given(st.randoms())
def test_summarize_is_record_order_invariant(rnd):
    record = list(RECORD)
    rnd.shuffle(record)
    base = {s.sexp() for s in summarize(RECORD, (WEEKEND, COX), JACK, RULES)}
    assert {s.sexp() for s in summarize(record, (WEEKEND, COX), JACK, RULES)} == base
