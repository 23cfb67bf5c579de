import random

import pytest
from hypothesis import given, strategies as st

from beliefbet.props import (
    ALWAYS_TRUE,
    Atom,
    InconsistencyError,
    Rule,
    RuleSyntaxError,
    StateDescription,
    close,
    holds,
    parse_atom,
    parse_rule,
    parse_rules,
)


def test_atom_forms():
    a = Atom("on", ("cox", "antares"))
    assert a.compact() == "(on cox antares)"
    assert a.sexp() == "(on 'cox 'antares)"
    n = a.complement()
    assert n.compact() == "!(on cox antares)"
    assert n.sexp() == "(NOT (on 'cox 'antares))"
    assert n.complement() == a


def test_atom_name_validation():
    with pytest.raises(ValueError):
        Atom("")
    with pytest.raises(ValueError):
        Atom("3pred")
    with pytest.raises(ValueError):
        Atom("on", ("bad arg",))
    # hyphens and apostrophes are fine
    Atom("always-true")
    Atom("o'clock")


def test_atom_ordering_is_total():
    atoms = [Atom("b"), Atom("a", ("z",)), Atom("a"), Atom("a", negated=True)]
    assert sorted(atoms) == sorted(atoms, key=lambda x: (x.predicate, x.args, x.negated))


@pytest.mark.parametrize(
    "text,expect",
    [
        ("(weekend)", Atom("weekend")),
        ("!(weekday)", Atom("weekday", negated=True)),
        ("(on cox antares)", Atom("on", ("cox", "antares"))),
        ("(on 'cox 'antares)", Atom("on", ("cox", "antares"))),
        ("  ( weekend )  ", Atom("weekend")),
    ],
)
def test_parse_atom(text, expect):
    assert parse_atom(text) == expect


@pytest.mark.parametrize("text", ["weekend", "(week(end))", "()", "(!x)", "(a) (b)"])
def test_parse_atom_rejects(text):
    with pytest.raises(RuleSyntaxError):
        parse_atom(text)


def test_rule_round_trip():
    r = parse_rule("(on cox antares) -> (logged-on cox) & (in-use antares)")
    assert r.body == frozenset({Atom("on", ("cox", "antares"))})
    assert r.head == frozenset(
        {Atom("logged-on", ("cox",)), Atom("in-use", ("antares",))}
    )
    assert parse_rule(r.compact()) == r


def test_rule_validation():
    with pytest.raises(ValueError):
        Rule(frozenset(), frozenset({Atom("a")}))
    with pytest.raises(ValueError):
        Rule(frozenset({Atom("a")}), frozenset({Atom("a")}))
    with pytest.raises(RuleSyntaxError):
        parse_rule("(a) (b)")
    with pytest.raises(RuleSyntaxError):
        parse_rule("(a) & -> (b)")


def test_parse_rules_comments_and_lineno():
    text = "# heading\n(weekend) -> !(weekday)\n\n  # more\n(a) -> (b)\n"
    rules = parse_rules(text)
    assert len(rules) == 2
    with pytest.raises(RuleSyntaxError, match="line 2"):
        parse_rules("# ok\nnot a rule\n")


RULES = parse_rules(
    """
    (weekend) -> !(weekday)
    (weekday) -> !(weekend)
    (on cox antares) -> (logged-on cox) & (in-use antares)
    (logged-on cox) -> (some-user)
    """
)


def test_close_derives_chain():
    st_ = close({Atom("on", ("cox", "antares"))}, RULES)
    assert st_.closed
    got = {a.compact() for a in st_.atoms}
    assert got == {
        "(on cox antares)",
        "(logged-on cox)",
        "(in-use antares)",
        "(some-user)",
        "(always-true)",
    }


def test_close_adds_always_true_without_rules():
    st_ = close(frozenset())
    assert st_.atoms == frozenset({ALWAYS_TRUE})


def test_close_accepts_state_description():
    st_ = close(StateDescription(frozenset({Atom("weekend")})), RULES)
    assert Atom("weekday", negated=True) in st_


def test_close_idempotent_on_example():
    once = close({Atom("on", ("cox", "antares")), Atom("weekend")}, RULES)
    twice = close(once, RULES)
    assert once.atoms == twice.atoms


def test_close_inconsistency_reports_derivation():
    with pytest.raises(InconsistencyError) as err:
        close({Atom("weekend"), Atom("weekday")}, RULES)
    assert "!(weekday)" in str(err.value) or "!(weekend)" in str(err.value)
    assert "by rule" in str(err.value)
    assert len(err.value.pair) == 2


def test_close_inconsistent_input_without_rules():
    with pytest.raises(InconsistencyError):
        close({Atom("weekend"), Atom("weekend", negated=True)})


def test_holds_requires_closed():
    raw = StateDescription(frozenset({Atom("weekend")}))
    with pytest.raises(ValueError):
        holds(raw, Atom("weekend"))
    st_ = close(raw, RULES)
    assert holds(st_, Atom("weekend"))
    assert holds(st_, Atom("weekday", negated=True))
    assert not holds(st_, Atom("weekday"))


_atom = st.builds(
    Atom,
    predicate=st.sampled_from(["p", "q", "r", "s", "t", "u"]),
    args=st.tuples(st.sampled_from(["x", "y"])) | st.just(()),
)
_rule = (
    st.tuples(
        st.sets(_atom, min_size=1, max_size=2),
        st.sets(_atom, min_size=1, max_size=2),
    )
    .filter(lambda bh: bool(frozenset(bh[1]) - frozenset(bh[0])))
    .map(lambda bh: Rule(frozenset(bh[0]), frozenset(bh[1]) - frozenset(bh[0])))
)
_ruleset = st.lists(_rule, max_size=8)
_state = st.sets(_atom, max_size=5)


@given(_state, _ruleset, st.randoms())
def test_close_idempotent_and_order_independent(atoms, rules, rnd):
    # positive-only vocab, so closure cannot blow up inconsistent
    first = close(atoms, rules)
    assert close(first, rules).atoms == first.atoms
    shuffled = list(rules)
    rnd.shuffle(shuffled)
    assert close(atoms, shuffled).atoms == first.atoms


@given(_state, _state, _ruleset)
def test_close_monotone(a, b, rules):
    small = close(a, rules)
    big = close(a | b, rules)
    assert small.atoms <= big.atoms


@given(_state, _ruleset)
def test_close_fixpoint_really_satisfies_rules(atoms, rules):
    st_ = close(atoms, rules)
    for r in rules:
        if r.body <= st_.atoms:
            assert r.head <= st_.atoms
