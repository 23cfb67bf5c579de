import math

import pytest
from hypothesis import given, strategies as st

from beliefbet.props import ALWAYS_TRUE, Atom, close, parse_rules
from beliefbet.refclass import ReferenceClass, SampleStatement
from beliefbet.calculi import (
    Belief,
    CalculusError,
    CalculusSettings,
    EvidenceBundle,
    MassFunction,
    METHOD_NAMES,
    REGISTRY,
    TotalConflictError,
    ZeroWeightError,
    adaptive_confidence,
    dempster_combine,
    interval_to_mass,
)
from beliefbet.intervals import confidence_interval

RULES = parse_rules("(weekend) -> !(weekday)\n(weekday) -> !(weekend)\n")
TARGET = Atom("logged-on", ("jackson",))


def _rc(*names):
    return ReferenceClass.from_atoms([Atom(n) for n in names], RULES)


def _bundle(*stmts, given=None, confidence=0.9):
    if given is None:
        given = close({Atom("weekend")}, RULES).atoms
    return EvidenceBundle(tuple(stmts), frozenset(given), TARGET, confidence)


S_TOP = SampleStatement(ReferenceClass.always_true(), TARGET, 20, 4)
S_WK = SampleStatement(_rc("weekend"), TARGET, 3, 1)
S_WB = SampleStatement(_rc("weekend", "busy"), TARGET, 2, 2)


def test_belief_basics():
    p = Belief.point(0.3)
    assert p.is_point and p.midpoint == 0.3
    assert p.as_dict() == {"kind": "point", "value": 0.3}
    iv = Belief.interval(0.2, 0.6)
    assert not iv.is_point and iv.midpoint == pytest.approx(0.4)
    assert iv.as_dict() == {"kind": "interval", "lo": 0.2, "hi": 0.6}
    with pytest.raises(ValueError):
        Belief(0.6, 0.2)
    with pytest.raises(ValueError):
        Belief(-0.1, 0.2)


def test_mass_function_basics():
    m = MassFunction(0.06, 0.37, 0.57)
    assert m.belief == 0.06
    assert m.plausibility == pytest.approx(0.63)
    assert MassFunction.vacuous() == MassFunction(0.0, 0.0, 1.0)
    with pytest.raises(ValueError):
        MassFunction(0.5, 0.5, 0.5)
    with pytest.raises(ValueError):
        MassFunction(-0.2, 0.6, 0.6)


def test_bundle_validation():
    with pytest.raises(ValueError):
        EvidenceBundle((), frozenset(), TARGET)
    with pytest.raises(ValueError):
        _bundle(S_TOP, confidence=1.0)


def test_naive_average_is_mean_of_frequencies():
    b = REGISTRY["naive-average"](_bundle(S_TOP, S_WK, S_WB), CalculusSettings(), None)
    assert b.is_point
    assert b.lo == pytest.approx((4 / 20 + 1 / 3 + 2 / 2) / 3)


def test_maximal_average_drops_supplanted_classes():
    b = REGISTRY["maximal-average"](_bundle(S_TOP, S_WK, S_WB), CalculusSettings(), None)
    # always-true and weekend are both supplanted by weekend&busy
    assert b.lo == pytest.approx(1.0)
    only_top = REGISTRY["maximal-average"](_bundle(S_TOP), CalculusSettings(), None)
    assert only_top.lo == pytest.approx(0.2)


def test_similarity_weights_by_shared_given_properties():
    given = close({Atom("weekend")}, RULES).atoms
    b = REGISTRY["similarity"](_bundle(S_TOP, S_WK, given=given), CalculusSettings(), None)
    # weights: always-true 1, weekend 2
    assert b.lo == pytest.approx((1 * 4 + 2 * 1) / (1 * 20 + 2 * 3))


def test_similarity_zero_weight():
    # an unclosed given lacking always-true shares nothing with anything
    bundle = _bundle(S_TOP, given=frozenset({Atom("busy")}))
    with pytest.raises(ZeroWeightError):
        REGISTRY["similarity"](bundle, CalculusSettings(), None)


def test_interval_to_mass_golden():
    m = interval_to_mass(Belief(0.06, 0.63))
    assert (m.yes, m.no) == (0.06, pytest.approx(0.37))
    assert m.unknown == pytest.approx(0.57)


def test_dempster_golden_pair():
    a = interval_to_mass(Belief(0.06, 0.63))
    b = interval_to_mass(Belief(0.08, 0.73))
    out = dempster_combine(a, b)
    assert out.yes == pytest.approx(0.09369105009431986, abs=1e-12)
    assert out.no == pytest.approx(0.5180255711590861, abs=1e-12)
    assert out.unknown == pytest.approx(0.388283378746594, abs=1e-12)


def test_dempster_total_conflict():
    yes = MassFunction(1.0, 0.0, 0.0)
    no = MassFunction(0.0, 1.0, 0.0)
    with pytest.raises(TotalConflictError):
        dempster_combine(yes, no)


def _normalized(y, n, u):
    total = y + n + u
    if total <= 0:
        return MassFunction.vacuous()
    return MassFunction(y / total, n / total, u / total)


_masses = st.builds(
    _normalized,
    st.floats(0.0, 1.0),
    st.floats(0.0, 1.0),
    st.floats(0.01, 1.0),  # keep some ignorance so K stays below 1
)


@given(_masses, _masses)
def test_dempster_commutative(a, b):
    ab = dempster_combine(a, b)
    ba = dempster_combine(b, a)
    assert ab.yes == pytest.approx(ba.yes, abs=1e-12)
    assert ab.no == pytest.approx(ba.no, abs=1e-12)


@given(_masses)
def test_dempster_vacuous_identity(m):
    out = dempster_combine(m, MassFunction.vacuous())
    assert out.yes == pytest.approx(m.yes, abs=1e-12)
    assert out.no == pytest.approx(m.no, abs=1e-12)
    assert out.unknown == pytest.approx(m.unknown, abs=1e-12)


@given(_masses, _masses, _masses)
def test_dempster_associative(a, b, c):
    left = dempster_combine(dempster_combine(a, b), c)
    right = dempster_combine(a, dempster_combine(b, c))
    assert left.yes == pytest.approx(right.yes, abs=1e-9)
    assert left.no == pytest.approx(right.no, abs=1e-9)
    assert left.unknown == pytest.approx(right.unknown, abs=1e-9)


def test_naive_dempster_folds_every_sample():
    bundle = _bundle(S_TOP, S_WK)
    b = REGISTRY["naive-dempster"](bundle, CalculusSettings(), None)
    # mirror the fold by hand
    m1 = interval_to_mass(confidence_interval(20, 4, 0.9))
    m2 = interval_to_mass(confidence_interval(3, 1, 0.9))
    expect = dempster_combine(m1, m2)  # commutative, so order is moot
    assert b.lo == pytest.approx(expect.belief, abs=1e-12)
    assert b.hi == pytest.approx(expect.plausibility, abs=1e-12)


def test_maximal_dempster_folds_only_maximal():
    bundle = _bundle(S_TOP, S_WK, S_WB)
    b = REGISTRY["maximal-dempster"](bundle, CalculusSettings(), None)
    m = interval_to_mass(confidence_interval(2, 2, 0.9))
    assert b.lo == pytest.approx(m.belief, abs=1e-12)
    assert b.hi == pytest.approx(m.plausibility, abs=1e-12)


def test_dempster_level_comes_from_settings():
    bundle = _bundle(S_WK)
    loose = REGISTRY["naive-dempster"](bundle, CalculusSettings(dempster_confidence=0.5), None)
    tight = REGISTRY["naive-dempster"](bundle, CalculusSettings(dempster_confidence=0.99), None)
    assert (tight.hi - tight.lo) > (loose.hi - loose.lo)


def test_kyburg_belief_selects_specific_interval():
    bundle = _bundle(S_TOP, S_WK, S_WB)
    b = REGISTRY["kyburg"](bundle, CalculusSettings(), None)
    assert 0.0 <= b.lo <= b.hi <= 1.0
    assert not b.is_point


def test_disjoint_disagreeing_classes_resolve_through_xp():
    # incomparable but property-disjoint classes spawn an XP candidate that
    # is strictly more specific than both, so selection still succeeds
    s1 = SampleStatement(_rc("weekend"), TARGET, 40, 2)
    s2 = SampleStatement(_rc("busy"), TARGET, 40, 30)
    b = REGISTRY["kyburg"](_bundle(s1, s2), CalculusSettings(), None)
    iv1 = confidence_interval(40, 2, 0.9)
    iv2 = confidence_interval(40, 30, 0.9)
    from beliefbet.intervals import combine_xp

    xp = combine_xp(iv1, iv2)
    assert (b.lo, b.hi) == (xp.lo, xp.hi)


def test_kyburg_fallback_when_nothing_considered():
    # overlapping classes cannot be XP-combined; mutual disagreement among
    # incomparable classes then leaves nothing considered at all
    s1 = SampleStatement(_rc("weekend", "busy"), TARGET, 40, 2)
    s2 = SampleStatement(_rc("weekend", "late"), TARGET, 40, 30)
    b = REGISTRY["kyburg"](_bundle(s1, s2), CalculusSettings(), None)
    assert (b.lo, b.hi) == (0.0, 1.0)


def test_kyburg_fallback_prefers_whole_record_sample():
    # two contradictory samples alleging the same always-true class: the
    # fallback quotes the record-wide estimate rather than giving up
    t1 = SampleStatement(ReferenceClass.always_true(), TARGET, 40, 2)
    t2 = SampleStatement(ReferenceClass.always_true(), TARGET, 40, 38)
    b = REGISTRY["kyburg"](_bundle(t1, t2), CalculusSettings(), None)
    top = confidence_interval(40, 2, 0.9)
    assert (b.lo, b.hi) == (top.lo, top.hi)


def test_loui_belief_never_fails_on_disagreement():
    s1 = SampleStatement(_rc("weekend", "busy"), TARGET, 40, 2)
    s2 = SampleStatement(_rc("weekend", "late"), TARGET, 40, 30)
    b = REGISTRY["loui"](_bundle(s1, s2), CalculusSettings(), None)
    lo = confidence_interval(40, 2, 0.9).lo
    hi = confidence_interval(40, 30, 0.9).hi
    assert b.lo == pytest.approx(lo)
    assert b.hi == pytest.approx(hi)


def test_adaptive_confidence_mapping():
    assert adaptive_confidence(1.0, 0.7, 0.9, 1.0, 5.0) == pytest.approx(0.9)
    assert adaptive_confidence(5.0, 0.7, 0.9, 1.0, 5.0) == pytest.approx(0.7)
    assert adaptive_confidence(3.0, 0.7, 0.9, 1.0, 5.0) == pytest.approx(0.8)
    # clamped outside the range
    assert adaptive_confidence(0.5, 0.7, 0.9, 1.0, 5.0) == pytest.approx(0.9)
    assert adaptive_confidence(9.0, 0.7, 0.9, 1.0, 5.0) == pytest.approx(0.7)
    # degenerate range
    assert adaptive_confidence(2.0, 0.7, 0.9, 3.0, 3.0) == pytest.approx(0.8)


def test_kyburg_adaptive_needs_pot_and_reacts_to_it():
    bundle = _bundle(S_TOP, S_WK)
    settings = CalculusSettings(pot_min=1.0, pot_max=10.0)
    with pytest.raises(CalculusError):
        REGISTRY["kyburg-adaptive"](bundle, settings, None)
    small_pot = REGISTRY["kyburg-adaptive"](bundle, settings, 1.0)
    large_pot = REGISTRY["kyburg-adaptive"](bundle, settings, 10.0)
    fixed_hi = REGISTRY["kyburg"](bundle, CalculusSettings(confidence=0.9), 1.0)
    fixed_lo = REGISTRY["kyburg"](bundle, CalculusSettings(confidence=0.7), 1.0)
    assert (small_pot.lo, small_pot.hi) == (fixed_hi.lo, fixed_hi.hi)
    assert (large_pot.lo, large_pot.hi) == (fixed_lo.lo, fixed_lo.hi)


def test_registry_surface():
    assert set(METHOD_NAMES) == {
        "naive-average",
        "maximal-average",
        "similarity",
        "naive-dempster",
        "maximal-dempster",
        "kyburg",
        "kyburg-adaptive",
        "loui",
    }
    bundle = _bundle(S_TOP, S_WK)
    settings = CalculusSettings()
    for name in METHOD_NAMES:
        belief = REGISTRY[name](bundle, settings, 2.0)
        assert isinstance(belief, Belief)
        assert 0.0 <= belief.lo <= belief.hi <= 1.0


def test_point_methods_return_points_interval_methods_intervals():
    bundle = _bundle(S_TOP, S_WK)
    settings = CalculusSettings()
    for name in ("naive-average", "maximal-average", "similarity"):
        assert REGISTRY[name](bundle, settings, None).is_point
    for name in ("naive-dempster", "maximal-dempster", "kyburg", "loui"):
        assert not REGISTRY[name](bundle, settings, None).is_point
