"""Ground propositional states and forward-chaining closure.

A snapshot of the machine room is described by a set of ground atoms such
as ``(weekend)`` or ``(on marsh castor)``.  Deductive structure is supplied
by ground Horn rules whose bodies and heads are atom sets; closing a state
under the rules yields everything that must also hold (for instance
``(on cox antares)`` forces ``(logged-on cox)`` and ``(in-use antares)``).
Every closed state contains the trivial atom ``(always-true)``.

Negation is classical-by-complement: an atom carries a ``negated`` flag and
a state that ever contains both an atom and its complement is rejected.
Rules may derive complements, e.g. ``(weekend) -> !(weekday)``.

Rule files are plain text, one rule per line::

    # comment
    (weekend) -> !(weekday)
    (on cox antares) -> (logged-on cox) & (in-use antares)

Bodies with several atoms are joined with ``&`` as well.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = [
    "Atom",
    "Rule",
    "StateDescription",
    "ALWAYS_TRUE",
    "InconsistencyError",
    "RuleSyntaxError",
    "close",
    "holds",
    "parse_atom",
    "parse_rule",
    "parse_rules",
    "load_rules",
    "store_rules",
]


@dataclass(frozen=True, order=True)
class Atom:
    """A ground atom: predicate, argument tuple, complement flag."""

    predicate: str
    args: tuple[str, ...] = ()
    negated: bool = False

    def __post_init__(self) -> None:
        if not self.predicate or not _NAME.fullmatch(self.predicate):
            raise ValueError(f"bad predicate name: {self.predicate!r}")
        for a in self.args:
            if not _NAME.fullmatch(a):
                raise ValueError(f"bad atom argument: {a!r}")

    def complement(self) -> "Atom":
        return Atom(self.predicate, self.args, not self.negated)

    def compact(self) -> str:
        """Rule/corpus-file form, e.g. ``!(on cox antares)``."""
        inner = " ".join((self.predicate,) + self.args)
        return ("!(" if self.negated else "(") + inner + ")"

    def sexp(self) -> str:
        """Report form with quoted arguments, e.g. ``(on 'cox 'antares)``."""
        inner = " ".join((self.predicate,) + tuple("'" + a for a in self.args))
        body = "(" + inner + ")"
        return f"(NOT {body})" if self.negated else body

    def __str__(self) -> str:  # pragma: no cover - convenience
        return self.compact()


_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_'-]*")

ALWAYS_TRUE = Atom("always-true")


@dataclass(frozen=True)
class Rule:
    """Ground Horn rule: if every body atom holds, every head atom holds."""

    body: frozenset[Atom]
    head: frozenset[Atom]

    def __post_init__(self) -> None:
        if not self.body or not self.head:
            raise ValueError("rule body and head must be nonempty")
        if self.body & self.head:
            raise ValueError("rule body and head must be disjoint")

    def compact(self) -> str:
        lhs = " & ".join(a.compact() for a in sorted(self.body))
        rhs = " & ".join(a.compact() for a in sorted(self.head))
        return f"{lhs} -> {rhs}"


@dataclass(frozen=True)
class StateDescription:
    """A set of atoms, optionally marked as deductively closed."""

    atoms: frozenset[Atom] = field(default_factory=frozenset)
    closed: bool = False

    def __contains__(self, atom: Atom) -> bool:
        return atom in self.atoms


class InconsistencyError(ValueError):
    """Closure derived (or was handed) an atom together with its complement."""

    def __init__(self, atom: Atom, other: Atom, trace: Sequence[str]):
        self.pair = (atom, other)
        self.trace = tuple(trace)
        lines = "".join("\n  " + t for t in trace) or "\n  (both atoms given directly)"
        super().__init__(
            f"inconsistent state: {atom.compact()} conflicts with {other.compact()};"
            f" derivation:{lines}"
        )


class RuleSyntaxError(ValueError):
    pass


def close(state: StateDescription | Iterable[Atom], rules: Sequence[Rule] = ()) -> StateDescription:
    """Least fixpoint of the rules over the state, plus ``(always-true)``.

    The result is independent of rule order (the closure operator is
    monotone, so the least fixpoint is unique) and applying ``close`` twice
    changes nothing.  Raises :class:`InconsistencyError` the moment a
    complementary pair appears, reporting which rule derived what.

    >>> wk = Rule(frozenset({Atom("weekend")}), frozenset({Atom("weekday", negated=True)}))
    >>> st = close(StateDescription(frozenset({Atom("weekend")})), [wk])
    >>> sorted(a.compact() for a in st.atoms)
    ['!(weekday)', '(always-true)', '(weekend)']
    """
    atoms = set(state.atoms if isinstance(state, StateDescription) else state)
    atoms.add(ALWAYS_TRUE)
    derived_by: dict[Atom, Rule] = {}

    def _trace(atom: Atom) -> list[str]:
        steps: list[str] = []
        seen: set[Atom] = set()
        frontier = [atom]
        while frontier:
            a = frontier.pop()
            rule = derived_by.get(a)
            if rule is None or a in seen:
                continue
            seen.add(a)
            steps.append(f"{a.compact()} by rule [{rule.compact()}]")
            frontier.extend(rule.body)
        return steps

    def _check(atom: Atom) -> None:
        comp = atom.complement()
        if comp in atoms:
            raise InconsistencyError(atom, comp, _trace(atom) + _trace(comp))

    for a in sorted(atoms):
        _check(a)
    changed = True
    while changed:
        changed = False
        for rule in rules:
            if rule.body <= atoms and not rule.head <= atoms:
                for a in sorted(rule.head):
                    if a not in atoms:
                        atoms.add(a)
                        derived_by[a] = rule
                        _check(a)
                changed = True
    return StateDescription(frozenset(atoms), closed=True)


def holds(state: StateDescription, prop: Atom) -> bool:
    """Membership test; the state must already be closed."""
    if not state.closed:
        raise ValueError("holds() requires a closed state; call close() first")
    return prop in state.atoms


_ATOM_RE = re.compile(r"(!?)\(\s*([^()!]*?)\s*\)")


def parse_atom(text: str) -> Atom:
    """Parse the compact form: ``(pred arg ...)`` or ``!(pred arg ...)``."""
    m = _ATOM_RE.fullmatch(text.strip())
    if not m:
        raise RuleSyntaxError(f"malformed atom: {text!r}")
    neg, inner = m.group(1) == "!", m.group(2)
    parts = [p.strip("'") for p in inner.split()]
    if not parts:
        raise RuleSyntaxError(f"empty atom: {text!r}")
    try:
        return Atom(parts[0], tuple(parts[1:]), neg)
    except ValueError as exc:
        raise RuleSyntaxError(f"malformed atom {text!r}: {exc}") from exc


def _parse_conjunction(text: str, what: str) -> frozenset[Atom]:
    parts = [p.strip() for p in text.split("&")]
    if any(not p for p in parts):
        raise RuleSyntaxError(f"empty conjunct in rule {what}: {text!r}")
    return frozenset(parse_atom(p) for p in parts)


def parse_rule(line: str) -> Rule:
    if "->" not in line:
        raise RuleSyntaxError(f"rule is missing '->': {line!r}")
    lhs, _, rhs = line.partition("->")
    try:
        return Rule(_parse_conjunction(lhs, "body"), _parse_conjunction(rhs, "head"))
    except ValueError as exc:
        raise RuleSyntaxError(f"bad rule {line.strip()!r}: {exc}") from exc


def parse_rules(text: str) -> list[Rule]:
    """Parse a rule file body; ``#`` starts a comment, blank lines ignored."""
    rules = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rules.append(parse_rule(line))
        except RuleSyntaxError as exc:
            raise RuleSyntaxError(f"line {lineno}: {exc}") from exc
    return rules


def load_rules(path) -> list[Rule]:
    with open(path, "r", encoding="utf-8") as f:
        return parse_rules(f.read())


def store_rules(rules: Iterable[Rule], path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write("# ground rules, one per line: body & body -> head & head\n")
        for r in rules:
            f.write(r.compact() + "\n")
