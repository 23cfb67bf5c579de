"""Reference classes and sample summaries over snapshot records.

Given a record of closed snapshots, an announced property set, and a target
atom, :func:`summarize` turns the raw history into sample statements: one per
conjunction of announced properties that actually occurred, counting how many
snapshots satisfied the conjunction (``s``) and how many of those also
satisfied the target (``r``).  The empty conjunction is the always-true
class, so the overall base rate is always among the samples.

Statements render in a small s-expression notation::

    (s% ((AND (logged-on 'cox) (logged-on 'marsh)) (logged-on 'jackson)) (4 1))
    (s% ((always-true) (logged-on 'jackson)) (20 4))

A class keeps two views of itself: the conjunction as written (its label)
and the rule-closed property set, which is what specificity comparisons and
property-overlap counts see.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from .props import ALWAYS_TRUE, Atom, Rule, StateDescription, close

__all__ = [
    "ReferenceClass",
    "ProductClass",
    "SampleStatement",
    "summarize",
    "more_specific",
    "common_count",
    "fmt_number",
]

MAX_ANNOUNCED = 16


def fmt_number(x) -> str:
    """Numbers the way the reports write them: ``.2``, ``.096774``, ``20``."""
    xf = float(x)
    if xf.is_integer():
        return str(int(xf))
    s = f"{xf:.6f}".rstrip("0")
    if s.startswith("0."):
        return s[1:]
    if s.startswith("-0."):
        return "-" + s[2:]
    return s


@dataclass(frozen=True)
class ReferenceClass:
    """A sampling class: a conjunction of properties.

    ``label`` is the defining conjunction as written (always-true omitted);
    ``properties`` is the label closed under whatever rules built the class,
    and always contains ``(always-true)``.
    """

    properties: frozenset[Atom]
    label: tuple[Atom, ...]

    @classmethod
    def from_atoms(cls, atoms: Iterable[Atom], rules: Sequence[Rule] = ()) -> "ReferenceClass":
        label = tuple(sorted(set(atoms) - {ALWAYS_TRUE}))
        return cls(close(frozenset(label), rules).atoms, label)

    @classmethod
    def always_true(cls) -> "ReferenceClass":
        return cls(frozenset({ALWAYS_TRUE}), ())

    def sexp(self) -> str:
        if not self.label:
            return "(always-true)"
        if len(self.label) == 1:
            return self.label[0].sexp()
        return "(AND " + " ".join(a.sexp() for a in self.label) + ")"

    def sort_key(self) -> tuple:
        return (0, len(self.label), tuple(sorted(self.properties)), self.label)


@dataclass(frozen=True)
class ProductClass:
    """Cross-product of two sampling classes.

    ``kind`` is ``"XP"`` for the paired product used when combining interval
    estimates from property-disjoint classes.  The plain ``"X"`` product is
    carried for notation only; nothing computes with it.  The property set
    is the union of the factors', which is what makes a combined estimate
    strictly more specific than either factor.
    """

    kind: str
    left: Union["ReferenceClass", "ProductClass"]
    right: Union["ReferenceClass", "ProductClass"]

    def __post_init__(self) -> None:
        if self.kind not in ("XP", "X"):
            raise ValueError(f"unknown product kind: {self.kind!r}")

    @property
    def properties(self) -> frozenset[Atom]:
        return self.left.properties | self.right.properties

    @property
    def label(self) -> tuple[Atom, ...]:
        return tuple(sorted(set(self.left.label) | set(self.right.label)))

    def sexp(self) -> str:
        return f"({self.kind} {self.left.sexp()} {self.right.sexp()})"

    def sort_key(self) -> tuple:
        return (1, self.left.sort_key(), self.right.sort_key())


AnyClass = Union[ReferenceClass, ProductClass]


@dataclass(frozen=True)
class SampleStatement:
    """``s`` snapshots fell in the class; the target held in ``r`` of them."""

    ref: ReferenceClass
    target: Atom
    s: int
    r: int

    def __post_init__(self) -> None:
        if self.s < 1:
            raise ValueError("a sample statement needs at least one snapshot")
        if not 0 <= self.r <= self.s:
            raise ValueError(f"bad counts: r={self.r} s={self.s}")

    @property
    def frequency(self) -> float:
        return self.r / self.s

    def sexp(self) -> str:
        return f"(s% ({self.ref.sexp()} {self.target.sexp()}) ({self.s} {self.r}))"


def more_specific(a: AnyClass, b: AnyClass) -> bool:
    """Strict specificity: a's closed property set properly contains b's."""
    return a.properties > b.properties


def common_count(ref: AnyClass, given: frozenset[Atom] | set[Atom]) -> int:
    """How many of the given properties appear in the class's defining label.

    ``given`` is the caller's knowledge about the situation and should be
    deductively closed (so announcing ``(on cox antares)`` gives credit to a
    class built on ``(logged-on cox)``).  The class side stays as written:
    a class defined by ``(weekend)`` shares weekend and always-true with a
    weekend announcement, but not the entailed ``!(weekday)``.
    """
    return len((set(ref.label) | {ALWAYS_TRUE}) & frozenset(given))


def _popcount(m: int) -> int:
    return bin(m).count("1")


def summarize(
    record: Sequence[StateDescription],
    announced: Sequence[Atom],
    target: Atom,
    rules: Sequence[Rule] = (),
    max_classes: int | None = None,
) -> list[SampleStatement]:
    """Emit one sample statement per instantiated announced-property subset.

    Counting is a subset-sum over the per-snapshot satisfaction bitmasks, so
    the result depends only on the multiset of snapshots, never their order.
    Classes whose conjunction never occurred (s = 0) are omitted.  Two
    subsets closing to the same property set are merged (their counts are
    necessarily equal; the shorter label is kept).

    ``max_classes`` caps the emission for wide announced sets: the
    always-true class is always retained, then classes with more properties
    first, larger ``s`` breaking ties, label order after that.
    """
    ann = sorted(set(announced))
    if not ann:
        raise ValueError("nothing announced, nothing to summarize")
    if not record:
        raise ValueError("cannot summarize an empty record")
    if target in ann:
        raise ValueError("target must not be among the announced properties")
    if len(ann) > MAX_ANNOUNCED:
        raise ValueError(f"at most {MAX_ANNOUNCED} announced properties supported")
    if max_classes is not None and max_classes < 1:
        raise ValueError("max_classes must be positive")
    for snap in record:
        if not snap.closed:
            raise ValueError("summarize() requires closed snapshots")

    k = len(ann)
    size = 1 << k
    s_counts = np.zeros(size, dtype=np.int64)
    r_counts = np.zeros(size, dtype=np.int64)
    for snap in record:
        m = 0
        for i, atom in enumerate(ann):
            if atom in snap.atoms:
                m |= 1 << i
        s_counts[m] += 1
        if target in snap.atoms:
            r_counts[m] += 1
    for i in range(k):
        step = 1 << i
        for arr in (s_counts, r_counts):
            view = arr.reshape(-1, 2 * step)
            view[:, :step] += view[:, step:]

    masks = [m for m in range(size) if s_counts[m] > 0]
    if max_classes is not None and len(masks) > max_classes:
        rest = [m for m in masks if m != 0]
        rest.sort(key=lambda m: (-_popcount(m), -int(s_counts[m]), _label_key(m, ann)))
        masks = [0] + rest[: max_classes - 1]

    closure_cache: dict[frozenset[Atom], frozenset[Atom]] = {}
    by_props: dict[frozenset[Atom], SampleStatement] = {}
    for m in masks:
        label = tuple(ann[i] for i in range(k) if m & (1 << i))
        key = frozenset(label)
        props = closure_cache.get(key)
        if props is None:
            props = close(key, rules).atoms
            closure_cache[key] = props
        stmt = SampleStatement(ReferenceClass(props, label), target, int(s_counts[m]), int(r_counts[m]))
        prev = by_props.get(props)
        if prev is None:
            by_props[props] = stmt
        else:
            if (prev.s, prev.r) != (stmt.s, stmt.r):  # pragma: no cover - impossible for closed records
                raise AssertionError("merged classes disagree on counts")
            if (len(stmt.ref.label), stmt.ref.label) < (len(prev.ref.label), prev.ref.label):
                by_props[props] = stmt

    return sorted(by_props.values(), key=lambda st: (len(st.ref.label), st.ref.label))


def _label_key(m: int, ann: Sequence[Atom]) -> tuple:
    return tuple(ann[i] for i in range(len(ann)) if m & (1 << i))
