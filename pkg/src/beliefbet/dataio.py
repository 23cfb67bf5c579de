"""Synthetic snapshot generation and the on-disk formats.

The generator simulates a small machine room.  A snapshot is taken at a
uniformly random moment across the model's span of weeks; one day in seven
(Sundays) is flagged ``(weekend)``, the rest ``(weekday)``.  Each user then
logs on independently with a base rate scaled by a personal weekend
multiplier, after which pairwise affinities pull collaborators in: if u is
on and likes working with v, v shows up with the affinity probability.
Whoever is logged on picks a machine from a personal preference table,
yielding ``(on user machine)`` atoms.  Long-running services are modeled by
their dwell time: a backup observed with probability ``backup.prob`` (and
nudging its owner's logon chance by ``backup.boost``), a file-transfer
daemon with ``uucp.prob``.  The count of users on is discretized into
crowd-level atoms (``(few-network-users)`` etc.).

Derived facts — ``(logged-on u)``, ``(in-use m)``, the weekday/weekend
complements — are not stored; they come from the ground rule set applied at
load time.

Formats, all line-oriented and versioned:

* corpus: header ``corpus v1``, then ``ISO-timestamp<TAB>(atom) (atom)...``
* model: header ``model v1``, then ``key = value`` lines
* rules: ``#`` comments, ``body & body -> head & head``
* run reports: TSV with the fixed column order
  subject, data, net, %max, %rel, gains, losses, g/l, yield, #absts
* run traces: one JSON object per line
"""

from __future__ import annotations

import datetime as dt
import json
import random
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, TextIO

from .betting import MetricRow
from .props import ALWAYS_TRUE, Atom, Rule, StateDescription, close, parse_atom
from .refclass import fmt_number

__all__ = [
    "SnapshotRecord",
    "GeneratorModel",
    "CorpusFormatError",
    "ModelFormatError",
    "LEVEL_ATOMS",
    "default_model",
    "default_rules",
    "generate",
    "vocabulary",
    "load_corpus",
    "store_corpus",
    "load_model",
    "store_model",
    "split_corpus",
    "close_all",
    "ReportLine",
    "write_report",
    "write_trace",
]

CORPUS_HEADER = "corpus v1"
MODEL_HEADER = "model v1"

LEVEL_ATOMS = (
    (0, "no-network-users"),
    (2, "few-network-users"),
    (4, "many-network-users"),
    (5, "very-many-network-users"),
    (None, "very-very-many-network-users"),
)


class CorpusFormatError(ValueError):
    pass


class ModelFormatError(ValueError):
    pass


@dataclass(frozen=True)
class SnapshotRecord:
    """One raw observation: when it was taken and what was seen."""

    timestamp: dt.datetime
    atoms: frozenset[Atom]
    source: str = "generated"

    def line(self) -> str:
        parts = " ".join(a.compact() for a in sorted(self.atoms))
        return f"{self.timestamp.isoformat(timespec='seconds')}\t{parts}"


@dataclass(frozen=True)
class GeneratorModel:
    """Parameters of the synthetic machine room."""

    users: tuple[str, ...]
    machines: tuple[str, ...]
    rates: dict[str, float]
    weekend_mult: dict[str, float] = field(default_factory=dict)
    affinities: dict[tuple[str, str], float] = field(default_factory=dict)
    prefs: dict[str, dict[str, float]] = field(default_factory=dict)
    backup_user: Optional[str] = None
    backup_prob: float = 0.0
    backup_boost: float = 0.0
    uucp_prob: float = 0.0
    start: dt.date = dt.date(2020, 3, 2)
    weeks: int = 26
    seed: int = 0

    def __post_init__(self) -> None:
        if len(set(self.users)) != len(self.users) or not self.users:
            raise ModelFormatError("users must be nonempty and distinct")
        if len(set(self.machines)) != len(self.machines) or not self.machines:
            raise ModelFormatError("machines must be nonempty and distinct")
        for u in self.users:
            if u not in self.rates:
                raise ModelFormatError(f"no logon rate for user {u}")
        for mapping, what in ((self.rates, "rate"), (self.weekend_mult, "weekend-mult")):
            for u in mapping:
                if u not in self.users:
                    raise ModelFormatError(f"{what} for unknown user {u}")
        for (a, b), w in self.affinities.items():
            if a not in self.users or b not in self.users or a == b:
                raise ModelFormatError(f"bad affinity pair {a},{b}")
            if not 0.0 <= w <= 1.0:
                raise ModelFormatError(f"affinity out of range: {w}")
        for u, table in self.prefs.items():
            if u not in self.users:
                raise ModelFormatError(f"prefs for unknown user {u}")
            if any(m not in self.machines for m in table):
                raise ModelFormatError(f"prefs for {u} mention an unknown machine")
            if abs(sum(table.values()) - 1.0) > 1e-6:
                raise ModelFormatError(f"prefs for {u} must sum to 1")
        if self.backup_user is not None and self.backup_user not in self.users:
            raise ModelFormatError(f"backup user {self.backup_user} is not a user")
        for p in (self.backup_prob, self.backup_boost, self.uucp_prob, *self.rates.values()):
            if not 0.0 <= p <= 1.0:
                raise ModelFormatError(f"probability out of range: {p}")
        if self.start.weekday() != 0:
            raise ModelFormatError("model start date must be a Monday")
        if self.weeks < 1:
            raise ModelFormatError("model needs at least one week")

    def machine_table(self, user: str) -> list[tuple[str, float]]:
        table = self.prefs.get(user)
        if not table:
            w = 1.0 / len(self.machines)
            return [(m, w) for m in self.machines]
        return sorted(table.items())


def default_model(seed: int = 1988) -> GeneratorModel:
    """A lived-in department: six users, four machines, one backup owner."""
    return GeneratorModel(
        users=("cheng", "cox", "jackson", "lata", "marsh", "moss"),
        machines=("altair", "antares", "castor", "lesath"),
        rates={
            "marsh": 0.40,
            "cox": 0.30,
            "jackson": 0.22,
            "cheng": 0.08,
            "lata": 0.28,
            "moss": 0.15,
        },
        weekend_mult={
            "marsh": 0.35,
            "cox": 1.50,
            "jackson": 0.50,
            "cheng": 0.50,
            "lata": 0.75,
            "moss": 1.00,
        },
        affinities={
            ("cox", "marsh"): 0.45,
            ("cox", "jackson"): 0.30,
            ("lata", "moss"): 0.35,
        },
        prefs={
            "marsh": {"castor": 0.55, "antares": 0.25, "lesath": 0.10, "altair": 0.10},
            "cox": {"antares": 0.50, "castor": 0.30, "altair": 0.20},
            "jackson": {"lesath": 0.45, "altair": 0.30, "castor": 0.25},
            "cheng": {"altair": 0.70, "lesath": 0.30},
            "lata": {"lesath": 0.50, "antares": 0.50},
        },
        backup_user="cheng",
        backup_prob=0.22,
        backup_boost=0.15,
        uucp_prob=0.18,
        seed=seed,
    )


def default_rules(model: GeneratorModel) -> list[Rule]:
    """Ground rule set for a model's vocabulary.

    Weekend and weekday exclude each other, and being on a machine entails
    being logged on and the machine being in use.  Quantified knowledge is
    compiled to one ground rule per user-machine pair.
    """
    rules = [
        Rule(frozenset({Atom("weekend")}), frozenset({Atom("weekday", negated=True)})),
        Rule(frozenset({Atom("weekday")}), frozenset({Atom("weekend", negated=True)})),
    ]
    for u in model.users:
        for m in model.machines:
            rules.append(
                Rule(
                    frozenset({Atom("on", (u, m))}),
                    frozenset({Atom("logged-on", (u,)), Atom("in-use", (m,))}),
                )
            )
    return rules


def vocabulary(model: GeneratorModel) -> frozenset[Atom]:
    """Every positive atom the model can ever produce or entail."""
    atoms = {
        ALWAYS_TRUE,
        Atom("weekend"),
        Atom("weekday"),
        Atom("backup-somewhere"),
        Atom("uucp-active"),
    }
    for _, name in LEVEL_ATOMS:
        atoms.add(Atom(name))
    for u in model.users:
        atoms.add(Atom("logged-on", (u,)))
        for m in model.machines:
            atoms.add(Atom("on", (u, m)))
    for m in model.machines:
        atoms.add(Atom("in-use", (m,)))
    return frozenset(atoms)


def _level_atom(count: int) -> Atom:
    for bound, name in LEVEL_ATOMS:
        if bound is None or count <= bound:
            return Atom(name)
    raise AssertionError("unreachable")


def generate(model: GeneratorModel, n: int, seed: Optional[int] = None) -> list[SnapshotRecord]:
    """Draw n independent snapshots; identical seeds give identical output."""
    if n < 0:
        raise ValueError("cannot generate a negative number of snapshots")
    rng = random.Random(model.seed if seed is None else seed)
    span = model.weeks * 7 * 24 * 3600
    start = dt.datetime.combine(model.start, dt.time())
    users = sorted(model.users)
    out: list[SnapshotRecord] = []
    for _ in range(n):
        ts = start + dt.timedelta(seconds=rng.randrange(span))
        weekend = ts.weekday() == 6
        backup = rng.random() < model.backup_prob
        uucp = rng.random() < model.uucp_prob
        on: dict[str, bool] = {}
        for u in users:
            p = model.rates[u] * (model.weekend_mult.get(u, 1.0) if weekend else 1.0)
            if backup and u == model.backup_user:
                p += model.backup_boost
            on[u] = rng.random() < min(1.0, p)
        drivers = {u for u, v in on.items() if v}
        for u in users:
            if on[u]:
                continue
            stay_off = 1.0
            for v in drivers:
                key = (min(u, v), max(u, v))
                stay_off *= 1.0 - model.affinities.get(key, 0.0)
            if stay_off < 1.0 and rng.random() < 1.0 - stay_off:
                on[u] = True
        atoms = {Atom("weekend") if weekend else Atom("weekday")}
        count = 0
        for u in users:
            if not on[u]:
                continue
            count += 1
            table = model.machine_table(u)
            roll = rng.random()
            acc = 0.0
            machine = table[-1][0]
            for m, w in table:
                acc += w
                if roll < acc:
                    machine = m
                    break
            atoms.add(Atom("on", (u, machine)))
        atoms.add(_level_atom(count))
        if backup:
            atoms.add(Atom("backup-somewhere"))
        if uucp:
            atoms.add(Atom("uucp-active"))
        out.append(SnapshotRecord(ts, frozenset(atoms)))
    out.sort(key=lambda r: (r.timestamp, sorted(r.atoms)))
    return out


def close_all(records: Sequence[SnapshotRecord], rules: Sequence[Rule]) -> list[StateDescription]:
    return [close(r.atoms, rules) for r in records]


def split_corpus(
    records: Sequence[SnapshotRecord], data_points: int, seed: int
) -> tuple[list[SnapshotRecord], list[SnapshotRecord]]:
    """Seeded split into a familiarization record and a disjoint test pool."""
    if not 0 < data_points < len(records):
        raise ValueError(
            f"data_points must leave a nonempty test pool: {data_points} of {len(records)}"
        )
    idx = list(range(len(records)))
    random.Random(seed).shuffle(idx)
    data = sorted(idx[:data_points])
    pool = sorted(idx[data_points:])
    return [records[i] for i in data], [records[i] for i in pool]


# ---------------------------------------------------------------- corpora


def store_corpus(records: Iterable[SnapshotRecord], path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(CORPUS_HEADER + "\n")
        for r in records:
            f.write(r.line() + "\n")


def load_corpus(path, model: Optional[GeneratorModel] = None) -> list[SnapshotRecord]:
    """Read a corpus; with a model, every atom is checked against its
    vocabulary and violations are reported with their line number."""
    vocab = None
    if model is not None:
        vocab = {(a.predicate, a.args) for a in vocabulary(model)}
    records = []
    with open(path, "r", encoding="utf-8") as f:
        header = f.readline().rstrip("\n")
        if header != CORPUS_HEADER:
            raise CorpusFormatError(f"{path}: not a corpus file (header {header!r})")
        for lineno, raw in enumerate(f, start=2):
            line = raw.rstrip("\n")
            if not line.strip():
                continue
            ts_text, _, atoms_text = line.partition("\t")
            if not atoms_text:
                raise CorpusFormatError(f"{path}:{lineno}: missing TAB separator")
            try:
                ts = dt.datetime.fromisoformat(ts_text)
            except ValueError as exc:
                raise CorpusFormatError(f"{path}:{lineno}: bad timestamp {ts_text!r}") from exc
            atoms = set()
            for token in _split_atoms(atoms_text, path, lineno):
                try:
                    atom = parse_atom(token)
                except ValueError as exc:
                    raise CorpusFormatError(f"{path}:{lineno}: {exc}") from exc
                if vocab is not None and (atom.predicate, atom.args) not in vocab:
                    raise CorpusFormatError(
                        f"{path}:{lineno}: unknown atom {atom.compact()}"
                    )
                atoms.add(atom)
            records.append(SnapshotRecord(ts, frozenset(atoms), source=str(path)))
    return records


def _split_atoms(text: str, path, lineno: int) -> list[str]:
    tokens = []
    depth = 0
    cur = ""
    for ch in text.strip():
        if ch == "(":
            depth += 1
        if ch == ")":
            depth -= 1
            if depth < 0:
                raise CorpusFormatError(f"{path}:{lineno}: unbalanced parentheses")
        if ch == " " and depth == 0:
            if cur:
                tokens.append(cur)
            cur = ""
        else:
            cur += ch
    if depth != 0:
        raise CorpusFormatError(f"{path}:{lineno}: unbalanced parentheses")
    if cur:
        tokens.append(cur)
    return tokens


# ----------------------------------------------------------------- models


def store_model(model: GeneratorModel, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(MODEL_HEADER + "\n")
        f.write(f"users = {', '.join(model.users)}\n")
        f.write(f"machines = {', '.join(model.machines)}\n")
        for u in model.users:
            f.write(f"rate.{u} = {fmt_plain(model.rates[u])}\n")
        for u in model.users:
            if u in model.weekend_mult:
                f.write(f"weekend-mult.{u} = {fmt_plain(model.weekend_mult[u])}\n")
        for (a, b), w in sorted(model.affinities.items()):
            f.write(f"affinity.{a}.{b} = {fmt_plain(w)}\n")
        for u in model.users:
            if u in model.prefs:
                table = ", ".join(f"{m}:{fmt_plain(w)}" for m, w in sorted(model.prefs[u].items()))
                f.write(f"prefs.{u} = {table}\n")
        if model.backup_user is not None:
            f.write(f"backup.user = {model.backup_user}\n")
            f.write(f"backup.prob = {fmt_plain(model.backup_prob)}\n")
            f.write(f"backup.boost = {fmt_plain(model.backup_boost)}\n")
        f.write(f"uucp.prob = {fmt_plain(model.uucp_prob)}\n")
        f.write(f"start = {model.start.isoformat()}\n")
        f.write(f"weeks = {model.weeks}\n")
        f.write(f"seed = {model.seed}\n")


def fmt_plain(x: float) -> str:
    return repr(round(float(x), 10))


def load_model(path) -> GeneratorModel:
    pairs: list[tuple[int, str, str]] = []
    with open(path, "r", encoding="utf-8") as f:
        header = f.readline().rstrip("\n")
        if header != MODEL_HEADER:
            raise ModelFormatError(f"{path}: not a model file (header {header!r})")
        for lineno, raw in enumerate(f, start=2):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ModelFormatError(f"{path}:{lineno}: expected key = value")
            key, _, value = line.partition("=")
            pairs.append((lineno, key.strip(), value.strip()))

    def _float(lineno: int, v: str) -> float:
        try:
            return float(v)
        except ValueError as exc:
            raise ModelFormatError(f"{path}:{lineno}: bad number {v!r}") from exc

    users: tuple[str, ...] = ()
    machines: tuple[str, ...] = ()
    rates: dict[str, float] = {}
    mult: dict[str, float] = {}
    aff: dict[tuple[str, str], float] = {}
    prefs: dict[str, dict[str, float]] = {}
    backup_user = None
    backup_prob = backup_boost = uucp_prob = 0.0
    start = dt.date(2020, 3, 2)
    weeks, seed = 26, 0
    for lineno, key, value in pairs:
        if key == "users":
            users = tuple(v.strip() for v in value.split(","))
        elif key == "machines":
            machines = tuple(v.strip() for v in value.split(","))
        elif key.startswith("rate."):
            rates[key[5:]] = _float(lineno, value)
        elif key.startswith("weekend-mult."):
            mult[key[13:]] = _float(lineno, value)
        elif key.startswith("affinity."):
            parts = key.split(".")
            if len(parts) != 3:
                raise ModelFormatError(f"{path}:{lineno}: bad affinity key {key!r}")
            aff[(parts[1], parts[2])] = _float(lineno, value)
        elif key.startswith("prefs."):
            table = {}
            for item in value.split(","):
                m, _, w = item.strip().partition(":")
                if not w:
                    raise ModelFormatError(f"{path}:{lineno}: bad prefs entry {item!r}")
                table[m.strip()] = _float(lineno, w)
            prefs[key[6:]] = table
        elif key == "backup.user":
            backup_user = value
        elif key == "backup.prob":
            backup_prob = _float(lineno, value)
        elif key == "backup.boost":
            backup_boost = _float(lineno, value)
        elif key == "uucp.prob":
            uucp_prob = _float(lineno, value)
        elif key == "start":
            try:
                start = dt.date.fromisoformat(value)
            except ValueError as exc:
                raise ModelFormatError(f"{path}:{lineno}: bad date {value!r}") from exc
        elif key == "weeks":
            weeks = int(_float(lineno, value))
        elif key == "seed":
            seed = int(_float(lineno, value))
        else:
            raise ModelFormatError(f"{path}:{lineno}: unknown key {key!r}")
    try:
        return GeneratorModel(
            users=users,
            machines=machines,
            rates=rates,
            weekend_mult=mult,
            affinities=aff,
            prefs=prefs,
            backup_user=backup_user,
            backup_prob=backup_prob,
            backup_boost=backup_boost,
            uucp_prob=uucp_prob,
            start=start,
            weeks=weeks,
            seed=seed,
        )
    except ModelFormatError as exc:
        raise ModelFormatError(f"{path}: {exc}") from exc


# ---------------------------------------------------------------- reports


@dataclass(frozen=True)
class ReportLine:
    subject: str
    data: str
    row: MetricRow


REPORT_COLUMNS = (
    "subject",
    "data",
    "net",
    "%max",
    "%rel",
    "gains",
    "losses",
    "g/l",
    "yield",
    "#absts",
)


def _cell(value, places: int | None = None) -> str:
    if value is None:
        return "-"
    if places is not None:
        value = round(value, places)
    return fmt_number(value)


def write_report(lines: Sequence[ReportLine], f: TextIO) -> None:
    f.write("\t".join(REPORT_COLUMNS) + "\n")
    for ln in lines:
        r = ln.row
        cells = (
            ln.subject,
            ln.data,
            _cell(r.net, 4),
            _cell(r.pct_max, 1),
            _cell(r.pct_rel, 1),
            _cell(r.gains, 4),
            _cell(r.losses, 4),
            _cell(r.gain_loss, 1),
            _cell(r.yield_rate, 2),
            str(r.abstentions),
        )
        f.write("\t".join(cells) + "\n")


def write_trace(entries: Iterable[dict], f: TextIO) -> None:
    for entry in entries:
        f.write(json.dumps(entry, sort_keys=True) + "\n")
