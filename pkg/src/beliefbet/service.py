"""HTTP session service: humans play the same query stream as the methods.

One server hosts one or more prepared scenarios.  A session walks a
scenario's queries in order; the player sees only what a subject is allowed
to see (announced properties, target, pot, ratio, ante) and commits to ante,
offer-pot, or abstain.  Settlement reveals the truth for that query.  The
report compares the player with every method over the answered prefix.

Every choice is appended to a JSONL log named after the session token, and
the server rebuilds all sessions from those logs on startup, so a restart
never loses money.

Wire contract (see PROTOCOL.md):

* ``GET  /api/scenarios``                 list scenarios
* ``POST /api/sessions``                  201, token + advisory text
* ``GET  /api/sessions/{token}/next``     next query, 409 when finished
* ``POST /api/sessions/{token}/choices``  settle one choice, 409 on replays
* ``GET  /api/sessions/{token}/report``   prefix scoreboard
"""

from __future__ import annotations

import datetime as dt
import json
import secrets
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from fastapi import FastAPI, HTTPException
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .betting import Choice, Ledger, decide, decide_forced, metrics, pareto_frontier, settle
from .dataio import ReportLine, SnapshotRecord, split_corpus
from .harness import PreparedQuery, ScenarioConfig, prepare_queries, subject_label
from .props import Rule

__all__ = ["ServiceScenario", "Session", "create_app", "DEFAULT_ADVISORY"]

DEFAULT_ADVISORY = (
    "You are betting on a machine-room snapshot you cannot see. "
    "The announced properties hold in it; decide whether the target does too. "
    "Ante to back the target, offer the pot to bet against it, or abstain. "
    "The programs play the very same queries."
)


@dataclass(frozen=True)
class ServiceScenario:
    """A frozen query stream plus every method's precomputed play."""

    id: str
    title: str
    advisory: str
    config: ScenarioConfig
    prepared: tuple[PreparedQuery, ...]
    wins: tuple[Fraction, ...] = field(repr=False, default=())
    method_choices: dict[str, list[Choice]] = field(repr=False, default_factory=dict)
    method_deltas: dict[str, list[Fraction]] = field(repr=False, default_factory=dict)

    @classmethod
    def build(
        cls,
        scenario_id: str,
        cfg: ScenarioConfig,
        records: Sequence[SnapshotRecord],
        rules: Sequence[Rule],
        title: Optional[str] = None,
        advisory: str = DEFAULT_ADVISORY,
    ) -> "ServiceScenario":
        data, pool = split_corpus(records, cfg.data_points, cfg.seed)
        prepared = tuple(prepare_queries(cfg, data, pool, rules))
        wins = []
        choices: dict[str, list[Choice]] = {m: [] for m in cfg.methods}
        deltas: dict[str, list[Fraction]] = {m: [] for m in cfg.methods}
        decide_fn = decide_forced if cfg.forced else decide
        for pq in prepared:
            offer = pq.query.offer
            wins.append(
                offer.exact_pot() - offer.exact_ante()
                if pq.query.truth
                else offer.exact_ante()
            )
            for m in cfg.methods:
                belief = pq.beliefs.get(m)
                if belief is None:
                    ch, delta = Choice.ABSTAIN, Fraction(0)
                else:
                    ch = decide_fn(belief, offer)
                    delta = settle(ch, offer, pq.query.truth)
                choices[m].append(ch)
                deltas[m].append(delta)
        return cls(
            id=scenario_id,
            title=title or scenario_id,
            advisory=advisory,
            config=cfg,
            prepared=prepared,
            wins=tuple(wins),
            method_choices=choices,
            method_deltas=deltas,
        )

    def describe(self) -> dict:
        return {
            "id": self.id,
            "title": self.title,
            "queries": len(self.prepared),
            "data_points": self.config.data_points,
            "announced_count": self.config.announced_count,
            "pots": list(self.config.lottery_pots),
        }


@dataclass
class Session:
    token: str
    scenario_id: str
    player: Optional[str]
    created: str
    choices: list[tuple[Choice, Fraction]] = field(default_factory=list)
    ledger: Ledger = field(default_factory=Ledger)

    @property
    def answered(self) -> int:
        return len(self.choices)


class SessionRequest(BaseModel):
    scenario: Optional[str] = None
    player: Optional[str] = None


class ChoiceRequest(BaseModel):
    index: int
    choice: str


def _append_event(log_dir: Path, token: str, event: dict) -> None:
    with open(log_dir / f"{token}.jsonl", "a", encoding="utf-8") as f:
        f.write(json.dumps(event, sort_keys=True) + "\n")


def _replay_sessions(
    log_dir: Path, scenarios: dict[str, ServiceScenario]
) -> dict[str, Session]:
    """Rebuild all sessions from their append-only choice logs."""
    sessions: dict[str, Session] = {}
    for path in sorted(log_dir.glob("*.jsonl")):
        with open(path, "r", encoding="utf-8") as f:
            lines = [json.loads(ln) for ln in f if ln.strip()]
        if not lines or lines[0].get("event") != "start":
            continue
        head = lines[0]
        if head.get("scenario") not in scenarios:
            continue
        session = Session(
            token=head["token"],
            scenario_id=head["scenario"],
            player=head.get("player"),
            created=head.get("created", ""),
        )
        for entry in lines[1:]:
            if entry.get("event") != "choice":
                continue
            ch = Choice(entry["choice"])
            delta = Fraction(entry["delta"])
            session.choices.append((ch, delta))
            session.ledger.record(ch, delta)
        sessions[session.token] = session
    return sessions


def create_app(
    scenarios: dict[str, ServiceScenario] | ServiceScenario,
    log_dir: Path | str,
    static_dir: Optional[Path | str] = None,
) -> FastAPI:
    if isinstance(scenarios, ServiceScenario):
        scenarios = {scenarios.id: scenarios}
    if not scenarios:
        raise ValueError("a server needs at least one scenario")
    log_dir = Path(log_dir)
    log_dir.mkdir(parents=True, exist_ok=True)
    sessions = _replay_sessions(log_dir, scenarios)

    app = FastAPI(title="beliefbet session service")
    app.state.scenarios = scenarios
    app.state.sessions = sessions

    def _session(token: str) -> tuple[Session, ServiceScenario]:
        session = sessions.get(token)
        if session is None:
            raise HTTPException(status_code=404, detail="unknown session token")
        return session, scenarios[session.scenario_id]

    @app.get("/api/scenarios")
    def list_scenarios() -> list[dict]:
        return [sc.describe() for _, sc in sorted(scenarios.items())]

    @app.post("/api/sessions", status_code=201)
    def open_session(req: SessionRequest) -> dict:
        sid = req.scenario
        if sid is None:
            if len(scenarios) != 1:
                raise HTTPException(status_code=400, detail="scenario id required")
            sid = next(iter(scenarios))
        scenario = scenarios.get(sid)
        if scenario is None:
            raise HTTPException(status_code=404, detail=f"unknown scenario {sid!r}")
        token = secrets.token_urlsafe(16)
        session = Session(
            token=token,
            scenario_id=sid,
            player=req.player,
            created=dt.datetime.now(dt.timezone.utc).isoformat(timespec="seconds"),
        )
        sessions[token] = session
        _append_event(
            log_dir,
            token,
            {
                "event": "start",
                "token": token,
                "scenario": sid,
                "player": req.player,
                "created": session.created,
            },
        )
        return {
            "token": token,
            "scenario": sid,
            "queries": len(scenario.prepared),
            "advisory": scenario.advisory,
        }

    @app.get("/api/sessions/{token}/next")
    def next_query(token: str) -> dict:
        session, scenario = _session(token)
        if session.answered >= len(scenario.prepared):
            raise HTTPException(status_code=409, detail="session finished")
        q = scenario.prepared[session.answered].query
        return {
            "index": q.index,
            "count": len(scenario.prepared),
            "announced": [a.sexp() for a in q.announced],
            "target": q.target.sexp(),
            "pot": q.pot,
            "ratio": q.ratio,
            "ante": q.offer.ante,
        }

    @app.post("/api/sessions/{token}/choices")
    def submit_choice(token: str, req: ChoiceRequest) -> dict:
        session, scenario = _session(token)
        if session.answered >= len(scenario.prepared):
            raise HTTPException(status_code=409, detail="session finished")
        if req.index != session.answered:
            raise HTTPException(
                status_code=409,
                detail=f"expected a choice for query {session.answered}, got {req.index}",
            )
        try:
            choice = Choice(req.choice)
        except ValueError:
            raise HTTPException(status_code=400, detail=f"bad choice {req.choice!r}")
        pq = scenario.prepared[req.index]
        delta = settle(choice, pq.query.offer, pq.query.truth)
        session.choices.append((choice, delta))
        session.ledger.record(choice, delta)
        _append_event(
            log_dir,
            token,
            {
                "event": "choice",
                "index": req.index,
                "choice": choice.value,
                "truth": pq.query.truth,
                "delta": str(delta),
            },
        )
        return {
            "index": req.index,
            "choice": choice.value,
            "truth": pq.query.truth,
            "delta": float(delta),
            "net": float(session.ledger.net),
            "answered": session.answered,
            "finished": session.answered >= len(scenario.prepared),
        }

    @app.get("/api/sessions/{token}/report")
    def report(token: str) -> dict:
        session, scenario = _session(token)
        n = session.answered
        perfect = sum(scenario.wins[:n], Fraction(0))
        board: list[tuple[str, Ledger]] = [("you", session.ledger)]
        for m in scenario.config.methods:
            led = Ledger()
            for ch, delta in zip(
                scenario.method_choices[m][:n], scenario.method_deltas[m][:n]
            ):
                led.record(ch, delta)
            board.append((subject_label(m, scenario.config), led))
        best = max(led.net for _, led in board)
        lines = [
            ReportLine(
                subject=subject,
                data=str(scenario.config.data_points),
                row=metrics(led, perfect if perfect > 0 else None, best),
            )
            for subject, led in board
        ]
        scored = [
            (ln.row.net, ln.row.yield_rate)
            for ln in lines
            if ln.row.yield_rate is not None
        ]
        frontier, hull = pareto_frontier(scored) if scored else ([], [])
        return {
            "partial": n < len(scenario.prepared),
            "answered": n,
            "count": len(scenario.prepared),
            "rows": [
                {"subject": ln.subject, "data": ln.data, **ln.row.__dict__}
                for ln in lines
            ],
            "frontier": [list(p) for p in frontier],
            "hull": [list(p) for p in hull],
        }

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")
    return app
