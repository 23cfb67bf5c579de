/**
 * Session state as plain data plus pure transitions.
 *
 * Everything on screen is derived from this record, and the record is
 * only ever rebuilt from service responses and the pending-input flag.
 * The controller owns sequencing; nothing here talks to the network.
 */

import type {
  Choice,
  ChoiceVerdict,
  NextQuery,
  OpenedSession,
  Report,
  ScenarioInfo,
} from "./protocol.js";

export type Phase =
  | { kind: "loading" }
  | { kind: "choose"; scenarios: ScenarioInfo[] }
  | { kind: "advisory"; advisory: string }
  | { kind: "query"; query: NextQuery }
  | { kind: "report"; report: Report }
  | { kind: "error"; message: string };

export interface Settled {
  index: number;
  choice: Choice;
  truth: boolean;
  delta: number;
  net: number;
}

export interface SessionState {
  token: string | null;
  scenario: string | null;
  queries: number;
  answered: number;
  /** Running net from the latest settlement, as reported by the service. */
  net: number;
  history: Settled[];
  /** The in-flight submission, if any; set the moment a button fires. */
  pending: Choice | null;
  phase: Phase;
}

export function initialState(): SessionState {
  return {
    token: null,
    scenario: null,
    queries: 0,
    answered: 0,
    net: 0,
    history: [],
    pending: null,
    phase: { kind: "loading" },
  };
}

export function withLoading(state: SessionState): SessionState {
  return { ...state, phase: { kind: "loading" } };
}

export function withScenarioChoice(
  state: SessionState,
  scenarios: ScenarioInfo[],
): SessionState {
  return { ...state, phase: { kind: "choose", scenarios } };
}

/** A freshly opened session; any prior ledger display is discarded. */
export function withOpened(
  state: SessionState,
  opened: OpenedSession,
): SessionState {
  return {
    ...state,
    token: opened.token,
    scenario: opened.scenario,
    queries: opened.queries,
    answered: 0,
    net: 0,
    history: [],
    pending: null,
    phase: { kind: "advisory", advisory: opened.advisory },
  };
}

/** A session resumed from a stored token; the cursor is the service's. */
export function withResumed(state: SessionState, token: string): SessionState {
  return { ...initialState(), token };
}

/** Ledger figures refreshed from a partial report, e.g. after a reload. */
export function withLedger(
  state: SessionState,
  net: number,
  answered: number,
  queries: number,
): SessionState {
  return { ...state, net, answered, queries };
}

export function withQuery(state: SessionState, query: NextQuery): SessionState {
  return {
    ...state,
    queries: query.count,
    answered: query.index,
    pending: null,
    phase: { kind: "query", query },
  };
}

/**
 * Marks a choice as submitted. Outside the query phase, or while an
 * earlier submission is still in flight, the state is returned
 * untouched, which is what makes double clicks harmless.
 */
export function withPending(state: SessionState, choice: Choice): SessionState {
  if (state.phase.kind !== "query" || state.pending !== null) {
    return state;
  }
  return { ...state, pending: choice };
}

export function withPendingCleared(state: SessionState): SessionState {
  return { ...state, pending: null };
}

/** A settled choice: the ledger and history advance, the screen waits. */
export function withVerdict(
  state: SessionState,
  verdict: ChoiceVerdict,
): SessionState {
  const entry: Settled = {
    index: verdict.index,
    choice: verdict.choice,
    truth: verdict.truth,
    delta: verdict.delta,
    net: verdict.net,
  };
  return {
    ...state,
    answered: verdict.answered,
    net: verdict.net,
    history: [...state.history, entry],
    pending: null,
    phase: { kind: "loading" },
  };
}

export function withReport(state: SessionState, report: Report): SessionState {
  return {
    ...state,
    answered: report.answered,
    queries: report.count,
    pending: null,
    phase: { kind: "report", report },
  };
}

export function withError(state: SessionState, message: string): SessionState {
  return { ...state, pending: null, phase: { kind: "error", message } };
}
