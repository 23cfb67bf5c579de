/**
 * Session state as plain data plus pure transitions.
 *
 * Everything on screen is derived from this record, and the record is
 * only ever rebuilt from service responses and the pending-input flag.
 * The controller owns sequencing; nothing here talks to the network.
 */
export function initialState() {
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
export function withLoading(state) {
    return { ...state, phase: { kind: "loading" } };
}
export function withScenarioChoice(state, scenarios) {
    return { ...state, phase: { kind: "choose", scenarios } };
}
/** A freshly opened session; any prior ledger display is discarded. */
export function withOpened(state, opened) {
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
export function withResumed(state, token) {
    return { ...initialState(), token };
}
/** Ledger figures refreshed from a partial report, e.g. after a reload. */
export function withLedger(state, net, answered, queries) {
    return { ...state, net, answered, queries };
}
export function withQuery(state, query) {
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
export function withPending(state, choice) {
    if (state.phase.kind !== "query" || state.pending !== null) {
        return state;
    }
    return { ...state, pending: choice };
}
export function withPendingCleared(state) {
    return { ...state, pending: null };
}
/** A settled choice: the ledger and history advance, the screen waits. */
export function withVerdict(state, verdict) {
    const entry = {
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
export function withReport(state, report) {
    return {
        ...state,
        answered: report.answered,
        queries: report.count,
        pending: null,
        phase: { kind: "report", report },
    };
}
export function withError(state, message) {
    return { ...state, pending: null, phase: { kind: "error", message } };
}
