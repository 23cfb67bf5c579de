/**
 * Wire types for the session service, with runtime guards.
 *
 * The shapes mirror PROTOCOL.md at the repository root. Guards run on
 * every response before anything reaches the screen. The next-query
 * guard is strict about its key set on purpose: a server that starts
 * attaching ground truth or belief numbers to unanswered queries must
 * fail loudly here instead of rendering.
 */
export const CHOICES = ["ante", "offer-pot", "abstain"];
/** The complete key set a next-query payload may carry. */
export const NEXT_QUERY_KEYS = [
    "index",
    "count",
    "announced",
    "target",
    "pot",
    "ratio",
    "ante",
];
function isRecord(x) {
    return typeof x === "object" && x !== null && !Array.isArray(x);
}
function isFiniteNumber(x) {
    return typeof x === "number" && Number.isFinite(x);
}
function isCount(x) {
    return isFiniteNumber(x) && Number.isInteger(x) && x >= 0;
}
function isOptionalNumber(x) {
    return x === null || isFiniteNumber(x);
}
function isStringArray(x) {
    return Array.isArray(x) && x.every((item) => typeof item === "string");
}
function isPairArray(x) {
    return (Array.isArray(x) &&
        x.every((p) => Array.isArray(p) && p.length === 2 && p.every(isFiniteNumber)));
}
export function isChoice(x) {
    return typeof x === "string" && CHOICES.includes(x);
}
export function isScenarioInfo(x) {
    return (isRecord(x) &&
        typeof x.id === "string" &&
        typeof x.title === "string" &&
        isCount(x.queries) &&
        isCount(x.data_points) &&
        isCount(x.announced_count) &&
        Array.isArray(x.pots) &&
        x.pots.every(isFiniteNumber));
}
export function isScenarioList(x) {
    return Array.isArray(x) && x.every(isScenarioInfo);
}
export function isOpenedSession(x) {
    return (isRecord(x) &&
        typeof x.token === "string" &&
        x.token.length > 0 &&
        typeof x.scenario === "string" &&
        isCount(x.queries) &&
        typeof x.advisory === "string");
}
/**
 * Accepts a next-query payload carrying exactly the advertised keys.
 *
 * Extra keys fail the check even when every known field is well formed.
 */
export function isNextQuery(x) {
    if (!isRecord(x)) {
        return false;
    }
    const keys = Object.keys(x).sort();
    const expected = [...NEXT_QUERY_KEYS].sort();
    if (keys.length !== expected.length ||
        keys.some((k, i) => k !== expected[i])) {
        return false;
    }
    return (isCount(x.index) &&
        isCount(x.count) &&
        isStringArray(x.announced) &&
        typeof x.target === "string" &&
        isFiniteNumber(x.pot) &&
        isFiniteNumber(x.ratio) &&
        isFiniteNumber(x.ante));
}
export function isChoiceVerdict(x) {
    return (isRecord(x) &&
        isCount(x.index) &&
        isChoice(x.choice) &&
        typeof x.truth === "boolean" &&
        isFiniteNumber(x.delta) &&
        isFiniteNumber(x.net) &&
        isCount(x.answered) &&
        typeof x.finished === "boolean");
}
export function isReportRow(x) {
    return (isRecord(x) &&
        typeof x.subject === "string" &&
        typeof x.data === "string" &&
        isFiniteNumber(x.net) &&
        isOptionalNumber(x.pct_max) &&
        isOptionalNumber(x.pct_rel) &&
        isFiniteNumber(x.gains) &&
        isFiniteNumber(x.losses) &&
        isOptionalNumber(x.gain_loss) &&
        isOptionalNumber(x.yield_rate) &&
        isCount(x.abstentions));
}
export function isReport(x) {
    return (isRecord(x) &&
        typeof x.partial === "boolean" &&
        isCount(x.answered) &&
        isCount(x.count) &&
        Array.isArray(x.rows) &&
        x.rows.every(isReportRow) &&
        isPairArray(x.frontier) &&
        isPairArray(x.hull));
}
