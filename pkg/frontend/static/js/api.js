/**
 * Typed client for the session service.
 *
 * Every response body passes a protocol guard before it is returned,
 * so callers only ever see well-formed payloads. HTTP failures become
 * ApiError with the status attached; malformed bodies become
 * ProtocolError; plain network trouble surfaces as whatever the fetch
 * implementation throws.
 */
import { isChoiceVerdict, isNextQuery, isOpenedSession, isReport, isScenarioList, } from "./protocol.js";
export class ApiError extends Error {
    constructor(message, status) {
        super(message);
        this.status = status;
        this.name = "ApiError";
    }
}
export class ProtocolError extends Error {
    constructor(message) {
        super(message);
        this.name = "ProtocolError";
    }
}
async function errorDetail(res) {
    try {
        const body = (await res.json());
        if (body && typeof body.detail === "string") {
            return body.detail;
        }
    }
    catch {
        // fall through to the bare status line
    }
    return `request failed with status ${res.status}`;
}
export class ApiClient {
    constructor(baseUrl = "", fetchFn = (input, init) => fetch(input, init)) {
        this.baseUrl = baseUrl;
        this.fetchFn = fetchFn;
    }
    async request(method, path, body) {
        const init = { method };
        if (body !== undefined) {
            init.headers = { "content-type": "application/json" };
            init.body = JSON.stringify(body);
        }
        return this.fetchFn(`${this.baseUrl}${path}`, init);
    }
    async parse(res, guard, what) {
        let payload;
        try {
            payload = await res.json();
        }
        catch {
            throw new ProtocolError(`${what}: response body is not JSON`);
        }
        if (!guard(payload)) {
            throw new ProtocolError(`${what}: malformed payload`);
        }
        return payload;
    }
    async scenarios() {
        const res = await this.request("GET", "/api/scenarios");
        if (!res.ok) {
            throw new ApiError(await errorDetail(res), res.status);
        }
        return this.parse(res, isScenarioList, "scenario list");
    }
    async open(scenario, player) {
        const body = {};
        if (scenario !== undefined) {
            body.scenario = scenario;
        }
        if (player !== undefined) {
            body.player = player;
        }
        const res = await this.request("POST", "/api/sessions", body);
        if (res.status !== 201) {
            throw new ApiError(await errorDetail(res), res.status);
        }
        return this.parse(res, isOpenedSession, "session open");
    }
    async next(token) {
        const res = await this.request("GET", `/api/sessions/${encodeURIComponent(token)}/next`);
        if (res.status === 409) {
            return { kind: "finished" };
        }
        if (!res.ok) {
            throw new ApiError(await errorDetail(res), res.status);
        }
        const query = await this.parse(res, isNextQuery, "next query");
        return { kind: "query", query };
    }
    async submit(token, index, choice) {
        const res = await this.request("POST", `/api/sessions/${encodeURIComponent(token)}/choices`, { index, choice });
        if (!res.ok) {
            throw new ApiError(await errorDetail(res), res.status);
        }
        return this.parse(res, isChoiceVerdict, "choice verdict");
    }
    async report(token) {
        const res = await this.request("GET", `/api/sessions/${encodeURIComponent(token)}/report`);
        if (!res.ok) {
            throw new ApiError(await errorDetail(res), res.status);
        }
        return this.parse(res, isReport, "report");
    }
}
