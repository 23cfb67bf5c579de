/**
 * Typed client for the session service.
 *
 * Every response body passes a protocol guard before it is returned,
 * so callers only ever see well-formed payloads. HTTP failures become
 * ApiError with the status attached; malformed bodies become
 * ProtocolError; plain network trouble surfaces as whatever the fetch
 * implementation throws.
 */

import {
  isChoiceVerdict,
  isNextQuery,
  isOpenedSession,
  isReport,
  isScenarioList,
} from "./protocol.js";
import type {
  Choice,
  ChoiceVerdict,
  NextQuery,
  OpenedSession,
  Report,
  ScenarioInfo,
} from "./protocol.js";

export class ApiError extends Error {
  constructor(
    message: string,
    readonly status: number,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export class ProtocolError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "ProtocolError";
  }
}

export type NextResult =
  | { kind: "query"; query: NextQuery }
  | { kind: "finished" };

export type FetchLike = (
  input: string,
  init?: RequestInit,
) => Promise<Response>;

async function errorDetail(res: Response): Promise<string> {
  try {
    const body = (await res.json()) as { detail?: unknown };
    if (body && typeof body.detail === "string") {
      return body.detail;
    }
  } catch {
    // fall through to the bare status line
  }
  return `request failed with status ${res.status}`;
}

export class ApiClient {
  constructor(
    private readonly baseUrl = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request(
    method: string,
    path: string,
    body?: unknown,
  ): Promise<Response> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "content-type": "application/json" };
      init.body = JSON.stringify(body);
    }
    return this.fetchFn(`${this.baseUrl}${path}`, init);
  }

  private async parse<T>(
    res: Response,
    guard: (x: unknown) => x is T,
    what: string,
  ): Promise<T> {
    let payload: unknown;
    try {
      payload = await res.json();
    } catch {
      throw new ProtocolError(`${what}: response body is not JSON`);
    }
    if (!guard(payload)) {
      throw new ProtocolError(`${what}: malformed payload`);
    }
    return payload;
  }

  async scenarios(): Promise<ScenarioInfo[]> {
    const res = await this.request("GET", "/api/scenarios");
    if (!res.ok) {
      throw new ApiError(await errorDetail(res), res.status);
    }
    return this.parse(res, isScenarioList, "scenario list");
  }

  async open(scenario?: string, player?: string): Promise<OpenedSession> {
    const body: Record<string, string> = {};
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

  async next(token: string): Promise<NextResult> {
    const res = await this.request(
      "GET",
      `/api/sessions/${encodeURIComponent(token)}/next`,
    );
    if (res.status === 409) {
      return { kind: "finished" };
    }
    if (!res.ok) {
      throw new ApiError(await errorDetail(res), res.status);
    }
    const query = await this.parse(res, isNextQuery, "next query");
    return { kind: "query", query };
  }

  async submit(
    token: string,
    index: number,
    choice: Choice,
  ): Promise<ChoiceVerdict> {
    const res = await this.request(
      "POST",
      `/api/sessions/${encodeURIComponent(token)}/choices`,
      { index, choice },
    );
    if (!res.ok) {
      throw new ApiError(await errorDetail(res), res.status);
    }
    return this.parse(res, isChoiceVerdict, "choice verdict");
  }

  async report(token: string): Promise<Report> {
    const res = await this.request(
      "GET",
      `/api/sessions/${encodeURIComponent(token)}/report`,
    );
    if (!res.ok) {
      throw new ApiError(await errorDetail(res), res.status);
    }
    return this.parse(res, isReport, "report");
  }
}
