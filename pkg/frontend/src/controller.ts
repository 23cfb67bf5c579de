/**
 * Sequencing between the session service and the screen.
 *
 * The controller owns a SessionState, rebuilds it from service
 * responses through the pure transitions in state.ts, and notifies the
 * renderer after every change. It never computes beliefs, settlements
 * or scores; numbers on screen come from payloads and nowhere else.
 *
 * Recovery rules:
 *  - a stored token the service no longer knows is dropped and a fresh
 *    session is opened;
 *  - a 409 on submission means the service cursor moved past us (a
 *    response was lost, or another tab answered), so we resync from
 *    the service instead of guessing;
 *  - any other failure lands on the error screen, and retrying re-runs
 *    the failed step. Re-sending a submission is safe because the
 *    service serializes by cursor and rejects duplicates.
 */

import { ApiError, ProtocolError } from "./api.js";
import type { NextResult } from "./api.js";
import type {
  Choice,
  ChoiceVerdict,
  OpenedSession,
  Report,
  ScenarioInfo,
} from "./protocol.js";
import {
  initialState,
  withError,
  withLedger,
  withLoading,
  withOpened,
  withPending,
  withQuery,
  withReport,
  withResumed,
  withScenarioChoice,
  withVerdict,
} from "./state.js";
import type { SessionState } from "./state.js";

export interface TokenStore {
  get(): string | null;
  set(token: string): void;
  clear(): void;
}

/** The slice of ApiClient the controller needs; tests fake this. */
export interface ApiLike {
  scenarios(): Promise<ScenarioInfo[]>;
  open(scenario?: string, player?: string): Promise<OpenedSession>;
  next(token: string): Promise<NextResult>;
  submit(token: string, index: number, choice: Choice): Promise<ChoiceVerdict>;
  report(token: string): Promise<Report>;
}

function describe(err: unknown): string {
  if (err instanceof ApiError || err instanceof ProtocolError) {
    return err.message;
  }
  if (err instanceof Error) {
    return `cannot reach the session service (${err.message})`;
  }
  return String(err);
}

export class SessionController {
  state: SessionState = initialState();

  private retryStep: (() => Promise<void>) | null = null;

  constructor(
    private readonly api: ApiLike,
    private readonly store: TokenStore,
    private readonly onChange: (state: SessionState) => void,
  ) {}

  private setState(next: SessionState): void {
    this.state = next;
    this.onChange(next);
  }

  private async step(run: () => Promise<void>): Promise<void> {
    this.retryStep = run;
    try {
      await run();
    } catch (err) {
      this.setState(withError(this.state, describe(err)));
    }
  }

  /** Re-runs the step that landed on the error screen. */
  async retry(): Promise<void> {
    const saved = this.retryStep;
    if (saved === null) {
      return;
    }
    this.setState(withLoading(this.state));
    await this.step(saved);
  }

  /** Boot: resume the stored session if the service still knows it. */
  async start(): Promise<void> {
    this.setState(withLoading(this.state));
    await this.step(async () => {
      const token = this.store.get();
      if (token !== null) {
        try {
          await this.resumeSession(token);
          return;
        } catch (err) {
          if (err instanceof ApiError && err.status === 404) {
            this.store.clear();
          } else {
            throw err;
          }
        }
      }
      await this.openFresh();
    });
  }

  /** Abandons the stored session and opens a new one. */
  async startFresh(): Promise<void> {
    this.store.clear();
    this.setState(withLoading(initialState()));
    await this.step(() => this.openFresh());
  }

  /** Scenario picked from the choose screen. */
  async chooseScenario(id: string): Promise<void> {
    this.setState(withLoading(this.state));
    await this.step(() => this.openScenario(id));
  }

  /** Leaves the advisory screen for the first query. */
  async begin(): Promise<void> {
    const token = this.state.token;
    if (token === null) {
      return;
    }
    this.setState(withLoading(this.state));
    await this.step(() => this.advance(token));
  }

  /**
   * Submits the on-screen choice. A second call while one is in
   * flight is a no-op; the pending flag is set synchronously before
   * the request leaves.
   */
  async submit(choice: Choice): Promise<void> {
    const current = this.state;
    if (
      current.phase.kind !== "query" ||
      current.pending !== null ||
      current.token === null
    ) {
      return;
    }
    const token = current.token;
    const index = current.phase.query.index;
    this.setState(withPending(current, choice));
    await this.step(async () => {
      let verdict: ChoiceVerdict;
      try {
        verdict = await this.api.submit(token, index, choice);
      } catch (err) {
        if (err instanceof ApiError && err.status === 409) {
          await this.resumeSession(token);
          return;
        }
        throw err;
      }
      this.setState(withVerdict(this.state, verdict));
      if (verdict.finished) {
        await this.showReport(token);
      } else {
        await this.advance(token);
      }
    });
  }

  private async openFresh(): Promise<void> {
    const scenarios = await this.api.scenarios();
    const sole = scenarios[0];
    if (scenarios.length === 1 && sole !== undefined) {
      await this.openScenario(sole.id);
    } else if (scenarios.length === 0) {
      throw new Error("the service carries no scenarios");
    } else {
      this.setState(withScenarioChoice(this.state, scenarios));
    }
  }

  private async openScenario(id: string): Promise<void> {
    const opened = await this.api.open(id, "browser");
    this.store.set(opened.token);
    this.setState(withOpened(this.state, opened));
  }

  private async advance(token: string): Promise<void> {
    const next = await this.api.next(token);
    if (next.kind === "finished") {
      await this.showReport(token);
    } else {
      this.setState(withQuery(this.state, next.query));
    }
  }

  private async showReport(token: string): Promise<void> {
    const report = await this.api.report(token);
    this.setState(withReport(this.state, report));
  }

  /**
   * Rebuilds local state from the service cursor: the next query plus
   * a partial report to refresh the running ledger. History entries
   * settled before the reload are not replayed into the sidebar; the
   * ledger figures still come from the service.
   */
  private async resumeSession(token: string): Promise<void> {
    const next = await this.api.next(token);
    if (next.kind === "finished") {
      const report = await this.api.report(token);
      this.setState(withReport(withResumed(this.state, token), report));
      return;
    }
    const report = await this.api.report(token);
    const you = report.rows.find((row) => row.subject === "you");
    const seeded = withLedger(
      withResumed(this.state, token),
      you === undefined ? 0 : you.net,
      report.answered,
      report.count,
    );
    this.setState(withQuery(seeded, next.query));
  }
}
