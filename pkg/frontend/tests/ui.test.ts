// @vitest-environment jsdom
import { beforeEach, describe, expect, it } from "vitest";

import type { Choice, NextQuery, Report, ReportRow } from "../src/protocol.js";
import type { SortKey } from "../src/report.js";
import {
  initialState,
  withOpened,
  withPending,
  withQuery,
  withReport,
} from "../src/state.js";
import type { SessionState } from "../src/state.js";
import { render } from "../src/ui.js";
import type { UiHandlers, UiPrefs } from "../src/ui.js";

const QUERY: NextQuery = {
  index: 3,
  count: 40,
  announced: ["(weekend)", "(in-use 'castor)"],
  target: "(logged-on 'jackson)",
  pot: 10,
  ratio: 0.1,
  ante: 1,
};

function spies(): UiHandlers & { calls: string[] } {
  const calls: string[] = [];
  return {
    calls,
    choose: (id: string) => calls.push(`choose:${id}`),
    begin: () => calls.push("begin"),
    submit: (choice: Choice) => calls.push(`submit:${choice}`),
    retry: () => calls.push("retry"),
    restart: () => calls.push("restart"),
    setSort: (key: SortKey) => calls.push(`sort:${key}`),
  };
}

function queryState(): SessionState {
  const opened = withOpened(initialState(), {
    token: "tok",
    scenario: "default",
    queries: 40,
    advisory: "play it straight",
  });
  return withQuery(opened, QUERY);
}

let root: HTMLElement;
const prefs: UiPrefs = { sortKey: "net" };

beforeEach(() => {
  document.body.innerHTML = '<div id="app"></div>';
  root = document.getElementById("app") as HTMLElement;
  prefs.sortKey = "net";
});

describe("query screen", () => {
  it("shows the announced properties, target and offer terms", () => {
    render(root, queryState(), prefs, spies());
    const props = [...root.querySelectorAll("ul.announced code")].map(
      (n) => n.textContent,
    );
    expect(props).toEqual(["(weekend)", "(in-use 'castor)"]);
    expect(root.querySelector("code.target")?.textContent).toBe(
      "(logged-on 'jackson)",
    );
    const offer = root.querySelector(".offer-line")?.textContent ?? "";
    expect(offer).toContain("pot L = 10");
    expect(offer).toContain("ratio ρ = 0.1");
    expect(offer).toContain("ante = 1");
    expect(root.querySelector("h2")?.textContent).toBe("query 4 of 40");
  });

  it("offers the three options in the questionnaire's wording and order", () => {
    render(root, queryState(), prefs, spies());
    const buttons = [...root.querySelectorAll("button.choice")];
    expect(buttons.map((b) => b.textContent)).toEqual([
      "offer a pot of 10 for an ante of 1",
      "place an ante of 1 for a pot of 10",
      "abstain",
    ]);
    expect(
      buttons.map((b) => (b as HTMLButtonElement).dataset.choice),
    ).toEqual(["offer-pot", "ante", "abstain"]);
    expect(buttons.every((b) => !(b as HTMLButtonElement).disabled)).toBe(true);
  });

  it("routes a click to the submit handler", () => {
    const h = spies();
    render(root, queryState(), prefs, h);
    const ante = root.querySelector(
      'button[data-choice="ante"]',
    ) as HTMLButtonElement;
    ante.click();
    expect(h.calls).toEqual(["submit:ante"]);
  });

  it("disables every option while a submission is in flight", () => {
    render(root, withPending(queryState(), "ante"), prefs, spies());
    const buttons = [...root.querySelectorAll("button.choice")];
    expect(buttons).toHaveLength(3);
    expect(buttons.every((b) => (b as HTMLButtonElement).disabled)).toBe(true);
  });

  it("lists settled choices with their deltas", () => {
    let s = queryState();
    s = {
      ...s,
      net: 4,
      history: [
        { index: 0, choice: "ante", truth: true, delta: 9, net: 9 },
        { index: 1, choice: "offer-pot", truth: true, delta: -9, net: 0 },
        { index: 2, choice: "abstain", truth: false, delta: 0, net: 0 },
      ],
    };
    render(root, s, prefs, spies());
    const entries = [...root.querySelectorAll("ol.settled li")].map(
      (n) => n.textContent,
    );
    expect(entries[0]).toContain("#3 abstain: 0");
    expect(entries[1]).toContain("#2 offer pot: -9 (target held)");
    expect(entries[2]).toContain("#1 ante: +9 (target held)");
    expect(root.querySelector("header .net")?.textContent).toBe("net 4");
  });
});

function row(
  subject: string,
  net: number,
  yieldRate: number | null,
): ReportRow {
  return {
    subject,
    data: "40",
    net,
    pct_max: yieldRate === null ? null : 50,
    pct_rel: yieldRate === null ? null : 100,
    gains: Math.max(net, 0),
    losses: Math.max(-net, 0),
    gain_loss: null,
    yield_rate: yieldRate,
    abstentions: 0,
  };
}

const REPORT: Report = {
  partial: false,
  answered: 40,
  count: 40,
  rows: [row("you", 30, 0.6), row("picky", 10, 0.9), row("sitter", 0, null)],
  frontier: [
    [30, 0.6],
    [10, 0.9],
  ],
  hull: [
    [30, 0.6],
    [10, 0.9],
  ],
};

describe("report screen", () => {
  function reportState(): SessionState {
    return withReport(initialState(), REPORT);
  }

  it("renders undefined ratios as a dash", () => {
    render(root, reportState(), prefs, spies());
    const rows = [...root.querySelectorAll("tbody tr")];
    const sitter = rows.find((r) =>
      r.querySelector("td")?.textContent?.startsWith("sitter"),
    );
    const cells = [...(sitter?.querySelectorAll("td") ?? [])].map(
      (c) => c.textContent,
    );
    expect(cells).toEqual([
      "sitter",
      "40",
      "0",
      "—",
      "—",
      "0",
      "0",
      "—",
      "—",
      "0",
    ]);
  });

  it("orders rows by the active sort key", () => {
    render(root, reportState(), prefs, spies());
    let order = [...root.querySelectorAll("tbody tr td:first-child")].map(
      (c) => c.textContent,
    );
    expect(order).toEqual(["you", "picky", "sitter"]);
    prefs.sortKey = "yield_rate";
    render(root, reportState(), prefs, spies());
    order = [...root.querySelectorAll("tbody tr td:first-child")].map(
      (c) => c.textContent,
    );
    expect(order).toEqual(["picky", "you", "sitter"]);
  });

  it("re-sorts through the heading click", () => {
    const h = spies();
    render(root, reportState(), prefs, h);
    const headers = [...root.querySelectorAll("th.sortable")];
    expect(headers.map((n) => n.textContent)).toEqual(["net", "yield"]);
    (headers[1] as HTMLElement).click();
    expect(h.calls).toEqual(["sort:yield_rate"]);
    expect(headers[0]?.getAttribute("aria-sort")).toBe("descending");
  });

  it("plots only rows with a defined yield and flags the frontier", () => {
    render(root, reportState(), prefs, spies());
    const dots = [...root.querySelectorAll("svg.scatter circle.pt")];
    expect(dots).toHaveLength(2);
    expect(root.querySelectorAll("svg.scatter circle.frontier")).toHaveLength(
      2,
    );
    expect(root.querySelector("svg.scatter polyline.hull")).not.toBeNull();
  });

  it("marks the human row", () => {
    render(root, reportState(), prefs, spies());
    expect(root.querySelector("tbody tr.you td")?.textContent).toBe("you");
  });
});

describe("other screens", () => {
  it("advisory screen shows the instruction and a begin button", () => {
    const opened = withOpened(initialState(), {
      token: "tok",
      scenario: "default",
      queries: 40,
      advisory: "never bet the farm",
    });
    const h = spies();
    render(root, opened, prefs, h);
    expect(root.querySelector(".advisory-text")?.textContent).toBe(
      "never bet the farm",
    );
    (root.querySelector("button.begin") as HTMLButtonElement).click();
    expect(h.calls).toEqual(["begin"]);
  });

  it("error screen surfaces the message with a retry control", () => {
    const h = spies();
    render(
      root,
      {
        ...initialState(),
        phase: { kind: "error", message: "cannot reach the session service" },
      },
      prefs,
      h,
    );
    expect(root.querySelector(".error-message")?.textContent).toContain(
      "cannot reach",
    );
    (root.querySelector("button.retry") as HTMLButtonElement).click();
    expect(h.calls).toEqual(["retry"]);
  });

  it("scenario chooser routes the pick", () => {
    const h = spies();
    render(
      root,
      {
        ...initialState(),
        phase: {
          kind: "choose",
          scenarios: [
            {
              id: "a",
              title: "room a",
              queries: 40,
              data_points: 60,
              announced_count: 5,
              pots: [10],
            },
            {
              id: "b",
              title: "room b",
              queries: 20,
              data_points: 20,
              announced_count: 4,
              pots: [10],
            },
          ],
        },
      },
      prefs,
      h,
    );
    const buttons = [...root.querySelectorAll("button.scenario")];
    expect(buttons).toHaveLength(2);
    (buttons[1] as HTMLButtonElement).click();
    expect(h.calls).toEqual(["choose:b"]);
  });
});
