import { describe, expect, it } from "vitest";

import type { Report, ReportRow } from "../src/protocol.js";
import { layoutScatter, scatterPoints, sortRows } from "../src/report.js";

function row(
  subject: string,
  net: number,
  yieldRate: number | null,
  abstentions = 0,
): ReportRow {
  return {
    subject,
    data: "60",
    net,
    pct_max: null,
    pct_rel: null,
    gains: Math.max(net, 0),
    losses: Math.max(-net, 0),
    gain_loss: null,
    yield_rate: yieldRate,
    abstentions,
  };
}

// A board where the two orderings disagree: the net leader bets often
// and loses often, the yield leader bets rarely and never loses.
const ROWS: ReportRow[] = [
  row("grinder", 80, 0.6),
  row("picky", 20, 0.95, 30),
  row("steady", 50, 0.8),
  row("sitter", 0, null, 40),
];

describe("sortRows", () => {
  it("orders by net descending by default key", () => {
    const order = sortRows(ROWS, "net").map((r) => r.subject);
    expect(order).toEqual(["grinder", "steady", "picky", "sitter"]);
  });

  it("reverses the board when sorted by yield", () => {
    const order = sortRows(ROWS, "yield_rate").map((r) => r.subject);
    expect(order).toEqual(["picky", "steady", "grinder", "sitter"]);
  });

  it("keeps undefined yields at the bottom either way", () => {
    for (const key of ["net", "yield_rate"] as const) {
      const order = sortRows(ROWS, key).map((r) => r.subject);
      expect(order[order.length - 1]).toBe("sitter");
    }
  });

  it("breaks ties deterministically and copies the input", () => {
    const tied = [row("b", 10, 0.5), row("a", 10, 0.5)];
    const sorted = sortRows(tied, "net");
    expect(sorted.map((r) => r.subject)).toEqual(["a", "b"]);
    expect(tied.map((r) => r.subject)).toEqual(["b", "a"]);
  });
});

function reportOf(rows: ReportRow[], frontier: [number, number][]): Report {
  return {
    partial: false,
    answered: 40,
    count: 40,
    rows,
    frontier,
    hull: frontier,
  };
}

describe("scatterPoints", () => {
  it("plots one point per row with a defined yield", () => {
    const nine = Array.from({ length: 9 }, (_, i) =>
      row(`m${i}`, i * 10, 0.5 + i * 0.05),
    );
    expect(scatterPoints(reportOf(nine, [])).length).toBe(9);
  });

  it("drops undefined yields and marks served frontier points", () => {
    const pts = scatterPoints(
      reportOf(ROWS, [
        [80, 0.6],
        [20, 0.95],
      ]),
    );
    expect(pts.map((p) => p.subject)).toEqual(["grinder", "picky", "steady"]);
    expect(pts.filter((p) => p.onFrontier).map((p) => p.subject)).toEqual([
      "grinder",
      "picky",
    ]);
  });
});

describe("layoutScatter", () => {
  const width = 460;
  const height = 300;
  const pad = 40;

  it("pins the net range to the padded frame, including zero", () => {
    const pts = scatterPoints(reportOf(ROWS, []));
    const layout = layoutScatter(pts, [], width, height, pad);
    expect(layout.xDomain).toEqual([0, 80]);
    const grinder = layout.points.find((p) => p.subject === "grinder");
    expect(grinder?.px).toBe(width - pad);
    expect(layout.zeroX).toBe(pad);
  });

  it("maps yield zero and one to the frame edges", () => {
    const pts = scatterPoints(
      reportOf([row("hi", 10, 1), row("lo", -10, 0)], []),
    );
    const layout = layoutScatter(pts, [], width, height, pad);
    const hi = layout.points.find((p) => p.subject === "hi");
    const lo = layout.points.find((p) => p.subject === "lo");
    expect(hi?.py).toBe(pad);
    expect(lo?.py).toBe(height - pad);
  });

  it("widens a degenerate net range", () => {
    const pts = scatterPoints(reportOf([row("only", 0, 0.5)], []));
    const layout = layoutScatter(pts, [], width, height, pad);
    expect(layout.xDomain).toEqual([-1, 1]);
    expect(layout.points[0]?.px).toBe(width / 2);
  });

  it("emits a hull polyline only with two or more vertices", () => {
    const pts = scatterPoints(reportOf(ROWS, []));
    expect(layoutScatter(pts, [], width, height, pad).hullPath).toBe("");
    expect(
      layoutScatter(pts, [[80, 0.6]], width, height, pad).hullPath,
    ).toBe("");
    const two = layoutScatter(
      pts,
      [
        [80, 0.6],
        [20, 0.95],
      ],
      width,
      height,
      pad,
    );
    expect(two.hullPath.split(" ").length).toBe(2);
  });

  it("handles an empty board without dividing by zero", () => {
    const layout = layoutScatter([], [], width, height, pad);
    expect(layout.points).toEqual([]);
    expect(layout.xDomain).toEqual([-1, 1]);
  });
});
