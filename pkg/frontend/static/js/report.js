/**
 * Pure helpers behind the report screen: row sorting and the geometry
 * of the net versus yield scatter.
 *
 * The frontier and hull arrive precomputed from the service; nothing
 * here rescores rows or recomputes dominance. Sorting by yield instead
 * of net tends to reorder the board substantially, which is the point
 * of offering both.
 */
/**
 * Rows ordered for display: descending by the chosen column, rows with
 * an undefined yield last, ties broken by net and then by subject so
 * the order is stable across renders.
 */
export function sortRows(rows, key) {
    const value = (row) => key === "net" ? row.net : row.yield_rate;
    return [...rows].sort((a, b) => {
        const va = value(a);
        const vb = value(b);
        if (va === null && vb === null) {
            return b.net - a.net || a.subject.localeCompare(b.subject);
        }
        if (va === null) {
            return 1;
        }
        if (vb === null) {
            return -1;
        }
        return vb - va || b.net - a.net || a.subject.localeCompare(b.subject);
    });
}
/**
 * The plottable rows of a report. Rows with an undefined yield have no
 * position on the yield axis and are omitted. A point is marked as on
 * the frontier exactly when the service listed its coordinates.
 */
export function scatterPoints(report) {
    const frontier = new Set(report.frontier.map(([n, y]) => `${n}|${y}`));
    const points = [];
    for (const row of report.rows) {
        if (row.yield_rate === null) {
            continue;
        }
        points.push({
            subject: row.subject,
            net: row.net,
            yieldRate: row.yield_rate,
            onFrontier: frontier.has(`${row.net}|${row.yield_rate}`),
        });
    }
    return points;
}
/**
 * Pixel placement for the scatter. Net spans the observed range widened
 * to include zero; yield always spans [0, 1] so charts from different
 * sessions stay comparable. A degenerate net range is padded by one.
 */
export function layoutScatter(points, hull, width = 460, height = 300, pad = 40) {
    const nets = points.map((p) => p.net);
    let lo = Math.min(0, ...nets);
    let hi = Math.max(0, ...nets);
    if (points.length === 0) {
        lo = -1;
        hi = 1;
    }
    if (lo === hi) {
        lo -= 1;
        hi += 1;
    }
    const sx = (net) => pad + ((net - lo) / (hi - lo)) * (width - 2 * pad);
    const sy = (rate) => height - pad - rate * (height - 2 * pad);
    const placed = points.map((p) => ({
        ...p,
        px: sx(p.net),
        py: sy(p.yieldRate),
    }));
    const hullPath = hull.length >= 2
        ? hull.map(([n, y]) => `${sx(n)},${sy(y)}`).join(" ")
        : "";
    return {
        width,
        height,
        pad,
        points: placed,
        hullPath,
        xDomain: [lo, hi],
        yDomain: [0, 1],
        zeroX: lo <= 0 && 0 <= hi ? sx(0) : null,
    };
}
