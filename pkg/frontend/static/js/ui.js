/**
 * DOM rendering. Each state change rebuilds the whole #app subtree
 * from scratch; at this scale that is simpler and less bug-prone than
 * patching, and it keeps the screen an honest function of the state
 * record plus the sort preference.
 */
import { SessionController } from "./controller.js";
import { ABSTAIN_LABEL, anteLabel, money, offerLabel, percent, rate, ratio, signedMoney, } from "./format.js";
import { layoutScatter, scatterPoints, sortRows } from "./report.js";
const SVG_NS = "http://www.w3.org/2000/svg";
function el(tag, className, text) {
    const node = document.createElement(tag);
    if (className !== undefined) {
        node.className = className;
    }
    if (text !== undefined) {
        node.textContent = text;
    }
    return node;
}
function button(label, className, onClick) {
    const node = document.createElement("button");
    node.type = "button";
    node.className = className;
    node.textContent = label;
    node.addEventListener("click", onClick);
    return node;
}
function header(state) {
    const bar = el("header", "top");
    bar.appendChild(el("h1", "brand", "beliefbet"));
    if (state.queries > 0) {
        bar.appendChild(el("span", "progress", `${state.answered} of ${state.queries} answered`));
        bar.appendChild(el("span", "net", `net ${money(state.net)}`));
    }
    return bar;
}
function loadingScreen() {
    return el("p", "loading", "talking to the session service…");
}
function errorScreen(message, handlers) {
    const box = el("section", "error-box");
    box.appendChild(el("p", "error-message", message));
    box.appendChild(button("retry", "retry", () => handlers.retry()));
    return box;
}
function chooseScreen(scenarios, handlers) {
    const box = el("section", "choose");
    box.appendChild(el("h2", undefined, "pick a scenario"));
    const list = el("ul", "scenario-list");
    for (const sc of scenarios) {
        const item = el("li");
        item.appendChild(button(`${sc.title} (${sc.queries} queries on ${sc.data_points} data points)`, "scenario", () => handlers.choose(sc.id)));
        list.appendChild(item);
    }
    box.appendChild(list);
    return box;
}
function advisoryScreen(advisory, handlers) {
    const box = el("section", "advisory");
    box.appendChild(el("h2", undefined, "before you start"));
    box.appendChild(el("p", "advisory-text", advisory));
    box.appendChild(button("start betting", "begin", () => handlers.begin()));
    return box;
}
function choiceWord(choice) {
    if (choice === "ante") {
        return "ante";
    }
    if (choice === "offer-pot") {
        return "offer pot";
    }
    return "abstain";
}
function historyList(history) {
    const box = el("section", "history");
    box.appendChild(el("h3", undefined, "settled so far"));
    const list = el("ol", "settled");
    for (const entry of [...history].reverse()) {
        const item = el("li", "settled-entry");
        const held = entry.truth ? "target held" : "target failed";
        item.textContent =
            `#${entry.index + 1} ${choiceWord(entry.choice)}: ` +
                `${signedMoney(entry.delta)} (${held}), net ${money(entry.net)}`;
        list.appendChild(item);
    }
    box.appendChild(list);
    return box;
}
function queryScreen(query, state, handlers) {
    const box = el("section", "query");
    box.appendChild(el("h2", undefined, `query ${query.index + 1} of ${query.count}`));
    const given = el("p", "announced-lead", "the snapshot satisfies");
    box.appendChild(given);
    const props = el("ul", "announced");
    for (const prop of query.announced) {
        const item = el("li");
        item.appendChild(el("code", "prop", prop));
        props.appendChild(item);
    }
    box.appendChild(props);
    const targetLine = el("p", "target-line", "will ");
    targetLine.appendChild(el("code", "target", query.target));
    targetLine.appendChild(document.createTextNode(" hold?"));
    box.appendChild(targetLine);
    box.appendChild(el("p", "offer-line", `pot L = ${money(query.pot)}, ratio ρ = ${ratio(query.ratio)}, ` +
        `ante = ${money(query.ante)}`));
    const busy = state.pending !== null;
    const choices = el("div", busy ? "choices pending" : "choices");
    const options = [
        ["offer-pot", offerLabel(query.pot, query.ante)],
        ["ante", anteLabel(query.pot, query.ante)],
        ["abstain", ABSTAIN_LABEL],
    ];
    for (const [choice, label] of options) {
        const btn = button(label, "choice", () => handlers.submit(choice));
        btn.dataset.choice = choice;
        btn.disabled = busy;
        choices.appendChild(btn);
    }
    box.appendChild(choices);
    if (state.history.length > 0) {
        box.appendChild(historyList(state.history));
    }
    return box;
}
function reportTable(rows, prefs, handlers) {
    const table = el("table", "board");
    const thead = el("thead");
    const headRow = el("tr");
    const columns = [
        ["subject", null],
        ["data", null],
        ["net", "net"],
        ["%max", null],
        ["%rel", null],
        ["gains", null],
        ["losses", null],
        ["g/l", null],
        ["yield", "yield_rate"],
        ["#absts", null],
    ];
    for (const [label, key] of columns) {
        const th = el("th", undefined, label);
        if (key !== null) {
            th.classList.add("sortable");
            th.setAttribute("aria-sort", prefs.sortKey === key ? "descending" : "none");
            th.addEventListener("click", () => handlers.setSort(key));
        }
        headRow.appendChild(th);
    }
    thead.appendChild(headRow);
    table.appendChild(thead);
    const tbody = el("tbody");
    for (const row of sortRows(rows, prefs.sortKey)) {
        const tr = el("tr", row.subject === "you" ? "you" : undefined);
        const cells = [
            row.subject,
            row.data,
            money(row.net),
            percent(row.pct_max),
            percent(row.pct_rel),
            money(row.gains),
            money(row.losses),
            rate(row.gain_loss),
            rate(row.yield_rate),
            String(row.abstentions),
        ];
        for (const text of cells) {
            tr.appendChild(el("td", undefined, text));
        }
        tbody.appendChild(tr);
    }
    table.appendChild(tbody);
    return table;
}
function scatterChart(report) {
    const layout = layoutScatter(scatterPoints(report), report.hull);
    const svg = document.createElementNS(SVG_NS, "svg");
    svg.setAttribute("class", "scatter");
    svg.setAttribute("width", String(layout.width));
    svg.setAttribute("height", String(layout.height));
    svg.setAttribute("viewBox", `0 0 ${layout.width} ${layout.height}`);
    const axis = (x1, y1, x2, y2) => {
        const line = document.createElementNS(SVG_NS, "line");
        line.setAttribute("x1", String(x1));
        line.setAttribute("y1", String(y1));
        line.setAttribute("x2", String(x2));
        line.setAttribute("y2", String(y2));
        line.setAttribute("class", "axis");
        svg.appendChild(line);
    };
    const pad = layout.pad;
    axis(pad, layout.height - pad, layout.width - pad, layout.height - pad);
    axis(pad, pad, pad, layout.height - pad);
    const text = (x, y, s, cls) => {
        const node = document.createElementNS(SVG_NS, "text");
        node.setAttribute("x", String(x));
        node.setAttribute("y", String(y));
        node.setAttribute("class", cls);
        node.textContent = s;
        svg.appendChild(node);
    };
    text(layout.width - pad, layout.height - pad + 28, "net", "axis-name");
    text(pad - 30, pad - 12, "yield", "axis-name");
    text(pad, layout.height - pad + 14, money(layout.xDomain[0]), "tick");
    text(layout.width - pad, layout.height - pad + 14, money(layout.xDomain[1]), "tick");
    text(pad - 14, layout.height - pad, "0", "tick");
    text(pad - 14, pad + 4, "1", "tick");
    if (layout.zeroX !== null) {
        const zero = document.createElementNS(SVG_NS, "line");
        zero.setAttribute("x1", String(layout.zeroX));
        zero.setAttribute("y1", String(pad));
        zero.setAttribute("x2", String(layout.zeroX));
        zero.setAttribute("y2", String(layout.height - pad));
        zero.setAttribute("class", "zero");
        svg.appendChild(zero);
    }
    if (layout.hullPath !== "") {
        const hull = document.createElementNS(SVG_NS, "polyline");
        hull.setAttribute("points", layout.hullPath);
        hull.setAttribute("class", "hull");
        svg.appendChild(hull);
    }
    for (const point of layout.points) {
        const dot = document.createElementNS(SVG_NS, "circle");
        dot.setAttribute("cx", String(point.px));
        dot.setAttribute("cy", String(point.py));
        dot.setAttribute("r", point.onFrontier ? "6" : "4");
        dot.setAttribute("class", point.onFrontier ? "pt frontier" : "pt");
        const tip = document.createElementNS(SVG_NS, "title");
        tip.textContent =
            `${point.subject}: net ${money(point.net)}, ` +
                `yield ${rate(point.yieldRate)}`;
        dot.appendChild(tip);
        svg.appendChild(dot);
    }
    return svg;
}
function reportScreen(report, prefs, handlers) {
    const box = el("section", "report");
    box.appendChild(el("h2", undefined, report.partial
        ? `standings after ${report.answered} of ${report.count}`
        : "final board"));
    box.appendChild(el("p", "sort-note", `sorted by ${prefs.sortKey === "net" ? "net" : "yield"}; ` +
        "click the net or yield heading to re-sort"));
    box.appendChild(reportTable(report.rows, prefs, handlers));
    box.appendChild(scatterChart(report));
    box.appendChild(el("p", "legend", "larger dots sit on the net/yield frontier; the line is their hull"));
    box.appendChild(button("start a new session", "restart", () => handlers.restart()));
    return box;
}
export function render(root, state, prefs, handlers) {
    root.textContent = "";
    root.appendChild(header(state));
    const phase = state.phase;
    let screen;
    if (phase.kind === "loading") {
        screen = loadingScreen();
    }
    else if (phase.kind === "choose") {
        screen = chooseScreen(phase.scenarios, handlers);
    }
    else if (phase.kind === "advisory") {
        screen = advisoryScreen(phase.advisory, handlers);
    }
    else if (phase.kind === "query") {
        screen = queryScreen(phase.query, state, handlers);
    }
    else if (phase.kind === "report") {
        screen = reportScreen(phase.report, prefs, handlers);
    }
    else {
        screen = errorScreen(phase.message, handlers);
    }
    root.appendChild(screen);
}
/** Wires a controller to the render loop and returns it un-started. */
export function mountApp(root, api, store) {
    const prefs = { sortKey: "net" };
    let controller;
    const handlers = {
        choose: (id) => void controller.chooseScenario(id),
        begin: () => void controller.begin(),
        submit: (choice) => void controller.submit(choice),
        retry: () => void controller.retry(),
        restart: () => void controller.startFresh(),
        setSort: (key) => {
            prefs.sortKey = key;
            render(root, controller.state, prefs, handlers);
        },
    };
    controller = new SessionController(api, store, (state) => render(root, state, prefs, handlers));
    render(root, controller.state, prefs, handlers);
    return controller;
}
