/**
 * Number and label formatting for the betting screens.
 *
 * Undefined ratios (no stake yet, no losses) come over the wire as
 * null and render as an em dash, matching the report tables the
 * command line tools print.
 */

export const DASH = "—";

function trimmed(x: number, places: number): string {
  const fixed = x.toFixed(places);
  if (!fixed.includes(".")) {
    return fixed;
  }
  const out = fixed.replace(/0+$/, "").replace(/\.$/, "");
  return out === "-0" ? "0" : out;
}

/** Money amounts: pots, antes, nets. Up to two decimals, zeros trimmed. */
export function money(x: number): string {
  return trimmed(x, 2);
}

/** Signed money for settled deltas, with an explicit plus on wins. */
export function signedMoney(x: number): string {
  if (x > 0) {
    return `+${money(x)}`;
  }
  return money(x);
}

/** Payoff ratios, up to three decimals. */
export function ratio(x: number): string {
  return trimmed(x, 3);
}

/** Percent columns; null means the ratio was undefined. */
export function percent(x: number | null): string {
  return x === null ? DASH : trimmed(x, 1);
}

/** Rate columns such as yield and gains over losses. */
export function rate(x: number | null): string {
  return x === null ? DASH : trimmed(x, 3);
}

/** Option wording for taking the bet that the target holds. */
export function anteLabel(pot: number, ante: number): string {
  return `place an ante of ${money(ante)} for a pot of ${money(pot)}`;
}

/** Option wording for taking the other side of the lottery. */
export function offerLabel(pot: number, ante: number): string {
  return `offer a pot of ${money(pot)} for an ante of ${money(ante)}`;
}

export const ABSTAIN_LABEL = "abstain";
