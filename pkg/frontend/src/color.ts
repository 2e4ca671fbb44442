/** Color conventions: fixed per-coin hues, shared height ramp. */

import { interpolateViridis } from "d3";

const COIN_COLORS: Record<string, string> = {
  grover: "#d62728",
  hadamard: "#1f77b4",
  fourier: "#2ca02c",
};

const FALLBACK = ["#333333", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2"];

/**
 * Series color: grover is red, hadamard blue, fourier green (matched by
 * substring of the label, case-insensitive); anything else cycles a
 * neutral palette by position.
 */
export function seriesColor(label: string, index: number): string {
  const low = label.toLowerCase();
  for (const [coin, color] of Object.entries(COIN_COLORS)) {
    if (low.includes(coin)) return color;
  }
  return FALLBACK[index % FALLBACK.length];
}

/** Height/level color for surface and contour fills. */
export function rampColor(fraction: number): string {
  return interpolateViridis(Math.min(1, Math.max(0, fraction)));
}
