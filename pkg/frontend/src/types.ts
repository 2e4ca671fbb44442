/** Shared row/figure types for the qwalk CSV/JSON file interfaces. */

export interface SeriesPoint {
  t: number;
  sigmaMean: number;
  nRealizations: number;
}

export interface Series {
  /** Display name; also drives the per-coin color lookup. */
  label: string;
  points: SeriesPoint[];
  /** Value of the optional `walker` column, when present. */
  walker?: string;
}

/** Rectangular probability grid assembled from an (x, y, p) snapshot. */
export interface Snapshot {
  xs: number[];
  ys: number[];
  /** p[i][j] is the probability at (xs[i], ys[j]). */
  p: number[][];
  pMax: number;
}

/** Fit summary as written by the simulation CLI. */
export interface FitSummary {
  alpha: number;
  ci95: number;
  lsqError: number;
  tMin: number;
  tMax: number;
  nFinal?: number;
  converged?: boolean;
}

export type FigureKind = "loglog" | "surface" | "contour";

export interface FigureSpec {
  kind: FigureKind;
  /** Input CSV paths: series for loglog, one snapshot for surface/contour. */
  inputs: string[];
  /** Fit JSON paths for loglog, matched to inputs by position. */
  fits: string[];
  /** Legend labels, matched to inputs by position; default is the file stem. */
  labels: string[];
  out: string;
  width: number;
  height: number;
}

/** Input rejected: wrong/missing column, empty file, malformed number. */
export class SchemaError extends Error {}
