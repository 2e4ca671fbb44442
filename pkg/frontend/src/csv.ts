/** Readers for the simulation CLI's CSV schemas (series and snapshot). */

import { readFileSync } from "node:fs";
import { basename } from "node:path";
import Papa from "papaparse";
import { SchemaError, Series, Snapshot } from "./types.js";

function parseRows(path: string): Record<string, string>[] {
  const text = readFileSync(path, "utf8");
  if (text.trim() === "") {
    throw new SchemaError(`${path}: empty CSV`);
  }
  const parsed = Papa.parse<Record<string, string>>(text.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const e = parsed.errors[0];
    throw new SchemaError(`${path}: ${e.message} (row ${e.row})`);
  }
  if (parsed.data.length === 0) {
    throw new SchemaError(`${path}: no data rows`);
  }
  return parsed.data;
}

function need(row: Record<string, string>, column: string, path: string): number {
  const raw = row[column];
  if (raw === undefined) {
    throw new SchemaError(`${path}: missing required column: ${column}`);
  }
  const value = Number(raw);
  if (!Number.isFinite(value)) {
    throw new SchemaError(`${path}: column ${column} has non-numeric value "${raw}"`);
  }
  return value;
}

/** File stem, used as the default legend label. */
export function stem(path: string): string {
  return basename(path).replace(/\.[^.]*$/, "");
}

/** Read a `t,sigma_mean,n_realizations[,walker]` series CSV. */
export function readSeriesCsv(path: string, label?: string): Series {
  const rows = parseRows(path);
  const points = rows.map((row) => ({
    t: need(row, "t", path),
    sigmaMean: need(row, "sigma_mean", path),
    nRealizations: need(row, "n_realizations", path),
  }));
  const series: Series = { label: label ?? stem(path), points };
  if (rows[0].walker !== undefined) series.walker = rows[0].walker;
  return series;
}

/** Read an `x,y,p` snapshot CSV and assemble the rectangular grid. */
export function readSnapshotCsv(path: string): Snapshot {
  const rows = parseRows(path);
  const cells = rows.map((row) => ({
    x: need(row, "x", path),
    y: need(row, "y", path),
    p: need(row, "p", path),
  }));
  const xs = [...new Set(cells.map((c) => c.x))].sort((a, b) => a - b);
  const ys = [...new Set(cells.map((c) => c.y))].sort((a, b) => a - b);
  if (cells.length !== xs.length * ys.length) {
    throw new SchemaError(
      `${path}: snapshot is not a full grid (${cells.length} rows for ` +
        `${xs.length} x ${ys.length} sites)`,
    );
  }
  const xi = new Map(xs.map((x, i) => [x, i]));
  const yi = new Map(ys.map((y, j) => [y, j]));
  const p = xs.map(() => ys.map(() => 0));
  let pMax = 0;
  for (const c of cells) {
    p[xi.get(c.x)!][yi.get(c.y)!] = c.p;
    if (c.p > pMax) pMax = c.p;
  }
  if (pMax <= 0) {
    throw new SchemaError(`${path}: column p has no positive mass`);
  }
  return { xs, ys, p, pMax };
}
