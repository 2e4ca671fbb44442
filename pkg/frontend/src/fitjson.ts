/** Reader for the simulation CLI's fit-summary JSON. */

import { readFileSync } from "node:fs";
import { FitSummary, SchemaError } from "./types.js";

const REQUIRED = ["alpha", "ci95", "lsq_error", "t_min", "t_max"] as const;

/** Read and validate a fit summary (ensemble JSON or `qwalk fit` output). */
export function readFitJson(path: string): FitSummary {
  let raw: unknown;
  try {
    raw = JSON.parse(readFileSync(path, "utf8"));
  } catch (err) {
    throw new SchemaError(`${path}: not valid JSON (${(err as Error).message})`);
  }
  if (typeof raw !== "object" || raw === null || Array.isArray(raw)) {
    throw new SchemaError(`${path}: fit summary must be a JSON object`);
  }
  const obj = raw as Record<string, unknown>;
  for (const key of REQUIRED) {
    if (typeof obj[key] !== "number" || !Number.isFinite(obj[key] as number)) {
      throw new SchemaError(`${path}: missing or non-numeric key: ${key}`);
    }
  }
  const fit: FitSummary = {
    alpha: obj.alpha as number,
    ci95: obj.ci95 as number,
    lsqError: obj.lsq_error as number,
    tMin: obj.t_min as number,
    tMax: obj.t_max as number,
  };
  if (typeof obj.n_final === "number") fit.nFinal = obj.n_final;
  if (typeof obj.converged === "boolean") fit.converged = obj.converged;
  return fit;
}
