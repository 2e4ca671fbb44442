/** Figure dispatch: read inputs, build the SVG, then write the file. */

import { writeFileSync } from "node:fs";
import { readSeriesCsv, readSnapshotCsv, stem } from "./csv.js";
import { readFitJson } from "./fitjson.js";
import { renderContour } from "./contour.js";
import { renderLogLog } from "./loglog.js";
import { renderSurface } from "./surface.js";
import { FigureSpec, FitSummary, SchemaError } from "./types.js";

/** Build the SVG string for a figure spec (no file I/O on the output side). */
export function buildFigure(spec: FigureSpec): string {
  if (spec.kind === "loglog") {
    const series = spec.inputs.map((path, i) =>
      readSeriesCsv(path, spec.labels[i] ?? stem(path)),
    );
    if (spec.fits.length > 0 && spec.fits.length !== spec.inputs.length) {
      throw new SchemaError(
        `got ${spec.fits.length} fit files for ${spec.inputs.length} series; ` +
          "pass one --fit per --in, or none",
      );
    }
    const fits: (FitSummary | null)[] = spec.inputs.map((_, i) =>
      spec.fits[i] ? readFitJson(spec.fits[i]) : null,
    );
    return renderLogLog(series, fits, spec.width, spec.height);
  }
  if (spec.inputs.length !== 1) {
    throw new SchemaError(`${spec.kind} takes exactly one snapshot CSV`);
  }
  const snap = readSnapshotCsv(spec.inputs[0]);
  return spec.kind === "surface"
    ? renderSurface(snap, spec.width, spec.height)
    : renderContour(snap, spec.width, spec.height);
}

/** Render and write; the output file is only created on success. */
export function renderFigure(spec: FigureSpec): void {
  const svg = buildFigure(spec);
  writeFileSync(spec.out, svg);
}
