export { readSeriesCsv, readSnapshotCsv, stem } from "./csv.js";
export { readFitJson } from "./fitjson.js";
export { fitLine, renderLogLog } from "./loglog.js";
export { renderSurface } from "./surface.js";
export { renderContour } from "./contour.js";
export { buildFigure, renderFigure } from "./render.js";
export { rampColor, seriesColor } from "./color.js";
export { linearScale } from "./svg.js";
export * from "./types.js";
