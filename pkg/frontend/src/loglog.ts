/** Log-log spreading figure: ln(1/sigma) against ln t, with fitted lines. */

import { ticks } from "d3";
import { seriesColor } from "./color.js";
import { linearScale, num, Scale, svgRoot, tag, text } from "./svg.js";
import { FitSummary, SchemaError, Series } from "./types.js";

const MARGIN = { left: 64, right: 18, top: 20, bottom: 48 };

interface LnPoint {
  x: number;
  y: number;
}

/** Keep t >= 1 and sigma > 0; both logs must exist. */
function lnPoints(series: Series): LnPoint[] {
  return series.points
    .filter((p) => p.t >= 1 && p.sigmaMean > 0)
    .map((p) => ({ x: Math.log(p.t), y: -Math.log(p.sigmaMean) }));
}

/**
 * Fitted line in ln-ln space: slope is -alpha from the summary; the
 * intercept re-anchors the line through the window's mean residual, so
 * the overlay sits on the data it was fitted to.
 */
export function fitLine(
  series: Series,
  fit: FitSummary,
): { x1: number; y1: number; x2: number; y2: number } {
  const slope = -fit.alpha;
  const window = lnPoints({
    ...series,
    points: series.points.filter((p) => p.t >= fit.tMin && p.t <= fit.tMax),
  });
  if (window.length === 0) {
    throw new SchemaError(
      `${series.label}: no points in fit window t = ${fit.tMin}..${fit.tMax}`,
    );
  }
  const intercept =
    window.reduce((acc, p) => acc + (p.y - slope * p.x), 0) / window.length;
  const x1 = Math.log(fit.tMin);
  const x2 = Math.log(fit.tMax);
  return { x1, y1: intercept + slope * x1, x2, y2: intercept + slope * x2 };
}

function axis(
  scale: Scale,
  orientation: "x" | "y",
  cross: number,
  label: string,
): string {
  const parts: string[] = [];
  const [r0, r1] = scale.range;
  if (orientation === "x") {
    parts.push(tag("line", { x1: r0, y1: cross, x2: r1, y2: cross, stroke: "#000" }));
  } else {
    parts.push(tag("line", { x1: cross, y1: r0, x2: cross, y2: r1, stroke: "#000" }));
  }
  for (const v of ticks(scale.domain[0], scale.domain[1], 6)) {
    const px = scale(v);
    if (orientation === "x") {
      parts.push(
        tag(
          "g",
          { class: "xtick", "data-value": String(v) },
          tag("line", { x1: px, y1: cross, x2: px, y2: cross + 5, stroke: "#000" }),
          text(px, cross + 18, String(v), { "text-anchor": "middle", "font-size": 11 }),
        ),
      );
    } else {
      parts.push(
        tag(
          "g",
          { class: "ytick", "data-value": String(v) },
          tag("line", { x1: cross - 5, y1: px, x2: cross, y2: px, stroke: "#000" }),
          text(cross - 8, px + 4, String(v), { "text-anchor": "end", "font-size": 11 }),
        ),
      );
    }
  }
  if (orientation === "x") {
    const mid = (r0 + r1) / 2;
    parts.push(text(mid, cross + 36, label, { "text-anchor": "middle", "font-size": 13 }));
  } else {
    const mid = (r0 + r1) / 2;
    parts.push(
      tag(
        "g",
        { transform: `translate(16,${num(mid)}) rotate(-90)` },
        text(0, 0, label, { "text-anchor": "middle", "font-size": 13 }),
      ),
    );
  }
  return tag("g", { class: `axis-${orientation}` }, ...parts);
}

/** Render series plus optional per-series fits into an SVG string. */
export function renderLogLog(
  seriesList: Series[],
  fits: (FitSummary | null)[],
  width = 640,
  height = 480,
): string {
  if (seriesList.length === 0) {
    throw new SchemaError("loglog needs at least one series CSV");
  }
  const all = seriesList.map(lnPoints);
  if (all.every((pts) => pts.length === 0)) {
    throw new SchemaError("no points with t >= 1 and sigma > 0 to draw");
  }
  const xs = all.flat().map((p) => p.x);
  const ys = all.flat().map((p) => p.y);
  const padY = 0.05 * (Math.max(...ys) - Math.min(...ys) || 1);
  const sx = linearScale(
    [Math.min(...xs), Math.max(...xs)],
    [MARGIN.left, width - MARGIN.right],
  );
  const sy = linearScale(
    [Math.max(...ys) + padY, Math.min(...ys) - padY],
    [MARGIN.top, height - MARGIN.bottom],
  );

  const body: string[] = [];
  body.push(
    tag("rect", {
      x: MARGIN.left,
      y: MARGIN.top,
      width: width - MARGIN.left - MARGIN.right,
      height: height - MARGIN.top - MARGIN.bottom,
      fill: "#fff",
      stroke: "#ccc",
    }),
  );

  seriesList.forEach((series, i) => {
    const pts = all[i];
    if (pts.length === 0) return;
    const color = seriesColor(series.label, i);
    const coords = pts.map((p) => `${num(sx(p.x))},${num(sy(p.y))}`).join(" ");
    body.push(
      tag("polyline", {
        class: "series",
        points: coords,
        fill: "none",
        stroke: color,
        "stroke-width": 1.5,
      }),
    );
    for (const p of pts) {
      body.push(
        tag("circle", { cx: sx(p.x), cy: sy(p.y), r: 2.5, fill: color }),
      );
    }
    const fit = fits[i];
    if (fit) {
      const line = fitLine(series, fit);
      body.push(
        tag("line", {
          class: "fit",
          x1: sx(line.x1),
          y1: sy(line.y1),
          x2: sx(line.x2),
          y2: sy(line.y2),
          stroke: "#000",
          "stroke-width": 1,
          "stroke-dasharray": "6 3",
        }),
      );
    }
  });

  seriesList.forEach((series, i) => {
    const color = seriesColor(series.label, i);
    const fit = fits[i];
    const label = fit ? `${series.label} (alpha = ${fit.alpha.toFixed(3)})` : series.label;
    const y = MARGIN.top + 16 + 16 * i;
    body.push(
      tag("line", {
        x1: MARGIN.left + 10,
        y1: y - 4,
        x2: MARGIN.left + 34,
        y2: y - 4,
        stroke: color,
        "stroke-width": 2,
      }),
    );
    body.push(text(MARGIN.left + 40, y, label, { "font-size": 12 }));
  });

  body.push(axis(sx, "x", height - MARGIN.bottom, "ln t"));
  body.push(axis(sy, "y", MARGIN.left, "ln(1/σ)"));
  return svgRoot(width, height, body);
}
