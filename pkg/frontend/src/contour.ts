/** Filled contour map of a probability snapshot. */

import { contours, ticks } from "d3";
import { rampColor } from "./color.js";
import { num, svgRoot, tag, text } from "./svg.js";
import { SchemaError, Snapshot } from "./types.js";

const MARGIN = { left: 56, right: 16, top: 16, bottom: 44 };

/** Render p(x, y) as nested filled level sets with axes in lattice units. */
export function renderContour(snap: Snapshot, width = 600, height = 560): string {
  const nx = snap.xs.length;
  const ny = snap.ys.length;
  if (nx < 2 || ny < 2) {
    throw new SchemaError(`contour needs a 2D grid, got ${nx} x ${ny}`);
  }
  // d3 wants a row-major raster: values[j * nx + i] sampled at cell centers.
  const values = new Float64Array(nx * ny);
  for (let i = 0; i < nx; i++) {
    for (let j = 0; j < ny; j++) values[j * nx + i] = snap.p[i][j];
  }
  const levels = Array.from({ length: 9 }, (_, k) => (snap.pMax * (k + 1)) / 10);
  const polygons = contours().size([nx, ny]).thresholds(levels)(Array.from(values));

  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;
  // Contour coords live in index space [0, nx] x [0, ny]; y points up.
  const gx = (ci: number) => MARGIN.left + (ci / nx) * plotW;
  const gy = (cj: number) => MARGIN.top + plotH - (cj / ny) * plotH;

  const body: string[] = [];
  body.push(
    tag("rect", {
      x: MARGIN.left,
      y: MARGIN.top,
      width: plotW,
      height: plotH,
      fill: rampColor(0),
    }),
  );
  for (const c of polygons) {
    if (c.coordinates.length === 0) continue;
    const d = c.coordinates
      .map((polygon) =>
        polygon
          .map(
            (ring) =>
              `M${ring.map(([ci, cj]) => `${num(gx(ci))} ${num(gy(cj))}`).join("L")}Z`,
          )
          .join(""),
      )
      .join("");
    body.push(
      tag("path", {
        class: "level",
        "data-level": c.value.toExponential(14),
        d,
        fill: rampColor(c.value / snap.pMax),
        stroke: "#000",
        "stroke-opacity": 0.25,
        "stroke-width": 0.5,
      }),
    );
  }

  // Axes in lattice coordinates; sample i sits at index center i + 0.5.
  const dx = nx > 1 ? snap.xs[1] - snap.xs[0] : 1;
  const dy = ny > 1 ? snap.ys[1] - snap.ys[0] : 1;
  const xPix = (x: number) => gx((x - snap.xs[0]) / dx + 0.5);
  const yPix = (y: number) => gy((y - snap.ys[0]) / dy + 0.5);
  const bottom = MARGIN.top + plotH;
  body.push(
    tag("line", {
      x1: MARGIN.left,
      y1: bottom,
      x2: MARGIN.left + plotW,
      y2: bottom,
      stroke: "#000",
    }),
  );
  body.push(
    tag("line", {
      x1: MARGIN.left,
      y1: MARGIN.top,
      x2: MARGIN.left,
      y2: bottom,
      stroke: "#000",
    }),
  );
  for (const v of ticks(snap.xs[0], snap.xs[nx - 1], 7)) {
    body.push(
      tag(
        "g",
        { class: "xtick", "data-value": String(v) },
        tag("line", { x1: xPix(v), y1: bottom, x2: xPix(v), y2: bottom + 5, stroke: "#000" }),
        text(xPix(v), bottom + 18, String(v), { "text-anchor": "middle", "font-size": 11 }),
      ),
    );
  }
  for (const v of ticks(snap.ys[0], snap.ys[ny - 1], 7)) {
    body.push(
      tag(
        "g",
        { class: "ytick", "data-value": String(v) },
        tag("line", { x1: MARGIN.left - 5, y1: yPix(v), x2: MARGIN.left, y2: yPix(v), stroke: "#000" }),
        text(MARGIN.left - 8, yPix(v) + 4, String(v), { "text-anchor": "end", "font-size": 11 }),
      ),
    );
  }
  body.push(
    text(MARGIN.left + plotW / 2, height - 10, "x", { "text-anchor": "middle", "font-size": 13 }),
  );
  body.push(
    tag(
      "g",
      { transform: `translate(14,${num(MARGIN.top + plotH / 2)}) rotate(-90)` },
      text(0, 0, "y", { "text-anchor": "middle", "font-size": 13 }),
    ),
  );
  return svgRoot(width, height, body);
}
