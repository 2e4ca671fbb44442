/** Isometric 3D surface of a probability snapshot. */

import { rampColor } from "./color.js";
import { num, svgRoot, tag, text } from "./svg.js";
import { Snapshot } from "./types.js";

const ISO_X = Math.cos(Math.PI / 6);
const ISO_Y = Math.sin(Math.PI / 6);

/** Render p(x, y) as a painted quad mesh, back to front. */
export function renderSurface(snap: Snapshot, width = 640, height = 520): string {
  const nx = snap.xs.length;
  const ny = snap.ys.length;
  const margin = 40;
  const peak = 0.35 * height;

  // Grid spans u = i - j in [-(ny-1), nx-1] and v = i + j in [0, nx+ny-2].
  const cell = Math.min(
    (width - 2 * margin) / ((nx + ny - 2) * ISO_X || 1),
    (height - 2 * margin - peak) / ((nx + ny - 2) * ISO_Y || 1),
  );
  const cx = width / 2 - ((nx - ny) / 2) * ISO_X * cell;
  const cy = margin + peak;

  const px = (i: number, j: number, z: number): [number, number] => [
    cx + (i - j) * ISO_X * cell,
    cy + (i + j) * ISO_Y * cell - z * peak,
  ];

  const body: string[] = [];
  const quads: { depth: number; path: string; fill: string }[] = [];
  for (let i = 0; i < nx - 1; i++) {
    for (let j = 0; j < ny - 1; j++) {
      const z00 = snap.p[i][j] / snap.pMax;
      const z10 = snap.p[i + 1][j] / snap.pMax;
      const z11 = snap.p[i + 1][j + 1] / snap.pMax;
      const z01 = snap.p[i][j + 1] / snap.pMax;
      const corners = [
        px(i, j, z00),
        px(i + 1, j, z10),
        px(i + 1, j + 1, z11),
        px(i, j + 1, z01),
      ];
      const path =
        `M${corners.map(([x, y]) => `${num(x)} ${num(y)}`).join("L")}Z`;
      quads.push({
        depth: i + j,
        path,
        fill: rampColor((z00 + z10 + z11 + z01) / 4),
      });
    }
  }
  quads.sort((a, b) => a.depth - b.depth);
  for (const q of quads) {
    body.push(
      tag("path", {
        class: "quad",
        d: q.path,
        fill: q.fill,
        stroke: "#222",
        "stroke-width": 0.25,
      }),
    );
  }

  // Front base edges carry the coordinate ranges.
  const [ex, ey] = px(nx - 1, ny - 1, 0);
  body.push(
    text(ex + 8, ey + 14, `x: ${snap.xs[0]}..${snap.xs[nx - 1]}`, {
      "font-size": 11,
    }),
  );
  body.push(
    text(ex + 8, ey + 28, `y: ${snap.ys[0]}..${snap.ys[ny - 1]}`, {
      "font-size": 11,
    }),
  );
  body.push(
    text(10, 16, `p_max = ${snap.pMax.toExponential(3)}`, { "font-size": 11 }),
  );
  return svgRoot(width, height, body);
}
