import { join } from "node:path";
import { describe, expect, it } from "vitest";
import { readSnapshotCsv } from "../src/csv.js";
import { renderContour } from "../src/contour.js";
import { renderSurface } from "../src/surface.js";

const SAMPLES = join(__dirname, "..", "samples");
const snap = readSnapshotCsv(join(SAMPLES, "grover_t40.csv"));

describe("renderSurface", () => {
  it("paints one quad per grid cell", () => {
    const svg = renderSurface(snap);
    const quads = [...svg.matchAll(/class="quad"/g)];
    expect(quads).toHaveLength(80 * 80);
  });

  it("labels the coordinate ranges and peak", () => {
    const svg = renderSurface(snap);
    expect(svg).toContain("x: -40..40");
    expect(svg).toContain("y: -40..40");
    expect(svg).toContain("p_max = ");
  });

  it("is deterministic", () => {
    expect(renderSurface(snap)).toBe(renderSurface(snap));
  });
});

describe("renderContour", () => {
  it("emits filled level sets at tenths of the peak", () => {
    const svg = renderContour(snap);
    const levels = [...svg.matchAll(/data-level="([^"]+)"/g)].map((m) =>
      Number(m[1]),
    );
    expect(levels.length).toBeGreaterThan(0);
    for (const v of levels) {
      const k = (10 * v) / snap.pMax;
      expect(Math.abs(k - Math.round(k))).toBeLessThan(1e-9);
    }
  });

  it("draws lattice-coordinate axes", () => {
    const svg = renderContour(snap);
    expect(svg).toContain('class="xtick" data-value="0"');
    expect(svg).toContain('class="ytick" data-value="0"');
  });

  it("is deterministic", () => {
    expect(renderContour(snap)).toBe(renderContour(snap));
  });

  it("rejects a degenerate grid", () => {
    const tiny = { xs: [0], ys: [0], p: [[1]], pMax: 1 };
    expect(() => renderContour(tiny)).toThrow(/needs a 2D grid/);
  });
});
