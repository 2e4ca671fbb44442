/** Minimal deterministic SVG assembly: plain strings, fixed-point coords. */

export type Attrs = Record<string, string | number>;

/** Fixed-point coordinate formatting keeps renders byte-stable. */
export function num(v: number): string {
  const s = v.toFixed(2);
  return s === "-0.00" ? "0.00" : s;
}

export function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function tag(name: string, attrs: Attrs, ...children: string[]): string {
  const parts = Object.entries(attrs).map(
    ([k, v]) => ` ${k}="${typeof v === "number" ? num(v) : v}"`,
  );
  const open = `<${name}${parts.join("")}`;
  if (children.length === 0) return `${open}/>`;
  return `${open}>${children.join("")}</${name}>`;
}

export function text(x: number, y: number, s: string, attrs: Attrs = {}): string {
  return tag("text", { x, y, ...attrs }, esc(s));
}

export function svgRoot(width: number, height: number, body: string[]): string {
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
      `viewBox="0 0 ${width} ${height}" font-family="Helvetica, Arial, sans-serif">`,
    ...body,
    "</svg>",
    "",
  ].join("\n");
}

/** Linear map from a data interval onto a pixel interval. */
export interface Scale {
  (v: number): number;
  domain: [number, number];
  range: [number, number];
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const k = (r1 - r0) / (d1 - d0);
  const f = ((v: number) => r0 + (v - d0) * k) as Scale;
  f.domain = domain;
  f.range = range;
  return f;
}
