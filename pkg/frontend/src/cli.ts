#!/usr/bin/env node
/** qwalk-fig: render simulation CSV/JSON outputs into SVG figures. */

import yargs from "yargs";
import { hideBin } from "yargs/helpers";
import { renderFigure } from "./render.js";
import { FigureKind, SchemaError } from "./types.js";

export async function main(argv: string[]): Promise<number> {
  const args = await yargs(argv)
    .scriptName("qwalk-fig")
    .option("kind", {
      choices: ["loglog", "surface", "contour"] as const,
      demandOption: true,
      describe: "figure type",
    })
    .option("in", {
      type: "string",
      array: true,
      demandOption: true,
      describe: "input CSV paths (series for loglog, one snapshot otherwise)",
    })
    .option("fit", {
      type: "string",
      array: true,
      default: [] as string[],
      describe: "fit JSON per series (loglog only)",
    })
    .option("label", {
      type: "string",
      array: true,
      default: [] as string[],
      describe: "legend label per series",
    })
    .option("out", { type: "string", demandOption: true, describe: "output SVG path" })
    .option("width", { type: "number", default: 640 })
    .option("height", { type: "number", default: 520 })
    .strict()
    .fail((msg, err) => {
      throw err ?? new SchemaError(msg);
    })
    .parse();

  renderFigure({
    kind: args.kind as FigureKind,
    inputs: args.in,
    fits: args.fit,
    labels: args.label,
    out: args.out,
    width: args.width,
    height: args.height,
  });
  console.log(args.out);
  return 0;
}

const entry = process.argv[1];
if (entry && (entry.endsWith("cli.js") || entry.endsWith("qwalk-fig"))) {
  main(hideBin(process.argv))
    .then((code) => process.exit(code))
    .catch((err) => {
      console.error(`qwalk-fig: ${err instanceof Error ? err.message : err}`);
      process.exit(err instanceof SchemaError ? 2 : 1);
    });
}
