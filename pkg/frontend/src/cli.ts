#!/usr/bin/env node
import { parseArgs } from "node:util";
import { FigureError } from "./csv.js";
import { FigureKind, renderToFile } from "./render.js";

const USAGE =
  "usage: render --input <csv> --kind heatmap|lines --x <col> [--y <col>] " +
  "--value <col> [--series <col>] --out <file>";

export function main(argv: string[]): number {
  if (argv[0] !== "render") {
    process.stderr.write(`${USAGE}\n`);
    return 2;
  }
  let parsed;
  try {
    parsed = parseArgs({
      args: argv.slice(1),
      options: {
        input: { type: "string" },
        kind: { type: "string" },
        x: { type: "string" },
        y: { type: "string" },
        value: { type: "string" },
        series: { type: "string" },
        out: { type: "string" },
      },
      strict: true,
    });
  } catch (err) {
    process.stderr.write(`error: ${(err as Error).message}\n${USAGE}\n`);
    return 2;
  }
  const v = parsed.values;
  for (const required of ["input", "kind", "x", "value", "out"] as const) {
    if (v[required] === undefined) {
      process.stderr.write(`error: --${required} is required\n${USAGE}\n`);
      return 2;
    }
  }
  if (v.kind !== "heatmap" && v.kind !== "lines") {
    process.stderr.write(`error: --kind must be 'heatmap' or 'lines', got '${v.kind}'\n`);
    return 2;
  }
  try {
    renderToFile({
      input: v.input!,
      kind: v.kind as FigureKind,
      x: v.x!,
      y: v.y,
      value: v.value!,
      series: v.series,
      out: v.out!,
    });
  } catch (err) {
    if (err instanceof FigureError) {
      process.stderr.write(`error: ${err.message}\n`);
      return 2;
    }
    throw err;
  }
  process.stdout.write(`${v.out!}\n`);
  return 0;
}

if (import.meta.url === `file://${process.argv[1]}`) {
  process.exit(main(process.argv.slice(2)));
}
