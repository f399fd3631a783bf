import { writeFileSync } from "node:fs";
import { FigureError, readCsv } from "./csv.js";
import { renderHeatmap } from "./heatmap.js";
import { renderLines } from "./lines.js";

export type FigureKind = "heatmap" | "lines";

export interface FigureJob {
  input: string;
  kind: FigureKind;
  x: string;
  y?: string;
  value: string;
  series?: string;
  out: string;
}

export function renderFigure(job: FigureJob): string {
  const table = readCsv(job.input);
  if (job.kind === "heatmap") {
    if (job.y === undefined) {
      throw new FigureError("heatmap needs a --y column");
    }
    return renderHeatmap(table, { x: job.x, y: job.y, value: job.value });
  }
  if (job.kind === "lines") {
    return renderLines(table, { x: job.x, value: job.value, series: job.series });
  }
  throw new FigureError(`unknown figure kind '${job.kind as string}'`);
}

export function renderToFile(job: FigureJob): void {
  writeFileSync(job.out, renderFigure(job), "utf8");
}
