import { viridisHex } from "./colormap.js";
import { FigureError, numericColumn, requireColumn, Table } from "./csv.js";
import { document, fmt, tag, text, tickLabel } from "./svg.js";

export interface HeatmapSpec {
  x: string;
  y: string;
  value: string;
  title?: string;
}

const MARGIN = { left: 70, right: 100, top: 40, bottom: 55 };
const PLOT_W = 480;
const PLOT_H = 420;
const VALUE_TOL = 1e-9;

interface Grid {
  xs: number[]; // sorted unique x coordinates
  ys: number[]; // sorted unique y coordinates
  cells: Map<string, number>; // "xRaw|yRaw" -> value
  xRawByValue: Map<number, string>;
  yRawByValue: Map<number, string>;
}

/** Assemble the full rectangular grid, complaining about duplicates and
 * naming every missing (x, y) coordinate pair if the grid is ragged. */
export function buildGrid(table: Table, spec: HeatmapSpec): Grid {
  requireColumn(table, spec.x, "x");
  requireColumn(table, spec.y, "y");
  requireColumn(table, spec.value, "value");
  if (table.rows.length === 0) {
    throw new FigureError("heatmap input has no data rows");
  }
  const values = numericColumn(table, spec.value);
  const xNums = numericColumn(table, spec.x);
  const yNums = numericColumn(table, spec.y);

  const cells = new Map<string, number>();
  const xRawByValue = new Map<number, string>();
  const yRawByValue = new Map<number, string>();
  table.rows.forEach((row, i) => {
    const xRaw = row[spec.x]!;
    const yRaw = row[spec.y]!;
    const key = `${xRaw}|${yRaw}`;
    if (cells.has(key)) {
      throw new FigureError(`duplicate grid cell at ${spec.x}=${xRaw}, ${spec.y}=${yRaw}`);
    }
    const v = values[i]!;
    if (v < -VALUE_TOL || v > 1 + VALUE_TOL) {
      throw new FigureError(
        `value ${v} at ${spec.x}=${xRaw}, ${spec.y}=${yRaw} lies outside the fixed [0, 1] scale`,
      );
    }
    cells.set(key, v);
    xRawByValue.set(xNums[i]!, xRaw);
    yRawByValue.set(yNums[i]!, yRaw);
  });

  const xs = [...xRawByValue.keys()].sort((a, b) => a - b);
  const ys = [...yRawByValue.keys()].sort((a, b) => a - b);

  const missing: string[] = [];
  for (const xv of xs) {
    for (const yv of ys) {
      const key = `${xRawByValue.get(xv)!}|${yRawByValue.get(yv)!}`;
      if (!cells.has(key)) {
        missing.push(`(${spec.x}=${xRawByValue.get(xv)!}, ${spec.y}=${yRawByValue.get(yv)!})`);
      }
    }
  }
  if (missing.length > 0) {
    const shown = missing.slice(0, 5).join(", ");
    const more = missing.length > 5 ? ` and ${missing.length - 5} more` : "";
    throw new FigureError(`ragged grid: missing values at ${shown}${more}`);
  }
  return { xs, ys, cells, xRawByValue, yRawByValue };
}

function colorbar(x0: number, y0: number, height: number): string[] {
  const steps = 32;
  const parts: string[] = [];
  const step = height / steps;
  for (let i = 0; i < steps; i++) {
    const t = (i + 0.5) / steps;
    parts.push(
      tag("rect", {
        x: x0,
        y: y0 + height - (i + 1) * step,
        width: 16,
        height: step + 0.5,
        fill: viridisHex(t),
      }),
    );
  }
  for (const t of [0, 0.5, 1]) {
    const y = y0 + height - t * height;
    parts.push(tag("line", { x1: x0 + 16, y1: y, x2: x0 + 20, y2: y, stroke: "#000" }));
    parts.push(text(x0 + 24, y + 4, t.toFixed(1), "start", 10));
  }
  return parts;
}

export function renderHeatmap(table: Table, spec: HeatmapSpec): string {
  const grid = buildGrid(table, spec);
  const { xs, ys } = grid;
  const width = MARGIN.left + PLOT_W + MARGIN.right;
  const height = MARGIN.top + PLOT_H + MARGIN.bottom;
  const cellW = PLOT_W / xs.length;
  const cellH = PLOT_H / ys.length;

  const body: string[] = [];
  body.push(tag("rect", { x: 0, y: 0, width, height, fill: "#ffffff" }));
  body.push(
    text(MARGIN.left + PLOT_W / 2, 22, spec.title ?? `${spec.value} over (${spec.x}, ${spec.y})`,
         "middle", 13),
  );

  xs.forEach((xv, i) => {
    ys.forEach((yv, j) => {
      const key = `${grid.xRawByValue.get(xv)!}|${grid.yRawByValue.get(yv)!}`;
      const v = grid.cells.get(key)!;
      body.push(
        tag("rect", {
          x: MARGIN.left + i * cellW,
          y: MARGIN.top + PLOT_H - (j + 1) * cellH,
          width: cellW + 0.5,
          height: cellH + 0.5,
          fill: viridisHex(Math.max(0, Math.min(1, v))),
          "data-x": grid.xRawByValue.get(xv)!,
          "data-y": grid.yRawByValue.get(yv)!,
        }),
      );
    });
  });

  // frame and end-point axis ticks
  body.push(
    tag("rect", {
      x: MARGIN.left, y: MARGIN.top, width: PLOT_W, height: PLOT_H,
      fill: "none", stroke: "#000",
    }),
  );
  const xTicks: [number, number][] = [[MARGIN.left + cellW / 2, 0],
                                      [MARGIN.left + PLOT_W - cellW / 2, xs.length - 1]];
  for (const [px, idx] of xTicks) {
    body.push(text(px, MARGIN.top + PLOT_H + 18, tickLabel(xs[idx]!), "middle", 10));
  }
  const yTicks: [number, number][] = [[MARGIN.top + PLOT_H - cellH / 2, 0],
                                      [MARGIN.top + cellH / 2, ys.length - 1]];
  for (const [py, idx] of yTicks) {
    body.push(text(MARGIN.left - 8, py + 4, tickLabel(ys[idx]!), "end", 10));
  }
  body.push(text(MARGIN.left + PLOT_W / 2, height - 14, spec.x, "middle", 12));
  body.push(
    tag(
      "g",
      { transform: `translate(18 ${fmt(MARGIN.top + PLOT_H / 2)}) rotate(-90)` },
      text(0, 0, spec.y, "middle", 12),
    ),
  );
  body.push(...colorbar(MARGIN.left + PLOT_W + 24, MARGIN.top, PLOT_H));
  return document(width, height, body);
}
