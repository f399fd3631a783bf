import { seriesColor } from "./colormap.js";
import { FigureError, numericColumn, requireColumn, Table } from "./csv.js";
import { document, fmt, tag, text, tickLabel } from "./svg.js";

export interface LinesSpec {
  x: string;
  value: string;
  /** optional column whose distinct values split the rows into series */
  series?: string;
  title?: string;
}

const MARGIN = { left: 60, right: 150, top: 40, bottom: 55 };
const PLOT_W = 520;
const PLOT_H = 380;

interface Series {
  name: string;
  xs: number[];
  vs: number[];
}

export function splitSeries(table: Table, spec: LinesSpec): Series[] {
  requireColumn(table, spec.x, "x");
  requireColumn(table, spec.value, "value");
  if (table.rows.length === 0) {
    throw new FigureError("line plot input has no data rows");
  }
  const xNums = numericColumn(table, spec.x);
  const values = numericColumn(table, spec.value);

  if (spec.series === undefined) {
    return [{ name: spec.value, xs: xNums, vs: values }];
  }
  requireColumn(table, spec.series, "series");
  const byName = new Map<string, Series>();
  table.rows.forEach((row, i) => {
    const name = row[spec.series!]!;
    let series = byName.get(name);
    if (series === undefined) {
      series = { name, xs: [], vs: [] };
      byName.set(name, series);
    }
    series.xs.push(xNums[i]!);
    series.vs.push(values[i]!);
  });
  return [...byName.values()];
}

export function renderLines(table: Table, spec: LinesSpec): string {
  const seriesList = splitSeries(table, spec);
  if (seriesList.length === 0) {
    throw new FigureError("no series to plot");
  }
  const allX = seriesList.flatMap((s) => s.xs);
  const xMin = Math.min(...allX);
  const xMax = Math.max(...allX);
  const xSpan = xMax - xMin || 1;
  // value axis is pinned to [0, 1] so different figures stay comparable
  const px = (x: number) => MARGIN.left + ((x - xMin) / xSpan) * PLOT_W;
  const py = (v: number) => MARGIN.top + (1 - Math.max(0, Math.min(1, v))) * PLOT_H;

  const width = MARGIN.left + PLOT_W + MARGIN.right;
  const height = MARGIN.top + PLOT_H + MARGIN.bottom;
  const body: string[] = [];
  body.push(tag("rect", { x: 0, y: 0, width, height, fill: "#ffffff" }));
  body.push(text(MARGIN.left + PLOT_W / 2, 22,
                 spec.title ?? `${spec.value} vs ${spec.x}`, "middle", 13));

  // frame and gridlines at fixed value levels
  body.push(tag("rect", { x: MARGIN.left, y: MARGIN.top, width: PLOT_W, height: PLOT_H,
                          fill: "none", stroke: "#000" }));
  for (const level of [0, 0.25, 0.5, 0.75, 1]) {
    const y = py(level);
    if (level > 0 && level < 1) {
      body.push(tag("line", { x1: MARGIN.left, y1: y, x2: MARGIN.left + PLOT_W, y2: y,
                              stroke: "#ddd" }));
    }
    body.push(text(MARGIN.left - 8, y + 4, level.toFixed(2), "end", 10));
  }
  for (const xv of [xMin, (xMin + xMax) / 2, xMax]) {
    body.push(text(px(xv), MARGIN.top + PLOT_H + 18, tickLabel(xv), "middle", 10));
  }

  seriesList.forEach((series, k) => {
    const points = series.xs.map((x, i) => `${fmt(px(x))},${fmt(py(series.vs[i]!))}`).join(" ");
    body.push(
      tag("polyline", {
        points,
        fill: "none",
        stroke: seriesColor(k),
        "stroke-width": 1.6,
        "data-series": series.name,
      }),
    );
  });

  // legend, one entry per series
  const legendX = MARGIN.left + PLOT_W + 16;
  seriesList.forEach((series, k) => {
    const y = MARGIN.top + 10 + k * 18;
    body.push(tag("line", { x1: legendX, y1: y, x2: legendX + 22, y2: y,
                            stroke: seriesColor(k), "stroke-width": 2 }));
    body.push(text(legendX + 28, y + 4, series.name, "start", 11));
  });

  body.push(text(MARGIN.left + PLOT_W / 2, height - 14, spec.x, "middle", 12));
  body.push(
    tag(
      "g",
      { transform: `translate(16 ${fmt(MARGIN.top + PLOT_H / 2)}) rotate(-90)` },
      text(0, 0, spec.value, "middle", 12),
    ),
  );
  return document(width, height, body);
}
