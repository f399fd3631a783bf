import { describe, expect, it } from "vitest";
import { FigureError, parseCsvText } from "../src/csv.js";
import { renderLines } from "../src/lines.js";

const TWO_SERIES = [
  "model,x,v",
  "a,0,0.9",
  "a,1,0.7",
  "a,2,0.5",
  "b,0,0.8",
  "b,1,0.6",
  "b,2,0.4",
  "",
].join("\n");

describe("renderLines", () => {
  it("draws one polyline and one legend entry per series", () => {
    const table = parseCsvText(TWO_SERIES);
    const svg = renderLines(table, { x: "x", value: "v", series: "model" });
    expect(svg.match(/<polyline /g)).toHaveLength(2);
    expect(svg).toContain('data-series="a"');
    expect(svg).toContain('data-series="b"');
    expect(svg).toContain(">a</text>");
    expect(svg).toContain(">b</text>");
  });

  it("works without a series column", () => {
    const table = parseCsvText("x,v\n0,1\n1,0.5\n");
    const svg = renderLines(table, { x: "x", value: "v" });
    expect(svg.match(/<polyline /g)).toHaveLength(1);
  });

  it("pins the value axis to [0, 1]", () => {
    const table = parseCsvText(TWO_SERIES);
    const svg = renderLines(table, { x: "x", value: "v", series: "model" });
    expect(svg).toContain(">0.00</text>");
    expect(svg).toContain(">1.00</text>");
    // a value of 0.9 sits at 10% of the plot height regardless of the data range
    const top = 40, plotH = 380;
    const expectedY = (top + 0.1 * plotH).toFixed(2);
    expect(svg).toContain(`,${expectedY}`);
  });

  it("names a missing series column", () => {
    const table = parseCsvText(TWO_SERIES);
    expect(() => renderLines(table, { x: "x", value: "v", series: "family" }))
      .toThrow(/family/);
  });

  it("rejects empty input", () => {
    const table = parseCsvText("x,v\n");
    expect(() => renderLines(table, { x: "x", value: "v" })).toThrow(FigureError);
  });

  it("is deterministic and does not mutate its input", () => {
    const table = parseCsvText(TWO_SERIES);
    const snapshot = JSON.parse(JSON.stringify(table));
    const first = renderLines(table, { x: "x", value: "v", series: "model" });
    expect(renderLines(table, { x: "x", value: "v", series: "model" })).toBe(first);
    expect(table).toEqual(snapshot);
    const dims = first.match(/width="(\d+)" height="(\d+)"/);
    expect(dims).not.toBeNull();
  });
});
