import { describe, expect, it } from "vitest";
import { FigureError, mean, numericColumn, parseCsvText } from "../src/csv.js";

const SAMPLE = [
  "model,delta_e,visibility",
  "noiseless,1.0,0.8775825618903725",
  "noiseless,2.0,0.5403023058681398",
  "",
].join("\n");

describe("parseCsvText", () => {
  it("keeps header order and raw string values", () => {
    const table = parseCsvText(SAMPLE);
    expect(table.columns).toEqual(["model", "delta_e", "visibility"]);
    expect(table.rows).toHaveLength(2);
    expect(table.rows[0]!.visibility).toBe("0.8775825618903725");
  });

  it("rejects headerless input", () => {
    expect(() => parseCsvText("")).toThrow(FigureError);
  });
});

describe("numericColumn", () => {
  it("parses floats exactly", () => {
    const table = parseCsvText(SAMPLE);
    expect(numericColumn(table, "visibility")).toEqual([
      0.8775825618903725, 0.5403023058681398,
    ]);
  });

  it("names a missing column", () => {
    const table = parseCsvText(SAMPLE);
    expect(() => numericColumn(table, "coupling")).toThrow(/coupling/);
  });

  it("rejects blank entries", () => {
    const table = parseCsvText("a,b\n1.0,\n");
    expect(() => numericColumn(table, "b")).toThrow(/not numeric/);
  });
});

describe("mean", () => {
  it("averages", () => {
    expect(mean([0.25, 0.75])).toBe(0.5);
  });

  it("rejects empty input", () => {
    expect(() => mean([])).toThrow(FigureError);
  });
});
