import { readFileSync } from "node:fs";
import Papa from "papaparse";

/** Parsed CSV with the header order preserved. Rows keep raw string values. */
export interface Table {
  columns: string[];
  rows: Record<string, string>[];
}

export class FigureError extends Error {}

export function parseCsvText(text: string): Table {
  const result = Papa.parse<Record<string, string>>(text, {
    header: true,
    skipEmptyLines: true,
  });
  if (result.errors.length > 0) {
    const first = result.errors[0]!;
    throw new FigureError(`CSV parse error: ${first.message} (row ${first.row})`);
  }
  const columns = result.meta.fields ?? [];
  if (columns.length === 0) {
    throw new FigureError("CSV has no header row");
  }
  return { columns, rows: result.data };
}

export function readCsv(path: string): Table {
  return parseCsvText(readFileSync(path, "utf8"));
}

export function requireColumn(table: Table, name: string, role: string): void {
  if (!table.columns.includes(name)) {
    throw new FigureError(
      `missing ${role} column '${name}'; available columns: ${table.columns.join(", ")}`,
    );
  }
}

/** Numeric view of one column; blank or non-numeric entries are an error. */
export function numericColumn(table: Table, name: string): number[] {
  requireColumn(table, name, "value");
  return table.rows.map((row, i) => {
    const raw = row[name];
    const value = Number(raw);
    if (raw === undefined || raw === "" || !Number.isFinite(value)) {
      throw new FigureError(`column '${name}' is not numeric at data row ${i} (got '${raw}')`);
    }
    return value;
  });
}

export function mean(values: number[]): number {
  if (values.length === 0) {
    throw new FigureError("mean of empty column");
  }
  return values.reduce((acc, v) => acc + v, 0) / values.length;
}
