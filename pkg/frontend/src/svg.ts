/** Minimal SVG assembly helpers. Coordinates are formatted with a fixed
 * precision so identical inputs always produce identical bytes. */

export function fmt(value: number): string {
  const s = value.toFixed(2);
  return s === "-0.00" ? "0.00" : s;
}

export function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function tag(
  name: string,
  attrs: Record<string, string | number>,
  body?: string,
): string {
  const parts = Object.entries(attrs)
    .map(([k, v]) => `${k}="${typeof v === "number" ? fmt(v) : escapeXml(String(v))}"`)
    .join(" ");
  if (body === undefined) {
    return `<${name} ${parts}/>`;
  }
  return `<${name} ${parts}>${body}</${name}>`;
}

export function text(
  x: number,
  y: number,
  content: string,
  anchor: "start" | "middle" | "end" = "start",
  size = 11,
): string {
  return tag(
    "text",
    { x, y, "text-anchor": anchor, "font-size": size, "font-family": "sans-serif" },
    escapeXml(content),
  );
}

export function document(width: number, height: number, body: string[]): string {
  const head =
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
    `viewBox="0 0 ${width} ${height}">`;
  return [head, ...body, "</svg>", ""].join("\n");
}

/** Format an axis tick label: short, stable, locale-independent. */
export function tickLabel(value: number): string {
  if (value === 0) return "0";
  const magnitude = Math.abs(value);
  if (magnitude >= 1000 || magnitude < 0.001) return value.toExponential(2);
  return String(Number(value.toPrecision(4)));
}
