/** Perceptually uniform sequential colormap (viridis anchor points, linearly
 * interpolated). Input is clamped to [0, 1]. */

const ANCHORS: [number, number, number][] = [
  [0x44, 0x01, 0x54],
  [0x48, 0x1f, 0x70],
  [0x44, 0x3a, 0x83],
  [0x3b, 0x52, 0x8b],
  [0x31, 0x68, 0x8e],
  [0x28, 0x7c, 0x8e],
  [0x21, 0x91, 0x8c],
  [0x20, 0xa4, 0x86],
  [0x35, 0xb7, 0x79],
  [0x5e, 0xc9, 0x62],
  [0x90, 0xd7, 0x43],
  [0xc8, 0xe0, 0x20],
  [0xfd, 0xe7, 0x25],
];

export function clamp01(t: number): number {
  return Math.max(0, Math.min(1, t));
}

export function viridis(t: number): [number, number, number] {
  const x = clamp01(t) * (ANCHORS.length - 1);
  const lo = Math.floor(x);
  const hi = Math.min(lo + 1, ANCHORS.length - 1);
  const frac = x - lo;
  const a = ANCHORS[lo]!;
  const b = ANCHORS[hi]!;
  return [
    Math.round(a[0] + (b[0] - a[0]) * frac),
    Math.round(a[1] + (b[1] - a[1]) * frac),
    Math.round(a[2] + (b[2] - a[2]) * frac),
  ];
}

export function viridisHex(t: number): string {
  const [r, g, b] = viridis(t);
  const hex = (v: number) => v.toString(16).padStart(2, "0");
  return `#${hex(r)}${hex(g)}${hex(b)}`;
}

/** Categorical palette for line series; distinct at small counts, cycles. */
const SERIES_COLORS = [
  "#1f77b4",
  "#d62728",
  "#2ca02c",
  "#9467bd",
  "#ff7f0e",
  "#8c564b",
  "#17becf",
  "#7f7f7f",
];

export function seriesColor(index: number): string {
  return SERIES_COLORS[index % SERIES_COLORS.length]!;
}
