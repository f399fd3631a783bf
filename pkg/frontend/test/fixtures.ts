import { join } from "node:path";
import { fileURLToPath } from "node:url";

export const FIXTURE_DIR = join(fileURLToPath(new URL(".", import.meta.url)), "fixtures");

/** Every upstream figure preset and the CSV files it emits. */
export const PRESET_FILES: Record<string, string[]> = {
  "jc-fringes": ["jc-fringes.csv"],
  "jc-omega": ["jc-omega.csv"],
  "jc-thermal": ["jc-thermal-t1.csv", "jc-thermal-t10.csv"],
  "ad-fringes": ["ad-fringes.csv"],
  "ad-asymmetry": ["ad-asymmetry.csv"],
  "pd-fringes": ["pd-fringes.csv"],
  "pd-symmetry": ["pd-symmetry.csv"],
  "dp-fringes": ["dp-fringes.csv"],
  "dp-grid": ["dp-grid.csv"],
  "compare-lambda": ["compare-lambda.csv"],
  "compare-dtau-de": ["compare-dtau-de-dtau.csv", "compare-dtau-de-de.csv"],
};

export const PRESETS = Object.keys(PRESET_FILES);

export interface RenderPlan {
  file: string;
  kind: "heatmap" | "lines";
  x: string;
  y?: string;
  series?: string;
}

/** How each preset CSV is meant to be plotted. */
export const RENDER_PLANS: RenderPlan[] = [
  { file: "jc-fringes.csv", kind: "heatmap", x: "delta_e", y: "lambda1" },
  { file: "jc-omega.csv", kind: "lines", x: "lambda1", series: "omega" },
  { file: "jc-thermal-t1.csv", kind: "heatmap", x: "delta_e", y: "lambda1" },
  { file: "jc-thermal-t10.csv", kind: "heatmap", x: "delta_e", y: "lambda1" },
  { file: "ad-fringes.csv", kind: "heatmap", x: "delta_e", y: "lambda1" },
  { file: "ad-asymmetry.csv", kind: "heatmap", x: "p1", y: "p2" },
  { file: "pd-fringes.csv", kind: "heatmap", x: "delta_e", y: "lambda1" },
  { file: "pd-symmetry.csv", kind: "heatmap", x: "p1", y: "p2" },
  { file: "dp-fringes.csv", kind: "heatmap", x: "delta_e", y: "lambda1" },
  { file: "dp-grid.csv", kind: "heatmap", x: "p1", y: "p2" },
  { file: "compare-lambda.csv", kind: "lines", x: "lambda1", series: "model" },
  { file: "compare-dtau-de-dtau.csv", kind: "lines", x: "delta_tau", series: "model" },
  { file: "compare-dtau-de-de.csv", kind: "lines", x: "delta_e", series: "model" },
];

export function fixturePath(file: string): string {
  return join(FIXTURE_DIR, file);
}
