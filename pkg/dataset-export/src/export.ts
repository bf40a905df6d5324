/**
 * Manifest-driven export: read a locally stored dataset release, emit
 * wlbound-v1 JSONL for the analysis tool.
 *
 *   node dist/export.js path/to/manifest.json
 *
 * The manifest names the source kind and path, the task/metric, the output
 * path, and the release identifier (recorded so result discrepancies stay
 * attributable to dataset versions).
 */
import * as fs from "node:fs";
import * as path from "node:path";

import { readMoleculeJson, readOgbCsv } from "./sources.js";
import { writeJsonl, type ExportHeader, type Metric, type Task } from "./wlbound.js";

export interface ExportManifest {
  name: string;
  source: { kind: "ogb-csv" | "molecule-json"; path: string };
  task: Task;
  metric: Metric;
  precision?: number;
  out: string;
  release?: string;
}

const TASKS = new Set([
  "graph_classification", "graph_regression",
  "node_classification", "link_prediction",
]);
const METRICS = new Set(["accuracy", "macro_f1", "mse"]);

export function validateManifest(raw: unknown): ExportManifest {
  const m = raw as Partial<ExportManifest>;
  const fail = (field: string, why: string): never => {
    throw new Error(`manifest field ${field}: ${why}`);
  };
  if (!m.name || typeof m.name !== "string") fail("name", "required string");
  if (!m.source || typeof m.source.path !== "string") {
    fail("source.path", "required string");
  }
  if (m.source!.kind !== "ogb-csv" && m.source!.kind !== "molecule-json") {
    fail("source.kind", "must be ogb-csv or molecule-json");
  }
  if (!TASKS.has(m.task as string)) fail("task", `one of ${[...TASKS]}`);
  if (!METRICS.has(m.metric as string)) fail("metric", `one of ${[...METRICS]}`);
  if (m.precision !== undefined &&
      (!Number.isInteger(m.precision) || m.precision < 0 || m.precision > 15)) {
    fail("precision", "integer 0..15");
  }
  if (!m.out || typeof m.out !== "string") fail("out", "required string");
  return m as ExportManifest;
}

export function runExport(manifestPath: string): void {
  const manifest = validateManifest(
    JSON.parse(fs.readFileSync(manifestPath, "utf-8")),
  );
  const base = path.dirname(path.resolve(manifestPath));
  const sourcePath = path.resolve(base, manifest.source.path);
  if (!fs.existsSync(sourcePath)) {
    throw new Error(`source not found: ${sourcePath}`);
  }
  const header: ExportHeader = {
    name: manifest.name,
    task: manifest.task,
    metric: manifest.metric,
    precision: manifest.precision ?? 6,
  };
  const graphs =
    manifest.source.kind === "ogb-csv"
      ? readOgbCsv(sourcePath)
      : readMoleculeJson(sourcePath);
  const outPath = path.resolve(base, manifest.out);
  const stats = writeJsonl(outPath, header, graphs);
  console.log(
    `${manifest.name}: wrote ${stats.graphs} graphs to ${outPath}` +
      (manifest.release ? ` (release: ${manifest.release})` : ""),
  );
  if (header.task === "graph_classification") {
    console.log(`labels: ${[...stats.labels].sort().join(", ")}`);
  }
}

const invokedDirectly =
  process.argv[1] && path.resolve(process.argv[1]) ===
    path.resolve(new URL(import.meta.url).pathname);

if (invokedDirectly) {
  if (process.argv.length < 3) {
    console.error("usage: node dist/export.js <manifest.json>");
    process.exit(2);
  }
  try {
    runExport(process.argv[2]);
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    process.exit(2);
  }
}
