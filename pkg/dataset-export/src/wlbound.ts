/**
 * Writer for the wlbound-v1 JSONL dataset format.
 *
 * Output is canonical: edges oriented u < v and sorted, attribute values
 * rendered as canonical tokens (integers in decimal, reals quantized
 * half-even at the declared precision with no trailing zeros), object keys
 * in fixed order, JSON packed without spaces. Loading the file with the
 * consumer and saving it again reproduces the bytes.
 */
import * as fs from "node:fs";

export type Task =
  | "graph_classification"
  | "graph_regression"
  | "node_classification"
  | "link_prediction";

export type Metric = "accuracy" | "macro_f1" | "mse";

export interface ExportGraph {
  /** number of vertices */
  n: number;
  /** undirected edges in any orientation/order; deduplicated here */
  edges: Array<[number, number]>;
  nodeLabels?: Array<Array<number | string>>;
  edgeLabels?: Array<Array<number | string>>;
  /** per-graph scalar (classification label or regression value) or
   *  per-node / per-link label arrays */
  target: number | string | Array<number | string>;
}

export interface ExportHeader {
  name: string;
  task: Task;
  metric: Metric;
  precision: number;
}

/** Decimal half-even rounding, mirroring the consumer's quantization. */
export function quantize(value: number, digits: number): number {
  const scale = Math.pow(10, digits);
  const scaled = value * scale;
  const floor = Math.floor(scaled);
  const frac = scaled - floor;
  let rounded: number;
  if (Math.abs(frac - 0.5) < 1e-9) {
    rounded = floor % 2 === 0 ? floor : floor + 1;
  } else {
    rounded = Math.round(scaled);
  }
  return rounded / scale;
}

/** Canonical token for one attribute value. */
export function canonicalToken(
  value: number | string,
  digits: number,
): number | string {
  if (typeof value === "string") {
    const asInt = Number.parseInt(value, 10);
    if (String(asInt) === value.trim()) return asInt;
    return value;
  }
  if (Number.isInteger(value) && Math.abs(value) < 1e15) return value + 0;
  const q = quantize(value, digits);
  if (q === 0) return 0;
  if (Number.isInteger(q) && Math.abs(q) < 1e15) return q;
  let text = q.toFixed(digits);
  text = text.replace(/0+$/, "").replace(/\.$/, "");
  if (text === "-0" || text === "") text = "0";
  return Number(text);
}

/** Python-repr-compatible float rendering for regression targets. */
export function pyFloat(value: number): string {
  if (Number.isInteger(value) && Math.abs(value) < 1e16) {
    return `${value}.0`;
  }
  let text = String(value);
  // python pads single-digit exponents: 1e-7 -> 1e-07
  text = text.replace(/e([+-])(\d)$/, "e$10$2");
  return text;
}

function canonicalEdges(
  n: number,
  edges: Array<[number, number]>,
): Array<[number, number]> {
  const seen = new Set<number>();
  const out: Array<[number, number]> = [];
  for (const [a, b] of edges) {
    const u = Math.min(a, b);
    const v = Math.max(a, b);
    if (u === v) throw new Error(`self-loop at vertex ${u}`);
    if (u < 0 || v >= n) throw new Error(`edge (${u},${v}) out of range`);
    const key = u * n + v;
    if (seen.has(key)) continue;
    seen.add(key);
    out.push([u, v]);
  }
  out.sort((x, y) => (x[0] - y[0]) || (x[1] - y[1]));
  return out;
}

function renderTokenJson(token: number | string): string {
  return typeof token === "number" ? String(token) : JSON.stringify(token);
}

/** Serialize one graph line; keys in schema order, compact separators. */
function graphLine(
  id: number,
  g: ExportGraph,
  header: ExportHeader,
  edgeOrder: number[],
): string {
  const parts: string[] = [];
  parts.push(`"id":${id}`);
  parts.push(`"n":${g.n}`);
  const edges = canonicalEdges(g.n, g.edges);
  parts.push(`"edges":[${edges.map(([u, v]) => `[${u},${v}]`).join(",")}]`);
  if (g.nodeLabels) {
    if (g.nodeLabels.length !== g.n) {
      throw new Error(`node label rows ${g.nodeLabels.length} != n ${g.n}`);
    }
    const rows = g.nodeLabels.map(
      (row) =>
        `[${row
          .map((x) => renderTokenJson(canonicalToken(x, header.precision)))
          .join(",")}]`,
    );
    parts.push(`"node_labels":[${rows.join(",")}]`);
  }
  if (g.edgeLabels) {
    if (g.edgeLabels.length !== g.edges.length) {
      throw new Error(
        `edge label rows ${g.edgeLabels.length} != input edges ` +
          `${g.edges.length}`,
      );
    }
    const rows = edgeOrder.map(
      (src) =>
        `[${g
          .edgeLabels![src]
          .map((x) => renderTokenJson(canonicalToken(x, header.precision)))
          .join(",")}]`,
    );
    parts.push(`"edge_labels":[${rows.join(",")}]`);
  }
  let target: string;
  if (header.task === "graph_regression") {
    target = pyFloat(g.target as number);
  } else if (Array.isArray(g.target)) {
    target = `[${g.target
      .map((x) => renderTokenJson(canonicalToken(x, header.precision)))
      .join(",")}]`;
  } else {
    target = renderTokenJson(canonicalToken(g.target, header.precision));
  }
  parts.push(`"targets":${target}`);
  return `{${parts.join(",")}}`;
}

/**
 * Map each canonical edge back to the input edge index so aligned edge
 * label rows follow the reordering.
 */
function canonicalEdgeOrder(
  n: number,
  edges: Array<[number, number]>,
): number[] {
  const first = new Map<number, number>();
  edges.forEach(([a, b], i) => {
    const u = Math.min(a, b);
    const v = Math.max(a, b);
    const key = u * n + v;
    if (!first.has(key)) first.set(key, i);
  });
  const keys = [...first.keys()].sort((x, y) => x - y);
  return keys.map((k) => first.get(k)!);
}

export function writeJsonl(
  path: string,
  header: ExportHeader,
  graphs: Iterable<ExportGraph>,
): { graphs: number; labels: Set<string> } {
  const lines: string[] = [];
  lines.push(
    `{"format":"wlbound-v1","task":"${header.task}",` +
      `"metric":"${header.metric}","precision":${header.precision},` +
      `"name":${JSON.stringify(header.name)}}`,
  );
  let id = 0;
  const labels = new Set<string>();
  for (const g of graphs) {
    const order = canonicalEdgeOrder(g.n, g.edges);
    lines.push(graphLine(id, g, header, order));
    if (!Array.isArray(g.target)) labels.add(String(g.target));
    id += 1;
  }
  fs.writeFileSync(path, lines.join("\n") + "\n", "utf-8");
  return { graphs: id, labels };
}
