/**
 * Readers for locally stored graph-learning dataset releases.
 *
 * ogb-csv: the OGB graph-property layout — a directory of headerless CSVs:
 *   edge.csv (one "u,v" arc per line, 0-based within each graph),
 *   num-node-list.csv / num-edge-list.csv (per-graph sizes),
 *   graph-label.csv (one target per graph), optional node-feat.csv /
 *   edge-feat.csv (aligned feature rows).
 *
 * molecule-json: a JSON array of molecules as distributed by the common
 * molecular benchmark releases once unpickled:
 *   [{"num_atoms": 23, "atom_type": [...], "bonds": [[u, v, type], ...],
 *     "target": -1.52}, ...]
 */
import * as fs from "node:fs";
import * as path from "node:path";

import type { ExportGraph } from "./wlbound.js";

function readCsvRows(file: string): number[][] {
  const text = fs.readFileSync(file, "utf-8");
  return text
    .split("\n")
    .map((ln) => ln.trim())
    .filter((ln) => ln.length > 0)
    .map((ln) => ln.split(",").map((x) => Number(x)));
}

export function* readOgbCsv(dir: string): Generator<ExportGraph> {
  const need = ["edge.csv", "num-node-list.csv", "num-edge-list.csv",
    "graph-label.csv"];
  for (const f of need) {
    if (!fs.existsSync(path.join(dir, f))) {
      throw new Error(`missing ${f} in ${dir}`);
    }
  }
  const edges = readCsvRows(path.join(dir, "edge.csv"));
  const numNodes = readCsvRows(path.join(dir, "num-node-list.csv")).flat();
  const numEdges = readCsvRows(path.join(dir, "num-edge-list.csv")).flat();
  const labels = readCsvRows(path.join(dir, "graph-label.csv")).flat();
  if (numNodes.length !== numEdges.length ||
      numNodes.length !== labels.length) {
    throw new Error("per-graph size/label files disagree on graph count");
  }
  const nodeFeatFile = path.join(dir, "node-feat.csv");
  const edgeFeatFile = path.join(dir, "edge-feat.csv");
  const nodeFeats = fs.existsSync(nodeFeatFile)
    ? readCsvRows(nodeFeatFile) : null;
  const edgeFeats = fs.existsSync(edgeFeatFile)
    ? readCsvRows(edgeFeatFile) : null;

  let edgeCursor = 0;
  let nodeCursor = 0;
  for (let gi = 0; gi < numNodes.length; gi++) {
    const n = numNodes[gi];
    const m = numEdges[gi];
    const rawEdges = edges.slice(edgeCursor, edgeCursor + m);
    const undirected = new Map<string, number>();
    rawEdges.forEach(([a, b], i) => {
      const u = Math.min(a, b);
      const v = Math.max(a, b);
      const key = `${u},${v}`;
      if (!undirected.has(key)) undirected.set(key, edgeCursor + i);
    });
    const pairList: Array<[number, number]> = [...undirected.keys()].map(
      (k) => k.split(",").map(Number) as [number, number],
    );
    const g: ExportGraph = {
      n,
      edges: pairList,
      target: labels[gi],
    };
    if (nodeFeats) {
      g.nodeLabels = nodeFeats.slice(nodeCursor, nodeCursor + n);
    }
    if (edgeFeats) {
      g.edgeLabels = [...undirected.values()].map((i) => edgeFeats[i]);
    }
    yield g;
    edgeCursor += m;
    nodeCursor += n;
  }
}

interface MoleculeRecord {
  num_atoms: number;
  atom_type: number[];
  bonds: Array<[number, number, number]>;
  target: number;
}

export function* readMoleculeJson(file: string): Generator<ExportGraph> {
  const records: MoleculeRecord[] = JSON.parse(fs.readFileSync(file, "utf-8"));
  for (const mol of records) {
    if (mol.atom_type.length !== mol.num_atoms) {
      throw new Error("atom_type length != num_atoms");
    }
    yield {
      n: mol.num_atoms,
      edges: mol.bonds.map(([u, v]) => [u, v] as [number, number]),
      nodeLabels: mol.atom_type.map((t) => [t]),
      edgeLabels: mol.bonds.map(([, , t]) => [t]),
      target: mol.target,
    };
  }
}
