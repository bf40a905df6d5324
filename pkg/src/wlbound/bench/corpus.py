"""Benchmark corpus storage: <class>/<order>.g6 files plus manifest.json.

The manifest records the expected graph count per (class, order) cell; the
loader re-counts every file and fails loudly on any mismatch, so silent
corpus corruption cannot skew failure tables.
"""
from __future__ import annotations

import hashlib
import json
from pathlib import Path

from ..errors import MissingFile, SchemaViolation
from ..graph6 import read_graph6_file, write_graph6_file
from ..graphs import Graph

MANIFEST_NAME = "manifest.json"
MANIFEST_FORMAT = "wlbound-corpus-v1"


def load_manifest(root: str | Path) -> dict:
    path = Path(root) / MANIFEST_NAME
    if not path.exists():
        raise MissingFile(f"corpus manifest not found: {path}")
    data = json.loads(path.read_text())
    if data.get("format") != MANIFEST_FORMAT:
        raise SchemaViolation(f"manifest format {data.get('format')!r}")
    return data


def manifest_digest(root: str | Path) -> str:
    return hashlib.sha256((Path(root) / MANIFEST_NAME).read_bytes()).hexdigest()


def save_corpus_cell(root: str | Path, class_name: str, order: int,
                     graphs: list[Graph]) -> None:
    cell_dir = Path(root) / class_name
    cell_dir.mkdir(parents=True, exist_ok=True)
    write_graph6_file(cell_dir / f"{order}.g6", graphs)
    path = Path(root) / MANIFEST_NAME
    if path.exists():
        data = json.loads(path.read_text())
    else:
        data = {"format": MANIFEST_FORMAT, "classes": {}}
    orders = data["classes"].setdefault(class_name, {})
    orders[str(order)] = len(graphs)
    path.write_text(json.dumps(data, sort_keys=True, indent=2) + "\n")


def load_corpus(root: str | Path, classes=None, orders=None,
                ) -> dict[tuple[str, int], list[Graph]]:
    """Load and verify requested cells; counts must match the manifest."""
    manifest = load_manifest(root)
    out: dict[tuple[str, int], list[Graph]] = {}
    for class_name, cells in sorted(manifest["classes"].items()):
        if classes is not None and class_name not in classes:
            continue
        for order_str, expected in sorted(cells.items(), key=lambda kv: int(kv[0])):
            order = int(order_str)
            if orders is not None and order not in orders:
                continue
            path = Path(root) / class_name / f"{order}.g6"
            if not path.exists():
                raise MissingFile(f"corpus cell missing: {path}")
            graphs = read_graph6_file(path)
            if len(graphs) != expected:
                raise SchemaViolation(
                    f"{path}: {len(graphs)} graphs, manifest says {expected}"
                )
            bad = [g for g in graphs if g.node_count != order]
            if bad:
                raise SchemaViolation(f"{path}: graph of wrong order")
            out[(class_name, order)] = graphs
    if classes is not None:
        missing = set(classes) - {c for c, _ in out}
        if missing:
            raise MissingFile(f"corpus classes not in manifest: {sorted(missing)}")
    return out
