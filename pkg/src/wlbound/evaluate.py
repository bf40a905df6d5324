"""Score upper bounds from refinement hashes.

Entities (graphs, nodes, or links per the dataset task) are grouped by
their content-addressed hash at a layer count; the best any hash-respecting
predictor can do is the per-group majority label (classification) or the
per-group mean (MSE), which turns grouping into a theoretical score bound.
More layers refine groups, so accuracy bounds never decrease and MSE bounds
never increase with depth.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field

from .errors import LayerNegative, TargetMismatch
from .features import FeatureSpec, apply_to_graph, canonical_grammar
from .graphs import Dataset, Graph, Metric, Task
from .refine import certificate, digest, refine

REPORT_SCHEMA_VERSION = "wlbound-report-v1"


@dataclass(frozen=True)
class EvalConfig:
    """Which original attributes refinement may see, plus extra features."""

    use_node_attrs: bool
    use_edge_attrs: bool
    features: tuple[FeatureSpec, ...] = ()

    @property
    def name(self) -> str:
        base = {
            (False, False): "none",
            (True, False): "node",
            (False, True): "edge",
            (True, True): "both",
        }[(self.use_node_attrs, self.use_edge_attrs)]
        if self.features:
            base += "+" + canonical_grammar(list(self.features))
        return base

    @property
    def variant(self) -> str:
        return "WLE1" if self.use_edge_attrs else "WL1"


STANDARD_CONFIGS = {
    "none": EvalConfig(False, False),
    "node": EvalConfig(True, False),
    "edge": EvalConfig(False, True),
    "both": EvalConfig(True, True),
}


def prepare_graph(g: Graph, config: EvalConfig) -> Graph:
    out = g.stripped(node=not config.use_node_attrs,
                     edge=not config.use_edge_attrs)
    if config.features:
        out = apply_to_graph(out, list(config.features))
    return out


@dataclass(frozen=True)
class GraphHashes:
    node_colors: tuple[bytes, ...]
    graph_hash: bytes
    link_hashes: tuple[bytes, ...]


def entity_hashes(dataset: Dataset, layers: int, config: EvalConfig,
                  ) -> list[GraphHashes]:
    """Node, graph and link hashes at a layer count, corpus-comparable."""
    if layers < 0:
        raise LayerNegative(f"layers {layers}")
    out = []
    for g in dataset.graphs:
        prepared = prepare_graph(g, config)
        trace = refine(prepared, use_edge_attrs=config.use_edge_attrs,
                       rounds=layers)
        colors = trace.colors_at(layers)
        links = []
        for i, (u, v) in enumerate(prepared.edges):
            lo, hi = sorted((colors[u], colors[v]))
            if config.use_edge_attrs:
                etok = digest(b"et", *prepared.edge_attrs[i]) \
                    if prepared.edge_attrs is not None else digest(b"et")
                links.append(digest(b"link", lo, hi, etok))
            else:
                links.append(digest(b"link", lo, hi))
        out.append(GraphHashes(colors, certificate(trace, layers), tuple(links)))
    return out


def _entity_pairs(dataset: Dataset, hashes: list[GraphHashes]):
    """(hash, target) pairs for the dataset's task entities."""
    if dataset.task is Task.GRAPH_CLASSIFICATION or \
            dataset.task is Task.GRAPH_REGRESSION:
        for gh, target in zip(hashes, dataset.targets):
            yield gh.graph_hash, target
    elif dataset.task is Task.NODE_CLASSIFICATION:
        for gh, targets in zip(hashes, dataset.targets):
            yield from zip(gh.node_colors, targets)
    elif dataset.task is Task.LINK_PREDICTION:
        for gh, targets in zip(hashes, dataset.targets):
            yield from zip(gh.link_hashes, targets)
    else:
        raise TargetMismatch(f"unsupported task {dataset.task}")


def accuracy_bound(groups: dict) -> float:
    total = sum(len(v) for v in groups.values())
    hit = sum(Counter(v).most_common(1)[0][1] for v in groups.values())
    return hit / total


def macro_f1_bound(groups: dict, alphabet) -> float:
    # deterministic majority: ties toward the lexicographically smallest label
    tp: Counter = Counter()
    fp: Counter = Counter()
    fn: Counter = Counter()
    for values in groups.values():
        counts = Counter(values)
        top = max(counts.values())
        pred = min(label for label, c in counts.items() if c == top)
        for label, c in counts.items():
            if label == pred:
                tp[label] += c
            else:
                fn[label] += c
                fp[pred] += c
    scores = []
    for label in alphabet:
        denom = 2 * tp[label] + fp[label] + fn[label]
        scores.append(2 * tp[label] / denom if denom else 0.0)
    return sum(scores) / len(scores)


def mse_bound(groups: dict) -> float:
    total = 0
    sse = 0.0
    for values in groups.values():
        m = sum(values) / len(values)
        sse += sum((x - m) ** 2 for x in values)
        total += len(values)
    return sse / total


def score_groups(dataset: Dataset, groups: dict, metric: Metric) -> float:
    if metric is Metric.ACCURACY:
        return accuracy_bound(groups)
    if metric is Metric.MACRO_F1:
        return macro_f1_bound(groups, dataset.label_alphabet())
    if metric is Metric.MSE:
        return mse_bound(groups)
    raise TargetMismatch(f"unsupported metric {metric}")


@dataclass
class EvaluationReport:
    dataset: str
    metric: str
    rows: list[dict] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def add_row(self, config: EvalConfig, layer: int, value: float):
        self.rows.append({
            "dataset": self.dataset,
            "config": config.name,
            "variant": config.variant,
            "layer": layer,
            "metric": self.metric,
            "value": round(value, 4),
            "raw_value": value,
        })

    def to_csv(self) -> str:
        lines = [
            f"# schema: {REPORT_SCHEMA_VERSION}",
        ]
        for key in sorted(self.metadata):
            lines.append(f"# {key}: {self.metadata[key]}")
        lines.append("dataset,config,variant,layer,metric,value,raw_value")
        for r in self.rows:
            lines.append(
                "{dataset},{config},{variant},{layer},{metric},"
                "{value},{raw_value!r}".format(**r)
            )
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(
            {
                "schema": REPORT_SCHEMA_VERSION,
                "metadata": self.metadata,
                "rows": self.rows,
            },
            sort_keys=True, indent=2,
        ) + "\n"

    def value(self, config_name: str, layer: int) -> float:
        for r in self.rows:
            if r["config"] == config_name and r["layer"] == layer:
                return r["value"]
        raise KeyError((config_name, layer))


def upper_bound(dataset: Dataset, layers_max: int,
                configs: list[EvalConfig] | None = None,
                metric: Metric | None = None) -> EvaluationReport:
    """Best achievable metric per config and layer count.

    Layer 0 rows are omitted for edge-aware configs: with zero rounds the
    colors cannot see edges, so those rows equal the edge-free configs.
    """
    if configs is None:
        configs = list(STANDARD_CONFIGS.values())
    metric = metric or dataset.metric
    report = EvaluationReport(dataset.name, metric.value)
    report.metadata.update({
        "precision": dataset.precision,
        "task": dataset.task.value,
    })
    for config in configs:
        start = 1 if config.use_edge_attrs else 0
        for layer in range(start, layers_max + 1):
            hashes = entity_hashes(dataset, layer, config)
            groups: dict = {}
            for h, target in _entity_pairs(dataset, hashes):
                groups.setdefault(h, []).append(target)
            report.add_row(config, layer, score_groups(dataset, groups, metric))
    return report


def feature_mse(dataset: Dataset, spec_grid: list[list[FeatureSpec]],
                layers: int, config: EvalConfig | None = None) -> list[dict]:
    """Node-to-graph-target MSE per spec set (the encoding comparison axis).

    Nodes are grouped by node hash at `layers`; every node inherits its
    graph's regression target; score is the group-mean MSE over all nodes.
    """
    if dataset.task is not Task.GRAPH_REGRESSION:
        raise TargetMismatch("feature_mse needs a graph regression dataset")
    base = config or EvalConfig(False, False)
    out = []
    for specs in spec_grid:
        cfg = EvalConfig(base.use_node_attrs, base.use_edge_attrs,
                         tuple(specs))
        hashes = entity_hashes(dataset, layers, cfg)
        groups: dict = {}
        for gh, target in zip(hashes, dataset.targets):
            for color in gh.node_colors:
                groups.setdefault(color, []).append(target)
        out.append({
            "features": canonical_grammar(list(specs)),
            "layers": layers,
            "mse": mse_bound(groups),
        })
    return out
