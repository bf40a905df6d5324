"""Feature specs, the --features grammar, and dataset application.

A FeatureSpec names one deterministic pre-coloring method; applying specs
appends canonical tokens to node (or edge) attribute tuples, in spec order,
so refinement sees them as richer initial colors. Grammar, one spec per
comma-separated group: kind[:param=value,...] e.g.

    degree
    lappe:dims=4
    count:pattern=cycle,size=6,target=node
    rwse:steps=16,lappe:dims=4     (two specs)
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import WlboundError
from ..graphs import Dataset, Graph, canonical_token
from . import centrality, counts, spectral, subconstituent


class FeatureSpecError(WlboundError):
    """Bad feature kind or parameters."""


_SCALAR_NODE_KINDS = {
    "degree": centrality.degree_values,
    "closeness": centrality.closeness_values,
    "harmonic": centrality.harmonic_values,
    "eigenvector": centrality.eigenvector_values,
    "betweenness": centrality.betweenness_values,
    "eccentricity": centrality.eccentricity_values,
    "transitivity": centrality.local_transitivity_values,
    "burts": centrality.burts_constraint_values,
}

_SCALAR_EDGE_KINDS = {
    "edge_betweenness": centrality.edge_betweenness_values,
    "convergence": centrality.convergence_degree_values,
}

_ALIASES = {
    "local_transitivity": "transitivity",
    "burts_constraint": "burts",
    "convergence_degree": "convergence",
    "edgebetweenness": "edge_betweenness",
    "subconstituent": "subconst",
}

KINDS = (
    tuple(_SCALAR_NODE_KINDS) + tuple(_SCALAR_EDGE_KINDS)
    + ("count", "rwse", "lappe", "subconst")
)


@dataclass(frozen=True)
class FeatureSpec:
    kind: str
    params: tuple[tuple[str, object], ...] = ()
    quantize_digits: int = 6

    def __post_init__(self):
        if self.kind not in KINDS:
            raise FeatureSpecError(f"unknown feature kind {self.kind!r}")
        p = self.param_dict()
        if self.kind == "count":
            if p.get("pattern") not in ("clique", "path", "cycle"):
                raise FeatureSpecError("count needs pattern=clique|path|cycle")
            if not isinstance(p.get("size"), int) or not 1 <= p["size"] <= 8:
                raise FeatureSpecError("count needs size=1..8")
            if p.get("target", "node") not in ("node", "edge"):
                raise FeatureSpecError("count target must be node or edge")
            if p.get("size_unit", "edges") not in ("edges", "vertices"):
                raise FeatureSpecError("count size_unit must be edges|vertices")
        elif self.kind == "rwse":
            if not isinstance(p.get("steps"), int) or not 1 <= p["steps"] <= 32:
                raise FeatureSpecError("rwse needs steps=1..32")
        elif self.kind == "lappe":
            if not isinstance(p.get("dims"), int) or p["dims"] < 1:
                raise FeatureSpecError("lappe needs dims>=1")
        elif self.kind == "subconst":
            if p.get("n") not in (1, 2):
                raise FeatureSpecError("subconst needs n=1|2")
        elif p:
            raise FeatureSpecError(f"{self.kind} takes no parameters")

    def param_dict(self) -> dict:
        return dict(self.params)

    @property
    def target(self) -> str:
        if self.kind in _SCALAR_EDGE_KINDS:
            return "edge"
        if self.kind == "count":
            return self.param_dict().get("target", "node")
        return "node"

    def canonical(self) -> str:
        parts = [self.kind]
        if self.params:
            parts.append(
                ",".join(f"{k}={v}" for k, v in sorted(self.params))
            )
        return ":".join(parts)


def compute_feature(g: Graph, spec: FeatureSpec) -> list[bytes]:
    """Token vector for one spec: one token per node (or per edge)."""
    digits = spec.quantize_digits
    if spec.kind in _SCALAR_NODE_KINDS:
        values = _SCALAR_NODE_KINDS[spec.kind](g)
        return [canonical_token(x, digits) for x in values]
    if spec.kind in _SCALAR_EDGE_KINDS:
        values = _SCALAR_EDGE_KINDS[spec.kind](g)
        return [canonical_token(x, digits) for x in values]
    p = spec.param_dict()
    if spec.kind == "count":
        node_ct, edge_ct = counts.substructure_counts(
            g, p["pattern"], p["size"], p.get("size_unit", "edges")
        )
        chosen = node_ct if spec.target == "node" else edge_ct
        return [canonical_token(c, digits) for c in chosen]
    if spec.kind == "rwse":
        vecs = spectral.rwse_values(g, p["steps"])
        return [
            b",".join(canonical_token(x, digits) for x in vec) for vec in vecs
        ]
    if spec.kind == "lappe":
        vecs = spectral.lappe_values(g, p["dims"])
        return [
            b",".join(canonical_token(x, digits) for x in vec) for vec in vecs
        ]
    if spec.kind == "subconst":
        return subconstituent.subconstituent_signature(g, p["n"], digits)
    raise FeatureSpecError(f"unhandled kind {spec.kind!r}")


def apply_to_graph(g: Graph, specs: list[FeatureSpec]) -> Graph:
    """Append feature tokens to the graph's attribute tuples, in spec order."""
    node_attrs = [list(g.node_attr(v)) for v in range(g.node_count)]
    edge_attrs = [
        list(g.edge_attrs[i]) if g.edge_attrs is not None else []
        for i in range(g.edge_count)
    ]
    touched_edges = g.edge_attrs is not None
    for spec in specs:
        tokens = compute_feature(g, spec)
        if spec.target == "node":
            for v, t in enumerate(tokens):
                node_attrs[v].append(t)
        else:
            touched_edges = True
            for i, t in enumerate(tokens):
                edge_attrs[i].append(t)
    return Graph(
        g.node_count,
        g.edges,
        tuple(tuple(a) for a in node_attrs),
        tuple(tuple(a) for a in edge_attrs) if touched_edges else None,
    )


def apply_features(dataset: Dataset, specs: list[FeatureSpec]) -> Dataset:
    """Dataset copy with every graph's attributes extended by the specs."""
    if not specs:
        raise FeatureSpecError("specs must be non-empty")
    graphs = tuple(apply_to_graph(g, specs) for g in dataset.graphs)
    return Dataset(
        dataset.name, dataset.task, dataset.metric, graphs,
        dataset.targets, dataset.precision,
    )


_INT_PARAMS = {"size", "steps", "dims", "n"}


def parse_features(text: str, quantize_digits: int = 6) -> list[FeatureSpec]:
    """Parse the --features grammar into FeatureSpec objects."""
    specs: list[FeatureSpec] = []
    pending_kind: str | None = None
    pending_params: list[tuple[str, object]] = []

    def flush():
        nonlocal pending_kind, pending_params
        if pending_kind is not None:
            specs.append(FeatureSpec(
                pending_kind, tuple(pending_params), quantize_digits
            ))
        pending_kind, pending_params = None, []

    for raw in text.split(","):
        token = raw.strip()
        if not token:
            continue
        if "=" in token and ":" not in token:
            if pending_kind is None:
                raise FeatureSpecError(f"parameter {token!r} before any kind")
            key, value = token.split("=", 1)
            pending_params.append(_parse_param(key.strip(), value.strip()))
            continue
        flush()
        if ":" in token:
            kind, first = token.split(":", 1)
            pending_kind = _canon_kind(kind)
            if "=" not in first:
                raise FeatureSpecError(f"malformed parameter {first!r}")
            key, value = first.split("=", 1)
            pending_params.append(_parse_param(key.strip(), value.strip()))
        else:
            pending_kind = _canon_kind(token)
    flush()
    if not specs:
        raise FeatureSpecError("empty feature grammar")
    return specs


def _canon_kind(kind: str) -> str:
    k = kind.strip().lower()
    k = _ALIASES.get(k, k)
    if k not in KINDS:
        raise FeatureSpecError(f"unknown feature kind {kind!r}")
    return k


def _parse_param(key: str, value: str) -> tuple[str, object]:
    if key in _INT_PARAMS:
        try:
            return key, int(value)
        except ValueError:
            raise FeatureSpecError(f"parameter {key} expects an integer")
    return key, value


def canonical_grammar(specs: list[FeatureSpec]) -> str:
    return ",".join(s.canonical() for s in specs)
