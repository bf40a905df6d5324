"""Failure counting: indistinguishable non-isomorphic pairs per test config.

A cell's failure count is the number of unordered graph pairs whose
converged certificates collide under the configuration. Counting groups
certificates (O(N log N)) instead of iterating pairs: the order-8
all-nonisomorphic cell alone has ~7.6e7 pairs.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from ..features import FeatureSpec, apply_to_graph, canonical_grammar
from ..graphs import Graph
from ..kwl import kwl_refine
from ..refine import certificate, refine


@dataclass(frozen=True)
class TestConfig:
    """One refinement test: 1-WL, 1-WLE, or (folklore) k-WL, plus features."""

    __test__ = False  # not a pytest collection target

    variant: str  # "1wl" | "1wle" | "kwl" | "fkwl"
    k: int = 1
    features: tuple[FeatureSpec, ...] = ()

    @property
    def name(self) -> str:
        base = {"1wl": "1wl", "1wle": "1wle"}.get(self.variant)
        if base is None:
            base = f"{self.k}wl" if self.variant == "kwl" else f"f{self.k}wl"
        if self.features:
            base += "+" + canonical_grammar(list(self.features))
        return base


def config_certificate(g: Graph, config: TestConfig) -> bytes:
    prepared = apply_to_graph(g, list(config.features)) if config.features else g
    if config.variant == "1wl":
        return certificate(refine(prepared))
    if config.variant == "1wle":
        return certificate(refine(prepared, use_edge_attrs=True))
    if config.variant == "kwl":
        return certificate(kwl_refine(prepared, config.k))
    if config.variant == "fkwl":
        return certificate(kwl_refine(prepared, config.k, folklore=True))
    raise ValueError(f"unknown variant {config.variant!r}")


def _cert_task(args):
    g, config = args
    return config_certificate(g, config)


def cell_certificates(graphs: list[Graph], config: TestConfig,
                      workers: int = 1) -> list[bytes]:
    if workers <= 1 or len(graphs) < 4:
        return [config_certificate(g, config) for g in graphs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_cert_task, ((g, config) for g in graphs),
                             chunksize=max(1, len(graphs) // (workers * 8))))


def count_failures(certs: list[bytes]) -> int:
    groups: dict[bytes, int] = {}
    for c in certs:
        groups[c] = groups.get(c, 0) + 1
    return sum(c * (c - 1) // 2 for c in groups.values())


def failure_table(corpus: dict[tuple[str, int], list[Graph]],
                  configs: list[TestConfig], workers: int = 1,
                  ) -> dict[tuple[str, int, str], int]:
    """Failure count per (class, order, config name) cell."""
    out: dict[tuple[str, int, str], int] = {}
    for (class_name, order), graphs in sorted(corpus.items()):
        for config in configs:
            certs = cell_certificates(graphs, config, workers)
            out[(class_name, order, config.name)] = count_failures(certs)
    return out


def failure_table_csv(table: dict[tuple[str, int, str], int],
                      metadata: dict | None = None) -> str:
    lines = []
    for key in sorted(metadata or {}):
        lines.append(f"# {key}: {metadata[key]}")
    lines.append("class,order,config,failures")
    for (class_name, order, config_name), failures in sorted(table.items()):
        lines.append(f"{class_name},{order},{config_name},{failures}")
    return "\n".join(lines) + "\n"
