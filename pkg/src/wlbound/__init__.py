"""wlbound: Weisfeiler-Lehman colorings, pre-coloring features, score upper
bounds for graph datasets, and a hard-graph-class benchmark."""

from .graphs import (
    Graph,
    Dataset,
    Task,
    Metric,
    incidence_transform,
    canonical_token,
    DEFAULT_PRECISION,
)
from .refine import refine, certificate, converged_certificate, ColoringTrace
from .kwl import kwl_refine
from .evaluate import EvalConfig, entity_hashes, upper_bound, feature_mse
from .jsonl import load_jsonl, save_jsonl
from .tu import load_tu_dataset
from .graph6 import load_graph6, encode_record, decode_record

__version__ = "0.1.0"

__all__ = [
    "Graph", "Dataset", "Task", "Metric",
    "incidence_transform", "canonical_token", "DEFAULT_PRECISION",
    "refine", "certificate", "converged_certificate", "ColoringTrace",
    "kwl_refine",
    "EvalConfig", "entity_hashes", "upper_bound", "feature_mse",
    "load_jsonl", "save_jsonl", "load_tu_dataset",
    "load_graph6", "encode_record", "decode_record",
    "__version__",
]
