"""Command-line front end: evaluate, bench, transform, gen.

Exit codes: 0 success, 2 load/schema errors, 3 budget errors. Every report
embeds the canonical run configuration, the package version and (for bench)
the corpus manifest digest, so two runs with equal headers are
byte-identical.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .errors import (BudgetExceeded, OrderOutOfRange, TupleBudgetExceeded,
                     WlboundError)
from .evaluate import (STANDARD_CONFIGS, EvalConfig, EvaluationReport,
                       Metric, feature_mse, upper_bound)
from .features import FeatureSpecError, canonical_grammar, parse_features
from .graphs import Dataset
from .jsonl import load_jsonl, save_jsonl
from .tu import load_tu_dataset

EXIT_OK = 0
EXIT_LOAD = 2
EXIT_BUDGET = 3

_BUDGET_ERRORS = (BudgetExceeded, TupleBudgetExceeded, OrderOutOfRange)


def _load_dataset(path: str) -> Dataset:
    p = Path(path)
    if p.is_dir():
        return load_tu_dataset(p)
    return load_jsonl(p)


def _parse_layers(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    return 0, int(text)


def _canonical_run_string(args: argparse.Namespace, keys: list[str]) -> str:
    parts = [args.command]
    for key in keys:
        parts.append(f"{key}={getattr(args, key)}")
    return " ".join(parts)


def cmd_evaluate(args) -> int:
    dataset = _load_dataset(args.dataset)
    if dataset.graph_count == 0:
        print("error: empty dataset", file=sys.stderr)
        return EXIT_LOAD
    lo, hi = _parse_layers(args.layers)
    config_names = (
        list(STANDARD_CONFIGS) if args.configs == "all"
        else [c.strip() for c in args.configs.split(",") if c.strip()]
    )
    features = tuple(parse_features(args.features)) if args.features else ()
    configs = []
    for name in config_names:
        base = STANDARD_CONFIGS[name]
        configs.append(EvalConfig(base.use_node_attrs, base.use_edge_attrs,
                                  features))
    metric = None if args.metric == "auto" else Metric(args.metric)

    if args.mode == "node-to-graph":
        rows = feature_mse(dataset, [list(features)] if features else [[]],
                           hi)
        out = json.dumps(rows, indent=2) + "\n"
        _write_report_text(args.out, out)
        return EXIT_OK

    report = upper_bound(dataset, hi, configs, metric)
    report.rows = [r for r in report.rows if r["layer"] >= lo]
    report.metadata["run"] = _canonical_run_string(
        args, ["dataset", "layers", "configs", "features", "metric"])
    report.metadata["version"] = f"wlbound {__version__}"
    _write_report(args.out, report)
    return EXIT_OK


def _write_report_text(out: str | None, text: str) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _write_report(out: str | None, report: EvaluationReport) -> None:
    if out and out.endswith(".json"):
        _write_report_text(out, report.to_json())
    else:
        _write_report_text(out, report.to_csv())


def cmd_bench(args) -> int:
    from .bench.corpus import load_corpus, manifest_digest
    from .bench.failures import TestConfig, failure_table, failure_table_csv

    classes = None if args.classes == "all" else [
        c.strip() for c in args.classes.split(",") if c.strip()
    ]
    orders = None
    if args.orders:
        orders = [int(x) for x in args.orders.split(",") if x.strip()]
    corpus = load_corpus(args.corpus, classes, orders)
    if not corpus:
        print("error: no corpus cells selected", file=sys.stderr)
        return EXIT_LOAD

    features = tuple(parse_features(args.features)) if args.features else ()
    configs = []
    for token in args.tests.split(","):
        token = token.strip().lower()
        if token in ("1wl", "wl"):
            configs.append(TestConfig("1wl", features=features))
        elif token == "1wle":
            configs.append(TestConfig("1wle", features=features))
        elif token.endswith("wl") and token[:-2].isdigit():
            configs.append(TestConfig("kwl", k=int(token[:-2]),
                                      features=features))
        elif token.startswith("f") and token.endswith("wl") \
                and token[1:-2].isdigit():
            configs.append(TestConfig("fkwl", k=int(token[1:-2]),
                                      features=features))
        else:
            print(f"error: unknown test {token!r}", file=sys.stderr)
            return EXIT_LOAD

    table = failure_table(corpus, configs, workers=args.workers)
    meta = {
        "run": _canonical_run_string(
            args, ["corpus", "classes", "orders", "tests", "features"]),
        "version": f"wlbound {__version__}",
        "manifest_digest": manifest_digest(args.corpus),
    }
    _write_report_text(args.out, failure_table_csv(table, meta))
    return EXIT_OK


def cmd_transform(args) -> int:
    dataset = _load_dataset(args.dataset)
    specs = parse_features(args.features)
    from .features import apply_features
    grammar = canonical_grammar(specs)
    if dataset.name.endswith(f"+{grammar}"):
        print(f"warning: dataset already transformed with {grammar!r}",
              file=sys.stderr)
    transformed = apply_features(dataset, specs)
    transformed = Dataset(
        f"{dataset.name}+{grammar}", transformed.task, transformed.metric,
        transformed.graphs, transformed.targets, transformed.precision,
    )
    save_jsonl(transformed, args.out)
    return EXIT_OK


def cmd_gen(args) -> int:
    from .bench.corpus import save_corpus_cell
    from .bench.generate import (EULERIAN_MAX_ORDER, GENERATION_MAX_ORDER,
                                 GENERATION_MIN_ORDER, all_graphs_by_order,
                                 eulerian_graphs, is_connected)
    from .bench.hi import HI_MAX_ORDER, highly_irregular_graphs
    from .bench.classes import CLASS_CHECKERS, check_class

    name = args.klass
    max_order = args.max_order
    if max_order < GENERATION_MIN_ORDER:
        print(f"error: max order {max_order} below minimum "
              f"{GENERATION_MIN_ORDER}", file=sys.stderr)
        return EXIT_BUDGET

    if name in ("all", "all_nonisomorphic"):
        if max_order > GENERATION_MAX_ORDER:
            print("error: all-nonisomorphic generation capped at "
                  f"{GENERATION_MAX_ORDER}", file=sys.stderr)
            return EXIT_BUDGET
        levels = all_graphs_by_order(max_order)
        for n in range(GENERATION_MIN_ORDER, max_order + 1):
            save_corpus_cell(args.out, "all_nonisomorphic", n, levels[n])
    elif name == "eulerian":
        if max_order > EULERIAN_MAX_ORDER:
            print(f"error: eulerian generation capped at "
                  f"{EULERIAN_MAX_ORDER}", file=sys.stderr)
            return EXIT_BUDGET
        for n in range(GENERATION_MIN_ORDER, max_order + 1):
            save_corpus_cell(args.out, "eulerian", n, eulerian_graphs(n))
    elif name == "highly_irregular":
        if max_order > HI_MAX_ORDER:
            print(f"error: highly-irregular generation capped at "
                  f"{HI_MAX_ORDER}", file=sys.stderr)
            return EXIT_BUDGET
        for n in range(GENERATION_MIN_ORDER, max_order + 1):
            graphs = highly_irregular_graphs(n)
            if graphs:
                save_corpus_cell(args.out, "highly_irregular", n, graphs)
    elif name in CLASS_CHECKERS:
        if max_order > GENERATION_MAX_ORDER:
            print(f"error: filtered generation for {name} capped at "
                  f"{GENERATION_MAX_ORDER}", file=sys.stderr)
            return EXIT_BUDGET
        levels = all_graphs_by_order(max_order)
        for n in range(GENERATION_MIN_ORDER, max_order + 1):
            graphs = [g for g in levels[n] if check_class(g, name)]
            if graphs:
                save_corpus_cell(args.out, name, n, graphs)
    else:
        print(f"error: unknown class {name!r}", file=sys.stderr)
        return EXIT_LOAD
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wlbound",
        description="Weisfeiler-Lehman refinement bounds and benchmarks",
    )
    parser.add_argument("--version", action="version",
                        version=f"wlbound {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evaluate", help="score upper bounds for a dataset")
    p.add_argument("--dataset", required=True,
                   help="TU directory or wlbound-v1 JSONL file")
    p.add_argument("--layers", default="0..3", help="layer range, e.g. 0..3")
    p.add_argument("--configs", default="all",
                   help="comma list of none,node,edge,both or 'all'")
    p.add_argument("--features", default="", help="feature grammar")
    p.add_argument("--metric", default="auto",
                   choices=["auto", "accuracy", "macro_f1", "mse"])
    p.add_argument("--mode", default="upper-bound",
                   choices=["upper-bound", "node-to-graph"])
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default=None, help="report path (.csv or .json)")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("bench", help="failure counts over a graph corpus")
    p.add_argument("--corpus", required=True, help="corpus root directory")
    p.add_argument("--classes", default="all")
    p.add_argument("--orders", default="")
    p.add_argument("--tests", default="1wl",
                   help="comma list: 1wl,1wle,3wl,4wl,f2wl,...")
    p.add_argument("--features", default="")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("transform", help="append feature tokens, write JSONL")
    p.add_argument("--dataset", required=True)
    p.add_argument("--features", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("gen", help="generate graph-class corpora")
    p.add_argument("--class", dest="klass", required=True)
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--out", default="corpus")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _BUDGET_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (WlboundError, FeatureSpecError, OSError, KeyError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LOAD


if __name__ == "__main__":
    sys.exit(main())
