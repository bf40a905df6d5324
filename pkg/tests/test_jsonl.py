import json

import pytest

from wlbound.errors import SchemaViolation
from wlbound.graphs import Dataset, Graph, Metric, Task
from wlbound.jsonl import load_jsonl, save_jsonl


def header(task="graph_classification", metric="accuracy"):
    return json.dumps({"format": "wlbound-v1", "task": task, "metric": metric,
                       "precision": 6, "name": "demo"})


def test_empty_dataset_roundtrip(tmp_path):
    p = tmp_path / "empty.jsonl"
    ds = Dataset("demo", Task.GRAPH_CLASSIFICATION, Metric.ACCURACY, (), ())
    save_jsonl(ds, p)
    assert p.read_text().count("\n") == 1
    back = load_jsonl(p)
    assert back.graph_count == 0 and back.name == "demo"


def test_roundtrip_mixed_attrs_byte_identical(tmp_path):
    g1 = Graph.build(3, [(0, 1), (1, 2)],
                     node_attrs=[["a", 0.5], ["b", 1.0], ["a", 0.25]],
                     edge_attrs=[[3], [4]])
    g2 = Graph.build(2, [(0, 1)])
    ds = Dataset("mix", Task.GRAPH_CLASSIFICATION, Metric.ACCURACY,
                 (g1, g2), ("x", "y"))
    p1, p2 = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    save_jsonl(ds, p1)
    back = load_jsonl(p1)
    assert back.graphs == ds.graphs
    assert back.targets == ds.targets
    save_jsonl(back, p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_regression_targets(tmp_path):
    g = Graph(2, ((0, 1),))
    ds = Dataset("r", Task.GRAPH_REGRESSION, Metric.MSE, (g,), (1.25,))
    p = tmp_path / "r.jsonl"
    save_jsonl(ds, p)
    back = load_jsonl(p)
    assert back.targets == (1.25,)


def test_self_loop_rejected(tmp_path):
    p = tmp_path / "x.jsonl"
    p.write_text(header() + "\n" +
                 json.dumps({"id": 0, "n": 4, "edges": [[3, 3]],
                             "targets": 1}) + "\n")
    with pytest.raises(SchemaViolation) as err:
        load_jsonl(p)
    assert err.value.line == 2


def test_schema_violations(tmp_path):
    p = tmp_path / "x.jsonl"
    p.write_text("{}\n")
    with pytest.raises(SchemaViolation):
        load_jsonl(p)
    p.write_text(header() + "\n" + json.dumps({"id": 0, "n": 1}) + "\n")
    with pytest.raises(SchemaViolation):
        load_jsonl(p)
    p.write_text(header() + "\n" +
                 json.dumps({"id": 0, "n": 1, "edges": [], "targets": 0,
                             "bogus": 1}) + "\n")
    with pytest.raises(SchemaViolation):
        load_jsonl(p)
    p.write_text(header("graph_regression", "mse") + "\n" +
                 json.dumps({"id": 0, "n": 1, "edges": [],
                             "targets": "NaN"}) + "\n")
    with pytest.raises(SchemaViolation):
        load_jsonl(p)


def test_node_task_targets(tmp_path):
    p = tmp_path / "n.jsonl"
    p.write_text(
        header("node_classification", "accuracy") + "\n" +
        json.dumps({"id": 0, "n": 2, "edges": [[0, 1]],
                    "targets": ["a", "b"]}) + "\n")
    ds = load_jsonl(p)
    assert ds.targets == (("a", "b"),)
    save_jsonl(ds, p)
    assert load_jsonl(p).targets == (("a", "b"),)


def test_feats_requantized_on_load(tmp_path):
    p = tmp_path / "f.jsonl"
    p.write_text(
        header() + "\n" +
        json.dumps({"id": 0, "n": 1, "edges": [],
                    "node_feats": [[0.123456789]], "targets": 1}) + "\n")
    ds = load_jsonl(p)
    assert ds.graphs[0].node_attr(0) == (b"0.123457",)
