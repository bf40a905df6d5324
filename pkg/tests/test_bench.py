import random

import pytest

from wlbound.errors import MissingFile, OrderOutOfRange, SchemaViolation
from wlbound.bench.classes import (check_class, chromatic_number,
                                   intersection_array, is_chordal,
                                   is_edge_4_critical, is_eulerian,
                                   is_perfect, is_planar,
                                   is_self_complementary,
                                   strongly_regular_parameters)
from wlbound.bench.corpus import (load_corpus, manifest_digest,
                                  save_corpus_cell)
from wlbound.bench.failures import TestConfig, count_failures, failure_table
from wlbound.bench.generate import (all_graphs_by_order, dedupe,
                                    eulerian_graphs, generate_all_graphs,
                                    is_connected)
from wlbound.bench.hi import highly_irregular_graphs, is_highly_irregular
from wlbound.bench.iso import canonical_form, is_isomorphic
from wlbound.graphs import Graph

from conftest import fig1_pair, petersen, random_graph


def test_generate_counts_small(small_graph_levels):
    counts = {n: len(small_graph_levels[n]) for n in small_graph_levels}
    assert counts[4] == 11
    assert counts[5] == 34
    assert counts[6] == 156
    assert counts[7] == 1044


def test_generate_guards():
    with pytest.raises(OrderOutOfRange):
        generate_all_graphs(2)
    with pytest.raises(OrderOutOfRange):
        generate_all_graphs(9)


def test_generated_pairwise_non_isomorphic(small_graph_levels):
    graphs = small_graph_levels[5]
    for i in range(len(graphs)):
        for j in range(i + 1, len(graphs)):
            assert not is_isomorphic(graphs[i], graphs[j])


def test_generation_complete_at_5(small_graph_levels):
    """Brute-force all 2^10 edge subsets on 5 vertices, dedupe, compare."""
    all_edges = [(u, v) for u in range(5) for v in range(u + 1, 5)]
    seen = set()
    for mask in range(1 << 10):
        edges = tuple(e for i, e in enumerate(all_edges) if (mask >> i) & 1)
        seen.add(canonical_form(Graph(5, edges)))
    assert len(seen) == len(small_graph_levels[5]) == 34


def test_eulerian_small_counts():
    assert len(eulerian_graphs(3)) == 2
    assert len(eulerian_graphs(5)) == 7
    assert all(is_eulerian(g) for g in eulerian_graphs(6))


def test_is_isomorphic_basics():
    rng = random.Random(2)
    for _ in range(20):
        g = random_graph(rng, rng.randrange(1, 9))
        perm = list(range(g.node_count))
        rng.shuffle(perm)
        assert is_isomorphic(g, g.permuted(perm))
    left, right = fig1_pair()
    assert not is_isomorphic(left, right)


def test_is_isomorphic_respects_attributes():
    g1 = Graph.build(2, [(0, 1)], node_attrs=[["a"], ["b"]])
    g2 = Graph.build(2, [(0, 1)], node_attrs=[["b"], ["a"]])
    g3 = Graph.build(2, [(0, 1)], node_attrs=[["a"], ["a"]])
    assert is_isomorphic(g1, g2)
    assert not is_isomorphic(g1, g3)
    e1 = Graph.build(3, [(0, 1), (1, 2)], edge_attrs=[["x"], ["y"]])
    e2 = Graph.build(3, [(0, 1), (1, 2)], edge_attrs=[["y"], ["x"]])
    e3 = Graph.build(3, [(0, 1), (1, 2)], edge_attrs=[["x"], ["x"]])
    assert is_isomorphic(e1, e2)
    assert not is_isomorphic(e1, e3)


def test_class_checkers_named():
    c5 = Graph.build(5, [(i, (i + 1) % 5) for i in range(5)])
    assert is_eulerian(c5)
    assert is_self_complementary(c5)
    assert not is_chordal(c5)
    assert not is_perfect(c5)
    assert is_planar(c5)
    pet = petersen()
    assert strongly_regular_parameters(pet) == (10, 3, 0, 1)
    ia = intersection_array(pet)
    assert ia.b == (3, 2) and ia.c == (1, 1)
    assert ia.a(1) == 0
    assert not is_planar(pet)
    k4 = Graph.build(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert chromatic_number(k4) == 4 and is_edge_4_critical(k4)
    w5 = Graph.build(6, [(i, (i + 1) % 5) for i in range(5)]
                     + [(i, 5) for i in range(5)])
    assert is_edge_4_critical(w5)
    assert not is_edge_4_critical(k4.complement())


def test_checker_counts_order6(small_graph_levels):
    graphs = small_graph_levels[6]
    assert sum(1 for g in graphs if is_connected(g) and is_planar(g)) == 99
    assert sum(1 for g in graphs if is_perfect(g)) == 148
    assert sum(1 for g in graphs if is_chordal(g)) == 94
    assert sum(1 for g in graphs if is_eulerian(g)) == 16


def test_hi_generator_matches_bruteforce(small_graph_levels):
    for n in (4, 5, 6, 7):
        brute = [g for g in small_graph_levels[n]
                 if is_highly_irregular(g) and is_connected(g)]
        assert len(highly_irregular_graphs(n)) == len(brute)
    assert len(highly_irregular_graphs(8)) == 3
    assert all(is_highly_irregular(g) for g in highly_irregular_graphs(9))


def test_corpus_roundtrip(tmp_path):
    graphs = generate_all_graphs(4)
    save_corpus_cell(tmp_path, "all_nonisomorphic", 4, graphs)
    corpus = load_corpus(tmp_path)
    assert len(corpus[("all_nonisomorphic", 4)]) == 11
    digest1 = manifest_digest(tmp_path)
    assert len(digest1) == 64

    # count mismatch fails loudly
    bad = tmp_path / "all_nonisomorphic" / "4.g6"
    lines = bad.read_bytes().splitlines()
    bad.write_bytes(b"\n".join(lines[:-1]) + b"\n")
    with pytest.raises(SchemaViolation):
        load_corpus(tmp_path)

    with pytest.raises(MissingFile):
        load_corpus(tmp_path / "nowhere")


def test_failure_counting():
    left, right = fig1_pair()
    certs = [b"x", b"x", b"y"]
    assert count_failures(certs) == 1
    table = failure_table(
        {("demo", 6): [left, right]},
        [TestConfig("1wl"), TestConfig("kwl", k=3)],
    )
    assert table[("demo", 6, "1wl")] == 1
    assert table[("demo", 6, "3wl")] == 0


def test_failure_workers_deterministic():
    graphs = generate_all_graphs(5)
    t1 = failure_table({("all", 5): graphs}, [TestConfig("1wl")], workers=1)
    t2 = failure_table({("all", 5): graphs}, [TestConfig("1wl")], workers=2)
    assert t1 == t2


def test_dedupe_orders_deterministically():
    rng = random.Random(8)
    graphs = [random_graph(rng, 5, 0.5) for _ in range(30)]
    a = dedupe(list(graphs))
    b = dedupe(list(reversed(graphs)))
    assert [canonical_form(g) for g in a] == [canonical_form(g) for g in b]
