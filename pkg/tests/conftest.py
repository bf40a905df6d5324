import pytest

from wlbound.graphs import Graph


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.build(10, outer + inner + spokes)


def fig1_pair() -> tuple[Graph, Graph]:
    """The classic 1-WL-equivalent non-isomorphic pair: C6 vs 2x C3 cores.

    Left: two triangles sharing the degree-3 hubs; right: a 6-cycle with
    chords. Stable 1-WL partition is {0,1,3,4 | 2,5} on both.
    """
    left = Graph.build(6, [(0, 5), (0, 4), (0, 3), (1, 5), (1, 4), (1, 3),
                           (2, 4), (2, 3)])
    right = Graph.build(6, [(0, 5), (0, 3), (0, 1), (1, 5), (1, 2), (2, 4),
                            (2, 3), (3, 4)])
    return left, right


def fig5_graph() -> Graph:
    """Ten nodes, uniform labels, edge labels that 1-WLE separates but the
    node-feature reduction of the edge labels does not.

    Vertices 0..4 are x1..x5, vertices 5..9 are x1'..x5'.
    """
    edges = [
        ((0, 5), 0),
        ((0, 1), 1), ((0, 3), 2), ((1, 2), 2), ((2, 3), 1), ((3, 4), 3),
        ((5, 6), 2), ((6, 7), 1), ((5, 8), 1), ((7, 8), 2), ((8, 9), 3),
    ]
    return Graph.build(10, [e for e, _ in edges],
                       edge_attrs=[[lab] for _, lab in edges])


@pytest.fixture(scope="session")
def small_graph_levels():
    from wlbound.bench.generate import all_graphs_by_order
    return all_graphs_by_order(7)


@pytest.fixture(scope="session")
def pet():
    return petersen()


@pytest.fixture(scope="session")
def fig1():
    return fig1_pair()


@pytest.fixture(scope="session")
def fig5():
    return fig5_graph()


def random_graph(rng, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, tuple(edges))
