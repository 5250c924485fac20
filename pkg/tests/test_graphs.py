"""Core container, bitset helpers, metrics, and the text format."""

import random

import pytest

from domlab.graphs import (
    DomainError,
    FormatError,
    Graph,
    VertexSet,
    ball_bits,
    bit_indices,
    bits_of,
    closed_cover_bits,
    connected_components,
    diameter,
    distance_matrix,
    distance_power_conflict_graph,
    has_isolated_vertex,
    induced_subgraph,
    is_connected,
    open_cover_bits,
    read_graph_text,
    write_graph_text,
)
from domlab.families import cycle, path, random_graph, star


def test_bitset_round_trip():
    rng = random.Random(11)
    for _ in range(100):
        idx = sorted(rng.sample(range(60), rng.randrange(0, 20)))
        assert bit_indices(bits_of(idx)) == idx


def test_graph_basics():
    g = Graph(4, [(0, 1), (2, 1), (2, 3)], "demo")
    assert g.n == 4 and g.m == 3 and g.label == "demo"
    assert g.has_edge(1, 2) and g.has_edge(1, 0) and not g.has_edge(0, 3)
    assert g.degree(1) == 2
    assert g.closed(1) == bits_of([0, 1, 2])
    assert g.full_bits() == 0b1111
    assert sorted(g.edges()) == [(0, 1), (1, 2), (2, 3)]


def test_graph_from_rows_matches_edge_form():
    g = Graph(3, [(0, 1), (1, 2)])
    h = Graph.from_rows([0b010, 0b101, 0b010])
    assert g.adj == h.adj


def test_graph_rejects_bad_input():
    with pytest.raises(DomainError):
        Graph(2, [(0, 0)])  # self loop
    with pytest.raises(IndexError):
        Graph(2, [(0, 5)])
    # from_rows trusts its caller; check_valid is the explicit validator
    with pytest.raises(AssertionError):
        Graph.from_rows([0b010, 0b000]).check_valid()
    Graph(3, [(0, 1), (1, 2)]).check_valid()


def test_vertex_set_operations():
    g = path(6)
    a = VertexSet.of(g, [0, 2, 4])
    b = VertexSet.of(g, [2, 3])
    assert a.members() == [0, 2, 4] and list(a) == [0, 2, 4]
    assert len(a) == 3 and 2 in a and 1 not in a
    assert a.union(b).members() == [0, 2, 3, 4]
    assert a.intersection(b).members() == [2]
    assert a.difference(b).members() == [0, 4]
    assert a.add(5).members() == [0, 2, 4, 5]
    assert a.discard(2).members() == [0, 4]
    assert a == VertexSet.of(g, [4, 2, 0]) and hash(a) == hash(VertexSet.of(g, [0, 2, 4]))


def test_vertex_set_home_mismatch():
    a = VertexSet.of(path(4), [0])
    b = VertexSet.of(path(5), [0])
    with pytest.raises(DomainError):
        a.union(b)


def test_cover_bits():
    g = star(4)  # center 0, leaves 1..4
    assert closed_cover_bits(g, 1 << 0) == g.full_bits()
    assert open_cover_bits(g, 1 << 0) == bits_of([1, 2, 3, 4])
    assert open_cover_bits(g, 1 << 2) == 1 << 0
    assert closed_cover_bits(g, bits_of([1, 2])) == bits_of([0, 1, 2])


def _brute_dist(g):
    # Floyd-Warshall on the adjacency, independent of the BFS code
    inf = float("inf")
    d = [[0 if i == j else (1 if g.has_edge(i, j) else inf) for j in range(g.n)] for i in range(g.n)]
    for k in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def test_distance_matrix_against_floyd_warshall():
    rng = random.Random(23)
    for trial in range(30):
        g = random_graph(rng.randrange(2, 10), rng.choice([0.2, 0.4, 0.7]), seed=500 + trial)
        want = _brute_dist(g)
        got = distance_matrix(g)
        for i in range(g.n):
            for j in range(g.n):
                assert got[i][j] == want[i][j]


def test_diameter():
    assert diameter(path(7)) == 6
    assert diameter(cycle(8)) == 4
    assert diameter(Graph(3, [(0, 1)])) == float("inf")


def test_ball_bits():
    g = path(7)
    assert ball_bits(g, 0, 2) == bits_of([0, 1, 2])
    assert ball_bits(g, 3, 1) == bits_of([2, 3, 4])
    assert ball_bits(g, 3, 10) == g.full_bits()


def test_distance_power_conflict_graph():
    g = path(6)
    c = distance_power_conflict_graph(g, 3)
    d = distance_matrix(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            assert c.has_edge(u, v) == (d[u][v] <= 3)
    with pytest.raises(DomainError):
        distance_power_conflict_graph(g, 0)


def test_components_and_connectivity():
    g = Graph(6, [(0, 1), (1, 2), (4, 5)])
    comps = connected_components(g)
    assert sorted(comps) == sorted([bits_of([0, 1, 2]), bits_of([3]), bits_of([4, 5])])
    assert not is_connected(g)
    assert is_connected(cycle(5))
    assert has_isolated_vertex(g)
    assert not has_isolated_vertex(path(2))


def test_induced_subgraph():
    g = cycle(6)
    sub, relab = induced_subgraph(g, VertexSet.of(g, [0, 1, 2, 4]))
    assert sub.n == 4
    assert relab == {0: 0, 1: 1, 2: 2, 4: 3}
    assert sorted(sub.edges()) == [(0, 1), (1, 2)]


def test_text_format_round_trip():
    rng = random.Random(31)
    for trial in range(40):
        g = random_graph(rng.randrange(1, 12), rng.random(), seed=900 + trial)
        text = write_graph_text(g)
        h = read_graph_text(text)
        assert h.n == g.n and h.adj == g.adj
        assert write_graph_text(h) == text


def test_text_format_comments_allowed_blank_lines_rejected():
    g = read_graph_text("# hello\n3 2\n# mid\n0 1\n1 2\n")
    assert g.n == 3 and sorted(g.edges()) == [(0, 1), (1, 2)]
    assert write_graph_text(g, comment="hi").startswith("# hi\n")
    with pytest.raises(FormatError):
        read_graph_text("3 2\n\n0 1\n1 2\n")


@pytest.mark.parametrize(
    "text",
    [
        "",  # no header
        "2\n",  # header needs two counts
        "2 1\n",  # missing edge line
        "2 1\n0 1\n0 1\n",  # extra edge line
        "3 2\n1 0\n1 2\n",  # u >= v
        "3 2\n1 2\n0 1\n",  # not sorted
        "3 2\n0 1\n0 1\n",  # duplicate
        "2 1\n0 2\n",  # out of range
        "2 1\n0 x\n",  # non-integer
        "-1 0\n",  # negative order
    ],
)
def test_text_format_rejections(text):
    with pytest.raises(FormatError):
        read_graph_text(text)
