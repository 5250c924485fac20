"""Family constructors, labelings, and the family-string grammar."""

import random

import pytest

from domlab.graphs import DomainError, ResourceError, distance_matrix, is_connected
from domlab.families import (
    FamilySpec,
    build_family,
    canonical_spec,
    cayleypop,
    complete,
    cycle,
    lollipop,
    parse_family_spec,
    path,
    pendant_pairs,
    prufer_decode,
    random_graph,
    random_tree,
    rook2xn,
    star,
    subdivided_star,
)


def test_basic_family_shapes():
    assert complete(5).m == 10 and complete(1).n == 1
    assert path(6).m == 5 and path(1).m == 0
    assert cycle(5).m == 5
    g = star(4)
    assert g.n == 5 and g.degree(0) == 4 and g.degree(3) == 1
    s = subdivided_star(3)
    assert s.n == 7 and s.degree(0) == 3
    assert s.degree(1) == 2 and s.degree(4) == 1  # midpoint, leaf
    assert s.has_edge(1, 4) and not s.has_edge(0, 4)


def test_family_labels():
    assert complete(4).label == "complete:4"
    assert rook2xn(5).label == "rook2xn:5"
    assert random_graph(6, 0.5, seed=3).label == "random_graph:6:0.5#3"
    assert random_tree(6, seed=3).label == "random_tree:6#3"


def test_lollipop_labels_and_shape():
    base = complete(5)
    g = lollipop(base, 3, anchor=2)
    assert g.n == 8
    assert g.has_edge(2, 5) and g.has_edge(5, 6) and g.has_edge(6, 7)
    assert not g.has_edge(2, 6)
    assert g.label == "lollipop(complete:5):3@2"
    assert lollipop(base, 0, 0) is base


def test_lollipop_extends_diameter_by_tail_length():
    d = distance_matrix(lollipop(complete(5), 2, 0))
    assert max(max(r) for r in d) == 1 + 2


def test_lollipop_guards():
    with pytest.raises(DomainError):
        lollipop(path(3), -1, 0)
    with pytest.raises(IndexError):
        lollipop(path(3), 1, 9)


def test_pendant_pairs_shape_and_tip_distances():
    rng = random.Random(61)
    for base in (cycle(5), complete(4), random_tree(7, seed=62)):
        g = pendant_pairs(base)
        n = base.n
        assert g.n == 3 * n
        d = distance_matrix(g)
        for v in range(n):
            mid, tip = n + 2 * v, n + 2 * v + 1
            assert g.has_edge(v, mid) and g.has_edge(mid, tip)
            assert g.degree(tip) == 1
        # tips sit 4 apart plus the base distance, so they form a 3-packing
        for u in range(n):
            for v in range(u + 1, n):
                base_d = distance_matrix(base)[u][v]
                assert d[n + 2 * u + 1][n + 2 * v + 1] == base_d + 4


def test_rook2xn_structure():
    n = 5
    g = rook2xn(n)
    assert g.n == 2 * n
    for v in range(2 * n):
        assert g.degree(v) == n
    assert g.has_edge(0, n)  # matching edge between the two cliques
    assert g.has_edge(0, 1) and not g.has_edge(0, n + 1)


def test_cayleypop_small_case_is_hexagon_with_tail():
    g = cayleypop([2, 3], 2)
    assert g.n == 8
    assert g.label == "cayleypop[2,3]:2"
    # the tailless part is K_2 x K_3: a 6-cycle, adjacency iff both coords differ
    for a in range(2):
        for b in range(3):
            for c in range(2):
                for d_ in range(3):
                    i, j = a * 3 + b, c * 3 + d_
                    if i != j:
                        assert g.has_edge(i, j) == (a != c and b != d_)
    assert g.has_edge(0, 6) and g.has_edge(6, 7)
    with pytest.raises(DomainError):
        cayleypop([3, 3], 1)


def test_prufer_decode_degree_invariant():
    rng = random.Random(67)
    for _ in range(50):
        n = rng.randrange(2, 12)
        seq = [rng.randrange(n) for _ in range(n - 2)]
        edges = prufer_decode(seq, n)
        assert len(edges) == n - 1
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        for v in range(n):
            assert deg[v] == seq.count(v) + 1


def test_random_tree_is_tree_and_deterministic():
    for seed in (1, 7, 42):
        t = random_tree(9, seed=seed)
        assert t.n == 9 and t.m == 8 and is_connected(t)
        assert t.adj == random_tree(9, seed=seed).adj
    assert random_tree(9, seed=1).adj != random_tree(9, seed=2).adj


def test_random_graph_extremes_and_determinism():
    assert random_graph(7, 0.0, seed=5).m == 0
    assert random_graph(7, 1.0, seed=5).m == 21
    g = random_graph(10, 0.4, seed=9)
    assert g.adj == random_graph(10, 0.4, seed=9).adj


def test_family_order_guards():
    with pytest.raises(ResourceError):
        complete(25000)
    with pytest.raises(ResourceError):
        pendant_pairs(path(7000))
    with pytest.raises(ResourceError):
        lollipop(path(3), 30000, 0)


def test_parse_and_canonical_round_trip():
    for text in (
        "complete:4",
        "path:17",
        "rook2xn:5",
        "subdivided_star:3",
        "complete_product[4,4,4]",
        "cayleypop[2,3]:2",
        "random_tree:9#42",
        "random_graph:10:30#7",
        "lollipop(complete:6):2@0",
        "pendant_pairs(complete:1)",
        "lollipop(pendant_pairs(complete:3)):2@1",
    ):
        spec = parse_family_spec(text)
        assert canonical_spec(spec) == text
        build_family(spec).check_valid()


def test_build_family_matches_direct_constructors():
    assert build_family(parse_family_spec("rook2xn:5")).adj == rook2xn(5).adj
    assert build_family(parse_family_spec("random_tree:9#42")).adj == random_tree(9, 42).adj
    got = build_family(parse_family_spec("lollipop(complete:6):2@0"))
    assert got.adj == lollipop(complete(6), 2, 0).adj


@pytest.mark.parametrize(
    "text",
    [
        "nosuch:3",
        "complete",  # missing arity
        "complete:3:4",  # extra param
        "complete:3#7",  # seed on a non-seeded family
        "random_tree:9",  # missing seed
        "complete:4 junk",
        "complete_product[4,4",  # unclosed bracket
        "complete_product[a,b]",
        "lollipop(complete:4)",  # missing :ell@anchor
        "lollipop(complete:4:2@0",  # unclosed paren
        "random_graph:10:200#7",  # percent out of range
    ],
)
def test_parse_rejections(text):
    with pytest.raises(DomainError):
        build_family(parse_family_spec(text))


def test_family_spec_is_hashable_value_object():
    a = parse_family_spec("complete:4")
    b = FamilySpec("complete", (4,))
    assert a == b and hash(a) == hash(b)
