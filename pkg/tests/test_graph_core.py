import random

import pytest

from iceflower.graph import (
    Graph,
    are_isomorphic,
    canonical_form,
    canonical_relabel,
    connected_components,
    degree_sequence,
    find_hamilton_cycle,
    find_proper_vertex_coloring,
    is_connected,
    is_delta_saturated,
    is_graphical,
    is_hamilton_cycle,
    is_planar,
    is_tree,
    leaves,
    realize_sequence,
)
from iceflower.families import (
    complete_bipartite_graph,
    complete_graph,
    connected_classes,
    cycle_graph,
    free_trees,
    graph_classes,
    hamilton_cycle_bruteforce,
    kuratowski_planar,
    path_graph,
    prufer_to_tree,
    star_graph,
)
from tests.conftest import random_connected_graph


def test_graph_validation():
    g = Graph(3, [(1, 2), (2, 3)])
    assert g.p == 3 and g.q == 2
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])  # loop
    with pytest.raises(ValueError):
        Graph(3, [(1, 2), (2, 1)])  # duplicate
    with pytest.raises(ValueError):
        Graph(3, [(1, 4)])  # out of range


def test_edges_sorted_and_neighbors():
    g = Graph(4, [(3, 4), (1, 2), (1, 4)])
    assert g.edges() == [(1, 2), (1, 4), (3, 4)]
    assert g.neighbors(4) == [1, 3]
    assert g.degree(1) == 2


def test_degree_sequence_and_graphical():
    assert degree_sequence(complete_graph(4)) == (3, 3, 3, 3)
    assert is_graphical([3, 3, 2, 2, 2])
    assert not is_graphical([3, 3, 3])  # odd sum
    assert not is_graphical([5, 1, 1, 1])  # fails the bound
    assert is_graphical([0])
    assert is_graphical([])


def test_graphical_matches_realization_presence():
    # every non-increasing sequence of length <= 5, entries <= 4
    def all_seqs(length, cap):
        if length == 0:
            yield ()
            return
        for first in range(cap, -1, -1):
            for rest in all_seqs(length - 1, first):
                yield (first,) + rest

    for n in range(1, 6):
        for seq in all_seqs(n, 4):
            g = realize_sequence(list(seq))
            if is_graphical(list(seq)):
                assert g is not None
                assert degree_sequence(g) == tuple(sorted(seq, reverse=True))
            else:
                assert g is None


def test_connectivity_and_trees():
    assert is_connected(path_graph(5))
    assert not is_connected(Graph(4, [(1, 2), (3, 4)]))
    assert connected_components(Graph(4, [(1, 2), (3, 4)])) == [[1, 2], [3, 4]]
    assert is_tree(path_graph(4))
    assert not is_tree(cycle_graph(4))
    assert leaves(star_graph(3)) == [2, 3, 4]


def test_hamilton_cycle_small():
    c = find_hamilton_cycle(complete_graph(4))
    assert c is not None and is_hamilton_cycle(complete_graph(4), c)
    assert c[0] == 1  # deterministic anchor
    assert find_hamilton_cycle(path_graph(4)) is None
    assert find_hamilton_cycle(complete_bipartite_graph(2, 3)) is None
    assert find_hamilton_cycle(complete_bipartite_graph(3, 3)) is not None


def test_hamilton_against_bruteforce():
    rng = random.Random(7)
    for _ in range(40):
        p = rng.randrange(4, 9)
        g = random_connected_graph(rng, p, rng.randrange(0, p))
        fast = find_hamilton_cycle(g)
        slow = hamilton_cycle_bruteforce(g)
        assert (fast is None) == (slow is None)
        if fast is not None:
            assert is_hamilton_cycle(g, fast)


def test_planarity_against_subdivision_search():
    assert not is_planar(complete_graph(5))
    assert not is_planar(complete_bipartite_graph(3, 3))
    assert is_planar(complete_graph(4))
    rng = random.Random(11)
    for _ in range(30):
        p = rng.randrange(5, 8)
        g = random_connected_graph(rng, p, rng.randrange(0, 2 * p))
        assert is_planar(g) == kuratowski_planar(g)


def test_canonical_form_is_isomorphism_invariant():
    rng = random.Random(3)
    for _ in range(50):
        p = rng.randrange(2, 9)
        g = random_connected_graph(rng, p, rng.randrange(0, p))
        perm = list(range(1, p + 1))
        rng.shuffle(perm)
        h = g.relabel({v: perm[v - 1] for v in g.vertices()}, p)
        assert canonical_form(g) == canonical_form(h)
        assert are_isomorphic(g, h)


def test_canonical_form_separates_non_isomorphic():
    assert canonical_form(path_graph(4)) != canonical_form(star_graph(3))
    assert not are_isomorphic(cycle_graph(6), complete_bipartite_graph(3, 3))
    g = canonical_relabel(cycle_graph(5))
    assert are_isomorphic(g, cycle_graph(5))


def test_catalog_counts():
    # graphs on p nodes up to isomorphism: 1, 2, 4, 11, 34
    assert [len(graph_classes(p)) for p in range(1, 6)] == [1, 2, 4, 11, 34]
    # connected graphs: 1, 1, 2, 6, 21, 112
    assert [len(connected_classes(p)) for p in range(1, 7)] == [1, 1, 2, 6, 21, 112]


def test_free_tree_counts():
    # free trees on p nodes: 1, 1, 1, 2, 3, 6, 11, 23
    assert [len(free_trees(p)) for p in range(1, 9)] == [1, 1, 1, 2, 3, 6, 11, 23]
    for t in free_trees(7):
        assert is_tree(t)


def test_prufer_bijection():
    seen = set()
    m = 5
    seqs = [(a, b, c) for a in range(1, 6) for b in range(1, 6) for c in range(1, 6)]
    for seq in seqs:
        t = prufer_to_tree(seq, m)
        assert is_tree(t)
        seen.add(tuple(t.edges()))
    assert len(seen) == m ** (m - 2)


def test_delta_saturated():
    assert is_delta_saturated(star_graph(4))
    assert is_delta_saturated(path_graph(4))  # degrees 1 and 2 only
    assert not is_delta_saturated(Graph(4, [(1, 2), (2, 3), (2, 4), (3, 4)]))


def test_proper_vertex_coloring():
    f = find_proper_vertex_coloring(cycle_graph(5), 3)
    assert f is not None
    for u, v in cycle_graph(5).edges():
        assert f[u] != f[v]
    assert find_proper_vertex_coloring(complete_graph(4), 3) is None
