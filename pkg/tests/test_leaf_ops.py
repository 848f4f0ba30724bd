import random

import pytest

from iceflower.graph import Graph, are_isomorphic, connected_components, is_connected
from iceflower.families import cycle_graph, path_graph, star_graph
from iceflower.coloring import TotalColoring, is_proper_total
from iceflower.leafops import (
    LeafEdge,
    colored_compatible,
    colored_leaf_coincide,
    colored_leaf_split,
    disjoint_union,
    leaf_coincide,
    leaf_coincide_across,
    leaf_edges,
    leaf_split,
)
from tests.conftest import greedy_proper_total, random_connected_graph


def test_leaf_edges_listing():
    g = Graph(4, [(1, 2), (2, 3), (2, 4)])
    assert leaf_edges(g) == [LeafEdge(2, 1), LeafEdge(2, 3), LeafEdge(2, 4)]
    assert leaf_edges(cycle_graph(4)) == []


def test_split_counts_and_leaves():
    g = cycle_graph(4)
    res = leaf_split(g, 1, 2)
    assert res.graph.p == g.p + 2
    assert res.graph.q == g.q + 1
    assert res.graph.degree(res.leaf_at_u) == 1
    assert res.graph.degree(res.leaf_at_v) == 1
    assert res.graph.has_edge(1, res.leaf_at_u)
    assert res.graph.has_edge(2, res.leaf_at_v)
    assert not res.graph.has_edge(1, 2)


def test_split_rejects_leaf_endpoints_and_missing_edges():
    g = path_graph(3)
    with pytest.raises(ValueError):
        leaf_split(g, 1, 2)  # endpoint 1 is a leaf
    with pytest.raises(ValueError):
        leaf_split(cycle_graph(4), 1, 3)  # no such edge


def test_split_on_bridge_disconnects():
    # splitting an internal bridge leaves two components; the op itself
    # promises only the p/q bookkeeping, not connectivity
    g = path_graph(4)
    res = leaf_split(g, 2, 3)
    assert len(connected_components(res.graph)) == 2


def test_coincide_undoes_split():
    rng = random.Random(5)
    done = 0
    while done < 500:
        p = rng.randrange(4, 10)
        g = random_connected_graph(rng, p, rng.randrange(0, p))
        internal = [
            (u, v)
            for u, v in g.edges()
            if g.degree(u) >= 2 and g.degree(v) >= 2
        ]
        if not internal:
            continue
        u, v = internal[rng.randrange(len(internal))]
        split = leaf_split(g, u, v)
        back = leaf_coincide(
            split.graph,
            LeafEdge(u, split.leaf_at_u),
            LeafEdge(v, split.leaf_at_v),
        )
        assert back.graph.p == g.p and back.graph.q == g.q
        assert are_isomorphic(back.graph, g)
        done += 1


def test_coincide_guards():
    g = path_graph(4)  # leaves 1 and 4
    with pytest.raises(ValueError):
        leaf_coincide(g, LeafEdge(2, 1), LeafEdge(2, 1))  # same edge
    star = star_graph(3)
    with pytest.raises(ValueError):
        leaf_coincide(star, LeafEdge(1, 2), LeafEdge(1, 3))  # shared support
    # adjacent supports would merge into a multi-edge
    h = Graph(4, [(1, 2), (1, 3), (2, 4)])
    with pytest.raises(ValueError):
        leaf_coincide(h, LeafEdge(1, 3), LeafEdge(2, 4))


def test_coincide_across_two_stars():
    g1, g2 = star_graph(2), star_graph(2)
    res = leaf_coincide_across(g1, LeafEdge(1, 3), g2, LeafEdge(1, 2))
    assert res.graph.p == 4 and res.graph.q == 3
    assert are_isomorphic(res.graph, path_graph(4))
    # maps track both sides into the merged graph
    assert res.map1[1] != res.map2[1]
    assert res.graph.has_edge(res.map1[1], res.map2[1])


def test_disjoint_union_offsets():
    g, shift = disjoint_union(path_graph(2), path_graph(3))
    assert shift == 2
    assert g.p == 5 and g.q == 3
    assert g.has_edge(3, 4) and g.has_edge(4, 5)


def test_colored_split_preserves_properness():
    rng = random.Random(9)
    done = 0
    while done < 500:
        p = rng.randrange(4, 9)
        g = random_connected_graph(rng, p, rng.randrange(0, p))
        internal = [
            (u, v)
            for u, v in g.edges()
            if g.degree(u) >= 2 and g.degree(v) >= 2
        ]
        if not internal:
            continue
        f = greedy_proper_total(g)
        assert is_proper_total(g, f)
        u, v = internal[rng.randrange(len(internal))]
        res, f2 = colored_leaf_split(g, f, u, v)
        assert is_proper_total(res.graph, f2)
        # leaves copy the far endpoint's color; leaf-edges keep the cut color
        assert f2.vertex(res.leaf_at_u) == f.vertex(v)
        assert f2.vertex(res.leaf_at_v) == f.vertex(u)
        assert f2.edge(u, res.leaf_at_u) == f.edge(u, v)
        assert f2.edge(v, res.leaf_at_v) == f.edge(u, v)
        done += 1


def test_colored_coincide_requires_compatibility():
    # two colored 2-stars that cannot merge: leaf colors do not cross-match
    g1 = star_graph(2)
    f1 = TotalColoring(5, {1: 1, 2: 2, 3: 3}, {(1, 2): 4, (1, 3): 5})
    g2 = star_graph(2)
    f2 = TotalColoring(5, {1: 2, 2: 1, 3: 4}, {(1, 2): 4, (1, 3): 5})
    g, shift = disjoint_union(g1, g2)
    pal = max(f1.palette, f2.palette)
    vc = dict(f1.vertex_colors)
    vc.update({v + shift: c for v, c in f2.vertex_colors.items()})
    ec = dict(f1.edge_colors)
    ec.update({(a + shift, b + shift): c for (a, b), c in f2.edge_colors.items()})
    f = TotalColoring(pal, vc, ec)
    # e1 = (1,2): edge color 4, leaf color 2; e2 = (4,5): edge color 4, leaf 1
    ok = colored_compatible(g, f, LeafEdge(1, 2), LeafEdge(4, 5))
    assert ok  # theta(leaf1)=2=theta(center2), theta(leaf2)=1=theta(center1)
    res, merged = colored_leaf_coincide(g, f, LeafEdge(1, 2), LeafEdge(4, 5))
    assert is_proper_total(res.graph, merged)
    # the mismatched pair is rejected
    assert not colored_compatible(g, f, LeafEdge(1, 3), LeafEdge(4, 6))
    with pytest.raises(ValueError):
        colored_leaf_coincide(g, f, LeafEdge(1, 3), LeafEdge(4, 6))


def test_colored_coincide_round_trip_on_random_cases():
    rng = random.Random(13)
    done = 0
    while done < 500:
        p = rng.randrange(4, 9)
        g = random_connected_graph(rng, p, rng.randrange(0, p))
        internal = [
            (u, v)
            for u, v in g.edges()
            if g.degree(u) >= 2 and g.degree(v) >= 2
        ]
        if not internal:
            continue
        f = greedy_proper_total(g)
        u, v = internal[rng.randrange(len(internal))]
        split, f2 = colored_leaf_split(g, f, u, v)
        e1 = LeafEdge(u, split.leaf_at_u)
        e2 = LeafEdge(v, split.leaf_at_v)
        assert colored_compatible(split.graph, f2, e1, e2)
        back, f3 = colored_leaf_coincide(split.graph, f2, e1, e2)
        assert is_proper_total(back.graph, f3)
        assert back.graph.p == g.p and back.graph.q == g.q
        assert are_isomorphic(back.graph, g)
        done += 1
