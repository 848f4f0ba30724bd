"""Leaf surgery: splitting internal edges into leaf pairs and the inverse.

Splitting an internal edge uv removes it and hangs a new leaf on each
endpoint; coinciding two leaf-edges deletes both leaves and joins their
supports.  The colored variants carry a total coloring through the same
moves: a split copies the cut edge's color onto both new leaf-edges and
the far endpoint's color onto each new leaf, and a coincide is allowed
only when the two leaf-edges agree color-wise (support of one matches
leaf of the other, and the edge colors are equal).

Operations that delete vertices renumber the survivors densely and
return the old-id -> new-id map, so sequences of moves stay replayable.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, NamedTuple, Optional, Tuple

from .graph import Graph, connected_components
from .coloring import TotalColoring, is_proper_total


class LeafEdge(NamedTuple):
    support: int
    leaf: int


def validate_leaf_edge(g: Graph, e: LeafEdge) -> None:
    if not g.has_edge(e.support, e.leaf):
        raise ValueError("(%d,%d) is not an edge" % (e.support, e.leaf))
    if g.degree(e.leaf) != 1:
        raise ValueError("vertex %d is not a leaf" % e.leaf)
    if g.degree(e.support) < 2:
        raise ValueError("support %d has no eligible degree" % e.support)


def leaf_edges(g: Graph) -> list:
    """All leaf-edges of g as LeafEdge pairs, sorted by (support, leaf)."""
    out = []
    for v in g.vertices():
        if g.degree(v) == 1:
            (u,) = g.neighbors(v)
            if g.degree(u) >= 2:
                out.append(LeafEdge(u, v))
    return sorted(out)


@dataclass
class SplitResult:
    graph: Graph
    leaf_at_u: int  # the new leaf hanging on u (the smaller-id endpoint given)
    leaf_at_v: int  # the new leaf hanging on v


@dataclass
class CoincideResult:
    graph: Graph
    vertex_map: Dict[int, int]  # old id -> new id for every surviving vertex


def leaf_split(g: Graph, u: int, v: int) -> SplitResult:
    """Cut the internal edge uv into two leaf-edges.

    The new leaf adjacent to u takes id p+1, the one adjacent to v takes
    p+2.  Both endpoints must have degree >= 2 (the move is undefined at
    a leaf-edge).
    """
    if not g.has_edge(u, v):
        raise ValueError("(%d,%d) is not an edge" % (u, v))
    if g.degree(u) < 2 or g.degree(v) < 2:
        raise ValueError("edge (%d,%d) touches a leaf; split undefined" % (u, v))
    p = g.p
    edges = [e for e in g.edges() if e != (min(u, v), max(u, v))]
    edges.append((u, p + 1))
    edges.append((v, p + 2))
    out = Graph(p + 2, edges)
    assert out.p == g.p + 2 and out.q == g.q + 1
    return SplitResult(out, p + 1, p + 2)


def _delete_and_renumber(g: Graph, gone: Tuple[int, int], new_edge: Tuple[int, int]) -> CoincideResult:
    keep = [v for v in g.vertices() if v not in gone]
    mapping = {old: i + 1 for i, old in enumerate(keep)}
    edges = [
        (mapping[a], mapping[b])
        for a, b in g.edges()
        if a not in gone and b not in gone
    ]
    edges.append((mapping[new_edge[0]], mapping[new_edge[1]]))
    return CoincideResult(Graph(g.p - 2, edges), mapping)


def leaf_coincide(g: Graph, e1: LeafEdge, e2: LeafEdge) -> CoincideResult:
    """Merge two leaf-edges into one edge joining their supports.

    The leaves are deleted and the edge (support1, support2) is added.
    Rejected when the supports coincide or are already adjacent (the
    result must stay simple).
    """
    validate_leaf_edge(g, e1)
    validate_leaf_edge(g, e2)
    if e1 == e2 or e1.leaf == e2.leaf:
        raise ValueError("need two distinct leaf-edges")
    u, v = e1.support, e2.support
    if u == v:
        raise ValueError("leaf-edges share the support %d" % u)
    if g.has_edge(u, v):
        raise ValueError("supports %d,%d already adjacent; merge would double the edge" % (u, v))
    if u in (e1.leaf, e2.leaf) or v in (e1.leaf, e2.leaf):
        raise ValueError("support/leaf roles overlap")
    res = _delete_and_renumber(g, (e1.leaf, e2.leaf), (u, v))
    assert res.graph.p == g.p - 2 and res.graph.q == g.q - 1
    return res


@dataclass
class AcrossResult:
    graph: Graph
    map1: Dict[int, int]  # vertex of H1 -> vertex of the result
    map2: Dict[int, int]  # vertex of H2 -> vertex of the result


def disjoint_union(g1: Graph, g2: Graph) -> Tuple[Graph, int]:
    """g1 alongside g2 with g2's ids shifted up by g1.p; returns the shift."""
    shift = g1.p
    edges = g1.edges() + [(u + shift, v + shift) for u, v in g2.edges()]
    return Graph(g1.p + g2.p, edges), shift


def leaf_coincide_across(g1: Graph, e1: LeafEdge, g2: Graph, e2: LeafEdge) -> AcrossResult:
    """Coincide a leaf-edge of g1 with one of g2 after a disjoint union."""
    validate_leaf_edge(g1, e1)
    validate_leaf_edge(g2, e2)
    union, shift = disjoint_union(g1, g2)
    res = leaf_coincide(
        union, e1, LeafEdge(e2.support + shift, e2.leaf + shift)
    )
    map1 = {v: res.vertex_map[v] for v in g1.vertices() if v != e1.leaf}
    map2 = {
        v: res.vertex_map[v + shift] for v in g2.vertices() if v != e2.leaf
    }
    return AcrossResult(res.graph, map1, map2)


# -- colored variants ------------------------------------------------------


def colored_leaf_split(
    g: Graph, f: TotalColoring, u: int, v: int
) -> Tuple[SplitResult, TotalColoring]:
    """Split uv and extend the coloring: both new leaf-edges take the old
    edge color, and each new leaf copies the color of the far endpoint."""
    if not is_proper_total(g, f):
        raise ValueError("coloring must be proper total before a colored split")
    res = leaf_split(g, u, v)
    c_edge = f.edge(u, v)
    vc = dict(f.vertex_colors)
    vc[res.leaf_at_u] = f.vertex(v)  # v' copies v
    vc[res.leaf_at_v] = f.vertex(u)  # u' copies u
    ec = {e: c for e, c in f.edge_colors.items() if e != (min(u, v), max(u, v))}
    ec[(min(u, res.leaf_at_u), max(u, res.leaf_at_u))] = c_edge
    ec[(min(v, res.leaf_at_v), max(v, res.leaf_at_v))] = c_edge
    out = TotalColoring(f.palette, vc, ec)
    assert is_proper_total(res.graph, out)
    return res, out


def colored_compatible(
    g: Graph, theta: TotalColoring, e1: LeafEdge, e2: LeafEdge
) -> bool:
    """The three color equalities that allow two leaf-edges to merge:
    support of each matches the leaf of the other, and edge colors agree."""
    validate_leaf_edge(g, e1)
    validate_leaf_edge(g, e2)
    return (
        theta.vertex(e1.support) == theta.vertex(e2.leaf)
        and theta.vertex(e2.support) == theta.vertex(e1.leaf)
        and theta.edge(*e1) == theta.edge(*e2)
    )


def colored_leaf_coincide(
    g: Graph, theta: TotalColoring, e1: LeafEdge, e2: LeafEdge
) -> Tuple[CoincideResult, TotalColoring]:
    """Color-aware merge of two leaf-edges.

    Requires colored_compatible plus the uncolored preconditions; the
    merged edge takes the shared edge color.  The color equalities alone
    do not guarantee a sound coloring around the merged vertices (the
    input coloring is not assumed proper), so the result is re-validated
    and rejected if it is not proper total.
    """
    if not colored_compatible(g, theta, e1, e2):
        raise ValueError("leaf-edges are not color-compatible")
    res = leaf_coincide(g, e1, e2)
    m = res.vertex_map
    vc = {m[v]: c for v, c in theta.vertex_colors.items() if v in m}
    ec = {}
    for (a, b), c in theta.edge_colors.items():
        if a in m and b in m:
            ec[(min(m[a], m[b]), max(m[a], m[b]))] = c
    u, v = m[e1.support], m[e2.support]
    ec[(min(u, v), max(u, v))] = theta.edge(*e1)
    out = TotalColoring(theta.palette, vc, ec)
    if not is_proper_total(res.graph, out):
        raise ValueError("merged coloring is not proper total; merge rejected")
    return res, out
