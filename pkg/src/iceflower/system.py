"""Ice-flower systems: ordered collections of stars and their coinciding algebra.

A system is an ordered list of stars K_{1,m_j} (m_j >= 2).  A colored
system attaches a proper total coloring to each star; it is *strongly
colored* when every pair of distinct stars can be merged through some
pair of color-compatible leaf-edges.  The uniform construction below
builds n stars on n-1 leaves each whose every edge weight equals k, and
is strongly colored by design: star j has center color j, leaf colors
[1,n] minus j, and the edge to the leaf colored l gets color j + l - k,
so the coupling edge colors agree automatically for every star pair.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .graph import Graph, is_delta_saturated
from .coloring import TotalColoring, is_proper_total, bfdt
from .leafops import (
    LeafEdge,
    colored_compatible,
    colored_leaf_coincide,
    disjoint_union,
    leaf_coincide_across,
    leaf_edges,
)


@dataclass(frozen=True)
class Star:
    """K_{1,m} in canonical layout: center 1, leaves 2..m+1."""

    m: int

    @property
    def graph(self) -> Graph:
        return Graph(self.m + 1, [(1, j) for j in range(2, self.m + 2)])

    @property
    def center(self) -> int:
        return 1

    @property
    def leaves(self) -> range:
        return range(2, self.m + 2)


def make_star(m: int) -> Star:
    """A star with m >= 2 leaves (single-leaf stars are excluded here)."""
    if m < 2:
        raise ValueError("stars in a system need m >= 2, got %d" % m)
    return Star(m)


def star_coincide(s_i: Star, s_j: Star) -> Graph:
    """Coincide two stars on canonical leaf-edges: the last leaf of s_i
    against the first leaf of s_j, joining the centers by a new edge."""
    g1, g2 = s_i.graph, s_j.graph
    res = leaf_coincide_across(
        g1, LeafEdge(1, s_i.m + 1), g2, LeafEdge(1, 2)
    )
    return res.graph


@dataclass
class IceFlowerSystem:
    """Ordered star collection (the uncolored backbone of a system)."""

    stars: List[Star]

    def __post_init__(self):
        if not self.stars:
            raise ValueError("a system needs at least one star")
        for s in self.stars:
            if s.m < 2:
                raise ValueError("system stars need m >= 2")

    @property
    def n(self) -> int:
        return len(self.stars)

    def sizes(self) -> Tuple[int, ...]:
        return tuple(s.m for s in self.stars)


@dataclass
class ColoredIceFlowerSystem:
    """Stars plus one proper total coloring per star.

    fdt_constant, when present, promises that every edge of every star
    has weight exactly that constant (validated on construction).
    """

    stars: List[Star]
    colorings: List[TotalColoring]
    fdt_constant: Optional[int] = None
    uniform: bool = field(init=False)

    def __post_init__(self):
        if not self.stars:
            raise ValueError("a system needs at least one star")
        if len(self.stars) != len(self.colorings):
            raise ValueError("one coloring per star required")
        for s, f in zip(self.stars, self.colorings):
            if s.m < 2:
                raise ValueError("system stars need m >= 2")
            if not is_proper_total(s.graph, f):
                raise ValueError("star coloring is not proper total")
            if self.fdt_constant is not None:
                rep = bfdt(s.graph, f)
                if rep.k != self.fdt_constant:
                    raise ValueError(
                        "star edge weights do not equal the declared constant"
                    )
        self.uniform = len({s.m for s in self.stars}) == 1

    @property
    def n(self) -> int:
        return len(self.stars)

    def sizes(self) -> Tuple[int, ...]:
        return tuple(s.m for s in self.stars)

    def backbone(self) -> IceFlowerSystem:
        return IceFlowerSystem(list(self.stars))


def _pair_union(
    s: ColoredIceFlowerSystem, i: int, j: int
) -> Tuple[Graph, TotalColoring, int]:
    """Disjoint union of stars i and j with the combined coloring; returns
    the id shift applied to star j."""
    gi, gj = s.stars[i].graph, s.stars[j].graph
    fi, fj = s.colorings[i], s.colorings[j]
    g, shift = disjoint_union(gi, gj)
    palette = max(fi.palette, fj.palette)
    vc = dict(fi.vertex_colors)
    vc.update({v + shift: c for v, c in fj.vertex_colors.items()})
    ec = dict(fi.edge_colors)
    ec.update({(a + shift, b + shift): c for (a, b), c in fj.edge_colors.items()})
    return g, TotalColoring(palette, vc, ec), shift


def is_strongly_colored(s: ColoredIceFlowerSystem) -> bool:
    """Every pair of distinct stars admits some compatible leaf-edge pair
    whose merge stays proper total.  A single-star system passes vacuously.
    (The compatibility equalities are symmetric, so unordered pairs suffice.)
    """
    for i in range(s.n):
        for j in range(i + 1, s.n):
            g, theta, shift = _pair_union(s, i, j)
            ok = False
            for a in s.stars[i].leaves:
                for b in s.stars[j].leaves:
                    e1 = LeafEdge(1, a)
                    e2 = LeafEdge(1 + shift, b + shift)
                    if not colored_compatible(g, theta, e1, e2):
                        continue
                    try:
                        colored_leaf_coincide(g, theta, e1, e2)
                    except ValueError:
                        continue
                    ok = True
                    break
                if ok:
                    break
            if not ok:
                return False
    return True


def build_uniform_fdt_system(n: int, k: int) -> ColoredIceFlowerSystem:
    """n stars K_{1,n-1} with every edge weight equal to k.

    Star j: center colored j; leaves colored [1,n] \\ {j} in ascending
    order; the edge to the leaf colored l is colored j + l - k, which has
    weight |j + l - (j+l-k)| = k.  Every color must land in [1, 2n-1-k]
    and stay proper; k = 0 always works, larger k is rejected when any
    edge color would fall to 0 or collide with an endpoint.
    """
    if n < 3:
        raise ValueError("n >= 3 required")
    if k < 0:
        raise ValueError("k must be non-negative")
    palette = 2 * n - 1 - k
    if palette < n:
        raise ValueError("k too large for any valid edge color")
    stars: List[Star] = []
    colorings: List[TotalColoring] = []
    for j in range(1, n + 1):
        star = make_star(n - 1)
        leaf_colors = [l for l in range(1, n + 1) if l != j]
        vc = {1: j}
        ec: Dict[Tuple[int, int], int] = {}
        for idx, l in enumerate(leaf_colors):
            leaf_id = 2 + idx
            c = j + l - k
            if c < 1:
                raise ValueError(
                    "edge color %d+%d-%d < 1; construction undefined" % (j, l, k)
                )
            if c == j or c == l:
                raise ValueError(
                    "edge color %d+%d-%d collides with an endpoint color" % (j, l, k)
                )
            vc[leaf_id] = l
            ec[(1, leaf_id)] = c
        f = TotalColoring(palette, vc, ec)
        assert is_proper_total(star.graph, f)
        assert bfdt(star.graph, f).k == k
        stars.append(star)
        colorings.append(f)
    return ColoredIceFlowerSystem(stars, colorings, fdt_constant=k)


@dataclass
class SaturateResult:
    graph: Graph
    coloring: TotalColoring
    saturated: bool  # did greedy coinciding reach a degree-(1 or Delta) graph?


def saturate(s: ColoredIceFlowerSystem, copies: List[int]) -> SaturateResult:
    """Greedy colored coinciding over a multiset of star copies.

    Lays out copies[j] disjoint copies of star j, then repeatedly merges
    the first applicable leaf-edge pair in ascending (star instance, leaf
    color) order until no compatible pair remains.  Whether the result is
    degree-saturated is reported, not required: the pairing rule is
    greedy and success can depend on the input multiplicities.
    """
    if len(copies) != s.n:
        raise ValueError("need one multiplicity per star")
    if any(c < 0 for c in copies):
        raise ValueError("multiplicities must be non-negative")
    if sum(copies) < 1:
        raise ValueError("at least one star copy required")

    palette = max(f.palette for f in s.colorings)
    edges: List[Tuple[int, int]] = []
    vc: Dict[int, int] = {}
    ec: Dict[Tuple[int, int], int] = {}
    origin: Dict[int, int] = {}  # vertex -> star instance (1-based)
    offset = 0
    instance = 0
    for j, count in enumerate(copies):
        for _ in range(count):
            instance += 1
            star, f = s.stars[j], s.colorings[j]
            for u, v in star.graph.edges():
                edges.append((u + offset, v + offset))
                ec[(u + offset, v + offset)] = f.edge(u, v)
            for v in star.graph.vertices():
                vc[v + offset] = f.vertex(v)
                origin[v + offset] = instance
            offset += star.graph.p
    g = Graph(offset, edges)
    theta = TotalColoring(palette, vc, ec)

    while True:
        les = sorted(
            leaf_edges(g),
            key=lambda e: (origin[e.leaf], theta.vertex(e.leaf), e.support, e.leaf),
        )
        applied = False
        for ai in range(len(les)):
            for bi in range(ai + 1, len(les)):
                e1, e2 = les[ai], les[bi]
                if not colored_compatible(g, theta, e1, e2):
                    continue
                try:
                    res, theta2 = colored_leaf_coincide(g, theta, e1, e2)
                except ValueError:
                    continue
                g, theta = res.graph, theta2
                origin = {
                    res.vertex_map[v]: o
                    for v, o in origin.items()
                    if v in res.vertex_map
                }
                applied = True
                break
            if applied:
                break
        if not applied:
            break

    return SaturateResult(g, theta, is_delta_saturated(g))
