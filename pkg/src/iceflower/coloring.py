"""Proper total colorings and the felicitous-difference solver.

A total coloring assigns a color to every vertex and every edge from a
palette {1..M}.  It is proper when adjacent vertices differ, incident
edges differ, and every edge differs from both its ends.  The weight of
an edge uv is |f(u) + f(v) - f(uv)|; the spread of these weights over
the whole graph is the quantity being minimized here, and the solver
looks for colorings where every edge has the same weight k (spread 0).

Color values are non-negative integers.  Realizations decoded from
number strings may legitimately carry color 0; properness additionally
requires every color to sit inside {1..M}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .graph import Graph, find_proper_vertex_coloring

EdgeKey = Tuple[int, int]


def _ekey(u: int, v: int) -> EdgeKey:
    return (u, v) if u < v else (v, u)


@dataclass
class TotalColoring:
    """Vertex and edge colors drawn from the palette bound `palette`."""

    palette: int
    vertex_colors: Dict[int, int]
    edge_colors: Dict[EdgeKey, int]

    def __post_init__(self):
        if self.palette < 1:
            raise ValueError("palette bound must be >= 1")
        self.edge_colors = {_ekey(*e): c for e, c in self.edge_colors.items()}
        for v, c in self.vertex_colors.items():
            if not 0 <= c <= self.palette:
                raise ValueError("vertex %d color %d outside 0..%d" % (v, c, self.palette))
        for e, c in self.edge_colors.items():
            if not 0 <= c <= self.palette:
                raise ValueError("edge %s color %d outside 0..%d" % (e, c, self.palette))

    def vertex(self, v: int) -> int:
        return self.vertex_colors[v]

    def edge(self, u: int, v: int) -> int:
        return self.edge_colors[_ekey(u, v)]

    def relabel(self, mapping: Dict[int, int]) -> "TotalColoring":
        """Carry the coloring across a vertex relabeling."""
        vc = {mapping[v]: c for v, c in self.vertex_colors.items()}
        ec = {_ekey(mapping[u], mapping[v]): c for (u, v), c in self.edge_colors.items()}
        return TotalColoring(self.palette, vc, ec)


def is_proper_total(g: Graph, tc: TotalColoring) -> bool:
    """Proper total coloring check against g (domains must match exactly)."""
    if set(tc.vertex_colors) != set(g.vertices()):
        return False
    if set(tc.edge_colors) != set(g.edges()):
        return False
    vals = list(tc.vertex_colors.values()) + list(tc.edge_colors.values())
    if any(not 1 <= c <= tc.palette for c in vals):
        return False
    for u, v in g.edges():
        fe = tc.edge(u, v)
        if tc.vertex(u) == tc.vertex(v):
            return False
        if fe == tc.vertex(u) or fe == tc.vertex(v):
            return False
    for v in g.vertices():
        inc = [tc.edge(v, w) for w in g.neighbors(v)]
        if len(inc) != len(set(inc)):
            return False
    return True


def edge_weight(tc: TotalColoring, u: int, v: int) -> int:
    """|f(u) + f(v) - f(uv)| for one edge."""
    return abs(tc.vertex(u) + tc.vertex(v) - tc.edge(u, v))


@dataclass
class FdtReport:
    """Edge-weight summary of a total coloring."""

    weights: Dict[EdgeKey, int]
    wmin: int
    wmax: int
    bfdt: int
    k: Optional[int]  # the common weight, present only when bfdt == 0


def bfdt(g: Graph, tc: TotalColoring) -> FdtReport:
    """Weight spread max - min over all edges.  Needs at least one edge."""
    if g.q == 0:
        raise ValueError("weight spread is undefined without edges")
    w = {_ekey(u, v): edge_weight(tc, u, v) for u, v in g.edges()}
    wmin = min(w.values())
    wmax = max(w.values())
    return FdtReport(w, wmin, wmax, wmax - wmin, wmin if wmax == wmin else None)


# -- the equal-weight solver -----------------------------------------------


def _search_order(g: Graph) -> List[int]:
    """Maximum-adjacency vertex order: each next vertex sees as many
    already-ordered neighbors as possible (ties: degree, then id)."""
    p = g.p
    order: List[int] = []
    placed = [False] * (p + 1)
    start = max(g.vertices(), key=lambda v: (g.degree(v), -v))
    order.append(start)
    placed[start] = True
    back = [0] * (p + 1)
    for _ in range(p - 1):
        for w in g._adj[order[-1]]:
            if not placed[w]:
                back[w] += 1
        nxt = max(
            (v for v in g.vertices() if not placed[v]),
            key=lambda v: (back[v], g.degree(v), -v),
        )
        order.append(nxt)
        placed[nxt] = True
    return order


def find_fdt_coloring(g: Graph, palette: int) -> Optional[TotalColoring]:
    """Search for a proper total coloring with every edge weight equal.

    Tries the common weight k = 0, 1, ... in turn; within each k,
    backtracks over vertices (colors ascending) and derives edge colors,
    which have at most two candidates per edge once both ends are known.
    Pendant twins are forced into increasing edge colors to kill the
    factorial blowup at high-degree centers.  Returns the first witness
    in this deterministic order, or None after an exhaustive search.
    """
    M = palette
    if M < 1:
        return None
    if g.q == 0:
        vc = find_proper_vertex_coloring(g, M)
        if vc is None:
            return None
        return TotalColoring(M, vc, {})
    if M < g.max_degree() + 1:
        return None

    order = _search_order(g)
    p = g.p
    pos = {v: i for i, v in enumerate(order)}
    # neighbors at earlier positions, as (position, vertex) pairs
    earlier: List[List[int]] = [
        sorted(pos[w] for w in g._adj[v] if pos[w] < i)
        for i, v in enumerate(order)
    ]
    # pendant handling: vertex of degree 1 whose support sits earlier
    is_pendant = [
        g.degree(order[i]) == 1 and len(earlier[i]) == 1 for i in range(p)
    ]
    # sibling chain: previous pendant (by position) hanging off the same support
    prev_sibling = [-1] * p
    last_at: Dict[int, int] = {}
    for i in range(p):
        if is_pendant[i]:
            sup = earlier[i][0]
            if sup in last_at:
                prev_sibling[i] = last_at[sup]
            last_at[sup] = i

    vcol = [0] * p
    emask = [0] * p  # bitmask of edge colors used at each position
    echoice: List[Dict[int, int]] = [dict() for _ in range(p)]  # pos -> {earlier pos: color}
    pend_ecol = [0] * p  # pendant positions: color of their single edge
    full = (1 << (M + 1)) - 2  # bits 1..M

    def color_edges(i: int, c: int, idx: int, local: int, k: int) -> bool:
        """Assign colors to edges between position i and earlier[i][idx:]."""
        if idx == len(earlier[i]):
            vcol[i] = c
            emask[i] |= local
            if place(i + 1, k):
                return True
            emask[i] &= ~local
            vcol[i] = 0
            return False
        j = earlier[i][idx]
        s = c + vcol[j]
        opts = (s - k,) if k == 0 else (s - k, s + k)
        for e in opts:
            if e < 1 or e > M or e == c or e == vcol[j]:
                continue
            bit = 1 << e
            if emask[j] & bit or local & bit:
                continue
            emask[j] |= bit
            echoice[i][j] = e
            if color_edges(i, c, idx + 1, local | bit, k):
                return True
            emask[j] &= ~bit
            del echoice[i][j]
        return False

    def place(i: int, k: int) -> bool:
        if i == p:
            return True
        if is_pendant[i]:
            j = earlier[i][0]
            cj = vcol[j]
            lo = pend_ecol[prev_sibling[i]] + 1 if prev_sibling[i] >= 0 else 1
            for e in range(lo, M + 1):
                bit = 1 << e
                if e == cj or emask[j] & bit:
                    continue
                for l in ((e - k - cj,) if k == 0 else (e - k - cj, e + k - cj)):
                    if l < 1 or l > M or l == cj or l == e:
                        continue
                    vcol[i] = l
                    emask[j] |= bit
                    emask[i] = bit
                    pend_ecol[i] = e
                    echoice[i][j] = e
                    if place(i + 1, k):
                        return True
                    del echoice[i][j]
                    emask[i] = 0
                    emask[j] &= ~bit
                    vcol[i] = 0
            return False
        nbr_cols = set()
        for w in g._adj[order[i]]:
            jw = pos[w]
            if jw < i:
                nbr_cols.add(vcol[jw])
        for c in range(1, M + 1):
            if c in nbr_cols:
                continue
            if color_edges(i, c, 0, 0, k):
                return True
        return False

    for k in range(0, 2 * M - 1):
        for arr in (vcol, emask, pend_ecol):
            for i in range(p):
                arr[i] = 0
        for d in echoice:
            d.clear()
        if place(0, k):
            vc = {order[i]: vcol[i] for i in range(p)}
            ec: Dict[EdgeKey, int] = {}
            for i in range(p):
                for j, e in echoice[i].items():
                    ec[_ekey(order[i], order[j])] = e
            tc = TotalColoring(M, vc, ec)
            assert is_proper_total(g, tc)
            rep = bfdt(g, tc)
            assert rep.bfdt == 0 and rep.k == k
            return tc
    return None


@dataclass
class ChiFdtResult:
    """Outcome of the minimum-palette search."""

    m: Optional[int]  # smallest palette admitting spread 0, if found
    coloring: Optional[TotalColoring]
    searched_up_to: int  # largest palette exhausted (or where the witness sits)


def chi_fdt(g: Graph, max_palette: int) -> ChiFdtResult:
    """Smallest palette M <= max_palette with an equal-weight proper total
    coloring.  Walks M upward from Delta+1, so absence below the answer is
    proved exhaustively.  m is None when the budget is exhausted."""
    lo = g.max_degree() + 1
    for M in range(lo, max_palette + 1):
        tc = find_fdt_coloring(g, M)
        if tc is not None:
            return ChiFdtResult(M, tc, M)
    return ChiFdtResult(None, None, max_palette)
