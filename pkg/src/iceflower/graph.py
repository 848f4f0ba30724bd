"""Core simple-graph type and the standard predicates used everywhere else.

Graphs are undirected, simple (no loops, no multi-edges), with vertices
numbered 1..p.  Isolated vertices are allowed.  All operations that return
graphs return new objects; Graph instances are treated as immutable.
"""
from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

Edge = Tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on the vertex set {1, ..., p}."""

    __slots__ = ("p", "_edges", "_adj")

    def __init__(self, p: int, edges: Iterable[Tuple[int, int]] = ()):
        if p < 1:
            raise ValueError("graph needs at least one vertex, got p=%d" % p)
        self.p = p
        adj: List[set] = [set() for _ in range(p + 1)]
        es = set()
        for u, v in edges:
            if not (1 <= u <= p and 1 <= v <= p):
                raise ValueError("edge (%d,%d) out of range 1..%d" % (u, v, p))
            if u == v:
                raise ValueError("loop at vertex %d not allowed" % u)
            e = _norm_edge(u, v)
            if e in es:
                raise ValueError("duplicate edge (%d,%d)" % e)
            es.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self._edges = es
        self._adj = adj

    # -- basic accessors ---------------------------------------------------

    @property
    def q(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(1, self.p + 1)

    def edges(self) -> List[Edge]:
        """Edge list sorted ascending by (u, v)."""
        return sorted(self._edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self._edges

    def neighbors(self, v: int) -> List[int]:
        return sorted(self._adj[v])

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max(len(self._adj[v]) for v in self.vertices())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.p == other.p
            and self._edges == other._edges
        )

    def __hash__(self):
        return hash((self.p, frozenset(self._edges)))

    def __repr__(self):
        return "Graph(p=%d, q=%d)" % (self.p, self.q)

    def copy(self) -> "Graph":
        return Graph(self.p, self._edges)

    def relabel(self, mapping: Dict[int, int], new_p: Optional[int] = None) -> "Graph":
        """Apply a vertex relabeling.  `mapping` must be injective on V."""
        if new_p is None:
            new_p = self.p
        return Graph(new_p, [(mapping[u], mapping[v]) for u, v in self._edges])


# -- degree sequences ------------------------------------------------------


def degree_sequence(g: Graph) -> Tuple[int, ...]:
    """Degrees of g sorted non-increasing."""
    return tuple(sorted((g.degree(v) for v in g.vertices()), reverse=True))


def degree_counts(g: Graph) -> Dict[int, int]:
    """Map degree d -> number of vertices of degree d (only nonzero counts)."""
    counts: Dict[int, int] = {}
    for v in g.vertices():
        d = g.degree(v)
        counts[d] = counts.get(d, 0) + 1
    return counts


def _normalize_sequence(seq: Sequence[int]) -> Tuple[int, ...]:
    s = tuple(sorted(seq, reverse=True))
    if any(d < 0 for d in s):
        raise ValueError("degree sequence entries must be non-negative")
    return s


def is_graphical(seq: Sequence[int]) -> bool:
    """Erdos-Gallai test: does some simple graph realize these degrees?

    The argument is normalized (sorted non-increasing) internally, so any
    ordering is accepted.
    """
    d = _normalize_sequence(seq)
    n = len(d)
    if n == 0:
        return True
    if sum(d) % 2 != 0:
        return False
    if d[0] >= n:
        return False
    for k in range(1, n + 1):
        lhs = sum(d[:k])
        rhs = k * (k - 1) + sum(min(d[i], k) for i in range(k, n))
        if lhs > rhs:
            return False
    return True


def realize_sequence(seq: Sequence[int]) -> Optional[Graph]:
    """Havel-Hakimi construction of a realization, or None.

    Vertex i of the result carries the i-th entry of the normalized
    (non-increasing) sequence as its degree.  Deterministic: the highest
    remaining vertex is always joined to the next-highest ones, ties broken
    by vertex id.
    """
    d = _normalize_sequence(seq)
    n = len(d)
    if n == 0:
        return None
    # residual degrees per vertex id 1..n
    residual = {i + 1: d[i] for i in range(n)}
    edges: List[Edge] = []
    while True:
        # pick the vertex with largest residual, smallest id on ties
        v = max(residual, key=lambda x: (residual[x], -x))
        dv = residual[v]
        if dv == 0:
            break
        residual[v] = 0
        targets = sorted(
            (u for u in residual if u != v and residual[u] > 0),
            key=lambda x: (-residual[x], x),
        )[:dv]
        if len(targets) < dv:
            return None
        for u in targets:
            residual[u] -= 1
            edges.append(_norm_edge(v, u))
    g = Graph(n, edges)
    assert degree_sequence(g) == d
    return g


# -- connectivity and trees ------------------------------------------------


def connected_components(g: Graph) -> List[List[int]]:
    seen = [False] * (g.p + 1)
    comps = []
    for s in g.vertices():
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g._adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def is_tree(g: Graph) -> bool:
    """Connected and q = p - 1; double-checked against the leaf identity."""
    ok = g.q == g.p - 1 and is_connected(g)
    if ok and g.p >= 2:
        # a tree's leaf count is forced by its higher-degree counts
        counts = degree_counts(g)
        n1 = counts.get(1, 0)
        assert n1 == 2 + sum((d - 2) * c for d, c in counts.items() if d >= 3)
    return ok


def leaves(g: Graph) -> List[int]:
    return [v for v in g.vertices() if g.degree(v) == 1]


# -- hamilton cycles -------------------------------------------------------


def is_hamilton_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    """Does `cycle` list every vertex once and trace a closed walk in g?"""
    if len(cycle) != g.p or g.p < 3:
        return False
    if sorted(cycle) != list(g.vertices()):
        return False
    return all(
        g.has_edge(cycle[i], cycle[(i + 1) % g.p]) for i in range(g.p)
    )


def find_hamilton_cycle(g: Graph) -> Optional[List[int]]:
    """Exact backtracking search for a hamilton cycle.

    Returns the lexicographically smallest cycle as a vertex sequence
    starting at 1, or None.  Prunes on connectivity of the unvisited
    region and on unvisited vertices that have run out of usable
    neighbors.
    """
    p = g.p
    if p < 3:
        return None
    if min(g.degree(v) for v in g.vertices()) < 2:
        return None
    adj = [None] + [g.neighbors(v) for v in g.vertices()]
    visited = [False] * (p + 1)
    visited[1] = True
    path = [1]

    def unvisited_ok(cur: int) -> bool:
        # every unvisited vertex needs >= 2 usable contacts, and the
        # unvisited region plus the path ends must hang together
        start = None
        for v in range(2, p + 1):
            if not visited[v]:
                free = 0
                for w in adj[v]:
                    if not visited[w] or w == cur or w == 1:
                        free += 1
                if free < 2:
                    return False
                start = v
        if start is None:
            return True
        # BFS over unvisited vertices only
        seen = {start}
        queue = [start]
        while queue:
            v = queue.pop()
            for w in adj[v]:
                if not visited[w] and w not in seen:
                    seen.add(w)
                    queue.append(w)
        touches_cur = False
        touches_one = False
        for v in range(2, p + 1):
            if not visited[v]:
                if v not in seen:
                    return False
                if not touches_cur and cur in adj[v]:
                    touches_cur = True
                if not touches_one and 1 in adj[v]:
                    touches_one = True
        return touches_cur and touches_one

    def extend(cur: int) -> bool:
        if len(path) == p:
            return g.has_edge(cur, 1)
        if not unvisited_ok(cur):
            return False
        for w in adj[cur]:
            if not visited[w]:
                visited[w] = True
                path.append(w)
                if extend(w):
                    return True
                path.pop()
                visited[w] = False
        return False

    if extend(1):
        return list(path)
    return None


# -- planarity -------------------------------------------------------------


def is_planar(g: Graph) -> bool:
    """Exact planarity (left-right test via networkx)."""
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.edges())
    ok, _ = nx.check_planarity(h)
    return ok


# -- isomorphism via canonical forms ---------------------------------------


def _refine_colors(g: Graph) -> List[List[int]]:
    """Stable color refinement; cells returned in a canonical order.

    Starting from degrees, vertices are repeatedly re-colored by the
    multiset of their neighbors' colors.  The final cells are sorted by
    their signature history, which is identical for isomorphic graphs.
    """
    color = {v: g.degree(v) for v in g.vertices()}
    ncells = len(set(color.values()))
    while True:
        sig = {
            v: (color[v], tuple(sorted(color[w] for w in g._adj[v])))
            for v in g.vertices()
        }
        ordered = sorted(set(sig.values()))
        index = {s: i for i, s in enumerate(ordered)}
        color = {v: index[sig[v]] for v in g.vertices()}
        if len(ordered) == ncells:
            break
        ncells = len(ordered)
    cells: Dict[int, List[int]] = {}
    for v in g.vertices():
        cells.setdefault(color[v], []).append(v)
    return [sorted(cells[c]) for c in sorted(cells)]


def canonical_form(g: Graph) -> Tuple[int, Tuple[Edge, ...]]:
    """(p, edge tuple) invariant under relabeling: equal iff isomorphic.

    Backtracks over relabelings compatible with the refined color cells,
    keeping the lexicographically smallest adjacency encoding.
    """
    p = g.p
    if g.q == 0:
        return (p, ())
    cells = _refine_colors(g)
    # position i (0-based) draws from slot_cell[i]
    slot_cell: List[int] = []
    for ci, cell in enumerate(cells):
        slot_cell.extend([ci] * len(cell))
    remaining = [list(c) for c in cells]
    adj = g._adj

    best_cols: Optional[List[int]] = None
    best_layout: Optional[List[int]] = None
    layout: List[int] = []
    pos_of = {}
    cols: List[int] = []

    def place(i: int, tight: bool):
        nonlocal best_cols, best_layout
        if i == p:
            if best_cols is None or cols < best_cols:
                best_cols = list(cols)
                best_layout = list(layout)
            return
        cell = remaining[slot_cell[i]]
        for v in list(cell):
            col = 0
            for w in adj[v]:
                j = pos_of.get(w)
                if j is not None:
                    col |= 1 << j
            t = tight
            if best_cols is not None:
                if t:
                    if col > best_cols[i]:
                        continue
                    if col < best_cols[i]:
                        t = False
            cell.remove(v)
            layout.append(v)
            pos_of[v] = i
            cols.append(col)
            place(i + 1, t)
            cols.pop()
            del pos_of[v]
            layout.pop()
            cell.append(v)

    place(0, True)
    assert best_layout is not None
    newid = {v: i + 1 for i, v in enumerate(best_layout)}
    return (p, tuple(sorted(_norm_edge(newid[u], newid[v]) for u, v in g._edges)))


def canonical_relabel(g: Graph) -> Graph:
    """Relabel g into its canonical layout."""
    p, edges = canonical_form(g)
    return Graph(p, edges)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.p != h.p or g.q != h.q:
        return False
    if degree_sequence(g) != degree_sequence(h):
        return False
    return canonical_form(g) == canonical_form(h)


# -- saturation and vertex coloring ----------------------------------------


def is_delta_saturated(g: Graph) -> bool:
    """Every vertex has degree 1 or degree Delta(g)."""
    dmax = g.max_degree()
    return all(g.degree(v) in (1, dmax) for v in g.vertices())


def find_proper_vertex_coloring(g: Graph, colors: int) -> Optional[Dict[int, int]]:
    """Exact backtracking proper vertex coloring with at most `colors` colors.

    Deterministic: vertices in order of decreasing degree (id on ties),
    colors tried ascending.  Returns {vertex: color} or None.
    """
    if colors < 1:
        return None
    order = sorted(g.vertices(), key=lambda v: (-g.degree(v), v))
    assign: Dict[int, int] = {}

    def go(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        used = {assign[w] for w in g._adj[v] if w in assign}
        for c in range(1, colors + 1):
            if c in used:
                continue
            assign[v] = c
            if go(i + 1):
                return True
            del assign[v]
        return False

    if go(0):
        return dict(sorted(assign.items()))
    return None
