"""Star expressions of graphs and the lattices they generate.

Any connected graph with an internal vertex is a coinciding-combination
of stars, one star K_{1,deg(w)} per non-leaf vertex w; the script type
below records the star multiset and the merge steps so the expression
can be replayed.  On top of that sit the membership/construction views:
haired cycles closed into hamiltonian graphs, planar members with their
4-colorings, the labeled spanning trees with rainbow colors, Euler
expressions, and color-preserving membership against a colored system.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .graph import (
    Graph,
    canonical_form,
    canonical_relabel,
    connected_components,
    degree_sequence,
    find_hamilton_cycle,
    find_proper_vertex_coloring,
    is_connected,
    is_planar,
    is_tree,
)
from .families import prufer_to_tree
from .coloring import TotalColoring, is_proper_total
from .leafops import (
    LeafEdge,
    disjoint_union,
    leaf_coincide,
    leaf_split,
    colored_leaf_coincide,
)
from .system import ColoredIceFlowerSystem, IceFlowerSystem, Star, make_star

Step = Tuple[int, int, int, int]  # (instance, leaf slot, instance, leaf slot)


@dataclass
class CoincideScript:
    """A star multiset plus merge steps; replaying rebuilds one graph.

    Star instances are numbered 1..sum(coefficients), grouped by base
    position and copy order.  Leaf slot l of an instance of K_{1,m}
    means the l-th canonical leaf (1-based); each slot can be consumed
    by at most one step.
    """

    base: IceFlowerSystem
    coefficients: Tuple[int, ...]
    steps: Tuple[Step, ...]

    def __post_init__(self):
        if len(self.coefficients) != self.base.n:
            raise ValueError("one coefficient per base star required")
        if any(a < 0 for a in self.coefficients):
            raise ValueError("coefficients must be non-negative")
        if sum(self.coefficients) < 1:
            raise ValueError("at least one star copy required")

    def instance_sizes(self) -> List[int]:
        """Star size m for each instance, in instance order."""
        out: List[int] = []
        for star, a in zip(self.base.stars, self.coefficients):
            out.extend([star.m] * a)
        return out


def _replay(
    script: CoincideScript,
    system: Optional[ColoredIceFlowerSystem] = None,
) -> Tuple[Graph, Optional[TotalColoring]]:
    """Expand the star copies and run the merge steps in order.

    With a colored system the same steps run through the color-aware
    merge, so every step is also checked for color compatibility.
    """
    sizes = script.instance_sizes()
    colorings: List[Optional[TotalColoring]] = []
    if system is not None:
        if system.sizes() != script.base.sizes():
            raise ValueError("system stars do not match the script base")
        for f, a in zip(system.colorings, script.coefficients):
            colorings.extend([f] * a)
    else:
        colorings = [None] * len(sizes)

    edges: List[Tuple[int, int]] = []
    vc: Dict[int, int] = {}
    ec: Dict[Tuple[int, int], int] = {}
    # (instance, slot) -> current vertex id; slot 0 is the center
    where: Dict[Tuple[int, int], Optional[int]] = {}
    offset = 0
    for t, m in enumerate(sizes, start=1):
        where[(t, 0)] = offset + 1
        for l in range(1, m + 1):
            where[(t, l)] = offset + 1 + l
            edges.append((offset + 1, offset + 1 + l))
        f = colorings[t - 1]
        if f is not None:
            for v in range(1, m + 2):
                vc[offset + v] = f.vertex(v)
            for l in range(1, m + 1):
                ec[(offset + 1, offset + 1 + l)] = f.edge(1, 1 + l)
        offset += m + 1
    g = Graph(offset, edges)
    theta = (
        TotalColoring(max(f.palette for f in system.colorings), vc, ec)
        if system is not None
        else None
    )

    for t1, l1, t2, l2 in script.steps:
        for t, l in ((t1, l1), (t2, l2)):
            if (t, l) not in where:
                raise ValueError("step references unknown slot (%d,%d)" % (t, l))
            if l < 1:
                raise ValueError("steps must consume leaf slots, not centers")
            if where[(t, l)] is None:
                raise ValueError("slot (%d,%d) already consumed" % (t, l))
        e1 = LeafEdge(where[(t1, 0)], where[(t1, l1)])
        e2 = LeafEdge(where[(t2, 0)], where[(t2, l2)])
        if theta is None:
            res = leaf_coincide(g, e1, e2)
        else:
            res, theta = colored_leaf_coincide(g, theta, e1, e2)
        g = res.graph
        m = res.vertex_map
        where = {
            key: (m.get(v) if v is not None else None) for key, v in where.items()
        }
    return g, theta


def recompose(script: CoincideScript) -> Graph:
    """Replay a script into its graph."""
    g, _ = _replay(script)
    return g


def recompose_colored(
    script: CoincideScript, system: ColoredIceFlowerSystem
) -> Tuple[Graph, TotalColoring]:
    """Replay a script with the system's star colorings carried along."""
    g, theta = _replay(script, system)
    assert theta is not None
    return g, theta


def _script_over_base(
    g: Graph, sizes: Sequence[int]
) -> Optional[CoincideScript]:
    """Express g over stars of the given sizes, or None on a size mismatch.

    One star per non-leaf vertex; every internal edge becomes a step.
    Leaf slots follow ascending neighbor order, so scripts are canonical.
    """
    if g.q == 0:
        raise ValueError("edgeless graph has no star expression")
    if not is_connected(g):
        raise ValueError("star expressions need a connected graph")
    non_leaf = [w for w in g.vertices() if g.degree(w) >= 2]
    if not non_leaf:
        raise ValueError("no internal vertex (p <= 2); nothing to express")

    assigned: Dict[int, int] = {}  # non-leaf vertex -> base position
    for w in non_leaf:
        for bi, m in enumerate(sizes):
            if m == g.degree(w):
                assigned[w] = bi
                break
        else:
            return None

    coefficients = [0] * len(sizes)
    instance: Dict[int, int] = {}
    t = 0
    for bi in range(len(sizes)):
        for w in non_leaf:
            if assigned[w] == bi:
                t += 1
                instance[w] = t
                coefficients[bi] += 1
    # re-number instances in base-position grouping order
    slot_of: Dict[int, Dict[int, int]] = {
        w: {u: i + 1 for i, u in enumerate(g.neighbors(w))} for w in non_leaf
    }
    steps: List[Step] = []
    for u, v in g.edges():
        if g.degree(u) >= 2 and g.degree(v) >= 2:
            steps.append((instance[u], slot_of[u][v], instance[v], slot_of[v][u]))
    base = IceFlowerSystem([make_star(m) for m in sizes])
    script = CoincideScript(base, tuple(coefficients), tuple(steps))
    assert sum(coefficients) == len(non_leaf)
    assert g.q == sum(a * s.m for a, s in zip(coefficients, base.stars)) - len(steps)
    return script


def decompose_to_stars(g: Graph) -> CoincideScript:
    """Star expression of a connected graph: one K_{1,deg(w)} per internal
    vertex w, merged along the internal edges.  Base stars are the
    distinct internal degrees, ascending."""
    sizes = sorted({g.degree(w) for w in g.vertices() if g.degree(w) >= 2})
    if not sizes:
        if g.q == 0:
            raise ValueError("edgeless graph has no star expression")
        raise ValueError("no internal vertex (p <= 2); nothing to express")
    script = _script_over_base(g, sizes)
    assert script is not None  # sizes were read off g itself
    return script


def uncolored_lattice_member(
    g: Graph, base: IceFlowerSystem
) -> Optional[CoincideScript]:
    """A script over the given base, or None when some internal degree of
    g has no star of matching size."""
    return _script_over_base(g, [s.m for s in base.stars])


def euler_expression(g: Graph) -> Optional[CoincideScript]:
    """Star expression when g is connected with all degrees even (and has
    at least one edge); None otherwise."""
    if g.q == 0 or not is_connected(g):
        return None
    if any(g.degree(v) % 2 for v in g.vertices()):
        return None
    return decompose_to_stars(g)


# -- haired cycles and the hamiltonian view --------------------------------


@dataclass
class HairedCycle:
    """A cycle of former star centers with leftover pendant leaves."""

    graph: Graph
    spine: List[int]  # cyclic order of centers
    pendants: Dict[int, List[int]]  # spine vertex -> its pendant leaf ids

    def pendant_count(self) -> int:
        return sum(len(v) for v in self.pendants.values())


def build_haired_cycle(degrees: Sequence[int]) -> HairedCycle:
    """Chain stars K_{1,m_i} into a cycle of their centers.

    Star i donates its last leaf to reach star i+1's first leaf; the
    cycle closes between star n's last leaf and star 1's first leaf.
    Spine vertex i keeps m_i - 2 pendant leaves.
    """
    n = len(degrees)
    if n < 3:
        raise ValueError("a cycle needs at least 3 spine vertices")
    if any(m < 2 for m in degrees):
        raise ValueError("every spine degree must be >= 2")

    g = make_star(degrees[0]).graph
    centers: List[int] = [1]
    free: List[List[int]] = [[1 + l for l in range(1, degrees[0] + 1)]]

    def remap(mapping: Dict[int, int]) -> None:
        for i in range(len(centers)):
            centers[i] = mapping[centers[i]]
            free[i] = [mapping[v] for v in free[i]]

    for i in range(1, n):
        star = make_star(degrees[i]).graph
        shift = g.p
        g, _ = disjoint_union(g, star)
        centers.append(1 + shift)
        free.append([1 + l + shift for l in range(1, degrees[i] + 1)])
        donor = free[i - 1].pop()  # last free leaf of the previous star
        taken = free[i].pop(0)  # first leaf of the new star
        res = leaf_coincide(g, LeafEdge(centers[i - 1], donor), LeafEdge(centers[i], taken))
        g = res.graph
        remap(res.vertex_map)

    res = leaf_coincide(
        g,
        LeafEdge(centers[n - 1], free[n - 1].pop()),
        LeafEdge(centers[0], free[0].pop(0)),
    )
    g = res.graph
    remap(res.vertex_map)

    hc = HairedCycle(g, list(centers), {centers[i]: list(free[i]) for i in range(n)})
    for i in range(n):
        assert g.degree(centers[i]) == degrees[i]
        assert g.has_edge(centers[i], centers[(i + 1) % n])
    assert g.p == sum(degrees) - n and g.q == sum(degrees) - n
    return hc


@dataclass
class ClosureResult:
    graphs: List[Graph]  # canonically labeled, sorted, deduplicated
    partial: bool  # True when sampling replaced the exhaustive sweep


def _chord_graphs(
    n: int, residual: List[int]
) -> List[List[Tuple[int, int]]]:
    """All simple chord sets on spine positions 0..n-1 realizing the given
    degrees while avoiding the n cycle edges."""
    pairs = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if not (j - i == 1 or (i == 0 and j == n - 1))
    ]
    # how many not-yet-decided pairs touch each position
    avail = [0] * n
    for i, j in pairs:
        avail[i] += 1
        avail[j] += 1
    out: List[List[Tuple[int, int]]] = []
    chosen: List[Tuple[int, int]] = []
    res = list(residual)

    def rec(idx: int) -> None:
        if all(r == 0 for r in res):
            out.append(list(chosen))
            return
        if idx == len(pairs):
            return
        i, j = pairs[idx]
        avail[i] -= 1
        avail[j] -= 1
        if res[i] > 0 and res[j] > 0:
            res[i] -= 1
            res[j] -= 1
            chosen.append((i, j))
            rec(idx + 1)
            chosen.pop()
            res[i] += 1
            res[j] += 1
        # skip this pair only if everyone can still be served without it
        if all(res[v] <= avail[v] for v in range(n)):
            rec(idx + 1)
        avail[i] += 1
        avail[j] += 1

    rec(0)
    return out


def close_to_hamiltonian(
    hc: HairedCycle,
    exhaustive_limit: int = 20,
    seed: int = 0,
    samples: int = 2000,
) -> ClosureResult:
    """Every way to pair off the pendant leaves without multi-edges.

    Pendants at one spine vertex are interchangeable, so pairings are
    enumerated as chord sets on the spine: simple, loop-free, disjoint
    from the cycle, with chord-degree m_i - 2 at spine vertex i.  Each
    chord set is replayed through leaf merges and the results are
    deduplicated up to isomorphism (canonical labels, sorted).

    Beyond `exhaustive_limit` pendants the sweep switches to seeded
    random pairings and the result is flagged partial.
    """
    n = len(hc.spine)
    residual = [len(hc.pendants[v]) for v in hc.spine]
    total = sum(residual)
    if total % 2:
        raise ValueError("odd pendant count: no perfect pairing exists")
    if total == 0:
        return ClosureResult([canonical_relabel(hc.graph)], False)

    partial = total > exhaustive_limit
    if not partial:
        chord_sets = _chord_graphs(n, residual)
    else:
        rng = random.Random(seed)
        slots = []
        for i in range(n):
            slots.extend([i] * residual[i])
        seen_sets = set()
        for _ in range(samples):
            order = list(slots)
            rng.shuffle(order)
            pairing = [
                (min(a, b), max(a, b))
                for a, b in zip(order[::2], order[1::2])
            ]
            if any(a == b for a, b in pairing):
                continue
            if any(b - a == 1 or (a == 0 and b == n - 1) for a, b in pairing):
                continue
            if len(set(pairing)) != len(pairing):
                continue
            seen_sets.add(tuple(sorted(pairing)))
        chord_sets = [list(s) for s in sorted(seen_sets)]

    if not chord_sets:
        raise ValueError("no pairing avoids multi-edges")

    results: Dict[Tuple, Graph] = {}
    for chords in chord_sets:
        g = hc.graph
        centers = list(hc.spine)
        pend = [list(hc.pendants[v]) for v in hc.spine]
        for i, j in sorted(chords):
            e1 = LeafEdge(centers[i], pend[i].pop(0))
            e2 = LeafEdge(centers[j], pend[j].pop(0))
            res = leaf_coincide(g, e1, e2)
            g = res.graph
            m = res.vertex_map
            centers = [m[c] for c in centers]
            pend = [[m[x] for x in lst] for lst in pend]
        key = canonical_form(g)
        if key not in results:
            results[key] = Graph(key[0], key[1])
    ordered = [results[k] for k in sorted(results)]
    return ClosureResult(ordered, partial)


def hamiltonian_lattice_member(g: Graph) -> bool:
    """Connected, min degree >= 2, and carrying a full closed tour."""
    if not is_connected(g):
        return False
    if min(g.degree(v) for v in g.vertices()) < 2:
        return False
    return find_hamilton_cycle(g) is not None


def hamiltonian_witness(g: Graph) -> Optional[HairedCycle]:
    """Split every off-tour edge of a hamiltonian graph, exposing the
    haired cycle it came from (inverse of the closing construction)."""
    cycle = find_hamilton_cycle(g)
    if cycle is None:
        return None
    on_cycle = set()
    p = len(cycle)
    for i in range(p):
        a, b = cycle[i], cycle[(i + 1) % p]
        on_cycle.add((min(a, b), max(a, b)))
    cur = g
    pendants: Dict[int, List[int]] = {v: [] for v in cycle}
    for u, v in g.edges():
        if (u, v) in on_cycle:
            continue
        res = leaf_split(cur, u, v)
        cur = res.graph
        pendants[u].append(res.leaf_at_u)
        pendants[v].append(res.leaf_at_v)
    hc = HairedCycle(cur, list(cycle), pendants)
    for x in cycle:
        assert cur.degree(x) == g.degree(x)
    return hc


# -- planar, spanning, colored views ---------------------------------------


def planar_lattice_member(g: Graph) -> Optional[Dict[int, int]]:
    """A 4-palette proper vertex coloring iff g is connected, planar and
    leafless; None otherwise."""
    if not is_connected(g) or not is_planar(g):
        return None
    if any(g.degree(v) == 1 for v in g.vertices()):
        return None
    coloring = find_proper_vertex_coloring(g, 4)
    assert coloring is not None  # guaranteed for planar graphs
    return coloring


def spanning_lattice_count(m: int) -> int:
    """Number of labeled trees on m vertices."""
    if m < 2:
        raise ValueError("m >= 2 required")
    return m ** (m - 2)


def spanning_lattice_enumerate(m: int) -> List[Tuple[Graph, Dict[int, int]]]:
    """All labeled trees on m vertices, each with the rainbow coloring
    v_i -> i.  Trees are distinguishable by their labels, so there is
    deliberately no isomorphism dedup; order follows the code sweep."""
    if m < 2:
        raise ValueError("m >= 2 required")
    rainbow = {i: i for i in range(1, m + 1)}
    if m == 2:
        return [(Graph(2, [(1, 2)]), dict(rainbow))]
    out: List[Tuple[Graph, Dict[int, int]]] = []
    seq = [1] * (m - 2)
    while True:
        out.append((prufer_to_tree(tuple(seq), m), dict(rainbow)))
        i = m - 3
        while i >= 0 and seq[i] == m:
            seq[i] = 1
            i -= 1
        if i < 0:
            break
        seq[i] += 1
    return out


def _star_signature(center_color: int, pairs) -> Tuple:
    return (len(pairs), center_color, tuple(sorted(pairs)))


def colored_lattice_member(
    g: Graph, f: TotalColoring, base: ColoredIceFlowerSystem
) -> Optional[CoincideScript]:
    """Express (g, f) over the colored base, color-preservingly.

    Splitting every internal edge of g turns it into one colored star
    per internal vertex w: center colored f(w), each leaf copying the
    far endpoint's color, each leaf-edge keeping its edge color.  The
    member test matches every such star against a base star with the
    same size, center color, and (edge color, leaf color) multiset; the
    step list then records which base leaf slot each edge consumes.
    """
    if not is_proper_total(g, f):
        raise ValueError("membership is defined for proper total colorings")
    non_leaf = [w for w in g.vertices() if g.degree(w) >= 2]
    if not non_leaf or not is_connected(g):
        return None

    base_sigs: List[Tuple] = []
    base_slot_order: List[List[int]] = []
    for star, bf in zip(base.stars, base.colorings):
        pairs = [(bf.edge(1, l), bf.vertex(l)) for l in star.leaves]
        base_sigs.append(_star_signature(bf.vertex(1), pairs))
        # slots sorted by their (edge color, leaf color) pair
        order = sorted(range(1, star.m + 1), key=lambda l: pairs[l - 1])
        base_slot_order.append(order)

    assigned: Dict[int, int] = {}
    slot_map: Dict[int, Dict[int, int]] = {}  # w -> neighbor -> base slot
    for w in non_leaf:
        pairs = [(f.edge(w, u), f.vertex(u)) for u in g.neighbors(w)]
        sig = _star_signature(f.vertex(w), pairs)
        for bi, bsig in enumerate(base_sigs):
            if sig == bsig:
                assigned[w] = bi
                nbr_order = sorted(
                    g.neighbors(w), key=lambda u: (f.edge(w, u), f.vertex(u))
                )
                slot_map[w] = {
                    u: base_slot_order[bi][i] for i, u in enumerate(nbr_order)
                }
                break
        else:
            return None

    coefficients = [0] * base.n
    instance: Dict[int, int] = {}
    t = 0
    for bi in range(base.n):
        for w in non_leaf:
            if assigned[w] == bi:
                t += 1
                instance[w] = t
                coefficients[bi] += 1
    steps: List[Step] = []
    for u, v in g.edges():
        if g.degree(u) >= 2 and g.degree(v) >= 2:
            steps.append((instance[u], slot_map[u][v], instance[v], slot_map[v][u]))
    return CoincideScript(base.backbone(), tuple(coefficients), tuple(steps))
