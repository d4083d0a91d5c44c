"""Vertex and edge connectivity with explicit dual certificates.

All quantities are computed two ways in this package: the routines here
reduce to max-flow (vertex-splitting for separators, plain unit/multiplicity
capacities for cuts), while `brute_force_connectivity` re-derives both
numbers by subset enumeration.  The test suite holds the two routes equal
on an exhaustive small-graph corpus.

Conventions: disconnected graphs have connectivity 0, complete graphs have
vertex connectivity n-1, and single-vertex graphs are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import NoSuchEdge, TooLarge, TooSmall
from .flow import INF, FlowNetwork
from .graphs import Edge, Graph, MultiGraph, components_of_subset, _norm_edge


@dataclass(frozen=True)
class Separator:
    """A vertex set whose removal disconnects the host graph."""

    vertices: tuple[int, ...]
    sides: tuple[frozenset[int], ...]

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Cut:
    """An edge set whose removal disconnects the host graph.

    `edges` lists each parallel class once; `size` counts multiplicities,
    so for simple graphs size == len(edges).
    """

    edges: tuple[Edge, ...]
    sides: tuple[frozenset[int], frozenset[int]]
    size: int


@dataclass(frozen=True)
class DisjointPaths:
    """A maximum family of disjoint A-B paths plus its Menger dual."""

    mode: str
    count: int
    paths: tuple[tuple[int, ...], ...]
    separator: Separator | None
    cut: Cut | None


# ---------------------------------------------------------------------------
# vertex connectivity
# ---------------------------------------------------------------------------


def _split_network(g: Graph, uncapped=frozenset()) -> FlowNetwork:
    # node 2v = v_in, 2v+1 = v_out
    net = FlowNetwork(2 * g.n)
    for v in range(g.n):
        net.add_arc(2 * v, 2 * v + 1, INF if v in uncapped else 1)
    for u, v in g.edges():
        net.add_arc(2 * u + 1, 2 * v, INF)
        net.add_arc(2 * v + 1, 2 * u, INF)
    return net

def _pair_flow(g: Graph, s: int, t: int, limit: int) -> tuple[int, FlowNetwork]:
    net = _split_network(g)
    value = net.max_flow(2 * s + 1, 2 * t, limit)
    return value, net


def _separator_from_residual(g: Graph, net: FlowNetwork, s: int) -> tuple[int, ...]:
    reach = net.residual_reachable(2 * s + 1)
    return tuple(sorted(v for v in range(g.n) if 2 * v in reach and 2 * v + 1 not in reach))


def _kappa_pairs(g: Graph):
    """Pair list sufficient for vertex connectivity, fixed-source style.

    Any minimum separator either avoids the anchor v0 (then it separates
    v0 from some non-neighbour) or contains it (then it separates two
    non-adjacent neighbours of v0, since a minimum separator sees every
    component).
    """
    v0 = min(range(g.n), key=lambda v: (g.degree(v), v))
    nb = g.neighbors(v0)
    for w in range(g.n):
        if w != v0 and w not in nb:
            yield v0, w
    for x, y in combinations(sorted(nb), 2):
        if not g.has_edge(x, y):
            yield x, y


def vertex_connectivity(g: Graph) -> int:
    """kappa(G); 0 when disconnected, n-1 when complete."""
    if g.n < 2:
        raise TooSmall("vertex connectivity needs at least 2 vertices")
    if not g.is_connected():
        return 0
    best = g.n - 1
    for s, t in _kappa_pairs(g):
        value, _ = _pair_flow(g, s, t, best)
        if value < best:
            best = value
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    """kappa(G) >= k, with flows cut off at k (cheaper than full kappa).

    The one-vertex graph is not considered k-connected for any k >= 1.
    """
    if k < 1:
        raise TooSmall("k must be at least 1")
    if g.n < k + 1:
        return False
    if not g.is_connected():
        return False
    for s, t in _kappa_pairs(g):
        value, _ = _pair_flow(g, s, t, k)
        if value < k:
            return False
    return True


def min_vertex_separator(g: Graph) -> Separator | None:
    """A minimum separator, lexicographically smallest among those the
    pair scan realises; None for complete graphs."""
    if g.n < 2:
        raise TooSmall("need at least 2 vertices")
    if not g.is_connected():
        return Separator((), tuple(g.components()))
    k = vertex_connectivity(g)
    if k == g.n - 1:
        return None
    best: tuple[int, ...] | None = None
    for s, t in _kappa_pairs(g):
        value, net = _pair_flow(g, s, t, k + 1)
        if value == k:
            sep = _separator_from_residual(g, net, s)
            if best is None or sep < best:
                best = sep
    assert best is not None and len(best) == k
    return Separator(best, tuple(components_of_subset(g, set(range(g.n)) - set(best))))


def min_separator_containing(g: Graph, x: int) -> Separator | None:
    """Smallest separator of G that contains the vertex x, or None.

    Reduction: T is a separator through x iff T - {x} separates two
    non-adjacent vertices of G - x, so the answer is {x} plus a minimum
    separator of G - x (or {x} alone if G - x is already disconnected).
    """
    if g.n < 3:
        raise TooSmall("need at least 3 vertices")
    h, old = g.delete_vertex(x)
    sub = min_vertex_separator(h)
    if sub is None:
        return None
    vertices = tuple(sorted({x} | {old[v] for v in sub.vertices}))
    sides = tuple(components_of_subset(g, set(range(g.n)) - set(vertices)))
    return Separator(vertices, sides)


# ---------------------------------------------------------------------------
# edge connectivity
# ---------------------------------------------------------------------------


def _edge_network(g) -> FlowNetwork:
    net = FlowNetwork(g.n)
    if isinstance(g, MultiGraph):
        for (u, v), k in g.mult.items():
            net.add_undirected(u, v, k)
    else:
        for u, v in g.edges():
            net.add_undirected(u, v, 1)
    return net


def _cut_from_side(g, side: set[int]) -> Cut:
    a = frozenset(side)
    b = frozenset(range(g.n)) - a
    if isinstance(g, MultiGraph):
        edges = tuple(sorted(e for e in g.mult if (e[0] in a) != (e[1] in a)))
        size = sum(g.mult[e] for e in edges)
    else:
        edges = tuple(e for e in g.edges() if (e[0] in a) != (e[1] in a))
        size = len(edges)
    return Cut(edges, (a, b), size)


def edge_connectivity(g) -> int:
    """lambda(G) for a Graph or MultiGraph; 0 when disconnected."""
    if g.n < 2:
        raise TooSmall("edge connectivity needs at least 2 vertices")
    if not g.is_connected():
        return 0
    degs = g.degrees()
    v0 = min(range(g.n), key=lambda v: (degs[v], v))
    best = degs[v0]
    for t in range(g.n):
        if t == v0:
            continue
        net = _edge_network(g)
        best = min(best, net.max_flow(v0, t, best))
        if best == 0:
            break
    return best


def is_k_edge_connected(g, k: int) -> bool:
    """lambda(G) >= k with early cutoff; K^1 rejected for every k >= 1."""
    if k < 1:
        raise TooSmall("k must be at least 1")
    if g.n < 2:
        return False
    if not g.is_connected():
        return False
    if min(g.degrees()) < k:
        return False
    v0 = 0
    for t in range(1, g.n):
        net = _edge_network(g)
        if net.max_flow(v0, t, k) < k:
            return False
    return True


def min_edge_cut(g) -> Cut:
    """A minimum edge cut, lexicographically smallest among those realised."""
    if g.n < 2:
        raise TooSmall("need at least 2 vertices")
    if not g.is_connected():
        comp = components_of_subset(g.skeleton() if isinstance(g, MultiGraph) else g, range(g.n))
        return _cut_from_side(g, set(comp[0]))
    k = edge_connectivity(g)
    degs = g.degrees()
    v0 = min(range(g.n), key=lambda v: (degs[v], v))
    best: Cut | None = None
    for t in range(g.n):
        if t == v0:
            continue
        net = _edge_network(g)
        if net.max_flow(v0, t, k + 1) == k:
            cut = _cut_from_side(g, net.residual_reachable(v0))
            if best is None or cut.edges < best.edges:
                best = cut
    assert best is not None and best.size == k
    return best


def min_cut_containing_edge(g, e: Edge) -> Cut:
    """Minimum edge cut through e = (u, v), i.e. a minimum u-v cut."""
    u, v = e
    has = g.multiplicity(u, v) > 0 if isinstance(g, MultiGraph) else g.has_edge(u, v)
    if not has:
        raise NoSuchEdge(f"({u},{v})")
    net = _edge_network(g)
    net.max_flow(u, v)
    return _cut_from_side(g, net.residual_reachable(u))


# ---------------------------------------------------------------------------
# disjoint path families (Menger duals)
# ---------------------------------------------------------------------------


def _decompose_paths(net: FlowNetwork, caps: list[int], source: int, sink: int, node_of) -> list[tuple[int, ...]]:
    # Walk unit flows from source to sink, consuming them arc by arc.
    flow = [caps[a] - net.cap[a] for a in range(len(net.cap))]
    paths = []
    while True:
        walk = []
        u = source
        while u != sink:
            for a in net.adj[u]:
                if a % 2 == 0 and flow[a] > 0:
                    flow[a] -= 1
                    walk.append(a)
                    u = net.to[a]
                    break
            else:
                break
        if u != sink:
            break
        verts: list[int] = []
        for a in walk:
            w = node_of(net.to[a])
            if w is None or (verts and verts[-1] == w):
                continue
            if w in verts:  # shortcut any cancellation loop in the flow
                del verts[verts.index(w) + 1 :]
            else:
                verts.append(w)
        paths.append(tuple(verts))
    return paths


def max_disjoint_paths(g: Graph, a_side, b_side, mode: str = "vertex",
                       endpoint_exempt: bool = True) -> DisjointPaths:
    """Maximum family of disjoint A-B paths with a matching dual certificate.

    mode="vertex": paths are vertex-disjoint; with `endpoint_exempt` (the
    classical Menger setting) vertices of A and B may be shared and the
    dual separator avoids them, otherwise paths are disjoint everywhere
    and the separator may cut inside A or B.
    mode="edge": edge-disjoint paths, dual is an edge cut.
    """
    A = frozenset(a_side)
    B = frozenset(b_side)
    if not A or not B:
        raise TooSmall("both endpoint sets must be non-empty")
    if A & B:
        raise TooSmall("endpoint sets must be disjoint")
    if mode == "vertex":
        work = g
        direct: list[tuple[int, ...]] = []
        if endpoint_exempt:
            # A direct A-B edge is itself a path and would otherwise give the
            # exempted endpoints unbounded throughput; peel such edges off
            # first (the adjacent-endpoints case of Menger's theorem).
            for u, v in g.edges():
                if (u in A and v in B) or (v in A and u in B):
                    direct.append((u, v) if u in A else (v, u))
                    work = work.delete_edge(u, v)
        uncapped = (A | B) if endpoint_exempt else frozenset()
        net = _split_network(work, uncapped)
        src = 2 * g.n
        net.adj.append([])
        net.n += 1
        snk = 2 * g.n + 1
        net.adj.append([])
        net.n += 1
        for a in sorted(A):
            net.add_arc(src, 2 * a, INF)
        for b in sorted(B):
            net.add_arc(2 * b + 1, snk, INF)
        caps_snapshot = list(net.cap)
        value = net.max_flow(src, snk)
        reach = net.residual_reachable(src)
        sep_vertices = tuple(sorted(v for v in range(g.n) if 2 * v in reach and 2 * v + 1 not in reach))
        sides = tuple(components_of_subset(g, set(range(g.n)) - set(sep_vertices)))
        cert = Separator(sep_vertices, sides)
        paths = _decompose_paths(
            net, caps_snapshot, src, snk,
            lambda node: node // 2 if node < 2 * g.n else None,
        )
        assert value == len(sep_vertices), "Menger duality must certify the count"
        return DisjointPaths("vertex", value + len(direct), tuple(direct) + tuple(paths), cert, None)
    if mode == "edge":
        net = _edge_network(g)
        src = g.n
        net.adj.append([])
        net.n += 1
        snk = g.n + 1
        net.adj.append([])
        net.n += 1
        for a in sorted(A):
            net.add_arc(src, a, INF)
        for b in sorted(B):
            net.add_arc(b, snk, INF)
        caps_snapshot = list(net.cap)
        value = net.max_flow(src, snk)
        reach = net.residual_reachable(src)
        cut = _cut_from_side(g, {v for v in reach if v < g.n})
        paths = _decompose_paths(net, caps_snapshot, src, snk, lambda node: node if node < g.n else None)
        assert cut.size == value, "Menger duality must certify the count"
        return DisjointPaths("edge", value, tuple(paths), None, cut)
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# brute-force oracle
# ---------------------------------------------------------------------------


def brute_force_connectivity(g) -> tuple[int, int]:
    """(kappa, lambda) by raw subset enumeration; guard at 12 vertices.

    This is the independent oracle for the flow route: vertex connectivity
    tries all deletion sets by size, edge connectivity scans all
    bipartitions.  Accepts MultiGraph for the lambda part (kappa is then
    computed on the skeleton, where parallel edges are irrelevant).
    """
    if g.n < 2:
        raise TooSmall("need at least 2 vertices")
    if g.n > 12:
        raise TooLarge("brute force capped at 12 vertices")
    simple = g.skeleton() if isinstance(g, MultiGraph) else g

    kappa = simple.n - 1
    found = False
    for size in range(simple.n - 1):
        for sub in combinations(range(simple.n), size):
            rest = set(range(simple.n)) - set(sub)
            if len(components_of_subset(simple, rest)) > 1:
                kappa = size
                found = True
                break
        if found:
            break

    if isinstance(g, MultiGraph):
        weight = dict(g.mult)
        ew = list(weight.items())
    else:
        ew = [(e, 1) for e in g.edges()]
    lam = sum(w for _, w in ew) + 1
    for mask in range(2 ** (g.n - 1)):
        side = {0} | {v + 1 for v in range(g.n - 1) if mask >> v & 1}
        if len(side) == g.n:
            continue
        crossing = sum(w for (u, v), w in ew if (u in side) != (v in side))
        lam = min(lam, crossing)
    return kappa, lam


def edge_connectivity_by_subdivision(mg: MultiGraph) -> int:
    """lambda of a multigraph via the subdivide-then-solve reduction.

    Subdividing every edge copy once turns parallel edges into disjoint
    paths of length two without changing any cut size, so the simple-graph
    routine applies.  Kept as a second, structurally different route for
    the multigraph code path.
    """
    if mg.n < 2:
        raise TooSmall("need at least 2 vertices")
    simple, _ = mg.subdivide()
    if not simple.is_connected():
        return 0
    best = INF
    for t in range(1, mg.n):
        net = _edge_network(simple)
        best = min(best, net.max_flow(0, t, best))
        if best == 0:
            break
    return best
