"""Small-graph streams: exhaustive enumeration and seeded random samples.

The exhaustive stream walks every labeled graph on n vertices as an edge
bitmask, keeps only masks whose degree sequence is already nondecreasing
(every isomorphism class has such a labeling, so nothing is lost), and
then collapses survivors by a canonical relabeling key.  The key is the
lexicographically smallest adjacency bitstring over all orderings that
respect the stable neighborhood-refinement classes; equal keys mean
isomorphic, so deduplication never drops a class, and since refinement
classes are isomorphism-invariant the key is in fact canonical.

The bitmask sweep is vectorized with numpy; seven vertices means 2^21
masks, which is well within one array pass.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

import numpy as np

from .errors import InvalidParams, TooLarge
from .graphs import Graph

MAX_EXHAUSTIVE_N = 7

_LUT16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.uint8)


def _popcount(a: np.ndarray) -> np.ndarray:
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(a).astype(np.uint8)
    return _LUT16[a & 0xFFFF] + _LUT16[a >> 16]


def _edge_positions(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def _mask_to_graph(n: int, mask: int, pos: list[tuple[int, int]]) -> Graph:
    return Graph(n, (pos[i] for i in range(len(pos)) if mask >> i & 1))


def _sorted_degree_masks(n: int) -> list[int]:
    """All edge bitmasks whose degree sequence is nondecreasing by label."""
    pos = _edge_positions(n)
    bits = len(pos)
    incidence = np.zeros(n, dtype=np.uint32)
    for i, (u, v) in enumerate(pos):
        incidence[u] |= np.uint32(1 << i)
        incidence[v] |= np.uint32(1 << i)
    masks = np.arange(1 << bits, dtype=np.uint32)
    keep = np.ones(masks.shape, dtype=bool)
    prev = None
    for v in range(n):
        deg = _popcount(masks & incidence[v])
        if prev is not None:
            keep &= prev <= deg
        prev = deg
    return masks[keep].tolist()


def refinement_classes(g: Graph) -> list[int]:
    """Stable neighborhood refinement: per-vertex class labels.

    Starts from degrees and repeatedly refines by the multiset of
    neighbor classes; labels are dense and deterministic.  Classes only
    ever split, so n rounds reach the stable partition.
    """
    colors = list(g.degrees())
    for _ in range(g.n):
        sig = [
            (colors[v], tuple(sorted(colors[w] for w in g.neighbors(v))))
            for v in range(g.n)
        ]
        relabel = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [relabel[s] for s in sig]
        if new == colors:
            break
        colors = new
    return colors


def canonical_key(g: Graph) -> tuple[int, int]:
    """(n, adjacency bits) under a canonical vertex order.

    Vertices are grouped by refinement class (class order is itself
    canonical, being a function of degree multisets only), and within
    that constraint the order minimizing the adjacency bitstring is found
    by extending all currently-tied prefixes one position at a time.
    """
    colors = refinement_classes(g)
    by_class: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        by_class.setdefault(c, []).append(v)
    slots: list[list[int]] = [by_class[c] for c in sorted(by_class)]

    prefixes: list[list[int]] = [[]]
    key = 0
    for cls in slots:
        for _ in cls:
            best_row = None
            extended: list[list[int]] = []
            for pre in prefixes:
                placed = set(pre)
                for v in cls:
                    if v in placed:
                        continue
                    row = 0
                    for i, u in enumerate(pre):
                        if g.has_edge(u, v):
                            row |= 1 << i
                    if best_row is None or row < best_row:
                        best_row = row
                        extended = [pre + [v]]
                    elif row == best_row:
                        extended.append(pre + [v])
            prefixes = extended
            key = (key << len(prefixes[0]) - 1) | best_row
    return (g.n, key)


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """Every graph on exactly n vertices, one per isomorphism class."""
    if n < 1:
        raise InvalidParams("need n >= 1")
    if n > MAX_EXHAUSTIVE_N:
        raise TooLarge(
            f"exhaustive enumeration is capped at {MAX_EXHAUSTIVE_N} vertices; "
            "use random_graphs for larger sizes"
        )
    pos = _edge_positions(n)
    seen: set[tuple[int, int]] = set()
    for mask in _sorted_degree_masks(n):
        g = _mask_to_graph(n, mask, pos)
        key = canonical_key(g)
        if key not in seen:
            seen.add(key)
            yield g


def enumerate_all(n_max: int) -> Iterator[Graph]:
    """Graphs of every order from 1 up to n_max, smallest first."""
    for n in range(1, n_max + 1):
        yield from enumerate_graphs(n)


def random_graphs(count: int, n_max: int, seed: int = 0) -> Iterator[Graph]:
    """Seeded uniform-order, uniform-density random graphs (n from 2 to n_max)."""
    if count < 0 or n_max < 2:
        raise InvalidParams("need count >= 0 and n_max >= 2")
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, n_max)
        p = rng.uniform(0.15, 0.85)
        edges = [e for e in combinations(range(n), 2) if rng.random() < p]
        yield Graph(n, edges)
