"""Exact graph isomorphism by backtracking with degree-based pruning."""

from __future__ import annotations

from collections import Counter

from .errors import SizeLimitError
from .graph import Graph, PermGraph

ISO_CAP = 256


def _plain(g: Graph | PermGraph) -> Graph:
    return g.graph if isinstance(g, PermGraph) else g


def _refine(g1: Graph, g2: Graph) -> tuple[list[int], list[int]] | None:
    """Joint colour refinement starting from degrees.

    Colours are shared between the two graphs, so a histogram mismatch at any
    round proves non-isomorphism.
    """
    c1, c2 = g1.degrees(), g2.degrees()
    classes = -1
    while True:
        if Counter(c1) != Counter(c2):
            return None
        sig1 = [(c1[v], tuple(sorted(c1[w] for w in g1.adj[v]))) for v in range(g1.n)]
        sig2 = [(c2[v], tuple(sorted(c2[w] for w in g2.adj[v]))) for v in range(g2.n)]
        palette = {s: i for i, s in enumerate(sorted(set(sig1) | set(sig2)))}
        c1 = [palette[s] for s in sig1]
        c2 = [palette[s] for s in sig2]
        k = len(palette)
        if k == classes:
            if Counter(c1) != Counter(c2):
                return None
            return c1, c2
        classes = k


def find_isomorphism(g1: Graph | PermGraph, g2: Graph | PermGraph, cap: int = ISO_CAP) -> dict[int, int] | None:
    """Return a vertex bijection ``g1 -> g2`` preserving adjacency, or None."""
    g1, g2 = _plain(g1), _plain(g2)
    if max(g1.n, g2.n) > cap:
        raise SizeLimitError(f"graph isomorphism capped at {cap} vertices")
    if g1.n != g2.n or g1.m != g2.m:
        return None
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    if g1.n == 0:
        return {}
    colours = _refine(g1, g2)
    if colours is None:
        return None
    c1, c2 = colours
    size = Counter(c1)

    # most constrained first: many placed neighbours, then small colour class
    order: list[int] = []
    placed = set()
    while len(order) < g1.n:
        v = max(
            (u for u in range(g1.n) if u not in placed),
            key=lambda u: (len(g1.adj[u] & placed), -size[c1[u]], g1.degree(u), -u),
        )
        order.append(v)
        placed.add(v)

    by_colour: dict[int, list[int]] = {}
    for w in range(g2.n):
        by_colour.setdefault(c2[w], []).append(w)
    bits2 = g2.adj_bits
    mapping: dict[int, int] = {}
    used = 0

    def search(i: int) -> bool:
        nonlocal used
        if i == len(order):
            return True
        v = order[i]
        want = 0
        for u in g1.adj[v]:
            if u in mapping:
                want |= 1 << mapping[u]
        for w in by_colour[c1[v]]:
            if used >> w & 1:
                continue
            if bits2[w] & used != want:
                continue
            mapping[v] = w
            used |= 1 << w
            if search(i + 1):
                return True
            used &= ~(1 << w)
            del mapping[v]
        return False

    if search(0):
        return dict(sorted(mapping.items()))
    return None


def is_isomorphic(g1: Graph | PermGraph, g2: Graph | PermGraph, cap: int = ISO_CAP) -> bool:
    return find_isomorphism(g1, g2, cap) is not None
