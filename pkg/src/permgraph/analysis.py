"""Exact deciders for the graph properties used by the classification results."""

from __future__ import annotations

import json
import math
from collections import Counter, deque
from dataclasses import asdict, dataclass
from functools import total_ordering

from .graph import Graph, PermGraph
from .planarity import is_planar


@total_ordering
class Infinity:
    """Girth or diameter of a graph without cycles / without connecting paths."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return isinstance(other, Infinity) or other == math.inf

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return not self == other

    def __hash__(self):
        return hash(math.inf)

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"


INF = Infinity()


def _plain(g: Graph | PermGraph) -> Graph:
    return g.graph if isinstance(g, PermGraph) else g


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        q = deque([s])
        while q:
            x = q.popleft()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    q.append(y)
        out.append(sorted(comp))
    return out


def bfs_distances(g: Graph, s: int) -> list[int | None]:
    dist: list[int | None] = [None] * g.n
    dist[s] = 0
    q = deque([s])
    while q:
        x = q.popleft()
        for y in g.adj[x]:
            if dist[y] is None:
                dist[y] = dist[x] + 1
                q.append(y)
    return dist


def diameter(g: Graph):
    """Largest distance over all vertex pairs; INF when disconnected."""
    best = 0
    for s in range(g.n):
        d = bfs_distances(g, s)
        if any(x is None for x in d):
            return INF
        best = max(best, max(d))
    return best


def girth(g: Graph):
    """Length of a shortest cycle, by breadth-first search from every vertex."""
    best = INF
    for r in range(g.n):
        dist = {r: 0}
        parent = {r: -1}
        q = deque([r])
        while q:
            u = q.popleft()
            # any cycle closed from here has length >= 2 * dist[u]
            if 2 * dist[u] >= best:
                break
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
        if best == 3:
            break
    return best


def bipartition(g: Graph) -> list[int] | None:
    """A proper 2-colouring, or None if the graph has an odd cycle."""
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for y in g.adj[x]:
                if colour[y] == -1:
                    colour[y] = 1 - colour[x]
                    q.append(y)
                elif colour[y] == colour[x]:
                    return None
    return colour


def has_triangle(g: Graph) -> bool:
    bits = g.adj_bits
    return any(bits[u] & bits[v] for u, v in g.edges)


def claw_free(g: Graph) -> bool:
    """No induced K_{1,3}: no vertex has three pairwise non-adjacent neighbours."""
    bits = g.adj_bits
    for v in range(g.n):
        nv = bits[v]
        for a in g.adj[v]:
            # neighbours of v, other than a, that are not adjacent to a
            rest = nv & ~bits[a] & ~(1 << a)
            b_iter = rest
            while b_iter:
                low = b_iter & -b_iter
                b = low.bit_length() - 1
                b_iter ^= low
                if rest & ~bits[b] & ~(1 << b):
                    return False
    return True


def contains_claw(g: Graph) -> bool:
    """K_{1,3} as a (not necessarily induced) subgraph: some vertex of degree >= 3."""
    return any(len(s) >= 3 for s in g.adj)


def contains_p2(g: Graph) -> bool:
    """A path with two edges as a (not necessarily induced) subgraph."""
    return any(len(s) >= 2 for s in g.adj)


def contains_induced_p2(g: Graph) -> bool:
    bits = g.adj_bits
    for v in range(g.n):
        for a in g.adj[v]:
            if bits[v] & ~bits[a] & ~(1 << a):
                return True
    return False


def _name_connected(g: Graph) -> str | None:
    n, m = g.n, g.m
    degs = g.degrees()
    if n == 1:
        return "K1"
    if m == n * (n - 1) // 2:
        return f"K{n}"
    col = bipartition(g)
    if col is not None:
        x = col.count(0)
        y = n - x
        if m == x * y:
            a, b = sorted((x, y))
            return f"K{a},{b}"
    if m == n and all(d == 2 for d in degs):
        return f"C{n}"
    if m == n - 1 and max(degs) <= 2:
        return f"P{m}"
    return None


def recognize(g: Graph | PermGraph) -> str | None:
    """Canonical ASCII name (``K4``, ``K1,3``, ``K3+4K1``) or None."""
    g = _plain(g)
    if g.n == 0:
        return None
    parts = []
    for comp in components(g):
        name = _name_connected(g.induced(comp))
        if name is None:
            return None
        parts.append((len(comp), name))
    counts = Counter(parts)
    ordered = sorted(counts, key=lambda p: (-p[0], p[1]))
    return "+".join(name if counts[(k, name)] == 1 else f"{counts[(k, name)]}{name}" for k, name in ordered)


@dataclass(frozen=True)
class AnalysisReport:
    vertices: int
    edges: int
    connected: bool
    diameter: object
    girth: object
    bipartite: bool
    complete: bool
    complete_bipartite: bool
    tree: bool
    star: bool
    path: bool
    path_length: int | None
    cycle: bool
    cycle_length: int | None
    regular: bool
    regular_degree: int | None
    totally_disconnected: bool
    triangle_free: bool
    claw_free: bool
    contains_claw: bool
    unicyclic: bool
    planar: bool
    universal_vertices: int
    recognized_name: str | None

    def to_dict(self) -> dict:
        d = asdict(self)
        for k in ("diameter", "girth"):
            if isinstance(d[k], Infinity):
                d[k] = "inf"
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        return "".join(f"{k}: {_fmt(v)}\n" for k, v in self.to_dict().items())


def _fmt(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def analyze(gr: Graph | PermGraph) -> AnalysisReport:
    g = _plain(gr)
    n, m = g.n, g.m
    if n < 1:
        raise ValueError("cannot analyse a graph with no vertices")
    degs = g.degrees()
    comps = components(g)
    connected = len(comps) == 1
    col = bipartition(g)
    bip = col is not None
    tree = connected and m == n - 1
    complete_bip = False
    star = False
    if connected and bip:
        x = col.count(0)
        y = n - x
        complete_bip = m == x * y
        # a lone vertex counts as the star K_{1,0}
        star = complete_bip and min(x, y) <= 1
    is_path = tree and max(degs, default=0) <= 2
    is_cycle = connected and n >= 3 and all(d == 2 for d in degs)
    regular = len(set(degs)) == 1
    return AnalysisReport(
        vertices=n,
        edges=m,
        connected=connected,
        diameter=diameter(g),
        girth=girth(g),
        bipartite=bip,
        complete=m == n * (n - 1) // 2,
        complete_bipartite=complete_bip,
        tree=tree,
        star=star,
        path=is_path,
        path_length=m if is_path else None,
        cycle=is_cycle,
        cycle_length=n if is_cycle else None,
        regular=regular,
        regular_degree=degs[0] if regular else None,
        totally_disconnected=m == 0,
        triangle_free=not has_triangle(g),
        claw_free=claw_free(g),
        contains_claw=contains_claw(g),
        unicyclic=m - n + len(comps) == 1,
        planar=is_planar(g),
        universal_vertices=sum(1 for d in degs if d == n - 1),
        recognized_name=recognize(g),
    )
