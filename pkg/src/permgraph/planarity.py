"""Exact planarity testing.

Graphs are split into biconnected blocks and each block is embedded by
path addition (Demoucron, Malgrange and Pertuiset): start from a cycle,
then repeatedly route a path of some fragment through a face that holds all
of the fragment's attachment vertices.  A fragment with no such face proves
the block non-planar.
"""

from __future__ import annotations

from collections import deque

from .graph import Graph


def euler_bound_violated(g: Graph) -> bool:
    """|E| > 3|V| - 6 for a graph with at least three vertices."""
    return g.n >= 3 and g.m > 3 * g.n - 6


def biconnected_blocks(g: Graph) -> list[list[tuple[int, int]]]:
    """Edge sets of the biconnected blocks (iterative Tarjan)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    t = 0
    blocks: list[list[tuple[int, int]]] = []
    estack: list[tuple[int, int]] = []
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(sorted(g.adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for w in it:
                if disc[w] == -1:
                    estack.append((v, w))
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter(sorted(g.adj[w]))))
                    descended = True
                    break
                if w != parent and disc[w] < disc[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    block = []
                    while True:
                        e = estack.pop()
                        block.append(e)
                        if e == (u, v):
                            break
                    blocks.append(block)
    return blocks


def _arc(face: list[int], i: int, j: int) -> list[int]:
    # face[i], face[i+1], ..., face[j] cyclically, inclusive
    if i <= j:
        return face[i : j + 1]
    return face[i:] + face[: j + 1]


def _embed_block(edges: list[tuple[int, int]]) -> bool:
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    nv = len(adj)
    if nv < 4 or len(edges) <= 3:
        return True
    if len(edges) > 3 * nv - 6:
        return False

    # initial cycle: edge (u, v) plus a shortest v-u path avoiding it
    u0, v0 = min(edges)
    prev = {v0: None}
    queue = deque([v0])
    while queue:
        x = queue.popleft()
        if x == u0:
            break
        for y in sorted(adj[x]):
            if y not in prev and not (x == v0 and y == u0):
                prev[y] = x
                queue.append(y)
    cycle = []
    x = u0
    while x is not None:
        cycle.append(x)
        x = prev[x]
    # cycle runs u0 ... v0; closing edge (v0, u0)
    h_vertices = set(cycle)
    h_edges = {frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))}
    faces = [list(cycle), list(cycle)]
    total = len(edges)

    while len(h_edges) < total:
        fragments: list[tuple[frozenset[int], list[int] | None, set[int] | None]] = []
        for a, b in edges:
            if a in h_vertices and b in h_vertices and frozenset((a, b)) not in h_edges:
                fragments.append((frozenset((a, b)), [a, b], None))
        seen: set[int] = set()
        for start in sorted(adj):
            if start in h_vertices or start in seen:
                continue
            comp = {start}
            q = deque([start])
            while q:
                x = q.popleft()
                for y in adj[x]:
                    if y not in h_vertices and y not in comp:
                        comp.add(y)
                        q.append(y)
            seen |= comp
            attach = frozenset(y for x in comp for y in adj[x] if y in h_vertices)
            fragments.append((attach, None, comp))

        face_sets = [set(f) for f in faces]
        chosen = None
        for frag in fragments:
            ok = [i for i, fs in enumerate(face_sets) if frag[0] <= fs]
            if not ok:
                return False
            if chosen is None or len(ok) == 1 and len(chosen[1]) > 1:
                chosen = (frag, ok)
        (attach, path, comp), ok = chosen
        fi = ok[0]

        if path is None:
            path = _fragment_path(adj, attach, comp)

        face = faces[fi]
        a, b = path[0], path[-1]
        ia, ib = face.index(a), face.index(b)
        inner = path[1:-1]
        faces[fi] = _arc(face, ia, ib) + inner[::-1]
        faces.append(_arc(face, ib, ia) + inner)
        h_vertices.update(path)
        h_edges.update(frozenset((path[i], path[i + 1])) for i in range(len(path) - 1))
    return True


def _fragment_path(adj: dict[int, set[int]], attach: frozenset[int], comp: set[int]) -> list[int]:
    # path attach -> comp ... comp -> other attach, interior inside comp
    a = min(attach)
    start = min(x for x in adj[a] if x in comp)
    prev = {start: None}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        ends = sorted(y for y in adj[x] if y in attach and y != a)
        if ends:
            walk = []
            while x is not None:
                walk.append(x)
                x = prev[x]
            return [a] + walk[::-1] + [ends[0]]
        for y in sorted(adj[x]):
            if y in comp and y not in prev:
                prev[y] = x
                queue.append(y)
    raise AssertionError("fragment of a biconnected block has a single attachment")


def is_planar(g: Graph) -> bool:
    if euler_bound_violated(g):
        return False
    return all(_embed_block(block) for block in biconnected_blocks(g))
