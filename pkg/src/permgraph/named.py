"""Standard named graphs, built from ASCII names like ``K4``, ``K1,3`` or ``K3+4K1``.

Paths and cycles follow the edge-count convention: ``P1`` is a single edge,
``C3`` a triangle.
"""

from __future__ import annotations

import re

from .errors import InvalidParameter
from .graph import Graph

_PART = re.compile(r"^(\d*)(Kbar|K|C|P)(\d+)(?:,(\d+))?$")


def complete(n: int) -> Graph:
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(m: int, n: int) -> Graph:
    return Graph.from_edges(m + n, ((i, m + j) for i in range(m) for j in range(n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter(f"C{n}: a cycle needs at least 3 edges")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    """Path with ``n`` edges (``n + 1`` vertices)."""
    return Graph.from_edges(n + 1, ((i, i + 1) for i in range(n)))


def empty(n: int) -> Graph:
    return Graph.from_edges(n, ())


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    off = 0
    for g in graphs:
        edges.extend((u + off, v + off) for u, v in g.edges)
        off += g.n
    return Graph.from_edges(off, edges)


def make_named(name: str, *params: int) -> Graph:
    """Build a named graph.

    Either a full name (``make_named("K1,3")``, ``make_named("K3+4K1")``) or a
    family letter plus parameters (``make_named("K", 1, 3)``).
    """
    if params:
        name = name + ",".join(str(p) for p in params)
    text = name.replace(" ", "").replace("_", "").replace("{", "").replace("}", "")
    text = text.replace("∪", "+").replace("K̄", "Kbar")
    if not text:
        raise InvalidParameter("empty graph name")
    parts = []
    for chunk in text.split("+"):
        m = _PART.match(chunk)
        if not m:
            raise InvalidParameter(f"malformed graph name {name!r}")
        count = int(m.group(1)) if m.group(1) else 1
        kind, a, b = m.group(2), int(m.group(3)), m.group(4)
        if b is not None and kind != "K":
            raise InvalidParameter(f"malformed graph name {name!r}")
        if kind == "K" and b is not None:
            g = complete_bipartite(a, int(b))
        elif kind == "K":
            if a < 1:
                raise InvalidParameter("K0 has no vertices")
            g = complete(a)
        elif kind == "Kbar":
            g = empty(a)
        elif kind == "C":
            g = cycle(a)
        else:
            g = path(a)
        parts.extend([g] * count)
    return disjoint_union(*parts)
