"""Simple undirected graphs and the permutability graph of a group."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import UndefinedGraphError
from .group import GroupTable
from .subgroups import SubgroupSet, all_subgroups, cyclic_subgroups, permutes, proper_nontrivial


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``; edges stored as ``(u, v)`` with ``u < v``."""

    n: int
    edges: frozenset[tuple[int, int]]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            norm.add((min(u, v), max(u, v)))
        return cls(n, frozenset(norm))

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    @cached_property
    def adj_bits(self) -> tuple[int, ...]:
        out = []
        for s in self.adj:
            b = 0
            for v in s:
                b |= 1 << v
            out.append(b)
        return tuple(out)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def relabel(self, perm) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def induced(self, vertices) -> Graph:
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        return Graph.from_edges(len(vs), ((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos))


@dataclass(frozen=True)
class PermGraph:
    """Permutability graph: vertex i is the subgroup ``vertices[i]``."""

    vertices: tuple[SubgroupSet, ...]
    graph: Graph
    group_spec: str

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return self.graph.edges

    def to_json(self) -> str:
        doc = {
            "group": self.group_spec,
            "vertices": [
                {"order": s.size, "generator": s.generator, "elements": list(s.elements)} for s in self.vertices
            ],
            "edges": [list(e) for e in self.graph.sorted_edges()],
        }
        return json.dumps(doc, indent=2) + "\n"

    def to_dot(self) -> str:
        name = self.group_spec.replace('"', r"\"")
        lines = [f'graph "{name}" {{']
        for i, s in enumerate(self.vertices):
            lines.append(f'  {i} [label="C{s.size}#{i}"];')
        for u, v in self.graph.sorted_edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _build(g: GroupTable, vertices: list[SubgroupSet]) -> PermGraph:
    if not vertices:
        raise UndefinedGraphError(f"{g.spec} has no proper nontrivial cyclic subgroup; the graph is undefined")
    vertices = sorted(vertices, key=SubgroupSet.sort_key)
    edges = [
        (i, j)
        for i in range(len(vertices))
        for j in range(i + 1, len(vertices))
        if permutes(g, vertices[i], vertices[j])
    ]
    return PermGraph(tuple(vertices), Graph.from_edges(len(vertices), edges), str(g.spec))


def build_gamma_c(g: GroupTable) -> PermGraph:
    """Permutability graph of the proper nontrivial cyclic subgroups of ``g``."""
    return _build(g, list(cyclic_subgroups(g).proper))


def build_gamma_all(g: GroupTable) -> PermGraph:
    """Permutability graph of all proper nontrivial subgroups of ``g`` (order <= 200)."""
    subs = proper_nontrivial(all_subgroups(g), g.order)
    if not subs:
        raise UndefinedGraphError(f"{g.spec} has no proper nontrivial subgroup; the graph is undefined")
    return _build(g, subs)


def universal_vertices(gr: PermGraph | Graph) -> list[int]:
    g = gr.graph if isinstance(gr, PermGraph) else gr
    return [v for v in range(g.n) if g.degree(v) == g.n - 1]
