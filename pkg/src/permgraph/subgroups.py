"""Cyclic subgroup enumeration, subgroup products and permutability."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import SizeLimitError
from .group import GroupTable

ALL_SUBGROUPS_CAP = 200


@dataclass(frozen=True)
class SubgroupSet:
    """A subgroup as a sorted tuple of element indices.

    ``generator`` is set when the subgroup is known to be cyclic and then
    ``elements`` are exactly the powers of it.
    """

    elements: tuple[int, ...]
    generator: int | None = None

    @classmethod
    def of(cls, elements: Iterable[int], generator: int | None = None) -> SubgroupSet:
        return cls(tuple(sorted({int(x) for x in elements})), generator)

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.element_set

    @cached_property
    def element_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.elements, dtype=np.int64)

    def sort_key(self) -> tuple:
        return (self.size, self.elements)

    def issubset(self, other: SubgroupSet) -> bool:
        return self.element_set <= other.element_set

    def __eq__(self, other) -> bool:
        # the generator is a witness, not part of the identity
        if not isinstance(other, SubgroupSet):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)


@dataclass(frozen=True)
class CyclicCatalog:
    """All cyclic subgroups of a group, sorted by (order, elements).

    ``fiber[x]`` is the position in ``all`` of <x>.
    """

    all: tuple[SubgroupSet, ...]
    proper: tuple[SubgroupSet, ...]
    fiber: tuple[int, ...]


def _powers(g: GroupTable, x: int) -> list[int]:
    out = [0]
    y = x
    while y != 0:
        out.append(y)
        y = int(g.mul[y, x])
    return out


def cyclic_subgroups(g: GroupTable) -> CyclicCatalog:
    """Enumerate <x> for every element x, deduplicated by element set."""
    found: dict[tuple[int, ...], int] = {}  # elements -> smallest generator
    key_of = [None] * g.order
    for x in range(g.order):
        if key_of[x] is not None:
            continue
        elems = _powers(g, x)
        key = tuple(sorted(elems))
        found.setdefault(key, x)
        # every generator of <x> generates the same subgroup
        n = len(elems)
        for k, y in enumerate(elems):
            if np.gcd(k, n) == 1:
                key_of[y] = key
    subs = sorted((SubgroupSet(k, gen) for k, gen in found.items()), key=SubgroupSet.sort_key)
    pos = {s.elements: i for i, s in enumerate(subs)}
    fiber = tuple(pos[k] for k in key_of)
    proper = tuple(s for s in subs if 1 < s.size < g.order)
    return CyclicCatalog(all=tuple(subs), proper=proper, fiber=fiber)


def _as_array(h) -> np.ndarray:
    if isinstance(h, SubgroupSet):
        return h.array
    return np.asarray(sorted(h), dtype=np.int64)


def set_product(g: GroupTable, h, k) -> tuple[int, ...]:
    """The set HK = {hk : h in H, k in K}, sorted."""
    prod = g.mul[np.ix_(_as_array(h), _as_array(k))]
    return tuple(int(x) for x in np.unique(prod))


def _product_mask(g: GroupTable, h: np.ndarray, k: np.ndarray) -> np.ndarray:
    mask = np.zeros(g.order, dtype=bool)
    mask[g.mul[np.ix_(h, k)].ravel()] = True
    return mask


def permutes(g: GroupTable, h: SubgroupSet, k: SubgroupSet) -> bool:
    """True iff HK = KH as sets."""
    a, b = _as_array(h), _as_array(k)
    return bool(np.array_equal(_product_mask(g, a, b), _product_mask(g, b, a)))


def permutes_by_closure(g: GroupTable, h: SubgroupSet, k: SubgroupSet) -> bool:
    """True iff the set HK is closed under multiplication (hence a subgroup)."""
    hk = np.array(set_product(g, h, k), dtype=np.int64)
    mask = np.zeros(g.order, dtype=bool)
    mask[hk] = True
    return bool(mask[g.mul[np.ix_(hk, hk)]].all())


def permutes_by_order(g: GroupTable, h: SubgroupSet, k: SubgroupSet) -> bool:
    """True iff |<H, K>| = |H||K| / |H n K|, with the join computed by closure."""
    inter = len(h.element_set & k.element_set)
    join = subgroup_generated(g, h.element_set | k.element_set)
    return join.size * inter == h.size * k.size


def subgroup_generated(g: GroupTable, seed: Iterable[int]) -> SubgroupSet:
    """Smallest subgroup containing ``seed``."""
    seed = {int(x) for x in seed}
    if not seed:
        raise ValueError("seed must be nonempty")
    mask = np.zeros(g.order, dtype=bool)
    mask[0] = True
    mask[list(seed)] = True
    gens = np.flatnonzero(mask)
    cur = gens
    while True:
        # right-multiply everything reached so far by the seed elements
        mask[g.mul[np.ix_(cur, gens)].ravel()] = True
        nxt = np.flatnonzero(mask)
        if len(nxt) == len(cur):
            break
        cur = nxt
    elems = tuple(int(x) for x in cur)
    gen = None
    orders = g.elem_order[cur]
    hit = np.flatnonzero(orders == len(elems))
    if len(hit):
        gen = elems[int(hit[0])]
    return SubgroupSet(elems, gen)


def is_normal(g: GroupTable, h: SubgroupSet) -> bool:
    ha = _as_array(h)
    mask = np.zeros(g.order, dtype=bool)
    mask[ha] = True
    ar = np.arange(g.order)
    conj = g.mul[g.mul[np.ix_(ar, ha)], g.inv[ar][:, None]]
    return bool(mask[conj].all())


def all_subgroups(g: GroupTable, cap: int = ALL_SUBGROUPS_CAP) -> list[SubgroupSet]:
    """Every subgroup, by joining cyclic subgroups onto known subgroups until nothing new appears."""
    if g.order > cap:
        raise SizeLimitError(f"subgroup enumeration capped at order {cap}")
    cyc = cyclic_subgroups(g).all
    known = {s.elements: s for s in cyc}
    frontier = list(cyc)
    while frontier:
        new = []
        for s in frontier:
            for c in cyc:
                if c.issubset(s):
                    continue
                j = subgroup_generated(g, s.element_set | c.element_set)
                if j.elements not in known:
                    known[j.elements] = j
                    new.append(j)
        frontier = new
    return sorted(known.values(), key=SubgroupSet.sort_key)


def proper_nontrivial(subs: Sequence[SubgroupSet], order: int) -> list[SubgroupSet]:
    return [s for s in subs if 1 < s.size < order]


def subgroup_table(g: GroupTable, h: SubgroupSet) -> tuple[GroupTable, tuple[int, ...]]:
    """The subgroup ``h`` as a group in its own right.

    Returns the table (element i of the new group is ``h.elements[i]``) and
    that index map back into ``g``.
    """
    elems = h.elements
    pos = np.full(g.order, -1, dtype=np.int64)
    pos[list(elems)] = np.arange(len(elems))
    sub = pos[g.mul[np.ix_(elems, elems)]]
    if (sub < 0).any():
        raise ValueError("element set is not closed under multiplication")
    return GroupTable.from_table(sub), elems
