"""Finite groups as Cayley tables.

Every group is stored as an ``n x n`` table of element indices with the
identity at index 0.  Family constructors fix a canonical enumeration so the
same parameters always give the same table.
"""

from __future__ import annotations

import itertools
import math
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import InvalidParameter, SizeLimitError, SpecParseError

DEFAULT_MAX_ORDER = 4096
DEFAULT_MAX_DEGREE = 6
GROUP_ISO_CAP = 64

FAMILIES = (
    "cyclic",
    "direct-product",
    "dihedral",
    "generalized-quaternion",
    "modular-p",
    "metacyclic-semidirect",
    "symmetric",
    "alternating",
    "perm-generated",
    "table-literal",
)


# --------------------------------------------------------------------------
# elementary number theory


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division, as ``{prime: exponent}``."""
    if n < 1:
        raise InvalidParameter(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def tau(n: int) -> int:
    """Number of positive divisors of ``n``."""
    return math.prod(e + 1 for e in factorize(n).values())


def multiplicative_order(i: int, q: int) -> int:
    if math.gcd(i, q) != 1:
        raise InvalidParameter(f"{i} is not a unit mod {q}")
    k, x = 1, i % q
    while x != 1 % q:
        x = x * i % q
        k += 1
    return k


# --------------------------------------------------------------------------
# permutations


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{0, ..., m-1}`` given by its image array."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise InvalidParameter(f"not a bijection: {self.image}")

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]] | str, degree: int | None = None) -> Permutation:
        if isinstance(cycles, str):
            cycles = parse_cycles(cycles)
        points = [x for c in cycles for x in c]
        if len(points) != len(set(points)):
            raise InvalidParameter(f"cycles are not disjoint: {cycles}")
        if any(x < 0 for x in points):
            raise InvalidParameter("negative point in cycle")
        deg = max(points, default=-1) + 1
        if degree is None:
            degree = deg
        elif degree < deg:
            raise InvalidParameter(f"degree {degree} too small for {cycles}")
        img = list(range(degree))
        for c in cycles:
            for a, b in zip(c, list(c[1:]) + [c[0]]):
                img[a] = b
        return cls(tuple(img))

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __mul__(self, other: Permutation) -> Permutation:
        # (p * q)(x) = p(q(x))
        if self.degree != other.degree:
            raise InvalidParameter("permutations act on different domains")
        return Permutation(tuple(self.image[j] for j in other.image))

    def inverse(self) -> Permutation:
        img = [0] * self.degree
        for x, y in enumerate(self.image):
            img[y] = x
        return Permutation(tuple(img))

    def padded(self, degree: int) -> Permutation:
        return Permutation(self.image + tuple(range(self.degree, degree)))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen or self.image[start] == start:
                continue
            c = [start]
            seen.add(start)
            x = self.image[start]
            while x != start:
                c.append(x)
                seen.add(x)
                x = self.image[x]
            out.append(tuple(c))
        return out

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def __str__(self) -> str:
        cs = self.cycles()
        if not cs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[tuple[int, ...]]:
    text = text.strip()
    if not re.fullmatch(r"(\([^()]*\)\s*)+", text):
        raise SpecParseError(f"bad cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(text):
        toks = [t for t in re.split(r"[\s,]+", body.strip()) if t]
        try:
            pts = tuple(int(t) for t in toks)
        except ValueError:
            raise SpecParseError(f"bad point in cycle {body!r}") from None
        if pts:
            cycles.append(pts)
    return cycles


# --------------------------------------------------------------------------
# group specs


@dataclass(frozen=True)
class GroupSpec:
    """Descriptor of how a group was built; round-trips through ``str``."""

    family: str
    params: tuple[int, ...] = ()
    factors: tuple[GroupSpec, ...] = ()
    perms: tuple[Permutation, ...] = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidParameter(f"unknown family {self.family!r}")

    def __str__(self) -> str:
        f, p = self.family, self.params
        if f == "direct-product":
            return " x ".join(str(x) for x in self.factors)
        if f == "perm-generated":
            return "P " + ";".join(str(x) for x in self.perms)
        if f == "table-literal":
            return f"<table {p[0]}>"
        letter = {
            "cyclic": "Z",
            "dihedral": "D",
            "generalized-quaternion": "Q",
            "modular-p": "M",
            "metacyclic-semidirect": "SD",
            "symmetric": "S",
            "alternating": "A",
        }[f]
        return " ".join([letter, *map(str, p)])


_LETTERS = {
    "Z": ("cyclic", 1),
    "D": ("dihedral", 1),
    "Q": ("generalized-quaternion", 1),
    "M": ("modular-p", 2),
    "SD": ("metacyclic-semidirect", 4),
    "S": ("symmetric", 1),
    "A": ("alternating", 1),
}


def parse_spec(text: str) -> GroupSpec:
    """Parse one line of the group grammar, e.g. ``"Z 4 x Z 2"`` or ``"SD 3 2 2 1"``."""
    parts = re.split(r"\s+x\s+", text.strip())
    if len(parts) > 1:
        factors: list[GroupSpec] = []
        for part in parts:
            factors.append(_parse_atom(part))
        return GroupSpec("direct-product", factors=tuple(factors))
    return _parse_atom(parts[0])


def _parse_atom(text: str) -> GroupSpec:
    text = text.strip()
    if not text:
        raise SpecParseError("empty group spec")
    if text.startswith("P"):
        body = text[1:].strip()
        if not body:
            raise SpecParseError("P needs at least one permutation")
        cyc = [parse_cycles(chunk) for chunk in body.split(";")]
        degree = max([x + 1 for c in cyc for cy in c for x in cy] + [1])
        try:
            perms = tuple(Permutation.from_cycles(c, degree) for c in cyc)
        except InvalidParameter as exc:
            raise SpecParseError(str(exc)) from None
        return GroupSpec("perm-generated", (degree,), perms=perms)
    toks = text.split()
    if toks[0] not in _LETTERS:
        raise SpecParseError(f"unknown group family {toks[0]!r} in {text!r}")
    family, arity = _LETTERS[toks[0]]
    if len(toks) - 1 != arity:
        raise SpecParseError(f"{toks[0]} takes {arity} integer parameter(s), got {text!r}")
    try:
        params = tuple(int(t) for t in toks[1:])
    except ValueError:
        raise SpecParseError(f"non-integer parameter in {text!r}") from None
    return GroupSpec(family, params)


# --------------------------------------------------------------------------
# group tables


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


def _element_orders(mul: np.ndarray) -> np.ndarray:
    n = mul.shape[0]
    ar = np.arange(n)
    orders = np.zeros(n, dtype=np.int64)
    pw = ar.copy()
    for k in range(1, n + 1):
        hit = (pw == 0) & (orders == 0)
        orders[hit] = k
        if orders.all():
            break
        pw = mul[pw, ar]
    return orders


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A finite group given by its multiplication table.

    ``mul[a, b]`` is the index of ``a * b``.  Index 0 is the identity.
    ``gens`` names distinguished generators (``"a"``, ``"b"``) for the
    presentation families; ``labels`` are human-readable element names.
    """

    mul: np.ndarray
    inv: np.ndarray
    elem_order: np.ndarray
    spec: GroupSpec
    gens: Mapping[str, int] = field(default_factory=dict)
    labels: tuple[str, ...] | None = None

    @classmethod
    def from_table(
        cls,
        mul,
        spec: GroupSpec | None = None,
        gens: Mapping[str, int] | None = None,
        labels: Sequence[str] | None = None,
        validate: bool = False,
    ) -> GroupTable:
        mul = np.asarray(mul, dtype=np.int32)
        n = mul.shape[0]
        if mul.shape != (n, n) or n < 1:
            raise InvalidParameter(f"table must be square, got shape {mul.shape}")
        if mul.min() < 0 or mul.max() >= n:
            raise InvalidParameter("table entries out of range")
        ar = np.arange(n)
        if not (np.array_equal(mul[0], ar) and np.array_equal(mul[:, 0], ar)):
            raise InvalidParameter("index 0 is not a two-sided identity")
        is_id = mul == 0
        if not (is_id.sum(axis=1) == 1).all():
            raise InvalidParameter("some element has no unique inverse")
        inv = np.argmax(is_id, axis=1)
        if spec is None:
            spec = GroupSpec("table-literal", (n,))
        g = cls(
            mul=_freeze(mul),
            inv=_freeze(inv.astype(np.int32)),
            elem_order=_freeze(_element_orders(mul)),
            spec=spec,
            gens=dict(gens or {}),
            labels=tuple(labels) if labels is not None else None,
        )
        if validate:
            check_axioms(g)
        return g

    @property
    def order(self) -> int:
        return self.mul.shape[0]

    @property
    def identity(self) -> int:
        return 0

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"GroupTable({self.spec}, order={self.order})"

    def power(self, a: int, k: int) -> int:
        k %= int(self.elem_order[a])
        x = 0
        for _ in range(k):
            x = int(self.mul[x, a])
        return x

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels is not None else str(a)

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    @cached_property
    def is_cyclic(self) -> bool:
        return int(self.elem_order.max()) == self.order


def element_order(g: GroupTable, a: int) -> int:
    return int(g.elem_order[a])


def check_axioms(g: GroupTable, full_limit: int = 64, samples: int = 100_000, seed: int = 0) -> None:
    """Raise :class:`InvalidParameter` if the table is not a group.

    Associativity is checked on all triples up to ``full_limit`` elements and
    on ``samples`` random triples beyond that.
    """
    mul, n = g.mul, g.order
    ar = np.arange(n)
    if not (np.array_equal(mul[0], ar) and np.array_equal(mul[:, 0], ar)):
        raise InvalidParameter("identity is not two-sided")
    if not (mul[ar, g.inv] == 0).all() or not (mul[g.inv, ar] == 0).all():
        raise InvalidParameter("inverse table is wrong")
    for row in mul:
        if len(np.unique(row)) != n:
            raise InvalidParameter("table is not a Latin square")
    if n <= full_limit:
        left = mul[mul]  # [a, b, c] -> (ab)c
        right = mul[ar[:, None, None], mul[None, :, :]]  # a(bc)
        bad = np.argwhere(left != right)
    else:
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, samples))
        bad = np.flatnonzero(mul[mul[a, b], c] != mul[a, mul[b, c]])
        bad = [(a[i], b[i], c[i]) for i in bad]
    if len(bad):
        raise InvalidParameter(f"not associative at {tuple(int(x) for x in bad[0])}")
    if (n % g.elem_order != 0).any():
        raise InvalidParameter("an element order does not divide the group order")


# --------------------------------------------------------------------------
# constructors


def _check_cap(n: int, cap: int | None) -> None:
    cap = DEFAULT_MAX_ORDER if cap is None else cap
    if n > cap:
        raise SizeLimitError(f"group order {n} exceeds cap {cap}")


def trivial_group() -> GroupTable:
    return GroupTable.from_table([[0]], GroupSpec("cyclic", (1,)), labels=["e"])


def make_cyclic(n: int, cap: int | None = None) -> GroupTable:
    """Additive group Z_n; element k has order n / gcd(k, n)."""
    if n < 2:
        raise InvalidParameter(f"cyclic group needs n >= 2, got {n}")
    _check_cap(n, cap)
    ar = np.arange(n)
    mul = (ar[:, None] + ar[None, :]) % n
    return GroupTable.from_table(mul, GroupSpec("cyclic", (n,)), gens={"a": 1}, labels=[str(k) for k in ar])


def make_direct_product(g: GroupTable, h: GroupTable, cap: int | None = None) -> GroupTable:
    """Componentwise product; element ``(x, y)`` has index ``x * |h| + y``."""
    n = g.order * h.order
    _check_cap(n, cap)
    nh = h.order
    ar = np.arange(n)
    gi, hi = ar // nh, ar % nh
    mul = g.mul[gi[:, None], gi[None, :]].astype(np.int64) * nh + h.mul[hi[:, None], hi[None, :]]
    factors = tuple(
        f
        for x in (g.spec, h.spec)
        for f in (x.factors if x.family == "direct-product" else (x,))
    )
    labels = [f"({g.label(int(i))},{h.label(int(j))})" for i, j in zip(gi, hi)]
    return GroupTable.from_table(mul, GroupSpec("direct-product", factors=factors), labels=labels)


def _metacyclic(m: int, s: int, r: int, c: int, spec: GroupSpec, cap: int | None) -> GroupTable:
    # elements a^k b^e (0 <= k < m, 0 <= e < s), index e*m + k, with
    # b a b^-1 = a^r and b^s = a^c
    n = m * s
    _check_cap(n, cap)
    ar = np.arange(n)
    k, e = ar % m, ar // m
    rp = np.array([pow(r, j, m) for j in range(s)], dtype=np.int64)
    kk = k[:, None] + rp[e][:, None] * k[None, :]
    ee = e[:, None] + e[None, :]
    wrap = ee >= s
    kk = (kk + wrap * c) % m
    ee = ee - wrap * s
    mul = ee * m + kk
    labels = []
    for i in ar:
        parts = []
        if k[i]:
            parts.append("a" if k[i] == 1 else f"a^{k[i]}")
        if e[i]:
            parts.append("b" if e[i] == 1 else f"b^{e[i]}")
        labels.append("".join(parts) or "e")
    return GroupTable.from_table(mul, spec, gens={"a": 1, "b": m}, labels=labels)


def make_dihedral(two_n: int, cap: int | None = None) -> GroupTable:
    """D_{2n} = <a, b | a^n = b^2 = 1, ab = ba^-1> of order ``two_n``."""
    if two_n % 2 or two_n < 6:
        raise InvalidParameter(f"dihedral order must be even and >= 6, got {two_n}")
    n = two_n // 2
    return _metacyclic(n, 2, -1 % n, 0, GroupSpec("dihedral", (two_n,)), cap)


def make_generalized_quaternion(four_n: int, cap: int | None = None) -> GroupTable:
    """Q_{4n} = <a, b | a^{2n} = 1, b^2 = a^n, bab^-1 = a^-1> of order ``four_n``."""
    if four_n % 4 or four_n < 8:
        raise InvalidParameter(f"quaternion order must be a multiple of 4 and >= 8, got {four_n}")
    n = four_n // 4
    return _metacyclic(2 * n, 2, 2 * n - 1, n, GroupSpec("generalized-quaternion", (four_n,)), cap)


def make_modular(p: int, alpha: int, cap: int | None = None) -> GroupTable:
    """M_{p^alpha} = <a, b | a^{p^(alpha-1)} = b^p = 1, bab^-1 = a^{p^(alpha-2)+1}>."""
    if not is_prime(p):
        raise InvalidParameter(f"{p} is not prime")
    if alpha < 3:
        raise InvalidParameter(f"modular group needs alpha >= 3, got {alpha}")
    _check_cap(p**alpha, cap)
    m = p ** (alpha - 1)
    return _metacyclic(m, p, p ** (alpha - 2) + 1, 0, GroupSpec("modular-p", (p, alpha)), cap)


def semidirect_exponent(q: int, p: int, t: int) -> int:
    """Smallest i in [2, q-1] of multiplicative order exactly p^t mod q (1 when t = 0)."""
    if t == 0:
        return 1
    target = p**t
    for i in range(2, q):
        if multiplicative_order(i, q) == target:
            return i
    raise InvalidParameter(f"no unit of order {target} mod {q}")


def make_metacyclic_semidirect(q: int, p: int, alpha: int, t: int, cap: int | None = None) -> GroupTable:
    """Z_q x|_t Z_{p^alpha} = <a, b | a^q = b^{p^alpha} = 1, bab^-1 = a^i, ord_q(i) = p^t>."""
    if not (is_prime(q) and is_prime(p)):
        raise InvalidParameter(f"q={q} and p={p} must both be prime")
    if p == q:
        raise InvalidParameter("p and q must be distinct")
    if alpha < 1 or t < 0:
        raise InvalidParameter("need alpha >= 1 and t >= 0")
    if (q - 1) % p**t:
        raise InvalidParameter(f"{p}^{t} does not divide {q}-1")
    if t > alpha:
        raise InvalidParameter(f"t={t} exceeds alpha={alpha}: b^(p^alpha) would not act trivially")
    _check_cap(q * p**alpha, cap)
    i = semidirect_exponent(q, p, t)
    spec = GroupSpec("metacyclic-semidirect", (q, p, alpha, t))
    return _metacyclic(q, p**alpha, i, 0, spec, cap)


def _perm_group(perms: Sequence[tuple[int, ...]], spec: GroupSpec) -> GroupTable:
    P = np.array(perms, dtype=np.int64)
    n, deg = P.shape
    weights = deg ** np.arange(deg, dtype=np.int64)
    codes = P @ weights
    order = np.argsort(codes)
    comp = P[:, P]  # [i, j, x] = p_i(p_j(x))
    ccodes = comp @ weights
    pos = np.searchsorted(codes[order], ccodes)
    mul = order[pos]
    labels = [str(Permutation(tuple(int(x) for x in row))) for row in P]
    return GroupTable.from_table(mul, spec, labels=labels)


def make_symmetric(m: int, cap_degree: int = DEFAULT_MAX_DEGREE) -> GroupTable:
    if m < 2:
        raise InvalidParameter(f"symmetric group needs degree >= 2, got {m}")
    if m > cap_degree:
        raise SizeLimitError(f"degree {m} exceeds cap {cap_degree}")
    perms = list(itertools.permutations(range(m)))
    return _perm_group(perms, GroupSpec("symmetric", (m,)))


def make_alternating(m: int, cap_degree: int = DEFAULT_MAX_DEGREE) -> GroupTable:
    if m < 2:
        raise InvalidParameter(f"alternating group needs degree >= 2, got {m}")
    if m > cap_degree:
        raise SizeLimitError(f"degree {m} exceeds cap {cap_degree}")
    perms = [p for p in itertools.permutations(range(m)) if Permutation(p).is_even()]
    return _perm_group(perms, GroupSpec("alternating", (m,)))


def make_from_generators(perms: Iterable[Permutation], cap: int | None = None) -> GroupTable:
    """Closure of the given permutations under composition; index 0 is the identity."""
    perms = list(perms)
    if not perms:
        raise InvalidParameter("need at least one generator")
    degree = max(p.degree for p in perms)
    if any(p.degree != degree for p in perms):
        raise InvalidParameter("generators act on different domains")
    cap = DEFAULT_MAX_ORDER if cap is None else cap
    gens = [p.image for p in perms]
    ident = tuple(range(degree))
    elems = [ident]
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = tuple(x[j] for j in g)
            if y not in seen:
                seen.add(y)
                elems.append(y)
                if len(elems) > cap:
                    raise SizeLimitError(f"closure exceeds cap {cap}")
                queue.append(y)
    return _perm_group(elems, GroupSpec("perm-generated", (degree,), perms=tuple(perms)))


def build_group(spec: GroupSpec | str, cap: int | None = None) -> GroupTable:
    """Construct the group described by a spec (or spec string)."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    f, p = spec.family, spec.params
    if f == "cyclic":
        return trivial_group() if p == (1,) else make_cyclic(p[0], cap)
    if f == "direct-product":
        # check the cap before building any large intermediate table
        _check_cap(math.prod(_spec_order(x) for x in spec.factors), cap)
        g = build_group(spec.factors[0], cap)
        for h in spec.factors[1:]:
            g = make_direct_product(g, build_group(h, cap), cap)
        return g
    if f == "dihedral":
        return make_dihedral(p[0], cap)
    if f == "generalized-quaternion":
        return make_generalized_quaternion(p[0], cap)
    if f == "modular-p":
        return make_modular(p[0], p[1], cap)
    if f == "metacyclic-semidirect":
        return make_metacyclic_semidirect(*p, cap=cap)
    if f == "symmetric":
        return make_symmetric(p[0])
    if f == "alternating":
        return make_alternating(p[0])
    if f == "perm-generated":
        return make_from_generators(spec.perms, cap)
    raise InvalidParameter(f"cannot rebuild a {f} group from its spec")


def _spec_order(spec: GroupSpec) -> int:
    f, p = spec.family, spec.params
    if f in ("cyclic", "dihedral", "generalized-quaternion"):
        return p[0]
    if f == "modular-p":
        return p[0] ** p[1]
    if f == "metacyclic-semidirect":
        return p[0] * p[1] ** p[2]
    if f == "symmetric":
        return math.factorial(p[0])
    if f == "alternating":
        return max(1, math.factorial(p[0]) // 2)
    if f == "direct-product":
        return math.prod(_spec_order(x) for x in spec.factors)
    return 1  # perm-generated: unknown until closure


# --------------------------------------------------------------------------
# group isomorphism


def _closure(g: GroupTable, seeds: Sequence[int]) -> list[int]:
    seen = {0}
    out = [0]
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for s in seeds:
            y = int(g.mul[x, s])
            if y not in seen:
                seen.add(y)
                out.append(y)
                queue.append(y)
    return out


def generating_set(g: GroupTable) -> list[int]:
    """Greedy small generating set, preferring elements of large order."""
    order = sorted(range(g.order), key=lambda x: (-int(g.elem_order[x]), x))
    gens: list[int] = []
    covered = {0}
    for x in order:
        if len(covered) == g.order:
            break
        if x not in covered:
            gens.append(x)
            covered = set(_closure(g, gens))
    return gens


def _extend(g1: GroupTable, g2: GroupTable, gens: Sequence[int], images: Sequence[int]) -> dict[int, int] | None:
    # map the subgroup <gens> along generator edges; None on any inconsistency
    phi = {0: 0}
    used = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for s, t in zip(gens, images):
            y = int(g1.mul[x, s])
            img = int(g2.mul[phi[x], t])
            if y in phi:
                if phi[y] != img:
                    return None
            else:
                if img in used:
                    return None
                phi[y] = img
                used.add(img)
                queue.append(y)
    return phi


def find_group_isomorphism(g1: GroupTable, g2: GroupTable, cap: int = GROUP_ISO_CAP) -> list[int] | None:
    """Brute-force isomorphism search by backtracking over generator images.

    Returns ``phi`` with ``phi[x]`` the image of element ``x``, or None.
    """
    if g1.order != g2.order:
        return None
    if g1.order > cap:
        raise SizeLimitError(f"group isomorphism capped at order {cap}")
    if sorted(g1.elem_order.tolist()) != sorted(g2.elem_order.tolist()):
        return None
    if g1.is_abelian != g2.is_abelian:
        return None
    gens = generating_set(g1)
    cands = [[y for y in range(g2.order) if g2.elem_order[y] == g1.elem_order[s]] for s in gens]

    def search(j: int, images: list[int]) -> dict[int, int] | None:
        phi = _extend(g1, g2, gens[:j], images)
        if phi is None:
            return None
        if j == len(gens):
            return phi if len(phi) == g1.order else None
        for y in cands[j]:
            got = search(j + 1, images + [y])
            if got is not None:
                return got
        return None

    phi = search(0, [])
    if phi is None:
        return None
    return [phi[x] for x in range(g1.order)]


def groups_isomorphic(g1: GroupTable, g2: GroupTable, cap: int = GROUP_ISO_CAP) -> bool:
    return find_group_isomorphism(g1, g2, cap) is not None
