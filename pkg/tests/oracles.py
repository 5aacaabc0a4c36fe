"""Slow, obviously-correct reference implementations used to check the library.

None of these import the algorithms they check: they work from plain Python
sets, edge lists and multiplication tables.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter

INF = float("inf")


# ---------------------------------------------------------------- graphs


def adjacency(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def connected(n, edges):
    if n == 0:
        return True
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    return len({find(x) for x in range(n)}) == 1


def girth_by_cycles(n, edges):
    """Shortest simple cycle, found by enumerating simple paths from each start.

    Each cycle is generated from its smallest vertex, so paths only visit
    larger vertices.
    """
    adj = adjacency(n, edges)
    best = INF

    def extend(start, path, seen):
        nonlocal best
        if len(path) >= best:
            return
        last = path[-1]
        for w in adj[last]:
            if w == start and len(path) >= 3:
                best = min(best, len(path))
            elif w > start and w not in seen:
                seen.add(w)
                path.append(w)
                extend(start, path, seen)
                path.pop()
                seen.discard(w)

    for s in range(n):
        extend(s, [s], {s})
    return best


def is_tree(n, edges):
    return n >= 1 and connected(n, edges) and girth_by_cycles(n, edges) == INF


def diameter_floyd(n, edges):
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return max(max(row) for row in d)


def claw_scan(n, edges, induced: bool):
    """Look at every 4-subset and every choice of centre."""
    es = {frozenset(e) for e in edges}
    for quad in itertools.combinations(range(n), 4):
        for c in quad:
            leaves = [x for x in quad if x != c]
            if not all(frozenset((c, x)) in es for x in leaves):
                continue
            if not induced or not any(frozenset(p) in es for p in itertools.combinations(leaves, 2)):
                return True
    return False


def isomorphic_bruteforce(n1, e1, n2, e2):
    if n1 != n2 or len(e1) != len(e2):
        return False
    s1 = {frozenset(e) for e in e1}
    s2 = {frozenset(e) for e in e2}
    for perm in itertools.permutations(range(n2)):
        if all(frozenset((perm[u], perm[v])) in s2 for u, v in (tuple(e) for e in s1)):
            return True
    return False


def _paths_exist(adj, pairs, spare, used):
    """Route each pair by a path whose inner vertices are distinct unused spares."""
    if not pairs:
        return True
    (a, b), rest = pairs[0], pairs[1:]
    free = [x for x in spare if x not in used]
    for k in range(len(free) + 1):
        for inner in itertools.permutations(free, k):
            walk = (a, *inner, b)
            if all(walk[i + 1] in adj[walk[i]] for i in range(len(walk) - 1)):
                if _paths_exist(adj, rest, spare, used | set(inner)):
                    return True
    return False


def planar_kuratowski(n, edges):
    """Planar iff no subdivision of K5 or K3,3 (intended for n <= 8)."""
    adj = adjacency(n, edges)
    m = len(edges)
    if n < 5 or m < 9:
        return True
    verts = range(n)
    for branch in itertools.combinations(verts, 5):
        if any(len(adj[x]) < 4 for x in branch):
            continue
        spare = [x for x in verts if x not in branch]
        pairs = list(itertools.combinations(branch, 2))
        if _paths_exist(adj, pairs, spare, set()):
            return False
    for six in itertools.combinations(verts, 6):
        if any(len(adj[x]) < 3 for x in six):
            continue
        spare = [x for x in verts if x not in six]
        for left in itertools.combinations(six[1:], 2):
            side_a = (six[0], *left)
            side_b = [x for x in six if x not in side_a]
            pairs = [(x, y) for x in side_a for y in side_b]
            if _paths_exist(adj, pairs, spare, set()):
                return False
    return True


# ---------------------------------------------------------------- groups


def table_is_group(mul):
    n = len(mul)
    r = range(n)
    if any(mul[0][a] != a or mul[a][0] != a for a in r):
        return False
    if any(0 not in mul[a] for a in r):
        return False
    return all(mul[mul[a][b]][c] == mul[a][mul[b][c]] for a in r for b in r for c in r)


def order_of(mul, a):
    k, x = 1, a
    while x != 0:
        x = mul[x][a]
        k += 1
    return k


def cyclic_subgroup_sets(mul):
    out = set()
    for a in range(len(mul)):
        s, x = {0}, a
        while x != 0:
            s.add(x)
            x = mul[x][a]
        out.add(frozenset(s))
    return out


def proper_cyclic_count(mul):
    n = len(mul)
    return sum(1 for s in cyclic_subgroup_sets(mul) if 1 < len(s) < n)


def product_set(mul, h, k):
    return {mul[x][y] for x in h for y in k}


def permutes_naive(mul, h, k):
    return product_set(mul, h, k) == product_set(mul, k, h)


def isomorphic_groups_bruteforce(mul1, mul2):
    """Try every bijection fixing the identity."""
    n = len(mul1)
    if n != len(mul2):
        return False
    rest = list(range(1, n))
    for perm in itertools.permutations(rest):
        f = (0, *perm)
        if all(f[mul1[a][b]] == mul2[f[a]][f[b]] for a in range(n) for b in range(n)):
            return True
    return False


def partition_count(k):
    # number of integer partitions of k, by the standard recurrence
    p = [1] + [0] * k
    for part in range(1, k + 1):
        for total in range(part, k + 1):
            p[total] += p[total - part]
    return p[k]


def prime_exponents(n):
    out, d = Counter(), 2
    while d * d <= n:
        while n % d == 0:
            out[d] += 1
            n //= d
        d += 1
    if n > 1:
        out[n] += 1
    return out


def abelian_class_count(n):
    return math.prod(partition_count(e) for e in prime_exponents(n).values())


def divisor_count(n):
    return sum(1 for d in range(1, n + 1) if n % d == 0)
