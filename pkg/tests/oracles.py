"""Independent reference implementations used only by the tests."""
from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations


@lru_cache(maxsize=None)
def aq_by_recursion(n: int) -> frozenset:
    """AQ_n built literally from two copies of AQ_{n-1} plus the hypercube
    and complement matchings between them."""
    if n == 1:
        return frozenset({(0, 1)})
    prev = aq_by_recursion(n - 1)
    top = 1 << (n - 1)
    mask = top - 1
    edges = set(prev)
    edges |= {(a | top, b | top) for a, b in prev}
    for x in range(top):
        edges.add((x, x | top))
        edges.add((x, top | (~x & mask)))
    return frozenset(edges)


def kind_by_recursion(x: int, y: int, n: int):
    """('hypercube'|'complement', d) by descending the recursion, or None."""
    if (min(x, y), max(x, y)) not in aq_by_recursion(n):
        return None
    d = n
    while ((x ^ y) >> (d - 1)) & 1 == 0:
        d -= 1
    low = (1 << (d - 1)) - 1
    if (x & low) == (y & low):
        return ("hypercube", d)
    return ("complement", d)


def _connected(order, edges, removed) -> bool:
    rest = [v for v in range(order) if v not in removed]
    if len(rest) <= 1:
        return True
    adj = {v: [] for v in rest}
    for a, b in edges:
        if a in adj and b in adj:
            adj[a].append(b)
            adj[b].append(a)
    seen = {rest[0]}
    stack = [rest[0]]
    while stack:
        for y in adj[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(rest)


def brute_force_kappa(order: int, edges) -> int:
    """Smallest vertex set whose removal disconnects the graph; order-1 for
    complete graphs."""
    edges = list(edges)
    for k in range(order - 1):
        for cut in combinations(range(order), k):
            if not _connected(order, edges, set(cut)):
                return k
    return order - 1


def random_graph(rng: random.Random, max_order: int = 12):
    order = rng.randint(2, max_order)
    p = rng.random()
    edges = [(a, b) for a, b in combinations(range(order), 2) if rng.random() < p]
    return order, edges


def brute_force_spectrum(order: int, edges) -> set:
    """Cycle lengths by plain DFS over simple paths (small graphs only)."""
    adj = {v: set() for v in range(order)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    found = set()

    def dfs(s, x, seen):
        for y in adj[x]:
            if y == s and len(seen) >= 3:
                found.add(len(seen))
            elif y > s and y not in seen:
                seen.add(y)
                dfs(s, y, seen)
                seen.discard(y)

    for s in range(order):
        dfs(s, s, {s})
    return found
