"""Vertex connectivity by unit-capacity max-flow (Dinic) on a vertex-split
network.

Vertex ``v`` becomes ``2v`` (in) and ``2v+1`` (out) joined by a unit arc;
each undirected edge ``ab`` becomes arcs ``a_out -> b_in`` and
``b_out -> a_in``. A flow from ``s_out`` to ``t_in`` then counts internally
vertex-disjoint s-t paths.
"""
from __future__ import annotations

import random
from collections import deque

from .aqcore import Graph

EXACT_MAX_ORDER = 1 << 8


class SizeLimitError(ValueError):
    pass


class SplitNetwork:
    def __init__(self, g: Graph):
        self.g = g
        nodes = 2 * g.order
        self.adj: list[list[int]] = [[] for _ in range(nodes)]
        self.to: list[int] = []
        self.cap0: list[int] = []
        for v in range(g.order):
            self._arc(2 * v, 2 * v + 1)
        for a, b in sorted(g.edges):
            self._arc(2 * a + 1, 2 * b)
            self._arc(2 * b + 1, 2 * a)
        self.cap = list(self.cap0)

    def _arc(self, a: int, b: int) -> None:
        self.adj[a].append(len(self.to))
        self.to.append(b)
        self.cap0.append(1)
        self.adj[b].append(len(self.to))
        self.to.append(a)
        self.cap0.append(0)

    def local_connectivity(self, s: int, t: int, limit: int | None = None) -> int:
        """Max number of internally disjoint s-t paths, stopping at ``limit``.
        ``s`` and ``t`` must be distinct and non-adjacent."""
        if s == t or t in self.g.neighbors(s):
            raise ValueError("local connectivity needs distinct non-adjacent vertices")
        if limit is None:
            limit = min(self.g.degree(s), self.g.degree(t))
        self.cap = cap = list(self.cap0)
        to, adj = self.to, self.adj
        src, sink = 2 * s + 1, 2 * t
        nodes = len(adj)
        flow = 0
        while flow < limit:
            level = [-1] * nodes
            level[src] = 0
            q = deque([src])
            while q:
                x = q.popleft()
                for e in adj[x]:
                    y = to[e]
                    if cap[e] and level[y] < 0:
                        level[y] = level[x] + 1
                        q.append(y)
            if level[sink] < 0:
                break
            it = [0] * nodes
            # blocking flow: unit capacities, so each augmentation pushes one unit
            while flow < limit:
                path: list[int] = []
                x = src
                while x != sink:
                    arcs = adj[x]
                    i = it[x]
                    while i < len(arcs):
                        e = arcs[i]
                        y = to[e]
                        if cap[e] and level[y] == level[x] + 1:
                            break
                        i += 1
                    it[x] = i
                    if i == len(arcs):
                        if not path:
                            break
                        level[x] = -1  # dead end
                        e = path.pop()
                        x = to[e ^ 1]
                        it[x] += 1
                        continue
                    path.append(arcs[i])
                    x = to[arcs[i]]
                if x != sink:
                    break
                for e in path:
                    cap[e] -= 1
                    cap[e ^ 1] += 1
                flow += 1
        return flow


def is_connected(g: Graph) -> bool:
    if g.order <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == g.order


def connectivity_pairs(g: Graph) -> list[tuple[int, int]]:
    """Pairs whose local connectivities determine kappa: a minimum-degree
    vertex ``w`` against each non-neighbour, and every non-adjacent pair of
    neighbours of ``w``."""
    degs = g.degrees()
    w = min(range(g.order), key=lambda v: (degs[v], v))
    nw = g.neighbors(w)
    pairs = [(w, x) for x in range(g.order) if x != w and x not in nw]
    ns = sorted(nw)
    for i, a in enumerate(ns):
        for b in ns[i + 1:]:
            if b not in g.neighbors(a):
                pairs.append((a, b))
    return pairs


def vertex_connectivity(g: Graph, max_order: int = EXACT_MAX_ORDER) -> int:
    """Exact vertex connectivity (0 for disconnected graphs)."""
    if g.order > max_order:
        raise SizeLimitError(f"exact connectivity capped at {max_order} vertices")
    if g.order <= 1 or not is_connected(g):
        return 0
    best = min(g.degrees())
    net = SplitNetwork(g)
    for s, t in connectivity_pairs(g):
        if best == 0:
            break
        best = min(best, net.local_connectivity(s, t, best))
    return best


def sampled_cuts(g: Graph, k: int, seed: int, pairs: int) -> list[tuple[int, int, int]]:
    """Local connectivity (capped at ``k``) on ``pairs`` random non-adjacent
    pairs drawn from ``random.Random(seed)``. Any value below ``k`` is a
    genuine vertex cut."""
    if pairs < 1:
        raise ValueError("need at least one pair")
    rng = random.Random(seed)
    net = SplitNetwork(g)
    out = []
    attempts = 0
    while len(out) < pairs:
        attempts += 1
        if attempts > 100 * pairs:
            raise ValueError("graph has too few non-adjacent pairs to sample")
        s, t = rng.randrange(g.order), rng.randrange(g.order)
        if s == t or t in g.neighbors(s):
            continue
        out.append((s, t, net.local_connectivity(s, t, k)))
    return out
