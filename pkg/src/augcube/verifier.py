"""Independent checks for decompositions and the supporting graph facts.

Every ``verify_*`` function returns a :class:`Report` and never mutates its
inputs. Connectivity is exact (max-flow over the full pair schedule) or
sampled (random pairs from a fixed seed; can refute, never confirm).
"""
from __future__ import annotations

import math
import random
import time
from collections import deque
from itertools import combinations
from typing import Iterator, Optional

from .aqcore import Graph, build_aq
from .decomposer import Decomposition, HamiltonianCycle
from .flow import sampled_cuts, vertex_connectivity
from .ladder import CertError, LadderCert, cycle_edges, extract_cycle, validate_cert
from .report import Report

SPECTRUM_MAX_ORDER = 16


def _ms(t0: float) -> float:
    return (time.perf_counter() - t0) * 1000.0


def verify_partition(whole: Graph, H: Graph, K: Graph) -> Report:
    if not whole.order == H.order == K.order:
        raise ValueError("partition pieces must share the vertex set")
    rep = Report()
    t0 = time.perf_counter()
    overlap = sorted(H.edges & K.edges)
    rep.add("partition.disjoint", "E(H) and E(K) disjoint", 0, len(overlap), not overlap, _ms(t0))
    if overlap:
        a, b = overlap[0]
        rep.checks[-1].observed = f"{len(overlap)}(first={a}-{b})"
    t0 = time.perf_counter()
    union = H.edges | K.edges
    missing = sorted(whole.edges - union)
    extra = sorted(union - whole.edges)
    observed = f"missing={len(missing)},extra={len(extra)}"
    rep.add("partition.cover", "E(H) u E(K) = E(G)", "missing=0,extra=0", observed,
            not missing and not extra, _ms(t0))
    return rep


def verify_regular(g: Graph, k: int, name: str = "regular") -> Report:
    rep = Report()
    t0 = time.perf_counter()
    degs = g.degrees()
    bad = [v for v, d in enumerate(degs) if d != k]
    observed = k if not bad else f"{min(degs)}..{max(degs)}(first_bad={bad[0]})"
    rep.add(name, f"every degree = {k}", k, observed, not bad, _ms(t0))
    return rep


def verify_connectivity_at_least(g: Graph, k: int, mode: str = "exact", seed: Optional[int] = None,
                                 pairs: Optional[int] = None, name: str = "connectivity",
                                 exact_value: bool = False) -> Report:
    """With ``exact_value`` the exact mode requires kappa == k instead of >= k."""
    rep = Report()
    t0 = time.perf_counter()
    if mode == "exact":
        kappa = vertex_connectivity(g)
        ok = kappa == k if exact_value else kappa >= k
        rep.add(f"{name}[exact]", f"kappa {'=' if exact_value else '>='} {k}", k, kappa, ok, _ms(t0))
    elif mode == "sampled":
        if seed is None or not pairs:
            raise ValueError("sampled mode needs a seed and a pair count >= 1")
        cuts = sampled_cuts(g, k, seed, pairs)
        low = min(c for _, _, c in cuts)
        rep.add(f"{name}[sampled]", f"min local cut >= {k} over {pairs} pairs (seed={seed})",
                f">={k};seed={seed};pairs={pairs}", low, low >= k, _ms(t0))
    else:
        raise ValueError(f"unknown connectivity mode {mode!r}")
    return rep


def verify_pancyclic_via_cert(g: Graph, c: LadderCert, name: str = "pancyclic") -> Report:
    """Build the certificate's cycle for every length 4..|V| and confirm each
    edge lies in ``g``. Only the core of the certificate must be in ``g``."""
    if c.vertices() != frozenset(range(g.order)):
        raise CertError("certificate does not span the graph")
    rep = Report()
    t0 = time.perf_counter()
    valid = validate_cert(c, g, core_only=True)
    rep.add(f"{name}.cert", "certificate core edges present", "all",
            "all" if valid.overall else ",".join(x.name for x in valid.failures()),
            valid.overall, _ms(t0))
    t0 = time.perf_counter()
    failed = []
    for length in range(4, g.order + 1):
        seq = extract_cycle(c, length)
        if len(set(seq)) != length or not cycle_edges(seq) <= g.edges:
            failed.append(length)
    observed = f"4..{g.order}" if not failed else f"first_fail={failed[0]},fails={len(failed)}"
    rep.add(f"{name}.lengths", "cycle of every length 4..|V|", f"4..{g.order}", observed,
            not failed, _ms(t0))
    return rep


def verify_hamiltonian(g: Graph, seq, name: str = "hamiltonian") -> Report:
    rep = Report()
    t0 = time.perf_counter()
    ok = (len(seq) == g.order and len(set(seq)) == g.order and cycle_edges(seq) <= g.edges)
    rep.add(name, f"cycle of length {g.order} verified", g.order, len(set(seq)) if ok else "broken",
            ok, _ms(t0))
    return rep


# -- exhaustive cycle oracle ------------------------------------------------

def exhaustive_cycle_spectrum(g: Graph) -> set[int]:
    """Every cycle length present in ``g``. Bitmask path DP per smallest
    vertex of the cycle, so each cycle is rooted once."""
    if g.order > SPECTRUM_MAX_ORDER:
        raise ValueError(f"exhaustive spectrum capped at {SPECTRUM_MAX_ORDER} vertices")
    nbr = [sum(1 << w for w in g.neighbors(v)) for v in range(g.order)]
    found: set[int] = set()
    possible = set(range(3, g.order + 1))
    for s in range(g.order):
        k = g.order - s
        if k < 3:
            break
        local = [(nbr[s + j] >> s) for j in range(k)]
        dp = [0] * (1 << k)
        dp[1] = 1
        for mask in range(1, 1 << k, 2):
            ends = dp[mask]
            if not ends:
                continue
            size = mask.bit_count()
            if size >= 3 and ends & local[0]:
                found.add(size)
            free = ~mask & ((1 << k) - 1)
            while free:
                low = free & -free
                w = low.bit_length() - 1
                if local[w] & ends:
                    dp[mask | low] |= low
                free ^= low
        if found >= possible:
            break
    return found


def cycles_of_length(g: Graph, length: int) -> Iterator[tuple]:
    """Backtracking enumeration of every cycle with ``length`` vertices, each
    once: rooted at its smallest vertex, second vertex < last vertex."""
    if g.order > SPECTRUM_MAX_ORDER:
        raise ValueError(f"cycle enumeration capped at {SPECTRUM_MAX_ORDER} vertices")
    adj = [sorted(g.neighbors(v)) for v in range(g.order)]
    for s in range(g.order):
        path = [s]
        on = {s}

        def grow():
            x = path[-1]
            if len(path) == length:
                if s in g.neighbors(x) and path[1] < x:
                    yield tuple(path)
                return
            for y in adj[x]:
                if y > s and y not in on:
                    path.append(y)
                    on.add(y)
                    yield from grow()
                    on.discard(y)
                    path.pop()

        yield from grow()


def canonical_cycle(seq) -> tuple:
    """Rotation/reflection-normal form of a cycle."""
    k = len(seq)
    i = seq.index(min(seq))
    fwd = tuple(seq[(i + j) % k] for j in range(k))
    back = tuple(seq[(i - j) % k] for j in range(k))
    return min(fwd, back)


# -- side facts ---------------------------------------------------------------

def verify_common_neighbor_bound(n: int) -> Report:
    if not 3 <= n <= 8:
        raise ValueError("common-neighbour check runs for 3 <= n <= 8")
    rep = Report()
    t0 = time.perf_counter()
    g = build_aq(n)
    bits = [sum(1 << w for w in g.neighbors(v)) for v in range(g.order)]
    worst = max((bits[a] & bits[b]).bit_count() for a, b in combinations(range(g.order), 2))
    rep.add(f"common_neighbors.n{n}", "every pair has <= 4 common neighbours", "<=4", worst,
            worst <= 4, _ms(t0))
    return rep


def _random_k_connected(rng: random.Random, order: int, k: int) -> Graph:
    while True:
        p = rng.uniform(0.3, 0.95)
        g = Graph.from_edges(order, [(a, b) for a, b in combinations(range(order), 2)
                                     if rng.random() < p])
        if vertex_connectivity(g) >= k:
            return g


def matching_join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of two equal-order graphs plus the matching i -- i'."""
    if g1.order != g2.order:
        raise ValueError("matching join needs equal orders")
    n = g1.order
    edges = set(g1.edges) | {(a + n, b + n) for a, b in g2.edges} | {(i, i + n) for i in range(n)}
    return Graph(2 * n, frozenset(edges))


def verify_matching_join_property(trials: int, seed: int) -> Report:
    if trials < 1:
        raise ValueError("need at least one trial")
    rng = random.Random(seed)
    rep = Report()
    t0 = time.perf_counter()
    held = 0
    first_bad = None
    for trial in range(trials):
        k = rng.randint(1, 4)
        order = rng.randint(k + 1, 16)
        g1 = _random_k_connected(rng, order, k)
        g2 = _random_k_connected(rng, order, k)
        if vertex_connectivity(matching_join(g1, g2)) >= k + 1:
            held += 1
        elif first_bad is None:
            first_bad = trial
    observed = f"{held}/{trials}" + ("" if first_bad is None else f"(first_bad={first_bad})")
    rep.add("matching_join", f"kappa(join) >= k+1 (seed={seed})", f"{trials}/{trials}", observed,
            held == trials, _ms(t0))
    return rep


def diameter(g: Graph) -> int:
    """Largest BFS eccentricity; -1 if disconnected."""
    best = 0
    for s in range(g.order):
        dist = [-1] * g.order
        dist[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for y in g.neighbors(x):
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    q.append(y)
        if min(dist) < 0:
            return -1
        best = max(best, max(dist))
    return best


def verify_aq_sanity(n: int, exact_max_n: int = 7) -> Report:
    if not 1 <= n <= 8:
        raise ValueError("sanity check runs for 1 <= n <= 8")
    rep = Report()
    g = build_aq(n)
    rep.add(f"aq{n}.order", "2^n vertices", 1 << n, g.order, g.order == 1 << n)
    rep.extend(verify_regular(g, 2 * n - 1, name=f"aq{n}.regular"))
    t0 = time.perf_counter()
    diam = diameter(g)
    want = math.ceil(n / 2)
    rep.add(f"aq{n}.diameter", "diameter = ceil(n/2)", want, diam, diam == want, _ms(t0))
    if n <= exact_max_n:
        rep.extend(verify_connectivity_at_least(g, 2 * n - 1, "exact", name=f"aq{n}.connectivity",
                                                exact_value=True))
    else:
        rep.extend(verify_connectivity_at_least(g, 2 * n - 1, "sampled", seed=0, pairs=100,
                                                name=f"aq{n}.connectivity"))
    return rep


# -- full decomposition check -------------------------------------------------

def verify_side(g: Graph, degree: int, cert, mode: str, seed=None, pairs=None,
                name: str = "H") -> Report:
    rep = Report()
    rep.extend(verify_regular(g, degree, name=f"{name}.regular"))
    rep.extend(verify_connectivity_at_least(g, degree, mode, seed, pairs,
                                            name=f"{name}.connectivity", exact_value=True))
    if isinstance(cert, HamiltonianCycle):
        rep.extend(verify_hamiltonian(g, cert.seq, name=f"{name}.hamiltonian"))
    elif cert is not None:
        try:
            rep.extend(verify_pancyclic_via_cert(g, cert, name=f"{name}.pancyclic"))
        except CertError as exc:
            rep.add(f"{name}.pancyclic.cert", "certificate spans side", "spanning", str(exc), False)
    return rep


def verify_decomposition(d: Decomposition, mode: str = "exact", seed=None, pairs=None) -> Report:
    whole = build_aq(d.n)
    rep = Report()
    rep.extend(verify_partition(whole, d.H, d.K))
    rep.extend(verify_side(d.H, d.n1, d.cert_h, mode, seed, pairs, name="H"))
    rep.extend(verify_side(d.K, d.n2, d.cert_k, mode, seed, pairs, name="K"))
    return rep

