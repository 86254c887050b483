"""Edge decompositions of AQ_n into two spanning regular pieces.

``decompose(n, n1)`` returns ``H`` (n1-regular) and ``K`` (n2-regular,
n2 = 2n-1-n1) together with certificates: a Hamiltonian cycle for an
n1 = 2 side, otherwise a ladder-like certificate whose core lies in the side.
Everything is deterministic; the cut index for every lift is fixed at 5.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Union

from .aqcore import (Graph, Kind, build_aq, edge, embed, graph_difference,
                     graph_union, mirror_graph, parse_label, top_matching)
from .ladder import (CertError, CycleSeq, LadderCert, cert_edges, core_graph,
                     core_rungs, cycle_edges, lift_c, lift_h, mirror,
                     validate_cert)
from .ladder import embed as embed_cert

CUT = 5

AQ4_HAMILTONIAN = (
    "0111 1000 1100 0100 0000 1111 1011 0011 "
    "0010 1010 1110 0001 0101 1101 1001 0110"
)
AQ4_LADDER = (
    "0010 1101 1110 0110 0100 1011 1000 0000",
    "0101 1010 1001 0001 0011 1100 1111 0111",
)
AQ4_CORE_LADDER = (
    "1000 0111 0011 1011 1111 0000 0100 1100",
    "1001 0110 0010 1010 1110 0001 0101 1101",
)


class DecompositionError(ValueError):
    pass


@dataclass(frozen=True)
class HamiltonianCycle:
    n: int
    seq: CycleSeq

    def graph(self) -> Graph:
        return Graph.cycle(1 << self.n, list(self.seq))


Cert = Union[HamiltonianCycle, LadderCert]


@dataclass(frozen=True)
class Decomposition:
    n: int
    n1: int
    n2: int
    H: Graph
    K: Graph
    cert_h: Cert
    cert_k: Cert
    trace: tuple = field(default=())

    def swapped(self) -> "Decomposition":
        return Decomposition(self.n, self.n2, self.n1, self.K, self.H,
                             self.cert_k, self.cert_h, self.trace)


def _parse(seq: str) -> tuple:
    return tuple(parse_label(s) for s in seq.split())


# -- AQ_4 base data ----------------------------------------------------------

@lru_cache(maxsize=None)
def base_aq4_hamiltonian() -> tuple[CycleSeq, LadderCert]:
    """Hamiltonian cycle of AQ_4 and a ladder certificate (with special
    4-cycle at t=5) spanning its complement."""
    cyc = _parse(AQ4_HAMILTONIAN)
    cert = LadderCert(4, _parse(AQ4_LADDER[0]), _parse(AQ4_LADDER[1]),
                      special_t=5, special_dim=4)
    aq4 = build_aq(4)
    if len(set(cyc)) != 16 or not cycle_edges(cyc) <= aq4.edges:
        raise DecompositionError("embedded AQ4 Hamiltonian cycle is corrupt")
    rest = graph_difference(aq4, cycle_edges(cyc))
    if not validate_cert(cert, rest, require_special=True).overall:
        raise DecompositionError("embedded AQ4 ladder does not fit the cycle complement")
    return cyc, cert


@lru_cache(maxsize=None)
def base_aq4_n13() -> tuple[LadderCert, LadderCert]:
    """Ladder pair (L1, L2) of AQ_4: core(L1) is 3-regular, L2 spans its
    complement and avoids L1's rungs at positions 1 and 4."""
    l1 = LadderCert(4, _parse(AQ4_CORE_LADDER[0]), _parse(AQ4_CORE_LADDER[1]))
    l2 = base_aq4_hamiltonian()[1]
    aq4 = build_aq(4)
    if not validate_cert(l1, aq4).overall:
        raise DecompositionError("embedded AQ4 core ladder is corrupt")
    core = core_graph(l1)
    if set(core.degrees()) != {3}:
        raise DecompositionError("core of embedded ladder is not 3-regular")
    rest = graph_difference(aq4, core.edges)
    if not validate_cert(l2, rest, require_special=True).overall:
        raise DecompositionError("second ladder does not fit the core complement")
    if cert_edges(l2) & core_rungs(l1):
        raise DecompositionError("second ladder uses a dropped rung of the first")
    return l1, l2


# -- recursions --------------------------------------------------------------

def _halves(n: int, g: Graph) -> Graph:
    """g (a graph on AQ_{n-1}) in the 0-half plus its copy in the 1-half."""
    return graph_union(embed(g, n), mirror_graph(g))


def _lift_pair(c: LadderCert, n: int) -> tuple[LadderCert, LadderCert]:
    low = embed_cert(c, n)
    return low, mirror(low)


@lru_cache(maxsize=None)
def decompose_n1_2(n: int) -> Decomposition:
    if n < 4:
        raise DecompositionError("n1 = 2 needs n >= 4")
    aq = build_aq(n)
    if n == 4:
        cyc, cert = base_aq4_hamiltonian()
        H = Graph.cycle(16, list(cyc))
        K = graph_difference(aq, H.edges)
        return Decomposition(4, 2, 5, H, K, HamiltonianCycle(4, cyc), cert,
                             ((4, "aq4-hamiltonian-base"),))
    prev = decompose_n1_2(n - 1)
    c0 = prev.cert_h.seq
    l, lm = _lift_pair(prev.cert_k, n)
    top = 1 << (n - 1)
    avoid = {l.U(CUT), l.U(CUT + 1), l.V(CUT), l.V(CUT + 1)}
    size = len(c0)
    for i in range(size):
        a, b = c0[i], c0[(i + 1) % size]
        if a not in avoid and b not in avoid:
            break
    else:  # pragma: no cover - m >= 8 leaves plenty of candidates
        raise DecompositionError("no admissible cycle edge to cut")
    c1 = [x | top for x in c0]
    seq = list(c0[: i + 1]) + c1[: i + 1][::-1] + c1[i + 1:][::-1] + list(c0[i + 1:])
    H = Graph.cycle(1 << n, seq)
    K = graph_difference(aq, H.edges)
    return Decomposition(n, 2, 2 * n - 3, H, K, HamiltonianCycle(n, tuple(seq)),
                         lift_h(l, lm, CUT),
                         prev.trace + ((n, "hamiltonian-splice-and-hypercube-lift"),))


@lru_cache(maxsize=None)
def decompose_n1_3(n: int) -> Decomposition:
    if n < 4:
        raise DecompositionError("n1 = 3 needs n >= 4")
    aq = build_aq(n)
    if n == 4:
        l1, l2 = base_aq4_n13()
        H = core_graph(l1)
        K = graph_difference(aq, H.edges)
        return Decomposition(4, 3, 4, H, K, l1, l2, ((4, "aq4-ladder-pair-base"),))
    prev = decompose_n1_3(n - 1)
    l1, l1m = _lift_pair(prev.cert_h, n)
    l2, l2m = _lift_pair(prev.cert_k, n)
    t = CUT
    h0 = core_graph(l1)
    # the mirrored side keeps its rungs 1 and 4 and drops its cross edges
    h1 = Graph(1 << n, cert_edges(l1m) - {edge(l1m.U(1), l1m.V(4)), edge(l1m.U(4), l1m.V(1))})
    H = graph_union(
        graph_difference(h0, [(l1.U(t), l1.U(t + 1)), (l1.V(t), l1.V(t + 1))]),
        graph_difference(h1, [(l1m.U(t), l1m.U(t + 1)), (l1m.V(t), l1m.V(t + 1))]),
        [(l1.U(t), l1m.U(t)), (l1.V(t), l1m.V(t)),
         (l1.U(t + 1), l1m.U(t + 1)), (l1.V(t + 1), l1m.V(t + 1))],
    )
    K = graph_difference(aq, H.edges)
    return Decomposition(n, 3, 2 * n - 4, H, K, lift_h(l1, l1m, t), lift_c(l2, l2m),
                         prev.trace + ((n, "core-surgery-and-complement-lift"),))


@lru_cache(maxsize=None)
def decompose_n1_4(n: int) -> Decomposition:
    if n < 5:
        raise DecompositionError("n1 = 4 needs n >= 5")
    aq = build_aq(n)
    prev = decompose_n1_3(n - 1)
    l1, l1m = _lift_pair(prev.cert_h, n)
    l2, l2m = _lift_pair(prev.cert_k, n)
    idx = [2, 3] + list(range(5, l1.m + 1))
    matching = [(l1.U(i), l1m.U(i)) for i in idx] + [(l1.V(i), l1m.V(i)) for i in idx]
    H = graph_union(Graph(1 << n, cert_edges(l1)), Graph(1 << n, cert_edges(l1m)), matching)
    K = graph_difference(aq, H.edges)
    return Decomposition(n, 4, 2 * n - 5, H, K, lift_h(l1, l1m, CUT), lift_c(l2, l2m),
                         prev.trace + ((n, "double-ladder-with-hypercube-rungs"),))


def check_partition(n: int, n1: int) -> int:
    """Validate (n, n1) with n1 <= n2 and return n2."""
    if n < 4:
        raise DecompositionError("decomposition needs n >= 4")
    n2 = 2 * n - 1 - n1
    if not 2 <= n1 <= n2:
        raise DecompositionError(f"need 2 <= n1 <= n2, got n1={n1}, n2={n2}")
    return n2


@lru_cache(maxsize=None)
def decompose(n: int, n1: int) -> Decomposition:
    """Split AQ_n into an n1-regular H and a (2n-1-n1)-regular K."""
    n2 = check_partition(n, n1)
    if n1 == 2:
        return decompose_n1_2(n)
    if n1 == 3:
        return decompose_n1_3(n)
    if n1 == 4:
        return decompose_n1_4(n)
    prev = decompose(n - 1, n1 - 1)
    H = graph_union(_halves(n, prev.H), top_matching(n, Kind.HYPERCUBE))
    K = graph_union(_halves(n, prev.K), top_matching(n, Kind.COMPLEMENT))
    ch, chm = _lift_pair(prev.cert_h, n)
    ck, ckm = _lift_pair(prev.cert_k, n)
    return Decomposition(n, n1, n2, H, K, lift_h(ch, chm, CUT), lift_c(ck, ckm),
                         prev.trace + ((n, "split-top-matchings-by-kind"),))


def decompose_any(n: int, n1: int) -> Decomposition:
    """Like ``decompose`` but accepts n1 > n2 by swapping the returned sides."""
    n2 = 2 * n - 1 - n1
    if n1 > n2:
        return decompose(n, n2).swapped()
    return decompose(n, n1)


__all__ = [
    "Decomposition", "DecompositionError", "HamiltonianCycle", "CertError",
    "base_aq4_hamiltonian", "base_aq4_n13", "decompose", "decompose_any",
    "decompose_n1_2", "decompose_n1_3", "decompose_n1_4", "check_partition",
]
