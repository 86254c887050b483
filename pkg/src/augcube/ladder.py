"""Ladder-like spanning certificates.

A certificate stores two vertex orders ``u_1..u_m`` and ``v_1..v_m``. Its
edges are implied: the two cycles, the rungs ``u_i v_i`` and the cross edges
``u_1 v_4`` and ``u_4 v_1``. Indices in this module's public API are 1-based
to line up with the usual notation; tuples are stored 0-based.

Removing the rungs at positions 1 and 4 leaves the *core graph*, a 3-regular,
3-connected graph with cycles of every length from 4 to 2m.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .aqcore import Graph, Kind, edge, label, partner
from .report import Report

CycleSeq = tuple


class CertError(ValueError):
    pass


@dataclass(frozen=True)
class LadderCert:
    n: int
    u: tuple
    v: tuple
    special_t: Optional[int] = None
    special_dim: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(self.u))
        object.__setattr__(self, "v", tuple(self.v))
        if len(self.u) != len(self.v):
            raise CertError("u and v must have the same length")
        if len(set(self.u) | set(self.v)) != 2 * len(self.u):
            raise CertError("certificate vertices are not distinct")
        if (self.special_t is None) != (self.special_dim is None):
            raise CertError("special_t and special_dim go together")

    @property
    def m(self) -> int:
        return len(self.u)

    def U(self, i: int) -> int:
        return self.u[i - 1]

    def V(self, i: int) -> int:
        return self.v[i - 1]

    def vertices(self) -> frozenset:
        return frozenset(self.u) | frozenset(self.v)

    def labels(self) -> tuple[list[str], list[str]]:
        return [label(x, self.n) for x in self.u], [label(x, self.n) for x in self.v]

    def special_cycle(self) -> Optional[CycleSeq]:
        t = self.special_t
        if t is None:
            return None
        return (self.U(t), self.U(t + 1), self.V(t + 1), self.V(t))


def cycle_edges(seq) -> frozenset:
    k = len(seq)
    return frozenset(edge(seq[i], seq[(i + 1) % k]) for i in range(k))


def _ring(seq) -> set:
    return set(cycle_edges(seq))


def rung_edges(c: LadderCert) -> frozenset:
    return frozenset(edge(a, b) for a, b in zip(c.u, c.v))


def cross_edges(c: LadderCert) -> frozenset:
    return frozenset({edge(c.U(1), c.V(4)), edge(c.U(4), c.V(1))})


def core_rungs(c: LadderCert) -> frozenset:
    """The two rungs dropped to form the core graph."""
    return frozenset({edge(c.U(1), c.V(1)), edge(c.U(4), c.V(4))})


def cert_edges(c: LadderCert) -> frozenset:
    if c.m < 4:
        raise CertError("certificate needs m >= 4")
    return frozenset(_ring(c.u) | _ring(c.v) | rung_edges(c) | cross_edges(c))


def core_graph(c: LadderCert) -> Graph:
    return Graph(1 << c.n, cert_edges(c) - core_rungs(c))


def validate_cert(c: LadderCert, host: Graph, require_special: bool = False,
                  core_only: bool = False, spanning: bool = True) -> Report:
    """Check ``c`` against ``host``. With ``core_only`` the rungs at positions
    1 and 4 are not required to be present."""
    rep = Report()

    def missing(edges):
        return sorted(e for e in edges if e not in host.edges)

    rep.add("cert.size", "m >= 6", ">=6", c.m, c.m >= 6)
    if spanning:
        covered = c.vertices() == frozenset(range(host.order))
        rep.add("cert.spanning", "vertices cover host", host.order, len(c.vertices()), covered)
    groups = [
        ("cert.z1_edges", _ring(c.u)),
        ("cert.z2_edges", _ring(c.v)),
        ("cert.rungs", rung_edges(c) - (core_rungs(c) if core_only else frozenset())),
        ("cert.cross_edges", cross_edges(c)),
    ]
    for name, edges in groups:
        miss = missing(edges)
        observed = "all" if not miss else ",".join(f"{a}-{b}" for a, b in miss[:4])
        rep.add(name, "implied edges present in host", "all", observed, not miss)
    if require_special or c.special_t is not None:
        rep.extend(_check_special(c, host))
    return rep


def _check_special(c: LadderCert, host: Graph) -> Report:
    rep = Report()
    t, d = c.special_t, c.special_dim
    if t is None:
        rep.add("cert.special", "special 4-cycle present", "t", "none", False)
        return rep
    ok_range = 5 <= t <= c.m - 1
    rep.add("cert.special_index", "5 <= t <= m-1", f"5..{c.m - 1}", t, ok_range)
    if not ok_range:
        return rep
    ok = (2 <= d <= c.n
          and partner(c.U(t), d, Kind.COMPLEMENT) == c.U(t + 1)
          and partner(c.V(t), d, Kind.COMPLEMENT) == c.V(t + 1))
    rep.add("cert.special_partner", f"complement pairs at dim {d}", True, ok, ok)
    present = all(e in host.edges for e in cycle_edges(c.special_cycle()))
    rep.add("cert.special_cycle", "special 4-cycle edges in host", True, present, present)
    return rep


# -- lifting ---------------------------------------------------------------

def embed(c: LadderCert, n: int) -> LadderCert:
    """Same certificate viewed as living in the 0-half of AQ_n."""
    if n < c.n:
        raise CertError("cannot embed into a smaller dimension")
    if any(x >> c.n for x in c.vertices()):
        raise CertError("certificate vertices exceed its dimension")
    return replace(c, n=n)


def mirror(c: LadderCert) -> LadderCert:
    """Image of a 0-half certificate under setting the leading bit."""
    top = 1 << (c.n - 1)
    if any(x & top for x in c.vertices()):
        raise CertError("mirror needs every vertex in the 0-half")
    return replace(c, u=tuple(x | top for x in c.u), v=tuple(x | top for x in c.v))


def _check_pair(l: LadderCert, lm: LadderCert) -> None:
    if lm != mirror(l):
        raise CertError("second certificate is not the mirror of the first")


def lift_h(l: LadderCert, l_mirror: LadderCert, s: int = 5) -> LadderCert:
    """Join ``l`` and its mirror with four hypercube edges at rung ``s``."""
    _check_pair(l, l_mirror)
    m = l.m
    if not 5 <= s <= m - 1:
        raise CertError(f"cut index {s} outside 5..{m - 1}")

    def relabel(a, a_):
        out = []
        for i in range(1, 2 * m + 1):
            if i <= s:
                out.append(a[i - 1])
            elif i <= 2 * s:
                out.append(a_[2 * s - i])
            elif i <= m + s:
                out.append(a_[m + 2 * s - i])
            else:
                out.append(a[i - m - 1])
        return tuple(out)

    return LadderCert(l.n, relabel(l.u, l_mirror.u), relabel(l.v, l_mirror.v))


def lift_c(l: LadderCert, l_mirror: LadderCert) -> LadderCert:
    """Join ``l`` and its mirror with four complement edges across the
    special 4-cycle; the result carries a special 4-cycle at dimension n."""
    _check_pair(l, l_mirror)
    t = l.special_t
    if t is None:
        raise CertError("lift_c needs a special 4-cycle")
    m, n = l.m, l.n
    if not 5 <= t <= m - 1:
        raise CertError(f"special index {t} outside 5..{m - 1}")
    pairs = [
        (l.U(t), l_mirror.U(t + 1)), (l.V(t), l_mirror.V(t + 1)),
        (l.U(t + 1), l_mirror.U(t)), (l.V(t + 1), l_mirror.V(t)),
    ]
    if any(partner(a, n, Kind.COMPLEMENT) != b for a, b in pairs):
        raise CertError("special 4-cycle pairs are not complement partners at the top dimension")

    def relabel(a, a_):
        out = []
        for i in range(1, 2 * m + 1):
            if i <= t:
                out.append(a[i - 1])
            elif i <= m:
                out.append(a_[i - 1])
            elif i <= m + t:
                out.append(a_[i - m - 1])
            else:
                out.append(a[i - m - 1])
        return tuple(out)

    return LadderCert(n, relabel(l.u, l_mirror.u), relabel(l.v, l_mirror.v),
                      special_t=t, special_dim=n)


def lift_edges(c: LadderCert, s: int = 5) -> frozenset:
    """The four matching edges ``lift_h`` adds at cut ``s`` for a certificate
    ``c`` in the 0-half."""
    top = 1 << (c.n - 1)
    return frozenset(edge(x, x | top) for x in (c.U(s), c.V(s), c.U(s + 1), c.V(s + 1)))


# -- cycles ----------------------------------------------------------------

def extract_cycle(c: LadderCert, length: int) -> CycleSeq:
    """A cycle of exactly ``length`` vertices built from the ladder structure.
    Never uses the rungs at positions 1 and 4."""
    m = c.m
    if not 4 <= length <= 2 * m:
        raise CertError(f"length {length} outside 4..{2 * m}")
    if m < 6:
        raise CertError("cycle extraction needs m >= 6")
    U, V = c.U, c.V

    def us(a, b):
        return [U(i) for i in range(a, b + 1)]

    def vs_down(a, b):
        return [V(i) for i in range(a, b - 1, -1)]

    if length % 2 == 0:
        if length <= 2 * m - 8:
            k = 4 + length // 2
            seq = us(5, k) + vs_down(k, 5)
        elif length == 2 * m - 6:
            seq = us(3, m - 1) + vs_down(m - 1, 3)
        elif length == 2 * m - 4:
            seq = us(3, m) + vs_down(m, 3)
        elif length == 2 * m - 2:
            seq = us(2, m) + vs_down(m, 2)
        else:
            seq = us(3, m) + [U(1), U(2), V(2), V(1)] + vs_down(m, 3)
    elif length == 5:
        seq = [U(2), U(1), V(4), V(3), V(2)]
    elif length == 2 * m - 1:
        seq = us(3, m) + [U(1)] + [V(i) for i in range(4, m + 1)] + [V(1), V(2), V(3)]
    else:
        i = (length + 3) // 2
        seq = [U(4)] + [V(j) for j in range(1, i + 1)] + [U(j) for j in range(i, 4, -1)]
    return tuple(seq)
