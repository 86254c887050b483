"""Augmented cube generation, bitwise adjacency and edge-set algebra.

Vertices are plain ints. The label ``x1 x2 ... xn`` maps to an integer with
``x1`` as the most significant bit, so the 0-half / 1-half split of the
recursive construction is the high bit.

Dimension indexing is by suffix length: ``Hypercube(d)`` flips bit ``d``
counted from the right (1-based), ``Complement(d)`` complements the ``d``
rightmost bits. Both kinds at dimension ``d`` join the two halves of a
sub-cube of dimension ``d``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

MAX_DIM = 16

Edge = tuple[int, int]


class Kind(enum.Enum):
    HYPERCUBE = "hypercube"
    COMPLEMENT = "complement"


@dataclass(frozen=True)
class EdgeKind:
    kind: Kind
    dim: int

    def __post_init__(self):
        if self.kind is Kind.COMPLEMENT and self.dim < 2:
            raise ValueError("complement edges need dimension >= 2")
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")

    def __str__(self):
        return f"{self.kind.value}({self.dim})"


def hypercube(d: int) -> EdgeKind:
    return EdgeKind(Kind.HYPERCUBE, d)


def complement(d: int) -> EdgeKind:
    return EdgeKind(Kind.COMPLEMENT, d)


def label(x: int, n: int) -> str:
    """Zero-padded binary label of vertex ``x`` in dimension ``n``."""
    if not 0 <= x < (1 << n):
        raise ValueError(f"vertex {x} out of range for n={n}")
    return format(x, f"0{n}b")


def parse_label(s: str) -> int:
    if not s or any(c not in "01" for c in s):
        raise ValueError(f"bad vertex label {s!r}")
    return int(s, 2)


def edge(a: int, b: int) -> Edge:
    """Canonical (min, max) form of an undirected edge."""
    if a == b:
        raise ValueError(f"self-loop at {a}")
    return (a, b) if a < b else (b, a)


def _check_dim(n: int) -> None:
    if not 1 <= n <= MAX_DIM:
        raise ValueError(f"dimension {n} out of range 1..{MAX_DIM}")


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph on vertices ``0 .. order-1``."""

    order: int
    edges: frozenset

    def __post_init__(self):
        edges = frozenset(self.edges)
        for a, b in edges:
            if not (0 <= a < b < self.order):
                raise ValueError(f"bad edge {(a, b)} for order {self.order}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, order: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        return cls(order, frozenset(edge(a, b) for a, b in pairs))

    @classmethod
    def cycle(cls, order: int, seq: list[int]) -> "Graph":
        k = len(seq)
        return cls.from_edges(order, ((seq[i], seq[(i + 1) % k]) for i in range(k)))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.edges == other.edges

    def __hash__(self):
        return hash((self.order, self.edges))

    def __len__(self):
        return len(self.edges)

    def __contains__(self, e):
        return edge(*e) in self.edges

    @property
    def n(self) -> int:
        """Cube dimension when the order is a power of two."""
        d = self.order.bit_length() - 1
        if self.order != 1 << d:
            raise ValueError(f"order {self.order} is not a power of two")
        return d

    @cached_property
    def adjacency(self) -> tuple[frozenset, ...]:
        adj = [set() for _ in range(self.order)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return tuple(frozenset(s) for s in adj)

    def neighbors(self, v: int) -> frozenset:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adjacency]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def graph_difference(g: Graph, removed: Iterable[Edge]) -> Graph:
    """``g`` minus ``removed``; every removed edge must be present."""
    removed = frozenset(edge(*e) for e in removed)
    missing = removed - g.edges
    if missing:
        raise ValueError(f"cannot remove edges not in graph: {sorted(missing)[:5]}")
    return Graph(g.order, g.edges - removed)


def graph_union(*parts) -> Graph:
    """Union of graphs and/or edge collections; order is the largest Graph's."""
    order = 0
    edges: set = set()
    for p in parts:
        if isinstance(p, Graph):
            order = max(order, p.order)
            edges |= p.edges
        else:
            edges |= {edge(*e) for e in p}
    return Graph(order, frozenset(edges))


# -- augmented cube ---------------------------------------------------------

def _kind(kind) -> Kind:
    return kind.kind if isinstance(kind, EdgeKind) else Kind(kind)


def partner(x: int, d: int, kind, n: Optional[int] = None) -> int:
    """Neighbor of ``x`` across dimension ``d`` for the given edge kind."""
    kind = _kind(kind)
    if n is not None and d > n:
        raise ValueError(f"dimension {d} exceeds n={n}")
    if kind is Kind.HYPERCUBE:
        if d < 1:
            raise ValueError("hypercube dimension must be >= 1")
        return x ^ (1 << (d - 1))
    if d < 2:
        raise ValueError("complement dimension must be >= 2")
    return x ^ ((1 << d) - 1)


def is_adjacent(x: int, y: int, n: int) -> Optional[EdgeKind]:
    """Edge kind joining ``x`` and ``y`` in AQ_n, or None."""
    _check_dim(n)
    top = 1 << n
    if not (0 <= x < top and 0 <= y < top):
        raise ValueError(f"vertices must be < 2^{n}")
    if x == y:
        raise ValueError("x and y must differ")
    diff = x ^ y
    d = diff.bit_length()
    if diff == 1 << (d - 1):
        return hypercube(d)
    if diff == (1 << d) - 1:
        return complement(d)
    return None


def neighbors(x: int, n: int) -> list[int]:
    """All 2n-1 neighbours of ``x`` in AQ_n."""
    out = [x ^ (1 << (d - 1)) for d in range(1, n + 1)]
    out += [x ^ ((1 << d) - 1) for d in range(2, n + 1)]
    return out


def half_matching(prefix: str, d: int, kind) -> frozenset:
    """Perfect matching of ``kind`` between the two halves of the sub-cube of
    dimension ``d`` whose leading bits are ``prefix``."""
    if d < 1 or (d < 2 and _kind(kind) is Kind.COMPLEMENT):
        raise ValueError(f"bad dimension {d}")
    if prefix and any(c not in "01" for c in prefix):
        raise ValueError(f"bad prefix {prefix!r}")
    _check_dim(len(prefix) + d)
    base = (int(prefix, 2) << d) if prefix else 0
    low = 1 << (d - 1)
    return frozenset(edge(x, partner(x, d, kind)) for x in range(base, base + low))


def dimension_class(n: int, d: int, kind) -> frozenset:
    """All edges of AQ_n of the given kind at dimension ``d``."""
    out: set = set()
    for p in range(1 << (n - d)):
        prefix = format(p, f"0{n - d}b") if n > d else ""
        out |= half_matching(prefix, d, kind)
    return frozenset(out)


def top_matching(n: int, kind) -> frozenset:
    """The matching joining AQ^0_{n-1} and AQ^1_{n-1} inside AQ_n."""
    return half_matching("", n, kind)


def build_aq(n: int) -> Graph:
    _check_dim(n)
    edges = set()
    for x in range(1 << n):
        for y in neighbors(x, n):
            if x < y:
                edges.add((x, y))
    return Graph(1 << n, frozenset(edges))


def embed(g: Graph, n: int) -> Graph:
    """Reinterpret ``g`` (a graph in the 0-half) inside AQ_n."""
    if g.order > 1 << n:
        raise ValueError("graph does not fit")
    return Graph(1 << n, g.edges)


def mirror_graph(g: Graph) -> Graph:
    """Copy of ``g`` (on AQ_{n-1} vertices) moved into the 1-half of AQ_n."""
    hi = g.order
    return Graph(2 * hi, frozenset((a | hi, b | hi) for a, b in g.edges))
