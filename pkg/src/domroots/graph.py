"""Simple-graph representation with word-sized adjacency bitmasks.

Vertices are ``0..n-1`` and each adjacency row is one Python int used as a
bitmask, so a graph up to the 64-vertex cap fits in a handful of machine
words and neighbourhood unions are single OR instructions.  Graphs are
immutable after construction and safe to share between workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CapacityError, DomainError, Graph6ParseError

VERTEX_CAP = 64

_G6_HEADER = ">>graph6<<"


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: vertex count plus per-vertex neighbour masks."""

    n: int
    adj: tuple

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"graph order must be a positive integer, got {self.n!r}")
        if self.n > VERTEX_CAP:
            raise CapacityError(f"graph order {self.n} exceeds the cap of {VERTEX_CAP}")
        if len(self.adj) != self.n:
            raise DomainError("adjacency table length does not match the order")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise DomainError(f"vertex {v} has neighbours outside 0..{self.n - 1}")
            if mask >> v & 1:
                raise DomainError(f"loop at vertex {v}")
        for v in range(self.n):
            for u in _bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise DomainError(f"asymmetric edge {{{v},{u}}}")

    def neighbors(self, v: int) -> frozenset:
        self._check_vertex(v)
        return frozenset(_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def edges(self) -> Iterator[tuple]:
        for v in range(self.n):
            for u in _bits(self.adj[v]):
                if u > v:
                    yield (v, u)

    def degree_sequence(self) -> tuple:
        return tuple(sorted(m.bit_count() for m in self.adj))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise DomainError(f"vertex {v} out of range for order {self.n}")


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_edges(n: int, edges: Iterable) -> Graph:
    """Build a graph from an edge list; loops and duplicates are rejected."""
    if n < 1:
        raise DomainError("graph order must be >= 1")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise DomainError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise DomainError(f"edge {{{u},{v}}} out of range for order {n}")
        if adj[u] >> v & 1:
            raise DomainError(f"duplicate edge {{{u},{v}}}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# named families
# ---------------------------------------------------------------------------

def complete(n: int) -> Graph:
    """Complete graph on ``n`` vertices."""
    if n < 1:
        raise DomainError("complete graph needs order >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    """Edgeless graph on ``n`` vertices."""
    if n < 1:
        raise DomainError("empty graph needs order >= 1")
    return Graph(n, (0,) * n)


def complete_bipartite(k: int, ell: int) -> Graph:
    """K_{k,l}: sides {0..k-1} and {k..k+l-1}, all cross edges."""
    if k < 1 or ell < 1:
        raise DomainError("complete bipartite sides must be >= 1")
    left = (1 << k) - 1
    right = ((1 << ell) - 1) << k
    adj = [right] * k + [left] * ell
    return Graph(k + ell, tuple(adj))


def star(k: int) -> Graph:
    """Star with ``k`` leaves (K_{1,k}); the centre is vertex 0 by convention."""
    if k < 1:
        raise DomainError("star needs at least one leaf")
    return complete_bipartite(1, k)


_FAMILIES = {
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "star": (star, 1),
    "empty_graph": (empty_graph, 1),
}


def family(kind: str, *params: int) -> Graph:
    """Dispatch to a named family: complete n | complete_bipartite k l | star k | empty_graph n."""
    try:
        ctor, arity = _FAMILIES[kind]
    except KeyError:
        raise DomainError(f"unknown graph family {kind!r}") from None
    if len(params) != arity:
        raise DomainError(f"family {kind!r} takes {arity} parameter(s), got {len(params)}")
    return ctor(*params)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def substitute_complete(g: Graph, m: int) -> Graph:
    """Substitute a clique K_m for every vertex of ``g``.

    Block ``i`` occupies vertices ``i*m .. i*m+m-1`` (block-major order);
    blocks are cliques and two blocks are completely joined exactly when the
    underlying vertices are adjacent.
    """
    if m < 1:
        raise DomainError("substitution order must be >= 1")
    n = g.n * m
    if n > VERTEX_CAP:
        raise CapacityError(
            f"substitution would create {n} vertices, above the cap of {VERTEX_CAP}"
        )
    block = (1 << m) - 1
    block_masks = [block << (i * m) for i in range(g.n)]
    adj = []
    for i in range(g.n):
        joined = 0
        for j in _bits(g.adj[i]):
            joined |= block_masks[j]
        for t in range(m):
            v = i * m + t
            adj.append((block_masks[i] ^ (1 << v)) | joined)
    return Graph(n, tuple(adj))


def closed_neighborhood_mask(g: Graph, mask: int) -> int:
    """N[A] as a bitmask for a vertex-set bitmask ``A``."""
    out = 0
    for v in _bits(mask):
        out |= g.adj[v] | (1 << v)
    return out


def closed_neighborhood_union(g: Graph, vertices: Iterable) -> frozenset:
    """N[A]: the union of closed neighbourhoods over ``A``; empty for A = {}."""
    mask = 0
    for v in vertices:
        g._check_vertex(v)
        mask |= 1 << v
    return frozenset(_bits(closed_neighborhood_mask(g, mask)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """G + H with H's vertices shifted by n(G); no cross edges."""
    n = g.n + h.n
    if n > VERTEX_CAP:
        raise CapacityError(f"union would have {n} vertices, above the cap of {VERTEX_CAP}")
    adj = list(g.adj) + [m << g.n for m in h.adj]
    return Graph(n, tuple(adj))


def refinement_signature(g: Graph, rounds: int = 3) -> tuple:
    """Coarse isomorphism-invariant signature by iterated degree refinement.

    This is a heuristic: non-isomorphic graphs may collide (regular graphs
    frequently do), so it is only suitable for duplicate *filtering*, never
    for proving isomorphism.
    """
    colors = [m.bit_count() for m in g.adj]
    for _ in range(rounds):
        keys = [
            (colors[v], tuple(sorted(colors[u] for u in _bits(g.adj[v]))))
            for v in range(g.n)
        ]
        rank = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [rank[k] for k in keys]
        if new == colors:
            break
        colors = new
    return (g.n, g.edge_count(), tuple(sorted(colors)))


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def from_graph6(text: str) -> Graph:
    """Decode one graph6-encoded graph (optionally prefixed with the header)."""
    if text.startswith(_G6_HEADER):
        text = text[len(_G6_HEADER):]
    text = text.rstrip("\r\n")
    if not text:
        raise Graph6ParseError("empty graph6 input", 0)
    data = text.encode("ascii", errors="replace")
    for off, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6ParseError(f"byte {b} outside the printable graph6 range", off)
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6ParseError("8-byte order encoding exceeds the vertex cap", 0)
        if len(data) < 4:
            raise Graph6ParseError("truncated long-form order", len(data))
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
        body_off = 4
    else:
        n = data[0] - 63
        body = data[1:]
        body_off = 1
    if n == 0:
        raise Graph6ParseError("graph of order 0 is not supported", 0)
    if n > VERTEX_CAP:
        raise CapacityError(f"graph6 order {n} exceeds the cap of {VERTEX_CAP}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise Graph6ParseError(
            f"expected {need} edge byte(s) for order {n}, got {len(body)}",
            body_off + min(len(body), need),
        )
    adj = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[idx // 6] - 63
            bit = byte >> (5 - idx % 6) & 1
            if bit:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    if need:
        tail = body[-1] - 63
        pad = 6 * need - nbits
        if tail & ((1 << pad) - 1):
            raise Graph6ParseError("nonzero padding bits", body_off + need - 1)
    return Graph(n, tuple(adj))


def to_graph6(g: Graph) -> str:
    """Encode a graph in graph6; round-trips with :func:`from_graph6`."""
    if g.n <= 62:
        head = [g.n + 63]
    else:
        head = [126, (g.n >> 12 & 63) + 63, (g.n >> 6 & 63) + 63, (g.n & 63) + 63]
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = val << 1 | b
        body.append(val + 63)
    return bytes(head + body).decode("ascii")


def read_graph6_file(path) -> Iterator[Graph]:
    """Stream graphs from a one-graph-per-line graph6 corpus file."""
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield from_graph6(line)
