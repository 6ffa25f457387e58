"""Simple undirected graphs on vertices 0..n-1, stored as adjacency bitmasks.

Vertex subsets are passed around as ``frozenset[int]`` at the API boundary;
internally everything works on Python ints used as bitsets, so the order is
not capped at 64.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from itertools import combinations


class GraphInputError(ValueError):
    """Raised for malformed graph input (bad vertex index, loops, ...)."""


class Graph6ParseError(GraphInputError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte offset {offset})")
        self.offset = offset


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph.

    ``adj[v]`` is the bitmask of neighbours of ``v``. Two graphs compare
    equal when they have the same order and the same labelled edge set.
    """

    __slots__ = ("_adj",)

    def __init__(self, order: int, edges: Iterable[tuple[int, int]] = ()):
        if order < 0:
            raise GraphInputError(f"order must be nonnegative, got {order}")
        adj = [0] * order
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise GraphInputError(f"edge ({u}, {v}) out of range for order {order}")
            if u == v:
                raise GraphInputError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._adj = tuple(adj)

    @classmethod
    def from_adjacency(cls, adj: Iterable[int]) -> Graph:
        adj = tuple(adj)
        n = len(adj)
        full = (1 << n) - 1
        for v, m in enumerate(adj):
            if m & ~full:
                raise GraphInputError(f"neighbour mask of {v} exceeds order {n}")
            if m >> v & 1:
                raise GraphInputError(f"loop at vertex {v}")
            for u in bits(m):
                if not adj[u] >> v & 1:
                    raise GraphInputError(f"asymmetric adjacency between {v} and {u}")
        g = cls.__new__(cls)
        g._adj = adj
        return g

    @property
    def order(self) -> int:
        return len(self._adj)

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    @property
    def full_mask(self) -> int:
        return (1 << len(self._adj)) - 1

    def vertices(self) -> range:
        return range(len(self._adj))

    def size(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in bits(self._adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def check_vertices(self, vertices: Iterable[int]) -> int:
        """Return the bitmask of ``vertices`` after range-checking them."""
        m = 0
        n = self.order
        for v in vertices:
            if not isinstance(v, int) or not 0 <= v < n:
                raise GraphInputError(f"vertex {v!r} out of range for order {n}")
            m |= 1 << v
        return m

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"


def neighborhood(g: Graph, x: Iterable[int]) -> frozenset[int]:
    """N(X): vertices adjacent to some member of ``x``, minus ``x`` itself."""
    xm = g.check_vertices(x)
    return frozenset(bits(neighborhood_mask(g, xm)))


def neighborhood_mask(g: Graph, xm: int) -> int:
    out = 0
    adj = g.adj
    for v in bits(xm):
        out |= adj[v]
    return out & ~xm


def induced_subgraph(g: Graph, x: Iterable[int]) -> Graph:
    """G[X], relabelled 0..|X|-1 by increasing original label."""
    xm = g.check_vertices(x)
    return induced_subgraph_mask(g, xm)[0]


def induced_subgraph_mask(g: Graph, xm: int) -> tuple[Graph, list[int]]:
    """Induced subgraph on bitmask ``xm`` plus the new-to-old label map."""
    keep = list(bits(xm))
    pos = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        m = 0
        for u in bits(g.adj[v] & xm):
            m |= 1 << pos[u]
        adj.append(m)
    h = Graph.__new__(Graph)
    h._adj = tuple(adj)
    return h, keep


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    remaining = g.full_mask if within is None else within
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & remaining & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components ordered by their smallest vertex."""
    return [frozenset(bits(c)) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    # The order-0 graph is treated as disconnected.
    return g.order > 0 and len(component_masks(g)) == 1


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.order
    return Graph(offset, edges)


def add_vertices(g: Graph, neighbour_lists: Iterable[Iterable[int]]) -> Graph:
    """Return ``g`` plus one new vertex per entry, joined to the listed vertices.

    Later entries may refer to earlier new vertices by their new labels.
    """
    edges = g.edges()
    n = g.order
    for nbrs in neighbour_lists:
        edges.extend((u, n) for u in nbrs)
        n += 1
    return Graph(n, edges)


# --- graph6 -----------------------------------------------------------------

def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as graph6, without header and without canonical relabelling."""
    out = [_encode_order(g.order)]
    acc = nbits = 0
    adj = g.adj
    for j in range(1, g.order):
        for i in range(j):
            acc = acc << 1 | (adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    """Decode a single graph6 string. An optional ``>>graph6<<`` header is accepted."""
    s = text.strip()
    base = 0
    if s.startswith(">>graph6<<"):
        s = s[10:]
        base = 10
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ParseError(f"character {ch!r} outside the printable graph6 range", base + i)
    if not s:
        raise Graph6ParseError("empty graph6 string", base)

    def group(start: int, count: int) -> int:
        if len(s) < start + count:
            raise Graph6ParseError("truncated order header", base + len(s))
        val = 0
        for ch in s[start:start + count]:
            val = val << 6 | (ord(ch) - 63)
        return val

    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    elif len(s) > 1 and s[1] == "~":
        n, pos = group(2, 6), 8
    else:
        n, pos = group(1, 3), 4

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[pos:]
    if len(body) < need:
        raise Graph6ParseError(f"expected {need} data bytes for order {n}, got {len(body)}", base + len(s))
    if len(body) > need:
        raise Graph6ParseError("trailing characters after graph6 data", base + pos + need)

    adj = [0] * n
    k = 0
    vals = [ord(ch) - 63 for ch in body]
    for j in range(1, n):
        for i in range(j):
            if vals[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if need and nbits % 6 and vals[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6ParseError("nonzero padding bits", base + pos + need - 1)
    g = Graph.__new__(Graph)
    g._adj = tuple(adj)
    return g


def all_labelled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices (2^(n choose 2) of them)."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        adj = [0] * n
        for k, (u, v) in enumerate(pairs):
            if code >> k & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        g = Graph.__new__(Graph)
        g._adj = tuple(adj)
        yield g
