"""Immutable bitset graphs and the structural queries every other module builds on.

Vertices are dense indices 0..n-1 and a set of vertices is a Python int used as
a bitset. VertexSet wraps such an int together with the graph it indexes so sets
homed on different graphs cannot be mixed by accident.
"""

from __future__ import annotations

from math import inf as INF


class DomainError(ValueError):
    """Input lies outside an operation's documented domain."""


class ResourceError(RuntimeError):
    """Instance exceeds a documented size cap."""


class FormatError(ValueError):
    """Malformed graph text."""


def bit_indices(bits: int) -> list[int]:
    """Ascending indices of the set bits."""
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


def bits_of(indices) -> int:
    mask = 0
    for v in indices:
        mask |= 1 << v
    return mask


class Graph:
    """Simple undirected graph: order, per-vertex neighbor bitsets, optional label.

    Instances are immutable by convention; adj is a tuple of ints where bit u of
    adj[v] means u ~ v.
    """

    __slots__ = ("n", "adj", "label")

    def __init__(self, n: int, edges=(), label: str = ""):
        if n < 0:
            raise DomainError("negative order")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexError(f"edge ({u},{v}) out of range for order {n}")
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.adj = tuple(rows)
        self.label = label

    @classmethod
    def from_rows(cls, rows, label: str = "") -> "Graph":
        """Adopt prebuilt symmetric adjacency rows (used by product constructors)."""
        g = object.__new__(cls)
        g.n = len(rows)
        g.adj = tuple(rows)
        g.label = label
        return g

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def closed(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def full_bits(self) -> int:
        return (1 << self.n) - 1

    def edges(self):
        """Edges as (u, v) with u < v, lexicographically sorted."""
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            for v in bit_indices(rest):
                yield (u, v)

    def check_valid(self):
        """Structural invariants; for tests, not hot paths."""
        assert len(self.adj) == self.n
        for v, row in enumerate(self.adj):
            assert row >> self.n == 0, "bit beyond order"
            assert not row >> v & 1, "loop"
            for u in bit_indices(row):
                assert self.adj[u] >> v & 1, "asymmetric adjacency"

    def __repr__(self):
        tag = f" {self.label!r}" if self.label else ""
        return f"<Graph n={self.n} m={self.m}{tag}>"


class VertexSet:
    """Bitset of vertices tied to its home graph; mixing homes is rejected."""

    __slots__ = ("home", "bits")

    def __init__(self, home: Graph, bits: int = 0):
        if bits < 0 or bits >> home.n:
            raise DomainError("bit outside the home graph's order")
        self.home = home
        self.bits = bits

    @classmethod
    def of(cls, home: Graph, indices) -> "VertexSet":
        return cls(home, bits_of(indices))

    def _mate(self, other: "VertexSet") -> int:
        if not isinstance(other, VertexSet) or other.home is not self.home:
            raise DomainError("vertex sets have different home graphs")
        return other.bits

    def members(self) -> list[int]:
        return bit_indices(self.bits)

    def __iter__(self):
        return iter(bit_indices(self.bits))

    def __len__(self):
        return self.bits.bit_count()

    def __contains__(self, v) -> bool:
        return 0 <= v < self.home.n and bool(self.bits >> v & 1)

    def __eq__(self, other):
        return (
            isinstance(other, VertexSet)
            and other.home is self.home
            and other.bits == self.bits
        )

    def __hash__(self):
        return hash((id(self.home), self.bits))

    def union(self, other):
        return VertexSet(self.home, self.bits | self._mate(other))

    def intersection(self, other):
        return VertexSet(self.home, self.bits & self._mate(other))

    def difference(self, other):
        return VertexSet(self.home, self.bits & ~self._mate(other))

    def add(self, v: int):
        if not 0 <= v < self.home.n:
            raise IndexError(f"vertex {v} out of range")
        return VertexSet(self.home, self.bits | 1 << v)

    def discard(self, v: int):
        return VertexSet(self.home, self.bits & ~(1 << v))

    def __repr__(self):
        return f"VertexSet({self.members()})"


def homed_bits(g: Graph, s: VertexSet) -> int:
    """Raw bits of s after checking it is homed on g."""
    if not isinstance(s, VertexSet) or s.home is not g:
        raise DomainError("vertex set not homed on this graph")
    return s.bits


def closed_cover_bits(g: Graph, bits: int) -> int:
    """N[S] as bits."""
    cover = bits
    for v in bit_indices(bits):
        cover |= g.adj[v]
    return cover


def open_cover_bits(g: Graph, bits: int) -> int:
    """N(S) as bits."""
    cover = 0
    for v in bit_indices(bits):
        cover |= g.adj[v]
    return cover


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    """N[v]."""
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range")
    return VertexSet(g, g.closed(v))


def closed_neighborhood_set(g: Graph, s: VertexSet) -> VertexSet:
    """N[S]; empty for empty S."""
    return VertexSet(g, closed_cover_bits(g, homed_bits(g, s)))


def open_neighborhood_set(g: Graph, s: VertexSet) -> VertexSet:
    """N(S), the union of open neighborhoods."""
    return VertexSet(g, open_cover_bits(g, homed_bits(g, s)))


def _bfs_dist_row(g: Graph, src: int) -> list:
    row = [INF] * g.n
    row[src] = 0
    seen = frontier = 1 << src
    d = 0
    while frontier:
        nxt = 0
        for v in bit_indices(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        d += 1
        for v in bit_indices(nxt):
            row[v] = d
        seen |= nxt
        frontier = nxt
    return row


def distance_matrix(g: Graph) -> list:
    """Hop distances; disconnected pairs get the float infinity marker."""
    return [_bfs_dist_row(g, v) for v in range(g.n)]


def diameter(g: Graph):
    """Largest pairwise distance; INF when disconnected, 0 for order <= 1."""
    if g.n == 0:
        return 0
    best = 0
    for v in range(g.n):
        worst = max(_bfs_dist_row(g, v))
        if worst == INF:
            return INF
        if worst > best:
            best = worst
    return best


def ball_bits(g: Graph, src: int, k: int) -> int:
    """Vertices within distance <= k of src, including src."""
    seen = frontier = 1 << src
    for _ in range(k):
        nxt = 0
        for v in bit_indices(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        if not frontier:
            break
        seen |= frontier
    return seen


def distance_power_conflict_graph(g: Graph, k: int) -> Graph:
    """Same vertices; u ~ v iff 1 <= dist(u, v) <= k. k-packings of g are exactly
    the independent sets of the result."""
    if k < 1:
        raise DomainError("k must be at least 1")
    rows = [ball_bits(g, v, k) & ~(1 << v) for v in range(g.n)]
    label = f"conflict{k}({g.label})" if g.label else ""
    return Graph.from_rows(rows, label)


def connected_components(g: Graph) -> list[int]:
    """Component vertex sets as bits, ordered by smallest member."""
    comps = []
    left = g.full_bits()
    while left:
        seen = frontier = left & -left
        while frontier:
            nxt = 0
            for v in bit_indices(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(seen)
        left &= ~seen
    return comps


def is_connected(g: Graph) -> bool:
    """Empty graph counts as connected."""
    return g.n == 0 or len(connected_components(g)) == 1


def has_isolated_vertex(g: Graph) -> bool:
    return any(row == 0 for row in g.adj)


def induced_subgraph(g: Graph, s: VertexSet):
    """Subgraph on S with dense relabeling; returns (graph, old-to-new index map)."""
    bits = homed_bits(g, s)
    old = bit_indices(bits)
    remap = {o: i for i, o in enumerate(old)}
    rows = []
    for o in old:
        row = 0
        for t in bit_indices(g.adj[o] & bits):
            row |= 1 << remap[t]
        rows.append(row)
    return Graph.from_rows(rows), remap


def write_graph_text(g: Graph, comment: str | None = None) -> str:
    """Canonical text form: optional # comments, 'n m' header, sorted 'u v' lines."""
    lines = []
    if comment:
        for c in str(comment).splitlines():
            lines.append(f"# {c}" if c else "#")
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph_text(text: str) -> Graph:
    """Strict reader for the canonical text form; any violation raises FormatError."""
    data = []
    for raw in text.splitlines():
        if raw.startswith("#"):
            continue
        if raw.strip() == "":
            raise FormatError("blank line in graph text")
        data.append(raw)
    if not data:
        raise FormatError("missing 'n m' header line")
    head = data[0].split()
    if len(head) != 2:
        raise FormatError("header must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError("non-integer header") from None
    if n < 0 or m < 0:
        raise FormatError("negative header value")
    if len(data) - 1 != m:
        raise FormatError(f"expected {m} edge lines, found {len(data) - 1}")
    edges = []
    prev = None
    for line in data[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line: {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"non-integer edge line: {line!r}") from None
        if not 0 <= u < v < n:
            raise FormatError(f"edge ({u},{v}) violates 0 <= u < v < n")
        if prev is not None and (u, v) <= prev:
            raise FormatError("edge lines not strictly sorted")
        prev = (u, v)
        edges.append((u, v))
    return Graph(n, edges)
