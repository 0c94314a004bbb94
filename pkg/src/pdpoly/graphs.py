"""Simple undirected graphs stored as per-vertex bit vectors.

Vertices are the integers 0..n-1 and every vertex set in this package is a
plain int used as a bit mask, so set algebra is single-word arithmetic for
all supported orders. Graphs are immutable after construction and safe to
share between threads and worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    ArityError,
    DomainError,
    FamilyDomainError,
    FormatError,
    InvalidVertex,
    SelfLoop,
    TooLarge,
)

# One-word bit vectors cover every supported order; counting engines impose
# their own tighter caps.
MAX_N = 64


class Graph:
    """Immutable simple graph; adj[v] is the open neighborhood of v as a mask."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 1:
            raise DomainError("graph order must be at least 1")
        if n > MAX_N:
            raise TooLarge(f"order {n} exceeds the build cap of {MAX_N}")
        adj = tuple(adj)
        if len(adj) != n:
            raise InvalidVertex("adjacency list length differs from order")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise InvalidVertex(f"neighborhood of {v} leaves the vertex range")
            if row >> v & 1:
                raise SelfLoop(f"vertex {v} is adjacent to itself")
        for v in range(n):
            for u in _bits(adj[v]):
                if not adj[u] >> v & 1:
                    raise InvalidVertex(f"adjacency is not symmetric at ({u}, {v})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def closed_adj(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in _bits(self.adj[v] >> (v + 1) << (v + 1)):
                yield (v, u)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(vertices: Iterable[int], n: int) -> int:
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise InvalidVertex(f"vertex {v} outside [0, {n})")
        mask |= 1 << v
    return mask


def vertices_of(mask: int) -> tuple[int, ...]:
    return tuple(_bits(mask))


def as_mask(g: Graph, s) -> int:
    """Coerce a vertex set given as a mask or an iterable of vertices."""
    if isinstance(s, int):
        if s & ~g.full_mask:
            raise InvalidVertex("mask has bits outside the vertex range")
        return s
    return mask_of(s, g.n)


# construction


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from (u, v) pairs; duplicates collapse, loops are errors."""
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidVertex(f"edge ({u}, {v}) outside [0, {n})")
        if u == v:
            raise SelfLoop(f"edge ({u}, {v}) is a self-loop")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def parse_edge_list_text(text: str) -> Graph:
    """Parse the `n m` header format with `u v` lines and # comments."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise FormatError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise FormatError("header must be two integers: n m")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise FormatError("header must be two integers: n m") from exc
    if len(rows) - 1 != m:
        raise FormatError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line: {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise FormatError(f"bad edge line: {line!r}") from exc
    return from_edge_list(n, edges)


def format_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# graph6 interchange format: ASCII offset 63, size header, then the upper
# triangle streamed column-major over pairs (0,1),(0,2),(1,2),(0,3),...


def _g6_pairs(n: int) -> Iterator[tuple[int, int]]:
    for j in range(1, n):
        for i in range(j):
            yield (i, j)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise FormatError("empty graph6 string")
    data = []
    for ch in s:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise FormatError(f"byte {o} outside the printable graph6 range")
        data.append(o - 63)
    if data[0] < 63:
        n = data[0]
        body = data[1:]
    else:
        if len(data) < 4 or data[0] != 63:
            raise FormatError("truncated long-form size header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    if n < 1:
        raise DomainError("graph6 order must be at least 1")
    if n > MAX_N:
        raise TooLarge(f"graph6 order {n} exceeds the build cap of {MAX_N}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise FormatError(f"expected {need} data bytes for n={n}, found {len(body)}")
    adj = [0] * n
    idx = 0
    for i, j in _g6_pairs(n):
        if body[idx // 6] >> (5 - idx % 6) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        idx += 1
    return Graph(n, adj)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [n]
    else:
        head = [63, n >> 12 & 63, n >> 6 & 63, n & 63]
    bits = 0
    out = []
    acc = 0
    for i, j in _g6_pairs(n):
        acc = (acc << 1) | (g.adj[i] >> j & 1)
        bits += 1
        if bits == 6:
            out.append(acc)
            acc = 0
            bits = 0
    if bits:
        out.append(acc << (6 - bits))
    return "".join(chr(63 + v) for v in head + out)


# composition operations


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n1 = g1.n
    adj = list(g1.adj) + [row << n1 for row in g2.adj]
    return Graph(n1 + g2.n, adj)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    n1, n2 = g1.n, g2.n
    left_full = (1 << n1) - 1
    right_full = ((1 << n2) - 1) << n1
    adj = [row | right_full for row in g1.adj]
    adj += [(row << n1) | left_full for row in g2.adj]
    return Graph(n1 + n2, adj)


def corona(g1: Graph, g2: Graph) -> Graph:
    """One copy of g1, a copy of g2 per g1-vertex, vertex i joined to copy i."""
    n1, n2 = g1.n, g2.n
    n = n1 * (1 + n2)
    adj = list(g1.adj) + [0] * (n - n1)
    for i in range(n1):
        base = n1 + i * n2
        copy_mask = ((1 << n2) - 1) << base
        adj[i] |= copy_mask
        for v in range(n2):
            adj[base + v] = (g2.adj[v] << base) | (1 << i)
    return Graph(n, adj)


def identify(h: Graph, gadgets: Sequence[tuple[Graph, int]]) -> Graph:
    """Merge vertex i of h with the designated vertex of gadget i.

    The result keeps h's labels 0..n(h)-1 for the merged vertices, then lays
    out each gadget's remaining vertices in input order.
    """
    if len(gadgets) != h.n:
        raise ArityError(f"expected {h.n} gadgets, got {len(gadgets)}")
    for gi, (g, u) in enumerate(gadgets):
        if not 0 <= u < g.n:
            raise InvalidVertex(f"gadget {gi} has no vertex {u}")
    n = h.n + sum(g.n - 1 for g, _ in gadgets)
    adj = list(h.adj) + [0] * (n - h.n)
    base = h.n
    for i, (g, u) in enumerate(gadgets):
        # relabel: u -> i, other gadget vertices -> base + local offset
        relabel = {}
        off = 0
        for v in range(g.n):
            if v == u:
                relabel[v] = i
            else:
                relabel[v] = base + off
                off += 1
        for v in range(g.n):
            for w in _bits(g.adj[v]):
                if w > v:
                    a, b = relabel[v], relabel[w]
                    adj[a] |= 1 << b
                    adj[b] |= 1 << a
        base += g.n - 1
    return Graph(n, adj)


# named families (canonical labeling: path/cycle in vertex order,
# star/wheel hub at vertex n-1)


def path(n: int) -> Graph:
    if n < 1:
        raise FamilyDomainError("path requires n >= 1")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise FamilyDomainError("cycle requires n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise FamilyDomainError("complete graph requires n >= 1")
    return from_edge_list(n, [(i, j) for j in range(n) for i in range(j)])


def empty(n: int) -> Graph:
    if n < 1:
        raise FamilyDomainError("empty graph requires n >= 1")
    return Graph(n, [0] * n)


def star(n: int) -> Graph:
    if n < 3:
        raise FamilyDomainError("star requires n >= 3")
    hub = n - 1
    return from_edge_list(n, [(i, hub) for i in range(n - 1)])


def wheel(n: int) -> Graph:
    if n < 4:
        raise FamilyDomainError("wheel requires n >= 4")
    hub = n - 1
    rim = [(i, (i + 1) % (n - 1)) for i in range(n - 1)]
    return from_edge_list(n, rim + [(i, hub) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise FamilyDomainError("complete bipartite requires both parts nonempty")
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


_FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "empty": (empty, 1),
    "star": (star, 1),
    "wheel": (wheel, 1),
    "complete_bipartite": (complete_bipartite, 2),
}


def family(name: str, *params: int) -> Graph:
    """Build a named family member; see _FAMILIES for the accepted names."""
    if name not in _FAMILIES:
        raise FamilyDomainError(f"unknown family {name!r}")
    builder, arity = _FAMILIES[name]
    if len(params) != arity:
        raise FamilyDomainError(f"family {name!r} takes {arity} parameter(s)")
    return builder(*params)


# structure


@dataclass(frozen=True)
class StructureReport:
    components: tuple[int, ...]  # vertex masks, one per component
    isolate_count: int
    k2_component_count: int
    degrees: tuple[int, ...]


def connected_components(g: Graph) -> tuple[int, ...]:
    """Vertex masks of the connected components, ordered by smallest vertex."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        seen |= comp
    return tuple(comps)


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def structure_report(g: Graph) -> StructureReport:
    comps = connected_components(g)
    isolates = sum(1 for c in comps if c.bit_count() == 1)
    k2 = 0
    for c in comps:
        if c.bit_count() == 2:
            u, v = vertices_of(c)
            if g.has_edge(u, v):
                k2 += 1
    return StructureReport(comps, isolates, k2, g.degrees())


def induced_subgraph(g: Graph, s) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the nonempty vertex set s, plus the original
    labels in order."""
    mask = as_mask(g, s)
    verts = vertices_of(mask)
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for v in verts:
        for u in _bits(g.adj[v] & mask):
            adj[index[v]] |= 1 << index[u]
    return Graph(len(verts), adj), verts
