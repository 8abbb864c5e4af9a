"""Immutable simple undirected graphs over dense integer vertices.

Adjacency is stored as one Python-int bitset per vertex, so common
neighborhoods, degrees and triangle counts are word-parallel ``&`` /
``bit_count`` operations.  A Graph never changes after construction;
edge counts, degree vectors, neighborhood edge counts and the triangle
list are computed lazily and cached forever.

The module also owns the plain-text edge-list format used by the CLI:

    c optional comment lines
    p <n> <m>
    e <u> <v>        (m lines, 1-indexed, u < v, sorted lexicographically)

Writers emit exactly the header plus the sorted edge lines, so the
format is byte-reproducible.
"""
from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

from k4cut.errors import InputError, K4FoundError


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Triangle(NamedTuple):
    u: int
    v: int
    w: int


class VertexLocalStats(NamedTuple):
    """Per-vertex counts: degree and the edge count inside N(v)."""

    vertex: int
    degree: int
    ev: int


class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitset rows."""

    __slots__ = ("n", "adj", "_e", "_degrees", "_evs", "_triangles", "_k4")

    def __init__(self, n: int, adj: tuple[int, ...]):
        if n < 0:
            raise InputError("vertex count must be non-negative")
        if len(adj) != n:
            raise InputError("adjacency length does not match vertex count")
        full = (1 << n) - 1
        degsum = 0
        for v, row in enumerate(adj):
            if row >> n:
                raise InputError(f"adjacency row {v} mentions vertices >= {n}")
            if (row >> v) & 1:
                raise InputError(f"self-loop at vertex {v}")
            degsum += row.bit_count()
        for v in range(n):
            for u in bits(adj[v]):
                if u > v:
                    break
                if not (adj[u] >> v) & 1:
                    raise InputError(f"asymmetric adjacency between {u} and {v}")
        assert degsum % 2 == 0
        self.n = n
        self.adj = tuple(adj)
        self._e = degsum // 2
        self._degrees: tuple[int, ...] | None = None
        self._evs: tuple[int, ...] | None = None
        self._triangles: list[Triangle] | None = None
        self._k4: tuple[int, int, int, int] | None | bool = False  # False = unknown

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from (u, v) pairs; duplicates collapse silently."""
        rows = [0] * n
        for pair in edges:
            u, v = pair
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {pair} out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    # -- basic counts ------------------------------------------------

    @property
    def e(self) -> int:
        return self._e

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degrees(self) -> tuple[int, ...]:
        if self._degrees is None:
            self._degrees = tuple(row.bit_count() for row in self.adj)
        return self._degrees

    def degree(self, v: int) -> int:
        return self.degrees()[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            for off in bits(row):
                out.append((u, u + 1 + off))
        return out

    # -- neighborhoods and local structure ---------------------------

    def common_mask(self, u: int, v: int) -> int:
        if u == v:
            raise InputError("common neighborhood needs two distinct vertices")
        return self.adj[u] & self.adj[v]

    def common_neighbors(self, u: int, v: int) -> list[int]:
        """N(u) ∩ N(v), sorted."""
        return list(bits(self.common_mask(u, v)))

    def codegree(self, u: int, v: int) -> int:
        return self.common_mask(u, v).bit_count()

    def ev(self, v: int) -> int:
        """Number of edges spanned by the neighborhood N(v)."""
        return self.neighborhood_edge_counts()[v]

    def neighborhood_edge_counts(self) -> tuple[int, ...]:
        if self._evs is None:
            vals = []
            for v in range(self.n):
                row = self.adj[v]
                twice = sum((self.adj[u] & row).bit_count() for u in bits(row))
                assert twice % 2 == 0
                vals.append(twice // 2)
            self._evs = tuple(vals)
        return self._evs

    def local_stats(self, v: int) -> VertexLocalStats:
        d, ev = self.degree(v), self.ev(v)
        assert 0 <= ev <= d * (d - 1) // 2
        return VertexLocalStats(v, d, ev)

    def edges_inside(self, mask: int) -> int:
        """e(X): edge count of the induced subgraph on the mask."""
        twice = sum((self.adj[v] & mask).bit_count() for v in bits(mask))
        return twice // 2

    def edges_between(self, a_mask: int, b_mask: int) -> int:
        """e(A, B) for disjoint vertex masks."""
        if a_mask & b_mask:
            raise InputError("edges_between needs disjoint sets")
        return sum((self.adj[v] & b_mask).bit_count() for v in bits(a_mask))

    # -- triangles and K4 --------------------------------------------

    def triangles(self) -> list[Triangle]:
        """Every pairwise-adjacent triple (u < v < w), listed once.

        Asserts the handshake identity: summing codegrees over edges
        counts each triangle exactly three times.
        """
        if self._triangles is None:
            tris = []
            total_codegree = 0
            for u, v in self.edges():
                common = self.adj[u] & self.adj[v]
                total_codegree += common.bit_count()
                for w in bits(common >> (v + 1)):
                    tris.append(Triangle(u, v, v + 1 + w))
            assert total_codegree == 3 * len(tris)
            self._triangles = tris
        return self._triangles

    def triangle_count(self) -> int:
        return len(self.triangles())

    def find_k4(self) -> tuple[int, int, int, int] | None:
        """A violating 4-clique, or None.  Checks, per edge (u, v),
        whether the induced graph on N(u, v) contains an edge."""
        if self._k4 is False:
            found = None
            for u, v in self.edges():
                common = self.adj[u] & self.adj[v]
                for w in bits(common):
                    third = self.adj[w] & common
                    hi = third >> (w + 1)
                    if hi:
                        x = w + 1 + (hi & -hi).bit_length() - 1
                        found = tuple(sorted((u, v, w, x)))
                        break
                if found:
                    break
            self._k4 = found
        return self._k4

    def is_k4_free(self) -> bool:
        return self.find_k4() is None

    def turan_check(self) -> bool:
        """Sanity assertion 3e <= n^2; only meaningful on K4-free graphs."""
        k4 = self.find_k4()
        if k4 is not None:
            raise K4FoundError(k4)
        return 3 * self.e <= self.n * self.n

    # -- derived graphs ----------------------------------------------

    def without_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self.adj)
        for u, v in edges:
            if not (rows[u] >> v) & 1:
                raise InputError(f"edge ({u}, {v}) not present")
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: list[int]) -> "Graph":
        """New graph with vertex v renamed perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise InputError("relabeling must be a permutation of 0..n-1")
        rows = [0] * self.n
        for u, v in self.edges():
            rows[perm[u]] |= 1 << perm[v]
            rows[perm[v]] |= 1 << perm[u]
        return Graph(self.n, tuple(rows))

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph plus the list mapping new ids to old ids."""
        keep = sorted(set(vertices))
        index = {old: new for new, old in enumerate(keep)}
        rows = [0] * len(keep)
        kmask = mask_of(keep)
        for old in keep:
            for u in bits(self.adj[old] & kmask):
                rows[index[old]] |= 1 << index[u]
        return Graph(len(keep), tuple(rows)), keep

    # -- bipartiteness ------------------------------------------------

    def two_coloring(self) -> tuple[int, ...] | None:
        """A proper 2-coloring as a tuple of 0/1, or None if impossible."""
        color = [-1] * self.n
        for start in range(self.n):
            if color[start] != -1:
                continue
            color[start] = 0
            queue = [start]
            while queue:
                v = queue.pop()
                for u in bits(self.adj[v]):
                    if color[u] == -1:
                        color[u] = 1 - color[v]
                        queue.append(u)
                    elif color[u] == color[v]:
                        return None
        return tuple(color)

    def is_bipartite(self) -> bool:
        return self.two_coloring() is not None

    # -- equality ------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.e})"


# -- edge-list text format -------------------------------------------


def format_edge_list(g: Graph) -> str:
    lines = [f"p {g.n} {g.e}"]
    for u, v in g.edges():
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    n = None
    m = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c ") or line == "c":
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise InputError(f"line {lineno}: duplicate header")
            if len(fields) != 3:
                raise InputError(f"line {lineno}: header must be 'p <n> <m>'")
            n, m = int(fields[1]), int(fields[2])
            if n < 0 or m < 0:
                raise InputError(f"line {lineno}: negative counts")
        elif fields[0] == "e":
            if n is None:
                raise InputError(f"line {lineno}: edge before header")
            if len(fields) != 3:
                raise InputError(f"line {lineno}: edge must be 'e <u> <v>'")
            u, v = int(fields[1]), int(fields[2])
            if not (1 <= u < v <= n):
                raise InputError(f"line {lineno}: edge must satisfy 1 <= u < v <= n")
            edges.append((u - 1, v - 1))
        else:
            raise InputError(f"line {lineno}: unknown record {fields[0]!r}")
    if n is None:
        raise InputError("missing 'p <n> <m>' header")
    if m != len(edges):
        raise InputError(f"header declares {m} edges, file has {len(edges)}")
    return Graph.from_edge_list(n, edges)


def read_edge_list(path: str) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_edge_list(g))
