"""Graph family constructions, deterministic and seeded.

Random families draw from SplitMix64 so that any implementation of the
same 64-bit algorithm reproduces identical instances from identical
seeds.  SplitMix64, exactly:

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state
    z = (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9   mod 2^64
    z = (z XOR (z >> 27)) * 0x94D049BB133111EB   mod 2^64
    output z XOR (z >> 31)

Derived draws are documented on each generator: ``below(k)`` is
``next() mod k``; a probability p keeps an event iff
``next() < floor(p * 2^64)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from k4cut.errors import InputError
from k4cut.graph import Graph, bits

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """The fixed 64-bit generator behind every seeded construction."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-ish draw in [0, bound) as next_u64() mod bound."""
        if bound <= 0:
            raise InputError("bound must be positive")
        return self.next_u64() % bound

    def bernoulli(self, p: float) -> bool:
        """True with probability p: next_u64() < floor(p * 2^64)."""
        threshold = int(p * (1 << 64))
        return self.next_u64() < threshold

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates, descending index, j = below(i + 1)."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample_mask(self, nbits: int) -> int:
        """nbits independent fair bits, low bits of next_u64 draws."""
        out = 0
        for start in range(0, nbits, 64):
            take = min(64, nbits - start)
            out |= (self.next_u64() & ((1 << take) - 1)) << start
        return out


# -- deterministic families --------------------------------------------


def complete_multipartite(parts: list[int]) -> Graph:
    """Complete multipartite graph; vertices grouped part by part."""
    if any(p < 0 for p in parts):
        raise InputError("part sizes must be non-negative")
    if not any(parts):
        raise InputError("at least one part must be nonzero")
    n = sum(parts)
    bounds = []
    start = 0
    for p in parts:
        bounds.append((start, start + p))
        start += p
    edges = []
    for i, (a0, a1) in enumerate(bounds):
        for b0, b1 in bounds[i + 1 :]:
            for u in range(a0, a1):
                for v in range(b0, b1):
                    edges.append((u, v))
    return Graph.from_edge_list(n, edges)


def complete_graph(k: int) -> Graph:
    return complete_multipartite([1] * k)


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise InputError("cycles need at least 3 vertices")
    return Graph.from_edge_list(k, [(i, (i + 1) % k) for i in range(k)])


def empty_graph(n: int) -> Graph:
    return Graph.from_edge_list(n, [])


def petersen_graph() -> Graph:
    """Outer 5-cycle 0-4, inner pentagram 5-9, spokes; 3-regular."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edge_list(10, edges)


def blowup(base: Graph, t: int) -> Graph:
    """Replace each vertex by an independent t-set, each edge by K_{t,t}.

    Base vertex v becomes vertices v*t .. v*t + t - 1.
    """
    if t < 1:
        raise InputError("blowup factor must be >= 1")
    edges = []
    for u, v in base.edges():
        for i in range(t):
            for j in range(t):
                edges.append((u * t + i, v * t + j))
    return Graph.from_edge_list(base.n * t, edges)


# -- seeded families ----------------------------------------------------


def random_tripartite(n: int, p: float, seed: int) -> Graph:
    """K4-free by construction: three random parts, cross edges kept
    with probability p.

    Draw order: n part draws ``below(3)``, then one Bernoulli per
    cross-part pair (u, v), u < v, in lexicographic order.
    """
    if n < 0:
        raise InputError("n must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise InputError("p must be in [0, 1]")
    rng = SplitMix64(seed)
    part = [rng.below(3) for _ in range(n)]
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if part[u] != part[v] and rng.bernoulli(p):
                edges.append((u, v))
    return Graph.from_edge_list(n, edges)


def random_gnp(n: int, p: float, seed: int) -> Graph:
    """Uniform G(n, p): one Bernoulli per pair (u, v), u < v, lex order."""
    if n < 0:
        raise InputError("n must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise InputError("p must be in [0, 1]")
    rng = SplitMix64(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.bernoulli(p):
                edges.append((u, v))
    return Graph.from_edge_list(n, edges)


def random_k4free_process(n: int, seed: int, target_edges: int | None = None) -> Graph:
    """Random greedy K4-free process.

    Shuffle all pairs once (Fisher-Yates), then walk the list adding
    each pair unless it would close a K4; an addition that fails once
    stays impossible, so the single pass equals the without-replacement
    process.  Stops early once target_edges is reached.  Produces
    K4-free graphs that are usually not 3-partite.
    """
    if n < 0:
        raise InputError("n must be non-negative")
    rng = SplitMix64(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    rows = [0] * n
    count = 0
    for u, v in pairs:
        if target_edges is not None and count >= target_edges:
            break
        common = rows[u] & rows[v]
        creates_k4 = any(rows[w] & common for w in bits(common))
        if not creates_k4:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            count += 1
    return Graph(n, tuple(rows))


def circulant_graph(n: int, d: int) -> Graph:
    """Deterministic d-regular circulant: offsets 1..d//2 both ways,
    plus the antipodal offset n/2 when d is odd (n must then be even)."""
    if n <= 0 or d < 0 or d >= n:
        raise InputError("need 0 <= d < n and n >= 1")
    if (n * d) % 2 != 0:
        raise InputError("n*d must be even for a d-regular graph")
    edges = []
    for k in range(1, d // 2 + 1):
        for v in range(n):
            edges.append((v, (v + k) % n))
    if d % 2 == 1:
        half = n // 2
        for v in range(half):
            edges.append((v, v + half))
    g = Graph.from_edge_list(n, edges)
    assert all(dv == d for dv in g.degrees())
    return g


def random_regular(n: int, d: int, seed: int) -> Graph:
    """Seeded d-regular graph: circulant start randomized by double
    edge swaps.

    Each attempted swap draws two edge slots and an orientation bit;
    the swap (a,b),(c,e) -> (a,c),(b,e) is applied when all four
    vertices are distinct and both new edges are absent, so the graph
    stays simple and d-regular throughout.  20 * e attempts.
    """
    base = circulant_graph(n, d)
    edges = base.edges()
    if len(edges) < 2:
        return base
    rows = list(base.adj)
    rng = SplitMix64(seed)
    m = len(edges)
    for _ in range(20 * m):
        i = rng.below(m)
        j = rng.below(m)
        a, b = edges[i]
        c, e = edges[j]
        if rng.next_u64() & 1:
            c, e = e, c
        if len({a, b, c, e}) != 4:
            continue
        if (rows[a] >> c) & 1 or (rows[b] >> e) & 1:
            continue
        rows[a] &= ~(1 << b)
        rows[b] &= ~(1 << a)
        rows[c] &= ~(1 << e)
        rows[e] &= ~(1 << c)
        rows[a] |= 1 << c
        rows[c] |= 1 << a
        rows[b] |= 1 << e
        rows[e] |= 1 << b
        edges[i] = (a, c) if a < c else (c, a)
        edges[j] = (b, e) if b < e else (e, b)
    return Graph(n, tuple(rows))


# -- family dispatch -------------------------------------------------


@dataclass(frozen=True)
class GeneratorSpec:
    """Family plus parameters plus seed; the unit of reproducibility."""

    family: str
    parameters: dict = field(default_factory=dict)
    seed: int = 0


_K4FREE_FAMILIES = {
    "complete_multipartite",
    "blowup",
    "random_tripartite",
    "random_k4free_process",
}


def generate(spec: GeneratorSpec) -> Graph:
    """Build the graph a GeneratorSpec describes."""
    fam, prm = spec.family, spec.parameters
    if fam == "complete_multipartite":
        return complete_multipartite(list(prm["parts"]))
    if fam == "blowup":
        return blowup(prm["base"], prm["t"])
    if fam == "random_tripartite":
        return random_tripartite(prm["n"], prm["p"], spec.seed)
    if fam == "random_k4free_process":
        return random_k4free_process(prm["n"], spec.seed, prm.get("target_edges"))
    if fam == "random_gnp":
        return random_gnp(prm["n"], prm["p"], spec.seed)
    if fam == "random_regular":
        return random_regular(prm["n"], prm["d"], spec.seed)
    raise InputError(f"unknown family {fam!r}")


def random_k4free(spec: GeneratorSpec) -> Graph:
    """Generate from a family that guarantees K4-freeness, and check it.

    complete_multipartite is accepted only with at most 3 nonzero
    parts, blowup only over a K4-free base; random_gnp is rejected
    because it cannot guarantee the property.
    """
    fam, prm = spec.family, spec.parameters
    if fam not in _K4FREE_FAMILIES:
        raise InputError(f"family {fam!r} does not guarantee K4-freeness")
    if fam == "complete_multipartite" and sum(1 for p in prm["parts"] if p) > 3:
        raise InputError("more than 3 nonzero parts contains K4")
    if fam == "blowup" and not prm["base"].is_k4_free():
        raise InputError("blowup base must be K4-free")
    g = generate(spec)
    assert g.is_k4_free()
    return g
