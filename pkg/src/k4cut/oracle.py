"""Exact ground truth at desk scale.

exact_max_cut enumerates all 2^(n-1) two-sided assignments (vertex 0
pinned to side 0) and returns the true optimum with a witness, so every
cut-engine lower bound can be checked against it.  The exhaustive sweep
walks all labeled graphs on up to 7 vertices, filters the K4-free ones,
and computes each one's exact minimum bipartization size, confirming
9 * min_deletions <= n^2 across the whole hypothesis class and locating
the graphs that max out the deletion count.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from k4cut import _kernels
from k4cut.cuts import Bipartition
from k4cut.errors import CapacityError
from k4cut.graph import Graph

DEFAULT_LIMIT = 28
SWEEP_LIMIT = 7


@dataclass(frozen=True)
class OracleResult:
    """Exact max cut plus one witness assignment."""

    n: int
    max_cut: int
    min_deletions: int
    assignment_code: int
    witness: Bipartition

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "max_cut": self.max_cut,
            "min_deletions": self.min_deletions,
            "assignment_code": self.assignment_code,
            "witness_side1": sorted(self.witness.sides()[1]),
        }


def assignment_side_mask(code: int) -> int:
    """Side-1 vertex mask for an assignment code (bit v-1 <-> vertex v)."""
    return code << 1


def exact_max_cut(g: Graph, limit: int = DEFAULT_LIMIT) -> OracleResult:
    """Brute-force maximum cut; witness is the lowest maximizing code."""
    if g.n > min(limit, 63):
        raise CapacityError(f"exact_max_cut capped at n={min(limit, 63)}, got n={g.n}")
    best, code = _kernels.max_cut_bruteforce(list(g.adj), g.n)
    witness = Bipartition(g, assignment_side_mask(code))
    assert witness.cut_value == best
    return OracleResult(g.n, best, g.e - best, code, witness)


# -- labeled-graph sweep -------------------------------------------------


def edge_order(n: int) -> list[tuple[int, int]]:
    """The fixed edge-bit order: (u, v) with u < v, lexicographic."""
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def k4_edge_masks(n: int) -> list[int]:
    """For each 4-subset, the mask of its 6 edges in edge_order bits."""
    index = {uv: i for i, uv in enumerate(edge_order(n))}
    masks = []
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                for d in range(c + 1, n):
                    quad = (a, b, c, d)
                    m = 0
                    for i in range(4):
                        for j in range(i + 1, 4):
                            m |= 1 << index[(quad[i], quad[j])]
                    masks.append(m)
    return masks


def cut_edge_masks(n: int) -> list[int]:
    """For each assignment code, the mask of edges crossing the sides."""
    order = edge_order(n)
    masks = []
    for code in range(1 << (n - 1)):
        side = assignment_side_mask(code)
        m = 0
        for i, (u, v) in enumerate(order):
            if ((side >> u) ^ (side >> v)) & 1:
                m |= 1 << i
        masks.append(m)
    return masks


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    order = edge_order(n)
    return Graph.from_edge_list(n, [order[i] for i in range(len(order)) if (mask >> i) & 1])


def _edge_permutations(n: int) -> list[list[int]]:
    """For each vertex permutation, the induced map on edge-bit indices."""
    order = edge_order(n)
    index = {uv: i for i, uv in enumerate(order)}
    out = []
    for perm in permutations(range(n)):
        table = []
        for u, v in order:
            pu, pv = perm[u], perm[v]
            table.append(index[(pu, pv) if pu < pv else (pv, pu)])
        out.append(table)
    return out


def _remap(mask: int, table: list[int]) -> int:
    m = 0
    while mask:
        low = mask & -mask
        m |= 1 << table[low.bit_length() - 1]
        mask ^= low
    return m


def canonical_edge_mask(n: int, mask: int) -> int:
    """Minimum edge mask over all vertex relabelings (isomorphism key)."""
    return min(_remap(mask, t) for t in _edge_permutations(n))


def _isomorphism_classes(n: int, masks: list[int]) -> list[int]:
    """Canonical representatives of the masks, one per orbit.

    Walks orbits rather than canonicalizing each mask, so the cost is
    permutations x classes, not permutations x labeled graphs.
    """
    tables = _edge_permutations(n)
    remaining = set(masks)
    reps = []
    while remaining:
        seed = min(remaining)
        orbit = {_remap(seed, t) for t in tables}
        remaining -= orbit
        reps.append(min(orbit))
    return sorted(reps)


@dataclass(frozen=True)
class SweepReport:
    """Outcome of the all-labeled-graphs sweep at one vertex count."""

    n: int
    num_graphs: int
    num_k4free: int
    max_min_deletions: int
    bound_holds: bool  # 9 * min_deletions <= n^2 for every K4-free graph
    deletions_histogram: dict[int, int]
    extremal_labeled_count: int
    extremal_canonical_masks: tuple[int, ...]

    def extremal_graphs(self) -> list[Graph]:
        return [graph_from_edge_mask(self.n, m) for m in self.extremal_canonical_masks]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "num_graphs": self.num_graphs,
            "num_k4free": self.num_k4free,
            "max_min_deletions": self.max_min_deletions,
            "bound_holds": self.bound_holds,
            "deletions_histogram": {str(k): v for k, v in sorted(self.deletions_histogram.items())},
            "extremal_labeled_count": self.extremal_labeled_count,
            "extremal_graphs": [g.edges() for g in self.extremal_graphs()],
        }


def exhaustive_theorem_sweep(n: int, limit: int = SWEEP_LIMIT) -> SweepReport:
    """Sweep all 2^(n(n-1)/2) labeled graphs on n vertices.

    For every K4-free graph the exact minimum number of deletions to
    reach a bipartite graph is computed; the report records the
    distribution, verifies 9 * min_deletions <= n^2 throughout, and
    canonicalizes the maximizers so uniqueness up to isomorphism is a
    set-size check.
    """
    if n > limit:
        raise CapacityError(f"exhaustive sweep capped at n={limit}, got n={n}")
    if n < 1:
        raise CapacityError("sweep needs n >= 1")
    n_bits = n * (n - 1) // 2
    has_k4, min_del = _kernels.sweep_labeled_graphs(
        n_bits, k4_edge_masks(n), cut_edge_masks(n)
    )
    has_k4 = np.asarray(has_k4, dtype=bool)
    min_del = np.asarray(min_del)
    free = ~has_k4
    free_del = min_del[free]
    num_k4free = int(free.sum())
    max_min = int(free_del.max()) if num_k4free else 0
    hist_counts = np.bincount(free_del, minlength=max_min + 1)
    histogram = {d: int(c) for d, c in enumerate(hist_counts) if c}
    bound_holds = 9 * max_min <= n * n
    argmax_masks = np.nonzero(free & (min_del == max_min))[0]
    canonical = _isomorphism_classes(n, [int(m) for m in argmax_masks])
    return SweepReport(
        n=n,
        num_graphs=1 << n_bits,
        num_k4free=num_k4free,
        max_min_deletions=max_min,
        bound_holds=bound_holds,
        deletions_histogram=histogram,
        extremal_labeled_count=int(argmax_masks.size),
        extremal_canonical_masks=tuple(canonical),
    )
