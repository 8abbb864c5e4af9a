"""Numpy fallback for the enumeration kernels.

Same contracts as k4cut._kernels_c; selected by k4cut._kernels when the
compiled module is unavailable.  Vectorizes over assignment codes
(max_cut_bruteforce) and over edge masks (sweep_labeled_graphs) instead
of the compiled Gray-code walk, but returns bit-identical results.
"""
from __future__ import annotations

import numpy as np

_CHUNK = 1 << 20


def max_cut_bruteforce(masks, n: int) -> tuple[int, int]:
    """Exact max cut by enumerating the 2^(n-1) assignments.

    Vertex 0 is fixed on side 0; assignment code bit v-1 puts vertex v
    on side 1.  Returns (max_cut, lowest maximizing code).
    """
    if n <= 1:
        return 0, 0
    if n > 63:
        raise ValueError("enumeration kernel supports n <= 63")
    adj = np.array([int(m) for m in masks], dtype=np.uint64)
    deg = np.bitwise_count(adj).astype(np.int64)
    total = 1 << (n - 1)
    best = -1
    best_code = 0
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        codes = np.arange(start, stop, dtype=np.uint64)
        side1 = codes << np.uint64(1)
        cuts = np.zeros(stop - start, dtype=np.int64)
        for v in range(1, n):
            if deg[v] == 0:
                continue
            on = ((side1 >> np.uint64(v)) & np.uint64(1)).astype(np.int64)
            to_side1 = np.bitwise_count(adj[v] & side1).astype(np.int64)
            cuts += on * (deg[v] - to_side1)
        i = int(np.argmax(cuts))
        if int(cuts[i]) > best:
            best = int(cuts[i])
            best_code = start + i
    return best, best_code


def sweep_labeled_graphs(n_edge_bits: int, k4_masks, cut_masks):
    """Classify every labeled graph given as an edge bitmask.

    Returns (has_k4, min_deletions) as numpy arrays indexed by the
    2^n_edge_bits edge masks: has_k4[g] is 1 iff some k4_mask is fully
    contained in g; min_deletions[g] = popcount(g) minus the best
    popcount(g & cut_mask) over the supplied assignment cut masks.
    """
    if n_edge_bits > 28:
        raise ValueError("sweep kernel supports at most 28 edge bits")
    total = 1 << n_edge_bits
    g = np.arange(total, dtype=np.uint32)
    has_k4 = np.zeros(total, dtype=np.uint8)
    for km in k4_masks:
        km = np.uint32(km)
        has_k4 |= ((g & km) == km)
    best = np.zeros(total, dtype=np.uint8)
    for cm in cut_masks:
        np.maximum(best, np.bitwise_count(g & np.uint32(cm)), out=best)
    min_del = np.bitwise_count(g).astype(np.int16) - best
    return has_k4, min_del
