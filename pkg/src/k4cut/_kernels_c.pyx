# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.

max_cut_bruteforce walks the binary-reflected Gray code over the
2^(n-1) side assignments (vertex 0 pinned to side 0), updating the cut
value incrementally with one popcount per step.  sweep_labeled_graphs
classifies every labeled graph on a fixed edge order by K4 containment
and exact min-deletions-to-bipartite.  Both match the numpy fallback in
k4cut._kernels_py bit for bit.
"""

import numpy as np

from libc.stdint cimport int16_t, uint8_t, uint32_t, uint64_t

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #  define K4CUT_POPCNT64(x) __builtin_popcountll(x)
    #  define K4CUT_POPCNT32(x) __builtin_popcount(x)
    #  define K4CUT_CTZ64(x) __builtin_ctzll(x)
    #else
    static int K4CUT_POPCNT64(unsigned long long x) {
        int c = 0; while (x) { x &= x - 1; ++c; } return c;
    }
    static int K4CUT_POPCNT32(unsigned int x) {
        int c = 0; while (x) { x &= x - 1; ++c; } return c;
    }
    static int K4CUT_CTZ64(unsigned long long x) {
        int c = 0; while (!(x & 1ULL)) { x >>= 1; ++c; } return c;
    }
    #endif
    """
    int K4CUT_POPCNT64(uint64_t x) nogil
    int K4CUT_POPCNT32(uint32_t x) nogil
    int K4CUT_CTZ64(uint64_t x) nogil


def max_cut_bruteforce(masks, int n):
    """Exact max cut; returns (max_cut, lowest maximizing assignment code)."""
    if n <= 1:
        return 0, 0
    if n > 63:
        raise ValueError("enumeration kernel supports n <= 63")
    cdef uint64_t adj[64]
    cdef long long deg[64]
    cdef int v
    for v in range(n):
        adj[v] = <uint64_t> int(masks[v])
        deg[v] = K4CUT_POPCNT64(adj[v])
    cdef uint64_t total = (<uint64_t> 1) << (n - 1)
    cdef uint64_t i, cur = 0, code, best_code = 0
    cdef long long cut = 0, best = 0
    cdef long long delta
    cdef int bit
    with nogil:
        for i in range(1, total):
            bit = K4CUT_CTZ64(i) + 1
            cur ^= (<uint64_t> 1) << bit
            delta = deg[bit] - 2 * K4CUT_POPCNT64(adj[bit] & cur)
            if cur & ((<uint64_t> 1) << bit):
                cut += delta
            else:
                cut -= delta
            if cut > best:
                best = cut
                best_code = i ^ (i >> 1)
            elif cut == best:
                code = i ^ (i >> 1)
                if code < best_code:
                    best_code = code
    return int(best), int(best_code)


def sweep_labeled_graphs(int n_edge_bits, k4_masks, cut_masks):
    """Per-edge-mask K4 flag and exact min deletions; see numpy twin."""
    if n_edge_bits > 28:
        raise ValueError("sweep kernel supports at most 28 edge bits")
    cdef uint64_t total = (<uint64_t> 1) << n_edge_bits
    k4_arr = np.ascontiguousarray(np.asarray(k4_masks, dtype=np.uint32))
    cut_arr = np.ascontiguousarray(np.asarray(cut_masks, dtype=np.uint32))
    has_k4_np = np.zeros(total, dtype=np.uint8)
    min_del_np = np.zeros(total, dtype=np.int16)
    cdef uint32_t[::1] k4m = k4_arr
    cdef uint32_t[::1] cutm = cut_arr
    cdef uint8_t[::1] has_k4 = has_k4_np
    cdef int16_t[::1] min_del = min_del_np
    cdef Py_ssize_t nk4 = k4_arr.shape[0]
    cdef Py_ssize_t ncut = cut_arr.shape[0]
    cdef uint64_t g
    cdef uint32_t gm
    cdef Py_ssize_t j
    cdef int best, s
    with nogil:
        for g in range(total):
            gm = <uint32_t> g
            for j in range(nk4):
                if (gm & k4m[j]) == k4m[j]:
                    has_k4[g] = 1
                    break
            best = 0
            for j in range(ncut):
                s = K4CUT_POPCNT32(gm & cutm[j])
                if s > best:
                    best = s
            min_del[g] = <int16_t> (K4CUT_POPCNT32(gm) - best)
    return has_k4_np, min_del_np
