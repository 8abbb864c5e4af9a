"""Kernel selection: compiled extension if built, numpy fallback otherwise.

Both implementations share contracts and return identical values; the
compiled one is roughly an order of magnitude faster on the big
enumerations (see benchmarks/bench_kernels.py).
"""
try:
    from k4cut import _kernels_c as _impl

    USING_COMPILED = True
except ImportError:  # extension not built on this install
    from k4cut import _kernels_py as _impl

    USING_COMPILED = False

max_cut_bruteforce = _impl.max_cut_bruteforce
sweep_labeled_graphs = _impl.sweep_labeled_graphs
