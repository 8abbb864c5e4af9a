"""Let the test suite run from a checkout without installing.

Prefers an installed k4cut (which may carry the compiled kernels);
falls back to src/ on plain checkouts, where the numpy kernels are
selected automatically.
"""
import sys
from pathlib import Path

try:
    import k4cut  # noqa: F401
except ImportError:
    sys.path.insert(0, str(Path(__file__).parent / "src"))
