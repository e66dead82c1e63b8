"""Exact-arithmetic verification engine for the B-model structure
theory of the quintic 3-fold.

Subpackages follow the pipeline: exact arithmetic (``exact``), mirror
data (``mirror``), the graded generator ring (``genring``), quantum
differential equations and S/R-matrices (``qde``), Picard-Fuchs
asymptotics (``oscpf``), holomorphic anomaly identities (``hae``),
decorated-graph combinatorics (``graphs``), and the batch CLI (``cli``).
"""

from .kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"
__all__ = ["KERNEL_BACKEND", "__version__"]
