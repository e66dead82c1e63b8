"""Kernel backend selection.

The compiled extension is optional: if ``formalquintic._kernels`` was
built (see setup.py) it is used, otherwise the pure-Python twin takes
over.  ``BACKEND`` records which one is active; tests and the benchmark
exercise both through :func:`backends`.
"""

from . import _kernels_py

try:  # compiled extension is optional
    from . import _kernels as _impl

    BACKEND = "cython"
except ImportError:  # pragma: no cover - depends on build environment
    _impl = _kernels_py
    BACKEND = "python"

series_mul = _impl.series_mul
series_inv = _impl.series_inv
genpoly_mul = _impl.genpoly_mul


def backends():
    """All available kernel implementations, keyed by name."""
    table = {"python": _kernels_py}
    if _impl is not _kernels_py:
        table["cython"] = _impl
    return table
