"""Backend selection for the hot kernels.

The exact-arithmetic inner loops (row reduction over F_q, modular polynomial
products, the orbit certification scan) are compiled with numba when it is
available. Setting the environment variable ``CYCODES_PURE_NUMPY`` to a
non-empty value other than ``0`` forces the plain numpy implementations,
which compute identical results more slowly. ``benchmarks/bench_kernels.py``
compares the two paths.
"""

import os

FORCE_NUMPY = os.environ.get("CYCODES_PURE_NUMPY", "") not in ("", "0")

if not FORCE_NUMPY:
    try:
        import numba  # noqa: F401

        HAVE_NUMBA = True
    except ImportError:  # pragma: no cover
        HAVE_NUMBA = False
else:
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not FORCE_NUMPY


def active_backend() -> str:
    """Name of the kernel backend in use, ``"numba"`` or ``"numpy"``."""
    return "numba" if USE_NUMBA else "numpy"
