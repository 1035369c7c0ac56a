"""Hot kernels: numba-compiled loops with a vectorized numpy fallback.

Public entry points ``rref_into``, ``mulmod`` and ``orbit_scan`` dispatch to
the active backend (see ``_backend``). Both implementations of each kernel
share a signature and produce identical results; ``tests/test_kernels.py``
asserts the agreement and ``benchmarks/bench_kernels.py`` measures the gap.
"""

import numpy as np

from . import _kernels_impl as _impl
from ._backend import USE_NUMBA


# ---------------------------------------------------------------- numpy path

def mulmod_numpy(a, b, redrows, p):
    """Product of two coefficient vectors modulo the defining polynomial."""
    m = a.shape[0]
    conv = np.convolve(a, b)
    if m == 1:
        return conv % p
    return (conv[:m] + (conv[m:] % p) @ redrows) % p


def rref_numpy(M, addtab, multab, invtab, negtab, pivots):
    """Vectorized REF/RREF over F_q element indices; mutates M, returns rank."""
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            tmp = M[r].copy()
            M[r] = M[piv]
            M[piv] = tmp
        inv = invtab[M[r, c]]
        if inv != 1:
            M[r] = multab[inv, M[r]]
        sel = np.nonzero(M[:, c])[0]
        sel = sel[sel != r]
        if sel.size:
            M[sel] = addtab[M[sel], negtab[multab[M[sel, c][:, None], M[r][None, :]]]]
        pivots[r] = c
        r += 1
    return r


def orbit_scan_numpy(vi_rows, vj_elems, alpha0, gvec, t_start, count,
                     p, m0, ncols, redrows, tinv, trivial,
                     addtab, multab, invtab, negtab,
                     allowed_max, stab_allowed, kdim):
    """Fallback shift scan; same contract as ``_kernels_impl.orbit_scan``."""
    m = alpha0.shape[0]
    alpha = alpha0.copy()
    M = np.empty((2 * kdim, ncols), np.int64)
    M[:kdim] = vi_rows
    pivots = np.empty(ncols, np.int64)
    if m0 > 1:
        packer = p ** np.arange(m0, dtype=np.int64)
    max_dim = 0
    stab_hits = 0
    for s in range(count):
        for r in range(kdim):
            w = mulmod_numpy(vj_elems[r], alpha, redrows, p)
            if trivial:
                M[kdim + r] = w
            else:
                d = (tinv @ w) % p
                M[kdim + r] = d.reshape(ncols, m0) @ packer
        Mwork = M.copy()
        rank = rref_numpy(Mwork, addtab, multab, invtab, negtab, pivots)
        dim = 2 * kdim - rank
        if dim == kdim:
            if stab_allowed:
                stab_hits += 1
            else:
                return max_dim, stab_hits, t_start + s, 2, s + 1
        elif dim > allowed_max:
            if dim > max_dim:
                max_dim = dim
            return max_dim, stab_hits, t_start + s, 1, s + 1
        elif dim > max_dim:
            max_dim = dim
        alpha = mulmod_numpy(alpha, gvec, redrows, p)
    return max_dim, stab_hits, -1, 0, count


# ------------------------------------------------------------- numba wiring

if USE_NUMBA:
    from numba import njit

    _jit = njit(cache=True, nogil=True)
    _impl.mulmod_into = _jit(_impl.mulmod_into)
    _impl.rref_into = _jit(_impl.rref_into)
    _impl.orbit_scan = _jit(_impl.orbit_scan)

    rref_numba = _impl.rref_into
    orbit_scan_numba = _impl.orbit_scan

    def mulmod_numba(a, b, redrows, p):
        m = a.shape[0]
        out = np.empty(m, np.int64)
        work = np.empty(2 * m - 1, np.int64)
        _impl.mulmod_into(a, b, redrows, p, out, work)
        return out

    rref_into = rref_numba
    orbit_scan = orbit_scan_numba
    mulmod = mulmod_numpy  # element products outside the scan stay on numpy
else:
    rref_numba = None
    orbit_scan_numba = None
    mulmod_numba = None

    rref_into = rref_numpy
    orbit_scan = orbit_scan_numpy
    mulmod = mulmod_numpy
