"""Loop-style kernel implementations.

These functions are written so that numba can compile them unchanged; the
package rebinds them to their jitted versions at import time when numba is
active (see ``_kernels``). They are deliberately free of Python objects:
matrices are int64 arrays of F_q element indices, field elements are int64
coefficient vectors over F_p.
"""

import numpy as np


def mulmod_into(a, b, redrows, p, out, work):
    """out = a * b mod the defining polynomial, coefficients mod p.

    ``redrows[j]`` holds the reduction of x^(m+j); ``work`` is a scratch
    vector of length 2m-1. ``out`` must not alias ``a`` or ``b``.
    """
    m = a.shape[0]
    for i in range(2 * m - 1):
        work[i] = 0
    for i in range(m):
        ai = a[i]
        if ai != 0:
            for j in range(m):
                work[i + j] += ai * b[j]
    for i in range(m):
        acc = work[i]
        for j in range(m - 1):
            w = work[m + j] % p
            if w != 0:
                acc += w * redrows[j, i]
        out[i] = acc % p


def rref_into(M, addtab, multab, invtab, negtab, pivots):
    """Reduce M to reduced row echelon form in place; returns the rank.

    Entries are element indices into the supplied arithmetic tables. The
    first ``rank`` slots of ``pivots`` receive the pivot column indices.
    """
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        piv = -1
        for i in range(r, rows):
            if M[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                t = M[r, j]
                M[r, j] = M[piv, j]
                M[piv, j] = t
        inv = invtab[M[r, c]]
        if inv != 1:
            for j in range(cols):
                M[r, j] = multab[inv, M[r, j]]
        for i in range(rows):
            if i != r and M[i, c] != 0:
                f = M[i, c]
                for j in range(cols):
                    M[i, j] = addtab[M[i, j], negtab[multab[f, M[r, j]]]]
        pivots[r] = c
        r += 1
    return r


def orbit_scan(vi_rows, vj_elems, alpha0, gvec, t_start, count,
               p, m0, ncols, redrows, tinv, trivial,
               addtab, multab, invtab, negtab,
               allowed_max, stab_allowed, kdim):
    """Scan intersection dimensions of (V_i, alpha V_j) over a shift range.

    alpha runs through g^t for t in [t_start, t_start + count), starting from
    ``alpha0`` (= g^t_start). For each t the routine computes
    dim(V_i /\\ alpha V_j) = 2k - rank of the stacked coordinate matrix and
    classifies it:

    - dim == k: the two subspaces coincide. Counted as a stabilizer hit
      when ``stab_allowed`` (a spread generator against its own shifts),
      otherwise reported as a collision.
    - allowed_max < dim < k: a distance violation.
    - otherwise: fine; tracked in the running maximum.

    Returns (max_dim, stab_hits, bad_t, bad_kind, checked) where bad_kind is
    0 (clean), 1 (distance violation) or 2 (collision), bad_t is the first
    offending shift exponent (-1 if none), and checked counts scanned shifts.
    ``max_dim`` is the largest dimension observed among pairs of *distinct*
    subspaces, including a violating one.
    """
    m = alpha0.shape[0]
    alpha = alpha0.copy()
    nrows = 2 * kdim
    M = np.empty((nrows, ncols), np.int64)
    for r in range(kdim):
        for j in range(ncols):
            M[r, j] = vi_rows[r, j]
    Mwork = np.empty((nrows, ncols), np.int64)
    pivots = np.empty(ncols, np.int64)
    w = np.empty(m, np.int64)
    d = np.empty(m, np.int64)
    scratch = np.empty(2 * m - 1, np.int64)
    nextalpha = np.empty(m, np.int64)
    max_dim = 0
    stab_hits = 0
    for s in range(count):
        for r in range(kdim):
            mulmod_into(vj_elems[r], alpha, redrows, p, w, scratch)
            if trivial:
                for j in range(ncols):
                    M[kdim + r, j] = w[j]
            else:
                for i in range(m):
                    acc = 0
                    for j in range(m):
                        acc += tinv[i, j] * w[j]
                    d[i] = acc % p
                for i in range(ncols):
                    idx = 0
                    pw = 1
                    for l in range(m0):
                        idx += d[i * m0 + l] * pw
                        pw *= p
                    M[kdim + r, i] = idx
        for i in range(nrows):
            for j in range(ncols):
                Mwork[i, j] = M[i, j]
        rank = rref_into(Mwork, addtab, multab, invtab, negtab, pivots)
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
        mulmod_into(alpha, gvec, redrows, p, nextalpha, scratch)
        for i in range(m):
            alpha[i] = nextalpha[i]
    return max_dim, stab_hits, -1, 0, count
