"""Dense exact linear algebra over a designated field level.

Matrices store their entries as enumeration indices of elements of a
(small) level context, so elimination runs on int64 arrays through the
table-driven kernels. For a prime level the index of an element equals its
residue, which keeps the common case readable.
"""

import random

import numpy as np

from . import _kernels
from .errors import IncompatibleFields
from .ffield import FieldContext, FieldElement

# Dense dimension guard; enough for kernel extraction in fields up to the
# largest degrees the table commands need.
DIM_CAP = 512


class MatrixFq:
    """A rows x cols matrix over a level context.

    ``data`` holds element indices. Instances are value-semantic; equality
    compares level and entries.
    """

    def __init__(self, level: FieldContext, data):
        self.level = level
        arr = np.array(data, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError("matrix data must be two-dimensional")
        if arr.size and (arr.min() < 0 or arr.max() >= level.order):
            raise ValueError("entry index out of range for the level")
        if max(arr.shape) > DIM_CAP:
            raise ValueError(f"matrix dimension exceeds the dense cap {DIM_CAP}")
        self.data = arr

    @classmethod
    def zeros(cls, level, rows, cols):
        return cls(level, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, level, n):
        eye = np.zeros((n, n), dtype=np.int64)
        one = level.one.index
        for i in range(n):
            eye[i, i] = one
        return cls(level, eye)

    @classmethod
    def from_elements(cls, level, grid):
        """Build from a grid of FieldElements of the level (or ints, taken
        as enumeration indices)."""
        rows = []
        for row in grid:
            out = []
            for v in row:
                if isinstance(v, FieldElement):
                    if v.ctx != level:
                        raise IncompatibleFields("entry from a different context")
                    out.append(v.index)
                else:
                    out.append(int(v))
            rows.append(out)
        return cls(level, rows)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def entry(self, i, j) -> FieldElement:
        return self.level.from_index(int(self.data[i, j]))

    def __eq__(self, other):
        return (
            isinstance(other, MatrixFq)
            and self.level == other.level
            and self.data.shape == other.data.shape
            and np.array_equal(self.data, other.data)
        )

    def __repr__(self):
        return f"MatrixFq({self.rows}x{self.cols} over GF({self.level.order}))"

    def matmul(self, other: "MatrixFq") -> "MatrixFq":
        if self.level != other.level or self.cols != other.rows:
            raise ValueError("shape or level mismatch")
        addtab, multab, _, _ = self.level.level_tables()
        out = np.zeros((self.rows, other.cols), dtype=np.int64)
        for i in range(self.rows):
            for j in range(other.cols):
                acc = 0
                for t in range(self.cols):
                    acc = addtab[acc, multab[self.data[i, t], other.data[t, j]]]
                out[i, j] = acc
        return MatrixFq(self.level, out)


def rref(M: MatrixFq):
    """Unique reduced row echelon form of M.

    Returns (rref matrix, rank, pivot column list); deterministic, pivots
    are the first nonzero entry in column order.
    """
    addtab, multab, invtab, negtab = M.level.level_tables()
    work = M.data.copy()
    pivots = np.zeros(max(M.cols, 1), dtype=np.int64)
    rank = int(_kernels.rref_into(work, addtab, multab, invtab, negtab, pivots))
    return MatrixFq(M.level, work), rank, [int(c) for c in pivots[:rank]]


def rank(M: MatrixFq) -> int:
    return rref(M)[1]


def kernel(M: MatrixFq) -> MatrixFq:
    """Basis of the right null space, as RREF rows; rows = cols - rank."""
    level = M.level
    red, rk, pivots = rref(M)
    cols = M.cols
    free = [c for c in range(cols) if c not in pivots]
    if not free:
        return MatrixFq(level, np.zeros((0, cols), dtype=np.int64))
    _, _, _, negtab = level.level_tables()
    one = level.one.index
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for bi, fc in enumerate(free):
        basis[bi, fc] = one
        for r, pc in enumerate(pivots):
            basis[bi, pc] = negtab[red.data[r, fc]]
    out, _, _ = rref(MatrixFq(level, basis))
    return out


def matrix_of_linear_map(f, big: FieldContext, level_q: FieldContext) -> MatrixFq:
    """Matrix of an F_q-linear map on ``big`` in the fixed basis over its
    designated level.

    ``f`` maps FieldElements of ``big`` to FieldElements of ``big``;
    linearity is the caller's responsibility (spot-checked on a few
    deterministic pseudo-random pairs). Applying the returned matrix to a
    coordinate column equals the coordinates of f of the element.
    """
    if level_q.degree != big.q_degree or big.base_level != level_q:
        raise IncompatibleFields("level is not the designated base of the big field")
    n = big.degree_over_q
    cols = np.empty((n, n), dtype=np.int64)
    basis = []
    row = np.zeros(n, dtype=np.int64)
    for i in range(n):
        row[:] = 0
        row[i] = level_q.one.index
        basis.append(big.element_from_coords(row))
    for i, b in enumerate(basis):
        cols[:, i] = big.coords_of(f(b))
    _spot_check_linearity(f, big, basis, cols)
    return MatrixFq(level_q, cols)


def _spot_check_linearity(f, big, basis, cols):
    rng = random.Random(0xC0DE5)
    for _ in range(3):
        a = big.from_index(rng.randrange(big.order))
        b = big.from_index(rng.randrange(big.order))
        if f(a + b) != f(a) + f(b):
            raise ValueError("map is not additive")
    lam = big.base_level.from_index(rng.randrange(1, big.base_level.order))
    from .ffield import embed

    lam_big = embed(lam, big)
    a = big.from_index(rng.randrange(big.order))
    if f(lam_big * a) != lam_big * f(a):
        raise ValueError("map is not F_q-homogeneous")
