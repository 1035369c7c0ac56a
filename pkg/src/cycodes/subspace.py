"""F_q-subspaces of an ambient extension field.

Subspaces are kept in reduced row echelon form over the designated base
level, which makes equality, hashing, and orbit deduplication a byte
comparison. Element/coordinate conversions against the ambient's fixed
basis are funneled through here.
"""

from itertools import product

import numpy as np

from . import linalg
from .errors import IncompatibleFields, NotMonic, ZeroShift
from .ffield import FieldContext, FieldElement, embed
from .linpoly import LinearizedPoly


class Subspace:
    """An F_q-subspace of F_{q^N} in canonical RREF basis form."""

    __slots__ = ("ambient", "rows", "_h")

    def __init__(self, ambient: FieldContext, rows):
        self.ambient = ambient
        arr = np.array(rows, dtype=np.int64)
        N = ambient.degree_over_q
        if arr.size == 0:
            arr = arr.reshape(0, N)
        if arr.ndim != 2 or arr.shape[1] != N:
            raise ValueError("basis rows must have the ambient dimension over the base level")
        level = ambient.base_level
        red, rank, _ = linalg.rref(linalg.MatrixFq(level, arr))
        self.rows = red.data[:rank]
        self.rows.flags.writeable = False
        self._h = hash((ambient._hash, self.rows.tobytes(), self.rows.shape))

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, ambient):
        return cls(ambient, np.zeros((0, ambient.degree_over_q), dtype=np.int64))

    @classmethod
    def full(cls, ambient):
        n = ambient.degree_over_q
        one = ambient.base_level.one.index
        return cls(ambient, one * np.eye(n, dtype=np.int64))

    @classmethod
    def from_elements(cls, ambient, elements):
        rows = [ambient.coords_of(ambient.element(e)) for e in elements]
        if not rows:
            return cls.zero(ambient)
        return cls(ambient, np.stack(rows))

    # -- basic structure -----------------------------------------------------

    @property
    def dim(self) -> int:
        return self.rows.shape[0]

    def basis_elements(self):
        return [self.ambient.element_from_coords(r) for r in self.rows]

    def elements(self):
        """All q^dim elements; intended for small spaces in tests."""
        level = self.ambient.base_level
        basis = self.basis_elements()
        for combo in product(range(level.order), repeat=self.dim):
            acc = self.ambient.zero
            for c, b in zip(combo, basis):
                if c:
                    acc = acc + embed(level.from_index(c), self.ambient) * b
            yield acc

    def contains(self, e: FieldElement) -> bool:
        row = self.ambient.coords_of(self.ambient.element(e))
        stacked = np.vstack([self.rows, row[None, :]])
        return linalg.rank(linalg.MatrixFq(self.ambient.base_level, stacked)) == self.dim

    def to_rows(self):
        """Serialization: RREF basis as a list of coordinate rows."""
        return [[int(v) for v in r] for r in self.rows]

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.rows.shape == other.rows.shape
            and np.array_equal(self.rows, other.rows)
        )

    def __hash__(self):
        return self._h

    def __repr__(self):
        return f"Subspace(dim {self.dim} of GF({self.ambient.p}^{self.ambient.degree}))"


def dim(V: Subspace) -> int:
    return V.dim


def intersect(U: Subspace, V: Subspace) -> Subspace:
    """The intersection subspace, from the left null space of the stacked
    bases."""
    if U.ambient != V.ambient:
        raise IncompatibleFields("subspaces of different ambients")
    if U.dim == 0 or V.dim == 0:
        return Subspace.zero(U.ambient)
    level = U.ambient.base_level
    stacked = np.vstack([U.rows, V.rows])
    left_null = linalg.kernel(linalg.MatrixFq(level, stacked.T))
    if left_null.rows == 0:
        return Subspace.zero(U.ambient)
    addtab, multab, _, _ = level.level_tables()
    combos = np.zeros((left_null.rows, U.ambient.degree_over_q), dtype=np.int64)
    for r in range(left_null.rows):
        for t in range(U.dim):
            c = left_null.data[r, t]
            if c:
                combos[r] = addtab[combos[r], multab[c, U.rows[t]]]
    return Subspace(U.ambient, combos)


def distance(U: Subspace, V: Subspace) -> int:
    """Subspace distance dim U + dim V - 2 dim(U intersect V)."""
    if U.ambient != V.ambient:
        raise IncompatibleFields("subspaces of different ambients")
    if U.dim == 0 or V.dim == 0:
        return U.dim + V.dim
    stacked = np.vstack([U.rows, V.rows])
    r = linalg.rank(linalg.MatrixFq(U.ambient.base_level, stacked))
    return 2 * r - U.dim - V.dim


def cyclic_shift(V: Subspace, alpha: FieldElement) -> Subspace:
    """The subspace alpha V = {alpha v}; same dimension, re-canonicalized."""
    ambient = V.ambient
    alpha = ambient.element(alpha)
    if not alpha:
        raise ZeroShift("cyclic shift by zero")
    rows = [ambient.coords_of(alpha * b) for b in V.basis_elements()]
    if not rows:
        return V
    return Subspace(ambient, np.stack(rows))


def shift_polynomial(T: LinearizedPoly, alpha: FieldElement) -> LinearizedPoly:
    """Annihilator of alpha V from the annihilator T of V.

    Coefficientwise map a_i -> alpha^(q^k - q^i) a_i on a monic T of
    q-degree k; preserves monicity and separability.
    """
    if T.is_zero or not T.is_monic:
        raise NotMonic("shift polynomial requires a monic polynomial")
    ctx = alpha.ctx
    if ctx.q_degree != T.ctx.q_degree:
        raise IncompatibleFields("shift point disagrees with the coefficient base level")
    if not alpha:
        raise ZeroShift("cyclic shift by zero")
    k = T.q_degree
    a_qk = alpha.frobenius(k)
    out = []
    for i, a in enumerate(T.coeffs):
        if i == k:
            out.append(ctx.one)
        elif not a:
            out.append(ctx.zero)
        else:
            factor = a_qk / alpha.frobenius(i)
            out.append(factor * embed(a, ctx))
    return LinearizedPoly(ctx, out)
