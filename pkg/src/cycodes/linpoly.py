"""Linearized polynomial algebra.

A linearized polynomial sum a_i X^(q^i) over a coefficient context doubles
as a skew polynomial sum a_i Y^i with the twist Y a = a^q Y. Composition of
the induced maps is the skew product, and right divisibility by a separable
polynomial mirrors containment of root spaces; the splitting-degree search
below runs entirely on that symbolic side, never enumerating field elements.
"""

import math

import numpy as np

from . import linalg
from .errors import (
    CapExceeded,
    DivisionByZero,
    IncompatibleFields,
    NotMonic,
    SplittingFieldNotContained,
    ZeroCoefficient,
)
from .ffield import FieldContext, FieldElement, embed

#: Default iteration bound for the splitting-degree search.
SPLITTING_CAP = 10 ** 6

#: Default bound on dim V for annihilator construction.
ANNIHILATOR_DIM_CAP = 20


class LinearizedPoly:
    """sum a_i X^(q^i) with coefficients a_0..a_k in a fixed context."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldContext, coeffs):
        self.ctx = ctx
        cs = [ctx.element(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_pairs(cls, ctx, pairs):
        """Build from (exponent index i, coefficient) pairs."""
        if not pairs:
            return cls(ctx, [])
        top = max(i for i, _ in pairs)
        cs = [ctx.zero] * (top + 1)
        for i, c in pairs:
            if i < 0:
                raise ValueError("negative exponent index")
            cs[i] = cs[i] + ctx.element(c)
        return cls(ctx, cs)

    @classmethod
    def identity(cls, ctx):
        """The polynomial X."""
        return cls(ctx, [ctx.one])

    @classmethod
    def trinomial(cls, ctx, k, l, theta, gamma):
        """X^(q^k) + theta X^(q^l) + gamma X."""
        if not (1 <= l < k):
            raise ValueError("need 1 <= l < k")
        cs = [ctx.zero] * (k + 1)
        cs[0] = ctx.element(gamma)
        cs[l] = ctx.element(theta)
        cs[k] = ctx.one
        return cls(ctx, cs)

    @classmethod
    def binomial(cls, ctx, k, a0):
        """X^(q^k) - a0 X."""
        if k < 1:
            raise ValueError("need k >= 1")
        cs = [ctx.zero] * (k + 1)
        cs[0] = -ctx.element(a0)
        cs[k] = ctx.one
        return cls(ctx, cs)

    @property
    def q_degree(self) -> int:
        """Index of the leading term; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ctx.one

    def coeff(self, i) -> FieldElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ctx.zero

    def __eq__(self, other):
        return (
            isinstance(other, LinearizedPoly)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __add__(self, other):
        if not isinstance(other, LinearizedPoly) or other.ctx != self.ctx:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return LinearizedPoly(self.ctx, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other):
        if not isinstance(other, LinearizedPoly) or other.ctx != self.ctx:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return LinearizedPoly(self.ctx, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def scale(self, c) -> "LinearizedPoly":
        c = self.ctx.element(c)
        return LinearizedPoly(self.ctx, [c * a for a in self.coeffs])

    def __call__(self, x):
        return evaluate(self, x)

    def __repr__(self):
        q = self.ctx.q
        if self.is_zero:
            return "LinearizedPoly(0)"
        terms = []
        for i in range(self.q_degree, -1, -1):
            c = self.coeff(i)
            if not c:
                continue
            mono = "X" if i == 0 else f"X^({q}^{i})" if i > 1 else f"X^{q}"
            cs = "" if c == self.ctx.one else f"{list(c.coeffs)}*"
            terms.append(f"{cs}{mono}")
        return "LinearizedPoly(" + " + ".join(terms) + ")"


def evaluate(f: LinearizedPoly, x: FieldElement) -> FieldElement:
    """f(x) = sum embed(a_i) x^(q^i); F_q-linear in x."""
    ctx = x.ctx
    if ctx.q_degree != f.ctx.q_degree:
        raise IncompatibleFields("point and coefficients disagree on the base level")
    acc = ctx.zero
    pw = x
    for i, a in enumerate(f.coeffs):
        if a:
            acc = acc + embed(a, ctx) * pw
        if i + 1 < len(f.coeffs):
            pw = pw.frobenius(1)
    return acc


def skew_mul(f: LinearizedPoly, g: LinearizedPoly) -> LinearizedPoly:
    """Skew product; equals the composition x -> f(g(x)).

    (f g)_t = sum over i+j=t of f_i g_j^(q^i); q-degrees add.
    """
    if f.ctx != g.ctx:
        raise IncompatibleFields("skew product needs a common coefficient context")
    ctx = f.ctx
    if f.is_zero or g.is_zero:
        return LinearizedPoly(ctx, [])
    out = [ctx.zero] * (f.q_degree + g.q_degree + 1)
    for i, fi in enumerate(f.coeffs):
        if not fi:
            continue
        for j, gj in enumerate(g.coeffs):
            if gj:
                out[i + j] = out[i + j] + fi * gj.frobenius(i)
    return LinearizedPoly(ctx, out)


class SkewQuotRem:
    """Result of right division: f = skew_mul(quotient, divisor) + remainder."""

    __slots__ = ("quotient", "remainder")

    def __init__(self, quotient, remainder):
        self.quotient = quotient
        self.remainder = remainder


def skew_divmod(f: LinearizedPoly, d: LinearizedPoly) -> SkewQuotRem:
    """Right-divide f by d in the skew ring.

    The remainder has q-degree strictly below d's. The quotient sits on the
    left of the reconstruction identity, so only forward Frobenius powers of
    the divisor's coefficients are needed.
    """
    if f.ctx != d.ctx:
        raise IncompatibleFields("division needs a common coefficient context")
    if d.is_zero:
        raise DivisionByZero("skew division by the zero polynomial")
    ctx = f.ctx
    kd = d.q_degree
    rem = list(f.coeffs)
    quot = [ctx.zero] * max(len(rem) - kd, 0)
    lead = d.coeffs[-1]
    while len(rem) - 1 >= kd and rem:
        t = len(rem) - 1 - kd
        c = rem[-1] / lead.frobenius(t)
        quot[t] = quot[t] + c
        for j, dj in enumerate(d.coeffs):
            if dj:
                rem[t + j] = rem[t + j] - c * dj.frobenius(t)
        while rem and not rem[-1]:
            rem.pop()
    return SkewQuotRem(LinearizedPoly(ctx, quot), LinearizedPoly(ctx, rem))


def is_subspace_polynomial(f: LinearizedPoly) -> bool:
    """True when the monic polynomial f has no repeated roots, which holds
    exactly when the coefficient of X is nonzero."""
    if f.is_zero or not f.is_monic:
        raise NotMonic("subspace polynomial test requires a monic nonzero polynomial")
    return bool(f.coeff(0))


def splitting_degree(f: LinearizedPoly, cap: int = SPLITTING_CAP) -> int:
    """Least N' such that every root of f lies in F_{q^N'}.

    Computed symbolically: N' is the least m with f right-dividing
    X^(q^m) - X, i.e. with Y^m = 1 modulo right division by f. The remainder
    of Y^m is maintained incrementally, so each step costs O(k) coefficient
    operations and no field larger than the coefficient context appears.
    """
    if f.is_zero or not f.is_monic:
        raise NotMonic("splitting degree requires a monic polynomial")
    if not f.coeff(0):
        raise ZeroCoefficient("polynomial has repeated roots (zero coefficient of X)")
    ctx = f.ctx
    k = f.q_degree
    if k == 0:
        return 1
    # remainder of Y^m, as k coefficient vectors
    r = [np.zeros(ctx.degree, dtype=np.int64) for _ in range(k)]
    r[0][0] = 1
    one = r[0].copy()
    fvec = [c._vec() for c in f.coeffs]
    p = ctx.p
    for m in range(1, cap + 1):
        shifted = [ctx._frob_vec(v, 1) for v in r]
        c = shifted[k - 1]
        r = [np.zeros(ctx.degree, dtype=np.int64)] + shifted[:k - 1]
        if c.any():
            for i in range(k):
                if fvec[i].any():
                    r[i] = (r[i] - ctx._mul_vec(c, fvec[i])) % p
        if np.array_equal(r[0], one) and not any(v.any() for v in r[1:]):
            return m
    raise CapExceeded(f"no splitting degree found within {cap} iterations", iterations=cap)


def binomial_splitting_degree(q: int, k: int, s: int) -> int:
    """Splitting degree of X^(q^k) - a0 X when a0 has multiplicative order s.

    Equals the multiplicative order of q modulo s(q^k - 1); k always divides
    the result.
    """
    if s < 1:
        raise ValueError("order s must be positive")
    if k < 1:
        raise ValueError("k must be positive")
    if math.gcd(q, s) != 1:
        raise ValueError("s must divide the order of a coefficient group, coprime to q")
    from sympy import n_order

    modulus = s * (q ** k - 1)
    if modulus == 1:
        return 1
    nprime = int(n_order(q, modulus))
    assert nprime % k == 0
    return nprime


def root_space(f: LinearizedPoly, ambient: FieldContext):
    """The F_q-subspace of roots of f inside ``ambient``.

    The ambient degree over F_q must be a multiple of the splitting degree;
    the space is extracted as the kernel of the matrix of x -> f(x).
    """
    from .subspace import Subspace

    if ambient.q_degree != f.ctx.q_degree:
        raise IncompatibleFields("ambient and coefficients disagree on the base level")
    if f.is_zero or not f.is_monic:
        raise NotMonic("root space extraction requires a monic polynomial")
    k = f.q_degree
    if k == 0:
        return Subspace.zero(ambient)
    nprime = splitting_degree(f)
    if ambient.degree_over_q % nprime:
        raise SplittingFieldNotContained(
            f"roots live in degree {nprime} over the base, which does not divide "
            f"the ambient degree {ambient.degree_over_q}"
        )
    M = linalg.matrix_of_linear_map(lambda x: evaluate(f, x), ambient, ambient.base_level)
    basis = linalg.kernel(M)
    if basis.rows < k:
        raise SplittingFieldNotContained("ambient too small to contain the root space")
    return Subspace(ambient, basis.data)


def annihilator(V, dim_cap: int = ANNIHILATOR_DIM_CAP) -> LinearizedPoly:
    """Monic linearized polynomial of q-degree dim V vanishing exactly on V.

    Built by the basis recursion A -> A^q - A(b)^(q-1) A, one step per basis
    vector, rather than expanding the product of q^dim linear factors.
    """
    ambient = V.ambient
    if V.dim > dim_cap:
        raise CapExceeded(f"annihilator recursion capped at dimension {dim_cap}", iterations=V.dim)
    q = ambient.q
    A = LinearizedPoly.identity(ambient)
    for b in V.basis_elements():
        val = evaluate(A, b)
        if not val:
            raise ValueError("basis element already annihilated; basis is not independent")
        c = val ** (q - 1)
        lifted = [ambient.zero] + [a.frobenius(1) for a in A.coeffs]
        A = LinearizedPoly(ambient, lifted) - A.scale(c)
    return A
