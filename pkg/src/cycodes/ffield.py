"""Exact arithmetic in prime fields and single-chain extension towers.

A :class:`FieldContext` presents F_{p^m} as F_p[X]/(f) for a monic
irreducible f, with elements stored as little-endian coefficient vectors
over F_p. Towers are realized as single extensions of the prime field:
subfield levels are separate contexts linked through a ``parent`` handle and
an explicit embedding (the lex-smallest root of the parent's defining
polynomial). One designated level of the chain plays the role of the base
field F_q for everything q-linear (Frobenius powers, coordinates,
subspaces); its degree over F_p is ``q_degree``.

Orders and group sizes are Python integers throughout, so fields such as
GF(3^78) pose no overflow issues; coefficient arithmetic stays in int64.
"""

import numpy as np

from . import _kernels
from .errors import (
    CapExceeded,
    CompositeCharacteristic,
    DivisionByZero,
    IncompatibleFields,
    ReduciblePolynomial,
)

# Largest subfield that embedding root searches will enumerate, and largest
# level order for which elementwise arithmetic tables are built.
EMBED_ENUM_CAP = 2 ** 20
TABLE_CAP = 1024


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def _prime_factors(n: int) -> list[int]:
    """Ascending prime factors of a small integer (trial division)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# --------------------------------------------------------------------------
# dense polynomial / matrix helpers over F_p (numpy int64)

def _poly_deg(v) -> int:
    nz = np.nonzero(v)[0]
    return -1 if nz.size == 0 else int(nz[-1])


def _poly_gcd_deg(a, b, p) -> int:
    """Degree of gcd(a, b) over F_p; -1 for gcd of two zero polynomials."""
    a = np.array(a, dtype=np.int64) % p
    b = np.array(b, dtype=np.int64) % p
    while True:
        db = _poly_deg(b)
        if db < 0:
            return _poly_deg(a)
        da = _poly_deg(a)
        if da < db:
            a, b = b, a
            continue
        inv = pow(int(b[db]), -1, p)
        while da >= db:
            c = a[da] * inv % p
            if c:
                a[da - db:da + 1] = (a[da - db:da + 1] - c * b[:db + 1]) % p
            da = _poly_deg(a)
        a, b = b, a


def _redrows_for(modulus, p):
    """Rows x^(m+j) mod f for j = 0..m-2, used to fold products back."""
    m = len(modulus) - 1
    if m == 1:
        return np.zeros((0, 1), dtype=np.int64)
    rows = np.empty((m - 1, m), dtype=np.int64)
    rows[0] = (-modulus[:m]) % p
    for j in range(1, m - 1):
        top = rows[j - 1, m - 1]
        rows[j, 0] = 0
        rows[j, 1:] = rows[j - 1, :m - 1]
        if top:
            rows[j] = (rows[j] + top * rows[0]) % p
    return rows


def _matpow_mod(A, e, p):
    m = A.shape[0]
    result = np.eye(m, dtype=np.int64)
    base = A % p
    while e:
        if e & 1:
            result = result @ base % p
        base = base @ base % p
        e >>= 1
    return result


def _rref_mod_p(M, p):
    """(rref, rank, pivot columns) of an int64 matrix over F_p."""
    M = M.copy() % p
    rows, cols = M.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        M[r] = M[r] * pow(int(M[r, c]), -1, p) % p
        sel = np.nonzero(M[:, c])[0]
        sel = sel[sel != r]
        if sel.size:
            M[sel] = (M[sel] - M[sel, c][:, None] * M[r][None, :]) % p
        pivots.append(c)
        r += 1
    return M, r, pivots


def _invert_mod_p(T, p):
    m = T.shape[0]
    aug = np.concatenate([T % p, np.eye(m, dtype=np.int64)], axis=1)
    red, rank, _ = _rref_mod_p(aug, p)
    if rank < m:
        raise ValueError("matrix is singular over F_p")
    return red[:, m:]


def _vec_pow(v, e, redrows, p):
    m = v.shape[0]
    if e < 0:
        raise ValueError("negative exponent in _vec_pow")
    out = np.zeros(m, dtype=np.int64)
    out[0] = 1
    base = v % p
    while e:
        if e & 1:
            out = _kernels.mulmod(out, base, redrows, p)
        base = _kernels.mulmod(base, base, redrows, p)
        e >>= 1
    return out


def poly_is_irreducible(coeffs, p) -> bool:
    """Rabin irreducibility test for a monic polynomial over F_p.

    Checks X^(p^m) = X mod f together with gcd(X^(p^(m/r)) - X, f) = 1 for
    every prime r dividing m, using the matrix of the p-power Frobenius on
    F_p[X]/(f).
    """
    coeffs = np.array(coeffs, dtype=np.int64) % p
    m = len(coeffs) - 1
    if m < 1 or coeffs[m] != 1:
        return False
    if m == 1:
        return True
    if coeffs[0] == 0:
        return False
    redrows = _redrows_for(coeffs, p)
    x = np.zeros(m, dtype=np.int64)
    x[1] = 1
    xp = _vec_pow(x, p, redrows, p)
    frob = np.empty((m, m), dtype=np.int64)
    col = np.zeros(m, dtype=np.int64)
    col[0] = 1
    frob[:, 0] = col
    for i in range(1, m):
        col = _kernels.mulmod(col, xp, redrows, p)
        frob[:, i] = col
    if not np.array_equal(_matpow_mod(frob, m, p) @ x % p, x):
        return False
    for r in _prime_factors(m):
        v = _matpow_mod(frob, m // r, p) @ x % p
        diff = (v - x) % p
        if _poly_gcd_deg(diff, coeffs, p) != 0:
            return False
    return True


def lex_smallest_irreducible(p, m):
    """Lexicographically smallest monic irreducible of degree m over F_p.

    Candidates are ordered by the integer value of their coefficient vector
    (most significant coefficient first), which coincides with enumerating
    the lower coefficients as base-p digits of an increasing counter.
    """
    if m == 1:
        return np.array([0, 1], dtype=np.int64)
    for counter in range(p ** m):
        c = np.empty(m + 1, dtype=np.int64)
        t = counter
        for i in range(m):
            c[i] = t % p
            t //= p
        c[m] = 1
        if c[0] == 0:
            continue
        if poly_is_irreducible(c, p):
            return c
    raise RuntimeError("no irreducible polynomial found (unreachable)")


# --------------------------------------------------------------------------


class FieldContext:
    """An explicit presentation of F_{p^m} with its tower bookkeeping.

    Instances are immutable after construction and safe to share between
    threads; all caches are computed once and only read afterwards. Use
    :func:`prime_field` and :func:`extend` instead of calling this directly.
    """

    def __init__(self, p, modulus, q_degree, parent=None):
        self.p = int(p)
        self.modulus = np.array(modulus, dtype=np.int64) % self.p
        self.modulus[-1] = 1
        self.degree = len(self.modulus) - 1
        self.q_degree = int(q_degree)
        self.parent = parent
        self.order = self.p ** self.degree
        self.group_order = self.order - 1
        if self.degree % self.q_degree:
            raise ValueError("designated base level degree must divide the field degree")
        self._redrows = _redrows_for(self.modulus, self.p)
        # filled in by extend() for non-root contexts
        self._parent_root = None
        self._embed_mat = None
        key_parent = parent._key if parent is not None else None
        self._key = (self.p, tuple(int(c) for c in self.modulus), self.q_degree, key_parent)
        self._hash = hash(self._key)
        # lazy caches
        self._frob_p = None
        self._frob_q = None
        self._factors = None
        self._generator = None
        self._tables = None
        self._coord_T = None
        self._coord_Tinv = None
        self._coords_trivial = None

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, FieldContext) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.degree == 1:
            return f"FieldContext(GF({self.p}))"
        return f"FieldContext(GF({self.p}^{self.degree}), q=GF({self.p}^{self.q_degree}))"

    # -- structure ---------------------------------------------------------

    @property
    def q(self) -> int:
        """Order of the designated base level F_q."""
        return self.p ** self.q_degree

    @property
    def degree_over_q(self) -> int:
        return self.degree // self.q_degree

    @property
    def base_level(self) -> "FieldContext":
        """The context on the parent chain presenting the designated F_q."""
        ctx = self
        while ctx is not None:
            if ctx.degree == self.q_degree:
                return ctx
            ctx = ctx.parent
        raise IncompatibleFields("no context of the designated base degree on the chain")

    def chain(self):
        """Contexts from this field down to the prime field."""
        ctx = self
        out = []
        while ctx is not None:
            out.append(ctx)
            ctx = ctx.parent
        return out

    # -- elements ----------------------------------------------------------

    def element(self, value) -> "FieldElement":
        """Coerce an int (prime-subfield constant), coefficient list, or
        element of an equal context."""
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise IncompatibleFields("element belongs to a different context")
            return value
        if isinstance(value, (int, np.integer)):
            c = [int(value) % self.p] + [0] * (self.degree - 1)
            return FieldElement(self, tuple(c))
        c = [int(v) % self.p for v in value]
        if len(c) > self.degree:
            raise ValueError("coefficient vector longer than the field degree")
        c += [0] * (self.degree - len(c))
        return FieldElement(self, tuple(c))

    @property
    def zero(self) -> "FieldElement":
        return self.element(0)

    @property
    def one(self) -> "FieldElement":
        return self.element(1)

    @property
    def x(self) -> "FieldElement":
        """The class of X in this presentation."""
        if self.degree == 1:
            return self.zero
        return self.element([0, 1])

    def from_index(self, idx: int) -> "FieldElement":
        """Element with enumeration index idx (base-p digits of idx)."""
        if not 0 <= idx < self.order:
            raise ValueError("index out of range")
        c = []
        for _ in range(self.degree):
            c.append(idx % self.p)
            idx //= self.p
        return FieldElement(self, tuple(c))

    def elements(self):
        """All elements in enumeration (lexicographic) order."""
        for idx in range(self.order):
            yield self.from_index(idx)

    @property
    def generator(self) -> "FieldElement":
        """A fixed primitive element: the enumeration-smallest element of
        multiplicative order p^m - 1. Computed (and order-verified) on first
        access; requires factoring p^m - 1."""
        if self._generator is None:
            for idx in range(1, self.order):
                e = self.from_index(idx)
                if self.element_order(e) == self.group_order:
                    self._generator = e
                    break
        return self._generator

    def set_generator(self, e: "FieldElement"):
        """Pin a caller-supplied generator after verifying its order."""
        e = self.element(e)
        if self.element_order(e) != self.group_order:
            raise ValueError("supplied generator does not have full multiplicative order")
        self._generator = e

    # -- vector arithmetic (internal) ---------------------------------------

    def _mul_vec(self, a, b):
        return _kernels.mulmod(a, b, self._redrows, self.p)

    def _pow_vec(self, v, e):
        if e < 0:
            if not v.any():
                raise DivisionByZero("inversion of zero")
            v = self._pow_vec(v, self.order - 2)
            e = -e
        out = np.zeros(self.degree, dtype=np.int64)
        out[0] = 1
        base = v.copy()
        while e:
            if e & 1:
                out = self._mul_vec(out, base)
            base = self._mul_vec(base, base)
            e >>= 1
        return out

    @property
    def frobenius_p_matrix(self):
        """Matrix of x -> x^p in the polynomial basis."""
        if self._frob_p is None:
            x = np.zeros(self.degree, dtype=np.int64)
            if self.degree > 1:
                x[1] = 1
            xp = self._pow_vec(x, self.p)
            F = np.empty((self.degree, self.degree), dtype=np.int64)
            col = np.zeros(self.degree, dtype=np.int64)
            col[0] = 1
            F[:, 0] = col
            for i in range(1, self.degree):
                col = self._mul_vec(col, xp)
                F[:, i] = col
            self._frob_p = F
        return self._frob_p

    @property
    def frobenius_q_matrix(self):
        """Matrix of x -> x^q for the designated base order q."""
        if self._frob_q is None:
            self._frob_q = _matpow_mod(self.frobenius_p_matrix, self.q_degree, self.p)
        return self._frob_q

    def _frob_vec(self, v, i):
        i %= self.degree_over_q
        Fq = self.frobenius_q_matrix
        for _ in range(i):
            v = Fq @ v % self.p
        return v

    # -- orders --------------------------------------------------------------

    def _group_factors(self):
        if self._factors is None:
            from sympy import factorint

            self._factors = sorted(factorint(self.group_order))
        return self._factors

    def element_order(self, e: "FieldElement") -> int:
        """Least t >= 1 with e^t = 1, by descending through the prime
        factorization of the group order."""
        e = self.element(e)
        v = e._vec()
        if not v.any():
            raise DivisionByZero("multiplicative order of zero")
        one = np.zeros(self.degree, dtype=np.int64)
        one[0] = 1
        t = self.group_order
        for r in self._group_factors():
            while t % r == 0 and np.array_equal(self._pow_vec(v, t // r), one):
                t //= r
        return t

    # -- F_q coordinates ------------------------------------------------------

    def _coord_setup(self):
        if self._coords_trivial is None:
            m0 = self.q_degree
            if m0 == 1:
                self._coords_trivial = True
                self._coord_T = np.eye(self.degree, dtype=np.int64)
                self._coord_Tinv = self._coord_T
            else:
                level = self.base_level
                N = self.degree_over_q
                u = np.empty((self.degree, m0), dtype=np.int64)
                for j in range(m0):
                    u[:, j] = embed(level.from_index(level.p ** j), self)._vec()
                T = np.empty((self.degree, self.degree), dtype=np.int64)
                xi = np.zeros(self.degree, dtype=np.int64)
                xi[0] = 1
                for i in range(N):
                    for j in range(m0):
                        T[:, i * m0 + j] = self._mul_vec(xi, u[:, j])
                    if i + 1 < N:
                        nxt = np.zeros(self.degree, dtype=np.int64)
                        nxt[1] = 1
                        xi = self._mul_vec(xi, nxt)
                self._coord_T = T
                self._coord_Tinv = _invert_mod_p(T, self.p)
                self._coords_trivial = False
        return self._coords_trivial

    def coords_of(self, e: "FieldElement"):
        """Coordinate row over F_q (element indices) in the fixed basis
        {1, x, x^2, ...} of the field over its designated base level."""
        e = self.element(e)
        if self._coord_setup():
            return e._vec()
        d = self._coord_Tinv @ e._vec() % self.p
        packer = self.p ** np.arange(self.q_degree, dtype=np.int64)
        return d.reshape(self.degree_over_q, self.q_degree) @ packer

    def element_from_coords(self, row) -> "FieldElement":
        row = np.asarray(row, dtype=np.int64)
        if row.shape != (self.degree_over_q,):
            raise ValueError("coordinate row has wrong length")
        if self._coord_setup():
            return self.element(row % self.p)
        m0 = self.q_degree
        d = np.empty(self.degree, dtype=np.int64)
        for i in range(self.degree_over_q):
            idx = int(row[i])
            for l in range(m0):
                d[i * m0 + l] = idx % self.p
                idx //= self.p
        return self.element(self._coord_T @ d % self.p)

    # -- arithmetic tables for the level (used by linalg/codes) ---------------

    def level_tables(self):
        """(addtab, multab, invtab, negtab) over this context's elements,
        indexed by enumeration index. Requires order <= TABLE_CAP."""
        if self._tables is None:
            qq = self.order
            if qq > TABLE_CAP:
                raise CapExceeded(
                    f"arithmetic tables require level order <= {TABLE_CAP}, got {qq}",
                )
            p, m = self.p, self.degree
            digits = np.empty((qq, m), dtype=np.int64)
            t = np.arange(qq)
            for i in range(m):
                digits[:, i] = t % p
                t //= p
            packer = p ** np.arange(m, dtype=np.int64)
            dsum = (digits[:, None, :] + digits[None, :, :]) % p
            addtab = dsum @ packer
            negtab = ((-digits) % p) @ packer
            multab = np.empty((qq, qq), dtype=np.int64)
            for i in range(qq):
                vi = digits[i]
                if not vi.any():
                    multab[i] = 0
                    continue
                for j in range(qq):
                    multab[i, j] = int(self._mul_vec(vi, digits[j]) @ packer)
            invtab = np.zeros(qq, dtype=np.int64)
            for i in range(1, qq):
                invtab[i] = int(self._pow_vec(digits[i], qq - 2) @ packer)
            self._tables = (addtab, multab, invtab, negtab)
        return self._tables


class FieldElement:
    """An element of a specific :class:`FieldContext`.

    Value-semantic and hashable; arithmetic is defined between elements of
    equal contexts (ints coerce to prime-subfield constants).
    """

    __slots__ = ("ctx", "coeffs", "_h")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        self.coeffs = coeffs
        self._h = None

    def _vec(self):
        return np.array(self.coeffs, dtype=np.int64)

    @property
    def index(self) -> int:
        """Enumeration index (base-p digits are the coefficients)."""
        idx = 0
        for c in reversed(self.coeffs):
            idx = idx * self.ctx.p + int(c)
        return idx

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, np.integer)):
            other = self.ctx.element(int(other))
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        if self._h is None:
            self._h = hash((self.ctx._hash, self.coeffs))
        return self._h

    def __repr__(self):
        return f"FieldElement({list(self.coeffs)} in GF({self.ctx.p}^{self.ctx.degree}))"

    def _coerce(self, other):
        if isinstance(other, (int, np.integer)):
            return self.ctx.element(int(other))
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise IncompatibleFields("elements live in different contexts")
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((a - b) % p for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return -(self - other)

    def __neg__(self):
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.ctx, tuple(int(v) for v in self.ctx._mul_vec(self._vec(), o._vec())))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, e):
        if not isinstance(e, (int, np.integer)):
            return NotImplemented
        if e < 0 and not self:
            raise DivisionByZero("inversion of zero")
        return FieldElement(self.ctx, tuple(int(v) for v in self.ctx._pow_vec(self._vec(), int(e))))

    def inverse(self) -> "FieldElement":
        if not self:
            raise DivisionByZero("inversion of zero")
        return self ** (self.ctx.order - 2)

    def frobenius(self, i: int = 1) -> "FieldElement":
        """e^(q^i) for the context's designated base order q."""
        v = self.ctx._frob_vec(self._vec(), int(i))
        return FieldElement(self.ctx, tuple(int(c) for c in v))

    def multiplicative_order(self) -> int:
        return self.ctx.element_order(self)


# --------------------------------------------------------------------------
# construction

def prime_field(p: int) -> FieldContext:
    """The prime field F_p, presented with defining polynomial X.

    Raises CompositeCharacteristic unless p is prime (trial division; p is
    expected to be small).
    """
    if not _is_prime(int(p)):
        raise CompositeCharacteristic(f"{p} is not prime")
    return FieldContext(int(p), [0, 1], 1)


def extend(base: FieldContext, degree: int, defining_poly=None, *,
           as_base_level: bool = False) -> FieldContext:
    """Degree-``degree`` extension of ``base`` on the same chain.

    When ``defining_poly`` (little-endian coefficients over F_p, for the full
    degree over the prime field) is omitted, the lexicographically smallest
    monic irreducible of that degree is chosen; a degree-1 extension reuses
    the base presentation and gets the identity embedding. A supplied
    reducible polynomial raises ReduciblePolynomial.

    ``as_base_level=True`` designates the new context as the F_q level that
    its own extensions will inherit.
    """
    degree = int(degree)
    if degree < 1:
        raise ValueError("extension degree must be positive")
    p = base.p
    m = base.degree * degree
    if defining_poly is None:
        if degree == 1:
            modulus = base.modulus.copy()
        else:
            modulus = lex_smallest_irreducible(p, m)
    else:
        modulus = np.array([int(c) % p for c in defining_poly], dtype=np.int64)
        if len(modulus) != m + 1 or modulus[m] != 1:
            raise ValueError(f"defining polynomial must be monic of degree {m} over GF({p})")
        if not poly_is_irreducible(modulus, p):
            raise ReduciblePolynomial(f"supplied degree-{m} polynomial is reducible over GF({p})")
    q_degree = m if as_base_level else base.q_degree
    ctx = FieldContext(p, modulus, q_degree, parent=base)
    ctx._parent_root, ctx._embed_mat = _embedding_into(base, ctx)
    return ctx


def _embedding_into(parent: FieldContext, child: FieldContext):
    """Embedding data for parent -> child: the lex-smallest root of the
    parent's defining polynomial in the child, plus the matrix of the induced
    F_p-linear map."""
    p = child.p
    m, mp = child.degree, parent.degree
    if mp == 1:
        root = np.zeros(m, dtype=np.int64)  # the root of X is 0
    elif m == mp and np.array_equal(parent.modulus, child.modulus):
        root = np.zeros(m, dtype=np.int64)
        root[1] = 1  # identity presentation: x -> x
    else:
        if p ** mp > EMBED_ENUM_CAP:
            raise CapExceeded(
                f"embedding search enumerates {p}^{mp} candidates, above the cap {EMBED_ENUM_CAP}"
            )
        # candidates live in the fixed field of the mp-th power of Frobenius
        Fmp = _matpow_mod(child.frobenius_p_matrix, mp, p)
        diff = (Fmp - np.eye(m, dtype=np.int64)) % p
        basis = _nullspace_mod_p(diff, p)
        if basis.shape[0] != mp:
            raise IncompatibleFields("child does not contain a subfield of the parent's degree")
        best = None
        best_idx = None
        packer = p ** np.arange(m, dtype=object)
        for counter in range(1, p ** mp):
            coeffs = np.empty(mp, dtype=np.int64)
            t = counter
            for i in range(mp):
                coeffs[i] = t % p
                t //= p
            cand = coeffs @ basis % p
            if _poly_eval_in_field(parent.modulus, cand, child):
                continue
            idx = int((cand.astype(object) * packer).sum())
            if best_idx is None or idx < best_idx:
                best = cand
                best_idx = idx
        if best is None:
            raise IncompatibleFields("parent's defining polynomial has no root in the child")
        root = best
    emb = np.empty((m, mp), dtype=np.int64)
    col = np.zeros(m, dtype=np.int64)
    col[0] = 1
    emb[:, 0] = col
    for i in range(1, mp):
        col = child._mul_vec(col, root)
        emb[:, i] = col
    return root, emb


def _nullspace_mod_p(M, p):
    red, rank, pivots = _rref_mod_p(M, p)
    cols = M.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for bi, fc in enumerate(free):
        basis[bi, fc] = 1
        for r, pc in enumerate(pivots):
            basis[bi, pc] = (-red[r, fc]) % p
    return basis


def _poly_eval_in_field(poly, vec, ctx):
    """Horner-evaluate an F_p polynomial at a field element given as a
    vector; returns True when the value is nonzero."""
    acc = np.zeros(ctx.degree, dtype=np.int64)
    for c in poly[::-1]:
        acc = ctx._mul_vec(acc, vec)
        acc[0] = (acc[0] + int(c)) % ctx.p
    return bool(acc.any())


def embed(e: FieldElement, target: FieldContext) -> FieldElement:
    """Image of e under the chain embeddings into ``target``.

    e's context must appear on target's parent chain; the composed map is a
    field homomorphism fixing the prime field.
    """
    if e.ctx == target:
        return e
    path = []
    ctx = target
    while ctx is not None and ctx != e.ctx:
        path.append(ctx)
        ctx = ctx.parent
    if ctx is None:
        raise IncompatibleFields("source context is not on the target's chain")
    v = e._vec()
    for step in reversed(path):
        v = step._embed_mat @ v % step.p
    return FieldElement(target, tuple(int(c) for c in v))


# --------------------------------------------------------------------------
# presentation files (CLI --field-spec)

def context_from_spec(spec: dict) -> FieldContext:
    """Build a chain from a presentation dict.

    Keys: ``p`` (prime), ``tower`` (cumulative degrees over F_p of the marked
    levels, ascending, last = full field; the first entry is the designated
    F_q level), ``defining_poly`` (little-endian coefficients of the top
    field's polynomial; optional), ``generator`` (coefficient vector of the
    designated generator of the top field; optional, order-verified).
    """
    p = int(spec["p"])
    tower = [int(t) for t in spec.get("tower", [1])]
    if not tower or any(t <= 0 for t in tower):
        raise ValueError("tower must be a list of positive cumulative degrees")
    for a, b in zip(tower, tower[1:]):
        if b % a:
            raise ValueError("each tower level must divide the next")
    ctx = prime_field(p)
    prev = 1
    top = tower[-1]
    for pos, level in enumerate(tower):
        if level == prev:
            continue
        poly = spec.get("defining_poly") if level == top else None
        ctx = extend(ctx, level // prev, poly, as_base_level=(pos == 0))
        prev = level
    if ctx.degree != top:
        raise ValueError("tower must end with the full field degree")
    gen = spec.get("generator")
    if gen is not None:
        ctx.set_generator(ctx.element(gen))
    return ctx


def context_to_spec(ctx: FieldContext) -> dict:
    tower = sorted({c.degree for c in ctx.chain() if c.degree >= ctx.q_degree})
    return {
        "p": ctx.p,
        "tower": tower,
        "defining_poly": [int(c) for c in ctx.modulus],
        "generator": list(ctx.generator.coeffs),
    }
