"""Cyclic constant dimension codes from trinomial and binomial generators.

A code here is a union of multiplicative orbits {alpha V} of root spaces of
subspace polynomials: trinomials X^(q^k) + theta X^(q^l) + gamma X
contribute orbits of size (q^N-1)/(q-1) at distance 2k-2, the binomial
X^(q^k) - a0 X contributes a spread orbit of size (q^N-1)/(q^k-1) at
distance 2k. Certification checks the claimed size and minimum distance
either exhaustively (a scan over coset representatives, kernel-accelerated)
or on a seeded pseudo-random sample.
"""

import math
import time
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import _kernels, linalg
from .errors import (
    CapExceeded,
    ConditionViolated,
    GcdViolation,
    IncompatibleFields,
    SplittingFieldNotContained,
    ZeroCoefficient,
)
from .ffield import FieldContext, FieldElement, extend, prime_field
from .linpoly import LinearizedPoly, binomial_splitting_degree, root_space, splitting_degree
from .subspace import Subspace, cyclic_shift

#: Default bound on exhaustive certification work, in intersection computations.
EXHAUSTIVE_PAIRS_CAP = 10 ** 6

#: Default bound on orbit enumeration length.
ORBIT_CAP = 10 ** 6


# --------------------------------------------------------------------------
# specification


def _prime_power(q: int):
    if q < 2:
        raise ValueError("q must be a prime power >= 2")
    p = q
    for d in range(2, q):
        if d * d > q:
            break
        if q % d == 0:
            p = d
            break
    m0 = 0
    t = q
    while t % p == 0 and t > 1:
        t //= p
        m0 += 1
    if p ** m0 != q:
        raise ValueError(f"{q} is not a prime power")
    return p, m0


@dataclass
class CodeSpec:
    """Parameters of a code: the chain F_q in F_{q^n} in F_{q^N}, the
    trinomial generator coefficients, and an optional binomial coefficient.

    ``planted`` is a falsification hook for fixtures: (generator index,
    shift exponent) pairs appended as extra claimed orbits that bypass the
    pairwise condition, so certification must reject the result.
    """

    q: int
    n: int
    k: int
    l: int
    N: int
    trinomials: list
    binomial: Optional[FieldElement]
    coeff_ctx: FieldContext = field(repr=False)
    planted: list = field(default_factory=list)

    @classmethod
    def create(cls, q, n, k, l, N, trinomials, binomial=None, coeff_ctx=None, planted=()):
        """Build a spec, constructing the coefficient field F_{q^n} when not
        supplied. Coefficients may be ints, coefficient lists, or elements of
        the coefficient context."""
        p, m0 = _prime_power(q)
        if coeff_ctx is None:
            base = prime_field(p)
            level = extend(base, m0, as_base_level=True) if m0 > 1 else base
            coeff_ctx = extend(level, n) if n > 1 else level
        tri = [(coeff_ctx.element(t), coeff_ctx.element(g)) for (t, g) in trinomials]
        b = coeff_ctx.element(binomial) if binomial is not None else None
        spec = cls(q=int(q), n=int(n), k=int(k), l=int(l), N=int(N),
                   trinomials=tri, binomial=b, coeff_ctx=coeff_ctx,
                   planted=[(int(i), int(t)) for (i, t) in planted])
        spec.validate()
        return spec

    @classmethod
    def from_dict(cls, d: dict):
        return cls.create(d["q"], d["n"], d["k"], d["l"], d["N"],
                          [tuple(t) for t in d.get("trinomials", [])],
                          d.get("binomial"),
                          planted=[tuple(t) for t in d.get("planted", [])])

    def validate(self):
        if self.k < 2:
            raise ValueError("need k >= 2")
        if self.trinomials:
            if not 1 <= self.l < self.k:
                raise ValueError("need 1 <= l < k")
            if math.gcd(self.l, self.k) != 1:
                raise GcdViolation(f"gcd(l, k) = gcd({self.l}, {self.k}) != 1")
        for i, (theta, gamma) in enumerate(self.trinomials):
            if not theta or not gamma:
                raise ZeroCoefficient(f"trinomial {i} has a zero coefficient")
        if self.binomial is not None and not self.binomial:
            raise ZeroCoefficient("binomial coefficient is zero")
        if self.N % self.n:
            raise IncompatibleFields(
                f"ambient degree N={self.N} must be a multiple of n={self.n} "
                "so that the coefficient field embeds"
            )

    def trinomial_polys(self):
        return [LinearizedPoly.trinomial(self.coeff_ctx, self.k, self.l, t, g)
                for (t, g) in self.trinomials]

    def binomial_poly(self):
        if self.binomial is None:
            return None
        return LinearizedPoly.binomial(self.coeff_ctx, self.k, self.binomial)

    def build_ambient(self) -> FieldContext:
        if self.N == self.n:
            return self.coeff_ctx
        return extend(self.coeff_ctx, self.N // self.n)


@dataclass
class OrbitCode:
    """A constructed code: generator subspaces plus the claimed parameters."""

    spec: CodeSpec
    ambient: FieldContext
    trinomial_generators: list
    spread_generator: Optional[Subspace]
    claimed_size: int
    claimed_distance: int

    @property
    def generators(self):
        """(subspace, is_spread) pairs, trinomial generators first."""
        out = [(V, False) for V in self.trinomial_generators]
        if self.spread_generator is not None:
            out.append((self.spread_generator, True))
        return out

    @property
    def coset_count(self) -> int:
        q, N = self.spec.q, self.spec.N
        return (q ** N - 1) // (q - 1)


@dataclass
class CertReport:
    """Outcome of a certification run."""

    mode: str
    pairs_checked: int
    max_intersection_dim: int
    verdict: str
    witness: Optional[tuple]
    wall_ms: int
    seed: Optional[int]

    def to_dict(self):
        wit = None
        if self.witness is not None:
            wit = [_subspace_payload(s) for s in self.witness]
        return {
            "mode": self.mode,
            "pairs_checked": self.pairs_checked,
            "max_intersection_dim": self.max_intersection_dim,
            "verdict": self.verdict,
            "witness": wit,
            "wall_ms": self.wall_ms,
            "seed": self.seed,
        }


def _subspace_payload(s: Subspace):
    amb = s.ambient
    return {
        "ambient": {
            "p": amb.p,
            "tower": sorted({c.degree for c in amb.chain() if c.degree >= amb.q_degree}),
            "defining_poly": [int(c) for c in amb.modulus],
        },
        "rows": s.to_rows(),
    }


# --------------------------------------------------------------------------
# construction


def check_union_condition(theta_i, gamma_i, theta_j, gamma_j, q: int, l: int, k: int) -> bool:
    """One ordered instance of the pairwise union condition.

    True when (gamma_i/gamma_j)^((q^l-1)/(q-1)) differs from
    (gamma_i/gamma_j (theta_i/theta_j)^-1)^((q^k-1)/(q-1)). Both orders of a
    pair must be checked by the caller.
    """
    for e in (theta_i, gamma_i, theta_j, gamma_j):
        if not e:
            raise ZeroCoefficient("union condition requires nonzero coefficients")
    el = (q ** l - 1) // (q - 1)
    ek = (q ** k - 1) // (q - 1)
    gr = gamma_i / gamma_j
    tr = theta_i / theta_j
    return gr ** el != (gr / tr) ** ek


def _check_all_pairs(spec: CodeSpec):
    for i in range(len(spec.trinomials)):
        for j in range(len(spec.trinomials)):
            if i == j:
                continue
            ti, gi = spec.trinomials[i]
            tj, gj = spec.trinomials[j]
            if not check_union_condition(ti, gi, tj, gj, spec.q, spec.l, spec.k):
                raise ConditionViolated(i, j)


def _warn_r_bounds(spec: CodeSpec):
    r = len(spec.trinomials)
    if r > spec.q ** spec.n - 1:
        warnings.warn(f"r={r} exceeds q^n-1={spec.q ** spec.n - 1}", stacklevel=3)
    if spec.q == 2 and spec.n == spec.k and r > 2 ** spec.k - 1:
        warnings.warn(f"r={r} exceeds 2^k-1={2 ** spec.k - 1}", stacklevel=3)


def _validated_ambient(spec: CodeSpec, ambient, degrees):
    if ambient is None:
        ambient = spec.build_ambient()
    for d in degrees:
        if spec.N % d:
            raise SplittingFieldNotContained(
                f"N={spec.N} is not a multiple of a generator splitting degree {d}"
            )
    return ambient


def build_trinomial_code(spec: CodeSpec, ambient: FieldContext = None) -> OrbitCode:
    """Union of the trinomial orbits; size r(q^N-1)/(q-1), distance 2k-2."""
    if not spec.trinomials:
        raise ValueError("spec has no trinomial generators")
    if spec.binomial is not None:
        raise ValueError("spec has a binomial generator; use build_combined_code")
    return build_combined_code(spec, ambient)


def build_spread_code(spec: CodeSpec, ambient: FieldContext = None) -> OrbitCode:
    """Orbit of the binomial root space; size (q^N-1)/(q^k-1), distance 2k."""
    if spec.binomial is None:
        raise ValueError("spec has no binomial generator")
    if spec.trinomials:
        raise ValueError("spec has trinomial generators; use build_combined_code")
    return build_combined_code(spec, ambient)


def build_combined_code(spec: CodeSpec, ambient: FieldContext = None) -> OrbitCode:
    """General builder: r >= 0 trinomial orbits plus an optional spread orbit.

    Validates the pairwise union condition (both orders), the splitting
    degrees against N, and the spec invariants; claims the parameters of the
    union.
    """
    spec.validate()
    if not spec.trinomials and spec.binomial is None:
        raise ValueError("spec has no generators")
    _warn_r_bounds(spec)
    _check_all_pairs(spec)
    degrees = [splitting_degree(T) for T in spec.trinomial_polys()]
    sdeg = None
    if spec.binomial is not None:
        s = spec.binomial.multiplicative_order()
        sdeg = binomial_splitting_degree(spec.q, spec.k, s)
        degrees = degrees + [sdeg]
    ambient = _validated_ambient(spec, ambient, degrees)
    tri_gens = [root_space(T, ambient) for T in spec.trinomial_polys()]
    spread_gen = None
    if spec.binomial is not None:
        spread_gen = root_space(spec.binomial_poly(), ambient)
    q, N, k, r = spec.q, spec.N, spec.k, len(spec.trinomials)
    if spec.planted:
        base_gens = list(tri_gens) + ([spread_gen] if spread_gen is not None else [])
        g = ambient.generator
        for (gi, t) in spec.planted:
            if not 0 <= gi < len(base_gens):
                raise ValueError(f"planted index {gi} out of range")
            tri_gens.append(cyclic_shift(base_gens[gi], g ** t))
        r += len(spec.planted)
    size = r * (q ** N - 1) // (q - 1)
    if spread_gen is not None:
        size += (q ** N - 1) // (q ** k - 1)
    dist = 2 * k - 2 if r else 2 * k
    return OrbitCode(spec=spec, ambient=ambient, trinomial_generators=tri_gens,
                     spread_generator=spread_gen, claimed_size=size, claimed_distance=dist)


def build_code(spec: CodeSpec, ambient: FieldContext = None) -> OrbitCode:
    return build_combined_code(spec, ambient)


# --------------------------------------------------------------------------
# orbit enumeration


def enumerate_orbit(V: Subspace, cap: int = ORBIT_CAP):
    """Yield the distinct cyclic shifts of V exactly once.

    Iterates alpha over coset representatives g^t of F_q* in the ambient
    multiplicative group and deduplicates canonical forms. Raises
    CapExceeded when the representative count exceeds ``cap``.
    """
    ambient = V.ambient
    q = ambient.q
    cosets = (ambient.order - 1) // (q - 1)
    if cosets > cap:
        raise CapExceeded(f"orbit enumeration needs {cosets} shifts, above cap {cap}",
                          iterations=cosets)
    g = ambient.generator
    seen = set()
    alpha = ambient.one
    for _ in range(cosets):
        S = cyclic_shift(V, alpha)
        if S not in seen:
            seen.add(S)
            yield S
        alpha = alpha * g


# --------------------------------------------------------------------------
# certification


def _scan_inputs(code: OrbitCode):
    ambient = code.ambient
    level = ambient.base_level
    addtab, multab, invtab, negtab = level.level_tables()
    trivial = ambient._coord_setup()
    tinv = ambient._coord_Tinv
    gvec = ambient.generator._vec()
    return {
        "p": ambient.p,
        "m0": ambient.q_degree,
        "N": ambient.degree_over_q,
        "redrows": ambient._redrows,
        "tinv": tinv,
        "trivial": 1 if trivial else 0,
        "tables": (addtab, multab, invtab, negtab),
        "gvec": gvec,
        "ambient": ambient,
    }


def _gen_elem_matrix(V: Subspace):
    return np.stack([b._vec() for b in V.basis_elements()])


def certify_exact(code: OrbitCode, max_pairs: int = EXHAUSTIVE_PAIRS_CAP,
                  threads: int = 1) -> CertReport:
    """Exhaustively verify the claimed size and minimum distance.

    By the shift reduction d(alpha V_i, beta V_j) = d(V_i, alpha^-1 beta V_j)
    only generator-versus-shift pairs are scanned: for each ordered generator
    pair and each coset representative g^t the intersection dimension is
    computed and classified. dim = k against a shift of the same spread
    generator is a stabilizer hit (the same subspace) and the hit count is
    verified against (q^k-1)/(q-1) - 1; any other dim = k is an orbit
    collision falsifying the size claim; dim above the distance bound
    falsifies the distance claim with a concrete witness pair.

    Raises CapExceeded when the scan would need more than ``max_pairs``
    intersection computations.
    """
    t0 = time.perf_counter()
    spec = code.spec
    q, k = spec.q, spec.k
    gens = code.generators
    C = code.coset_count
    pure_spread = not spec.trinomials
    allowed_max = 0 if pure_spread else 1

    jobs = []
    total = 0
    for i, (Vi, spread_i) in enumerate(gens):
        for j, (Vj, spread_j) in enumerate(gens):
            start = 1 if i == j else 0
            # a spread generator must meet its own nontrivial shifts trivially
            job_allowed = 0 if (i == j and spread_i) else allowed_max
            jobs.append((i, j, start, C - start, spread_i and i == j, job_allowed))
            total += C - start
    if total > max_pairs:
        raise CapExceeded(
            f"exhaustive certification needs {total} intersection computations, "
            f"above the cap {max_pairs}; use sampled mode",
            iterations=total,
        )

    env = _scan_inputs(code)
    ambient = env["ambient"]
    addtab, multab, invtab, negtab = env["tables"]
    elem_mats = [_gen_elem_matrix(V) for V, _ in gens]

    checked = 0
    max_dim = 0
    witness = None
    falsified = False
    expected_stab = (q ** k - 1) // (q - 1) - 1

    for (i, j, start, count, stab_allowed, job_allowed) in jobs:
        if falsified:
            break
        Vi = gens[i][0]
        chunks = _split_range(start, count, max(1, threads))
        results = []
        if threads > 1 and len(chunks) > 1:
            with ThreadPoolExecutor(max_workers=threads) as ex:
                futs = [
                    ex.submit(_run_chunk, env, Vi.rows, elem_mats[j], c0, cn,
                              job_allowed, stab_allowed, k)
                    for (c0, cn) in chunks
                ]
                results = [f.result() for f in futs]
        else:
            for (c0, cn) in chunks:
                results.append(_run_chunk(env, Vi.rows, elem_mats[j], c0, cn,
                                          job_allowed, stab_allowed, k))
        stab_hits = 0
        bad = None
        for (mdim, hits, bad_t, bad_kind, cnt) in results:
            max_dim = max(max_dim, int(mdim))
            stab_hits += int(hits)
            checked += int(cnt)
            if bad_kind and (bad is None or bad_t < bad[0]):
                bad = (int(bad_t), int(bad_kind))
        if bad is not None:
            g = ambient.generator
            witness = (gens[i][0], cyclic_shift(gens[j][0], g ** bad[0]))
            falsified = True
        elif stab_allowed and stab_hits != expected_stab:
            falsified = True

    if not falsified and max_dim != allowed_max:
        # the claimed minimum distance is not attained exactly
        falsified = True

    verdict = "falsified" if falsified else "certified"
    wall_ms = int((time.perf_counter() - t0) * 1000)
    return CertReport(mode="exact", pairs_checked=checked, max_intersection_dim=max_dim,
                      verdict=verdict, witness=witness, wall_ms=wall_ms, seed=None)


def _split_range(start, count, parts):
    if count <= 0:
        return [(start, 0)]
    parts = min(parts, count)
    step = count // parts
    out = []
    at = start
    for i in range(parts):
        n = step + (1 if i < count % parts else 0)
        out.append((at, n))
        at += n
    return out


def _run_chunk(env, vi_rows, vj_elems, t0, count, allowed_max, stab_allowed, k):
    if count <= 0:
        return (0, 0, -1, 0, 0)
    ambient = env["ambient"]
    alpha0 = ambient._pow_vec(env["gvec"], t0) if t0 else _one_vec(ambient)
    addtab, multab, invtab, negtab = env["tables"]
    return _kernels.orbit_scan(
        np.ascontiguousarray(vi_rows), np.ascontiguousarray(vj_elems),
        alpha0, env["gvec"], t0, count,
        env["p"], env["m0"], env["N"], env["redrows"], env["tinv"], env["trivial"],
        addtab, multab, invtab, negtab,
        allowed_max, 1 if stab_allowed else 0, k,
    )


def _one_vec(ambient):
    v = np.zeros(ambient.degree, dtype=np.int64)
    v[0] = 1
    return v


class SplitMix64:
    """Deterministic 64-bit stream: state += 0x9E3779B97F4A7C15, output is
    the xor-shift-multiply mix (0xBF58476D1CE4E5B9, 0x94D049BB133111EB)."""

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform draw in [0, bound) by rejection."""
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            w = self.next()
            if w < limit:
                return w % bound


def _draw_alpha(rng: SplitMix64, ambient: FieldContext) -> FieldElement:
    q = ambient.q
    N = ambient.degree_over_q
    while True:
        row = np.array([rng.below(q) for _ in range(N)], dtype=np.int64)
        if row.any():
            return ambient.element_from_coords(row)


def certify_sampled(code: OrbitCode, samples: int, seed: int) -> CertReport:
    """Check the pairwise intersection bounds on a seeded random sample of
    shifts; can falsify but never certify."""
    if samples < 1:
        raise ValueError("need at least one sample")
    t0 = time.perf_counter()
    spec = code.spec
    q, k = spec.q, spec.k
    gens = code.generators
    ambient = code.ambient
    level = ambient.base_level
    allowed_max = 0 if not spec.trinomials else 1
    rng = SplitMix64(seed)
    checked = 0
    max_dim = 0
    witness = None
    for _ in range(samples):
        alpha = _draw_alpha(rng, ambient)
        in_base = alpha.frobenius(1) == alpha
        for i, (Vi, spread_i) in enumerate(gens):
            for j, (Vj, spread_j) in enumerate(gens):
                same = i == j
                if same and in_base:
                    continue
                if same and spread_i and alpha ** (q ** k - 1) == ambient.one:
                    continue
                allowed = 0 if (same and spread_i) else allowed_max
                shifted = cyclic_shift(Vj, alpha)
                stacked = np.vstack([Vi.rows, shifted.rows])
                rank = linalg.rank(linalg.MatrixFq(level, stacked))
                d = 2 * k - rank
                checked += 1
                if d == k or d > allowed:
                    max_dim = max(max_dim, d if d < k else max_dim)
                    wall_ms = int((time.perf_counter() - t0) * 1000)
                    return CertReport(mode="sampled", pairs_checked=checked,
                                      max_intersection_dim=max(max_dim, 0),
                                      verdict="falsified", witness=(Vi, shifted),
                                      wall_ms=wall_ms, seed=seed)
                max_dim = max(max_dim, d)
    wall_ms = int((time.perf_counter() - t0) * 1000)
    return CertReport(mode="sampled", pairs_checked=checked, max_intersection_dim=max_dim,
                      verdict="not-falsified", witness=witness, wall_ms=wall_ms, seed=seed)
