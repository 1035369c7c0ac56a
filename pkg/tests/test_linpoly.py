import math
import random
from functools import reduce

import pytest
from hypothesis import given, strategies as st

from cycodes.errors import (
    CapExceeded,
    DivisionByZero,
    NotMonic,
    SplittingFieldNotContained,
    ZeroCoefficient,
)
from cycodes.ffield import embed, extend, prime_field
from cycodes.linpoly import (
    LinearizedPoly,
    annihilator,
    binomial_splitting_degree,
    evaluate,
    is_subspace_polynomial,
    root_space,
    skew_divmod,
    skew_mul,
    splitting_degree,
)
from cycodes.subspace import Subspace


# ----------------------------------------------------------------- oracles

def ddf_factor_degrees(coeffs, p):
    """Degrees of the irreducible factors of a squarefree polynomial over
    F_p, by distinct-degree factorization with plain polynomial arithmetic."""

    def deg(v):
        d = len(v) - 1
        while d >= 0 and v[d] == 0:
            d -= 1
        return d

    def polymod(a, m):
        a = list(a)
        dm = deg(m)
        inv = pow(m[dm], -1, p)
        for d in range(len(a) - 1, dm - 1, -1):
            c = a[d]
            if c:
                c = c * inv % p
                for j in range(dm + 1):
                    a[d - dm + j] = (a[d - dm + j] - c * m[j]) % p
        return a[:dm]

    def polymulmod(a, b, m):
        prod = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        return polymod(prod, m)

    def polygcd(a, b):
        a, b = list(a), list(b)
        while deg(b) >= 0:
            if deg(a) < deg(b):
                a, b = b, a
                continue
            inv = pow(b[deg(b)], -1, p)
            while deg(a) >= deg(b) >= 0:
                sh = deg(a) - deg(b)
                c = a[deg(a)] * inv % p
                for i in range(deg(b) + 1):
                    a[i + sh] = (a[i + sh] - c * b[i]) % p
            a, b = b, a
        d = deg(a)
        inv = pow(a[d], -1, p)
        return [x * inv % p for x in a[:d + 1]]

    def polydiv(a, b):
        a = list(a)
        db = deg(b)
        inv = pow(b[db], -1, p)
        q = [0] * (deg(a) - db + 1)
        while deg(a) >= db:
            sh = deg(a) - db
            c = a[deg(a)] * inv % p
            q[sh] = c
            for i in range(db + 1):
                a[i + sh] = (a[i + sh] - c * b[i]) % p
        assert deg(a) < 0
        return q

    remaining = list(coeffs)
    h = [0, 1]
    x = [0, 1]
    degrees = []
    d = 0
    while deg(remaining) > 0:
        d += 1
        h = polymod(h + [0] * max(0, deg(remaining) + 1 - len(h)), remaining)
        # h <- h^p mod remaining
        acc = [1]
        base = list(h)
        e = p
        while e:
            if e & 1:
                acc = polymulmod(acc, base, remaining)
            base = polymulmod(base, base, remaining)
            e >>= 1
        h = acc
        diff = [(a - b) % p for a, b in zip(h + [0] * len(x), x + [0] * len(h))]
        if deg(diff) < 0:
            # all remaining factors have degree dividing d
            degrees.extend([d] * (deg(remaining) // d))
            break
        g = polygcd(diff, remaining)
        if deg(g) > 0:
            degrees.extend([d] * (deg(g) // d))
            remaining = polydiv(remaining, g)
    return degrees


def splitting_degree_by_factorization(T):
    """Independent oracle: lcm of the factor degrees of the ordinary
    polynomial sum a_i X^(q^i) over the prime field (prime-field
    coefficients only)."""
    ctx = T.ctx
    assert ctx.degree == 1
    p = ctx.p
    q = ctx.q
    coeffs = [0] * (q ** T.q_degree + 1)
    for i, a in enumerate(T.coeffs):
        coeffs[q ** i] = a.coeffs[0]
    # root 0 contributes a factor X; drop it, factor the rest
    assert coeffs[0] == 0 and coeffs[1] != 0
    degrees = ddf_factor_degrees(coeffs[1:], p)
    return reduce(math.lcm, degrees)


def splitting_degree_by_root_count(T, cap=32):
    """Independent oracle: enumerate extensions until the trinomial has a
    full set of q^k roots by exhaustive evaluation."""
    ctx = T.ctx
    want = ctx.q ** T.q_degree
    for m in range(1, cap + 1):
        if m % ctx.degree_over_q:
            continue
        amb = extend(ctx, m // ctx.degree_over_q) if m != ctx.degree_over_q else ctx
        count = sum(1 for x in amb.elements() if not evaluate(T, x))
        if count == want:
            return m
    raise AssertionError("cap reached")


# ----------------------------------------------------------------- evaluate

def test_evaluate_identity():
    F4 = extend(prime_field(2), 2)
    X = LinearizedPoly.identity(F4)
    for x in F4.elements():
        assert evaluate(X, x) == x


def test_evaluate_field_polynomial_vanishes_on_subfield():
    F2 = prime_field(2)
    f = LinearizedPoly.from_pairs(F2, [(2, 1), (0, 1)])  # X^(q^2) - X over GF(2)
    F16 = extend(F2, 4)
    roots = [x for x in F16.elements() if not evaluate(f, x)]
    assert len(roots) == 4
    for x in roots:
        assert x.frobenius(2) == x


def test_root_count_is_power_of_kernel_dimension():
    F2 = prime_field(2)
    f = LinearizedPoly.from_pairs(F2, [(2, 1), (1, 1), (0, 1)])  # X^4 + X^2 + X
    F8 = extend(F2, 3)
    count = sum(1 for x in F8.elements() if not evaluate(f, x))
    from cycodes.linalg import kernel, matrix_of_linear_map
    M = matrix_of_linear_map(lambda x: evaluate(f, x), F8, F2)
    assert count == 2 ** kernel(M).rows


def test_evaluate_is_additive_and_homogeneous():
    rng = random.Random(21)
    F3 = prime_field(3)
    F27 = extend(F3, 3)
    f = LinearizedPoly.from_pairs(F3, [(2, 1), (1, 2), (0, 1)])
    for _ in range(100):
        x = F27.from_index(rng.randrange(27))
        y = F27.from_index(rng.randrange(27))
        assert evaluate(f, x + y) == evaluate(f, x) + evaluate(f, y)
        lam = rng.randrange(1, 3)
        assert evaluate(f, x * lam) == evaluate(f, x) * lam


# ----------------------------------------------------------------- skew ring

def test_skew_mul_identity():
    F9 = extend(prime_field(3), 2)
    X = LinearizedPoly.identity(F9)
    g = LinearizedPoly.from_pairs(F9, [(2, [0, 1]), (0, [1, 1])])
    assert skew_mul(X, g) == g
    assert skew_mul(g, X) == g


def test_skew_mul_twist():
    # X^q composed with aX gives a^q X^q
    F9 = extend(prime_field(3), 2)
    a = F9.element([0, 1])
    xq = LinearizedPoly.from_pairs(F9, [(1, 1)])
    ax = LinearizedPoly.from_pairs(F9, [(0, a)])
    prod = skew_mul(xq, ax)
    assert prod == LinearizedPoly.from_pairs(F9, [(1, a.frobenius(1))])


def _random_poly(ctx, rng, maxdeg=3):
    top = rng.randrange(1, maxdeg + 1)
    pairs = [(i, ctx.from_index(rng.randrange(ctx.order))) for i in range(top)]
    pairs.append((top, ctx.from_index(rng.randrange(1, ctx.order))))
    return LinearizedPoly.from_pairs(ctx, pairs)


def test_skew_mul_is_pointwise_composition_over_f9():
    rng = random.Random(31)
    F9 = extend(prime_field(3), 2, as_base_level=True)
    F81 = extend(F9, 2)
    for _ in range(10):
        f = _random_poly(F9, rng)
        g = _random_poly(F9, rng)
        h = skew_mul(f, g)
        for x in F81.elements():
            assert evaluate(h, x) == evaluate(f, evaluate(g, x))


def test_skew_mul_degrees_add():
    rng = random.Random(33)
    F4 = extend(prime_field(2), 2)
    for _ in range(50):
        f, g = _random_poly(F4, rng), _random_poly(F4, rng)
        assert skew_mul(f, g).q_degree == f.q_degree + g.q_degree


def test_skew_associativity_and_distributivity():
    rng = random.Random(35)
    F4 = extend(prime_field(2), 2)
    for _ in range(100):
        f, g, h = (_random_poly(F4, rng) for _ in range(3))
        assert skew_mul(skew_mul(f, g), h) == skew_mul(f, skew_mul(g, h))
        assert skew_mul(f, g + h) == skew_mul(f, g) + skew_mul(f, h)


def test_divmod_by_x_q():
    # dividing by X^q shifts coefficients down and leaves a_0 X behind
    F4 = extend(prime_field(2), 2)
    w = F4.x
    f = LinearizedPoly.from_pairs(F4, [(2, w), (1, 1), (0, w * w)])
    d = LinearizedPoly.from_pairs(F4, [(1, 1)])
    qr = skew_divmod(f, d)
    assert qr.quotient == LinearizedPoly.from_pairs(F4, [(1, w), (0, 1)])
    assert qr.remainder == LinearizedPoly.from_pairs(F4, [(0, w * w)])
    assert skew_mul(qr.quotient, d) + qr.remainder == f


def test_divmod_self():
    F4 = extend(prime_field(2), 2)
    d = LinearizedPoly.from_pairs(F4, [(2, 1), (0, F4.x)])
    qr = skew_divmod(d, d)
    assert qr.quotient == LinearizedPoly.identity(F4)
    assert qr.remainder.is_zero


def test_divmod_reconstruction_random():
    rng = random.Random(37)
    F4 = extend(prime_field(2), 2)
    for _ in range(100):
        f = _random_poly(F4, rng, maxdeg=4)
        d = _random_poly(F4, rng, maxdeg=3)
        qr = skew_divmod(f, d)
        assert qr.remainder.q_degree < d.q_degree
        assert skew_mul(qr.quotient, d) + qr.remainder == f


@given(st.integers(0, 4 ** 5 - 1), st.integers(0, 4 ** 4 - 1), st.integers(1, 4 ** 3 - 1))
def test_divmod_reconstruction_hypothesis(fcode, gcode, dcode):
    F4 = extend(prime_field(2), 2)

    def decode(code, top):
        pairs = []
        i = 0
        while code:
            pairs.append((i, F4.from_index(code % 4)))
            code //= 4
            i += 1
        return LinearizedPoly.from_pairs(F4, pairs)

    f = decode(fcode, 5)
    d = decode(dcode, 3)
    if d.is_zero:
        return
    qr = skew_divmod(f, d)
    assert skew_mul(qr.quotient, d) + qr.remainder == f


def test_divmod_zero_divisor():
    F4 = extend(prime_field(2), 2)
    with pytest.raises(DivisionByZero):
        skew_divmod(LinearizedPoly.identity(F4), LinearizedPoly(F4, []))


# ----------------------------------------------------------------- subspace polynomial tests

def test_subspace_polynomial_predicate():
    F3 = prime_field(3)
    tri = LinearizedPoly.trinomial(F3, 4, 1, 1, 1)
    assert is_subspace_polynomial(tri)
    no_const = LinearizedPoly.from_pairs(F3, [(2, 1), (1, 1)])
    assert not is_subspace_polynomial(no_const)
    bi = LinearizedPoly.binomial(F3, 3, 2)
    assert is_subspace_polynomial(bi)
    with pytest.raises(NotMonic):
        is_subspace_polynomial(LinearizedPoly.from_pairs(F3, [(2, 2), (0, 1)]))


# ----------------------------------------------------------------- splitting degrees

def test_splitting_degree_of_field_polynomial():
    for q, k in ((2, 3), (3, 2), (5, 2)):
        Fq = prime_field(q)
        f = LinearizedPoly.from_pairs(Fq, [(k, 1), (0, -1)])  # X^(q^k) - X
        assert splitting_degree(f) == k


def test_splitting_degree_matches_root_count_oracle():
    F2 = prime_field(2)
    T = LinearizedPoly.from_pairs(F2, [(3, 1), (2, 1), (0, 1)])  # X^(2^3)+X^(2^2)+X
    assert splitting_degree(T) == splitting_degree_by_root_count(T) == 7


TABLE31_DEGREES = {
    (1, 1, 1): 78, (1, 1, -1): 78, (1, -1, 1): 242, (1, -1, -1): 121,
    (2, 1, 1): 80, (2, 1, -1): 104, (2, -1, 1): 104, (2, -1, -1): 80,
    (3, 1, 1): 80, (3, 1, -1): 80, (3, -1, 1): 104, (3, -1, -1): 104,
    (4, 1, 1): 78, (4, 1, -1): 121, (4, -1, 1): 242, (4, -1, -1): 78,
}


@pytest.mark.parametrize("l,al,a0", sorted(TABLE31_DEGREES))
def test_quintic_trinomial_degrees_against_factorization_oracle(l, al, a0):
    F3 = prime_field(3)
    T = LinearizedPoly.trinomial(F3, 5, l, al, a0)
    got = splitting_degree(T)
    assert got == TABLE31_DEGREES[(l, al, a0)]
    assert got == splitting_degree_by_factorization(T)


def test_splitting_degree_cap():
    F3 = prime_field(3)
    T = LinearizedPoly.trinomial(F3, 5, 1, 1, 1)
    with pytest.raises(CapExceeded) as ei:
        splitting_degree(T, cap=10)
    assert ei.value.iterations == 10


def test_splitting_degree_requires_subspace_polynomial():
    F3 = prime_field(3)
    with pytest.raises(NotMonic):
        splitting_degree(LinearizedPoly.from_pairs(F3, [(2, 2), (0, 1)]))
    with pytest.raises(ZeroCoefficient):
        splitting_degree(LinearizedPoly.from_pairs(F3, [(2, 1), (1, 1)]))


def test_binomial_splitting_degree_reference_case():
    assert binomial_splitting_degree(3, 5, 11) == 55


def test_binomial_splitting_degree_trivial_order():
    for q, k in ((2, 3), (3, 5), (4, 2)):
        assert binomial_splitting_degree(q, k, 1) == k


def test_binomial_splitting_degree_against_modular_oracle():
    # least N' with 7*(2^3-1) = 49 dividing 2^N' - 1
    M = 7 * (2 ** 3 - 1)
    t, v = 1, 2 % M
    while v != 1:
        v = v * 2 % M
        t += 1
    assert binomial_splitting_degree(2, 3, 7) == t == 21


def test_binomial_formula_cross_checks_symbolic_iteration():
    F243 = extend(prime_field(3), 5)
    g = F243.generator
    for s in (2, 11, 22, 121):
        a0 = g ** (242 // s)
        T = LinearizedPoly.binomial(F243, 5, a0)
        assert splitting_degree(T, cap=10 ** 4) == binomial_splitting_degree(3, 5, s)


# ----------------------------------------------------------------- root spaces

def test_root_space_of_field_polynomial_is_subfield():
    F2 = prime_field(2)
    f = LinearizedPoly.from_pairs(F2, [(2, 1), (0, 1)])  # X^(2^2) - X
    amb = extend(F2, 4)
    V = root_space(f, amb)
    assert V.dim == 2
    subfield = [x for x in amb.elements() if x.frobenius(2) == x]
    assert V == Subspace.from_elements(amb, subfield)


def test_root_space_of_x_is_zero_space():
    F2 = prime_field(2)
    amb = extend(F2, 3)
    V = root_space(LinearizedPoly.identity(F2), amb)
    assert V.dim == 0


def test_root_space_members_all_evaluate_to_zero():
    F2 = prime_field(2)
    f = LinearizedPoly.from_pairs(F2, [(2, 1), (1, 1), (0, 1)])  # X^4+X^2+X
    nprime = splitting_degree(f)
    amb = extend(F2, nprime)
    V = root_space(f, amb)
    assert V.dim == 2
    for v in V.elements():
        assert not evaluate(f, v)


def test_root_space_rejects_small_ambient():
    F2 = prime_field(2)
    T = LinearizedPoly.trinomial(F2, 3, 1, 1, 1)  # splitting degree 7
    with pytest.raises(SplittingFieldNotContained):
        root_space(T, extend(F2, 6))


def test_root_space_dimension_drops_below_splitting_field():
    # the same kernel computation in a subfield misses roots
    from cycodes.linalg import kernel, matrix_of_linear_map
    F2 = prime_field(2)
    f = LinearizedPoly.from_pairs(F2, [(2, 1), (1, 1), (0, 1)])
    small = extend(F2, 2)
    M = matrix_of_linear_map(lambda x: evaluate(f, x), small, F2)
    assert kernel(M).rows < 2


# ----------------------------------------------------------------- annihilators

def test_annihilator_of_zero_space_is_x():
    F2 = prime_field(2)
    amb = extend(F2, 3)
    assert annihilator(Subspace.zero(amb)) == LinearizedPoly.identity(amb)


def test_annihilator_of_subfield_is_field_polynomial():
    F2 = prime_field(2)
    amb = extend(F2, 6)
    subfield = [x for x in amb.elements() if x.frobenius(3) == x]
    V = Subspace.from_elements(amb, subfield)
    A = annihilator(V)
    expected = LinearizedPoly.from_pairs(amb, [(3, 1), (0, -1)])
    assert A == expected


def test_annihilator_matches_literal_product_on_random_planes():
    rng = random.Random(41)
    F64 = extend(prime_field(2), 6)
    for _ in range(10):
        a = F64.from_index(rng.randrange(1, 64))
        b = F64.from_index(rng.randrange(1, 64))
        V = Subspace.from_elements(F64, [a, b])
        if V.dim != 2:
            continue
        A = annihilator(V)
        # literal product of (X - v) over all members, as an ordinary polynomial
        prod = [F64.one]
        for v in V.elements():
            nxt = [F64.zero] * (len(prod) + 1)
            for i, c in enumerate(prod):
                nxt[i + 1] = nxt[i + 1] + c
                nxt[i] = nxt[i] - c * v
            prod = nxt
        for i, c in enumerate(prod):
            if i in (1, 2, 4):
                assert c == A.coeff({1: 0, 2: 1, 4: 2}[i])
            else:
                assert not c
        assert is_subspace_polynomial(A)


def test_annihilator_root_space_round_trip():
    cases = [
        (prime_field(2), 3, 1, 1, 1),
        (prime_field(2), 3, 2, 1, 1),
        (prime_field(3), 2, 1, 1, 1),
        (prime_field(3), 2, 1, 2, 1),
    ]
    for ctx, k, l, th, ga in cases:
        T = LinearizedPoly.trinomial(ctx, k, l, th, ga)
        amb = extend(ctx, splitting_degree(T))
        V = root_space(T, amb)
        A = annihilator(V)
        lifted = LinearizedPoly(amb, [embed(c, amb) for c in T.coeffs])
        assert A == lifted
