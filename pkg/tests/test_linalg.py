import random

import numpy as np
import pytest

from cycodes.ffield import embed, extend, prime_field
from cycodes.linalg import MatrixFq, kernel, matrix_of_linear_map, rank, rref


def det2_mod(a, b, c, d, p):
    return (a * d - b * c) % p


def test_rref_identity():
    F3 = prime_field(3)
    I = MatrixFq.identity(F3, 4)
    red, rk, piv = rref(I)
    assert red == I and rk == 4 and piv == [0, 1, 2, 3]


def test_rref_zero():
    F2 = prime_field(2)
    Z = MatrixFq.zeros(F2, 3, 5)
    red, rk, piv = rref(Z)
    assert red == Z and rk == 0 and piv == []


def test_rank_one_matrix_via_determinant_oracle():
    F3 = prime_field(3)
    assert det2_mod(1, 2, 2, 1, 3) == 0
    M = MatrixFq(F3, [[1, 2], [2, 1]])
    assert rank(M) == 1


def test_rref_idempotent_random():
    rng = random.Random(5)
    F5 = prime_field(5)
    for _ in range(100):
        M = MatrixFq(F5, [[rng.randrange(5) for _ in range(6)] for _ in range(4)])
        red, _, _ = rref(M)
        red2, _, _ = rref(red)
        assert red2 == red


def test_rank_nullity_random():
    rng = random.Random(6)
    F3 = prime_field(3)
    for _ in range(100):
        rows, cols = rng.randrange(1, 6), rng.randrange(1, 7)
        M = MatrixFq(F3, [[rng.randrange(3) for _ in range(cols)] for _ in range(rows)])
        assert rank(M) + kernel(M).rows == cols


def test_kernel_members_annihilate():
    rng = random.Random(8)
    F2 = prime_field(2)
    for _ in range(50):
        M = MatrixFq(F2, [[rng.randrange(2) for _ in range(6)] for _ in range(3)])
        K = kernel(M)
        prod = M.data @ K.data.T % 2
        assert not prod.any()


def test_kernel_identity_empty():
    F3 = prime_field(3)
    assert kernel(MatrixFq.identity(F3, 3)).rows == 0


def test_kernel_zero_full():
    F3 = prime_field(3)
    K = kernel(MatrixFq.zeros(F3, 4, 4))
    assert K.rows == 4
    assert K == MatrixFq.identity(F3, 4)


def test_kernel_of_frobenius_minus_identity_is_base_line():
    # x -> x^q - x on a quadratic extension has a q-element kernel, the base line
    for p in (2, 3):
        Fp = prime_field(p)
        Fq2 = extend(Fp, 2)
        M = matrix_of_linear_map(lambda x: x.frobenius(1) - x, Fq2, Fp)
        K = kernel(M)
        assert K.rows == 1
        fixed = [e for e in Fq2.elements() if e.frobenius(1) == e]
        assert len(fixed) == p


def test_matrix_of_identity_and_zero_maps():
    F2 = prime_field(2)
    F8 = extend(F2, 3)
    assert matrix_of_linear_map(lambda x: x, F8, F2) == MatrixFq.identity(F2, 3)
    assert matrix_of_linear_map(lambda x: x * F8.zero, F8, F2) == MatrixFq.zeros(F2, 3, 3)


def test_frobenius_matrix_squares_to_identity_on_f4():
    F2 = prime_field(2)
    F4 = extend(F2, 2)
    M = matrix_of_linear_map(lambda x: x.frobenius(1), F4, F2)
    assert M.matmul(M) == MatrixFq.identity(F2, 2)


def test_matrix_respects_composition_random():
    rng = random.Random(12)
    F3 = prime_field(3)
    F27 = extend(F3, 3)

    def random_linear_map():
        i = rng.randrange(3)
        c = F27.from_index(rng.randrange(1, 27))
        return lambda x: c * x.frobenius(i)

    for _ in range(40):
        f, g = random_linear_map(), random_linear_map()
        Mf = matrix_of_linear_map(f, F27, F3)
        Mg = matrix_of_linear_map(g, F27, F3)
        Mfg = matrix_of_linear_map(lambda x: f(g(x)), F27, F3)
        assert Mfg == Mf.matmul(Mg)


def test_matrix_agrees_with_coordinates():
    F3 = prime_field(3)
    F81 = extend(F3, 4)
    f = lambda x: x.frobenius(1) + x
    M = matrix_of_linear_map(f, F81, F3)
    rng = random.Random(2)
    for _ in range(30):
        e = F81.from_index(rng.randrange(81))
        got = M.data @ F81.coords_of(e) % 3
        assert np.array_equal(got, F81.coords_of(f(e)))


def test_nonlinear_map_rejected():
    F3 = prime_field(3)
    F9 = extend(F3, 2)
    with pytest.raises(ValueError):
        matrix_of_linear_map(lambda x: x * x, F9, F3)


def test_level_q_matrix_over_quartic_tower():
    # F_q = GF(4) inside GF(16): entries are level indices
    F4 = extend(prime_field(2), 2, as_base_level=True)
    F16 = extend(F4, 2)
    M = matrix_of_linear_map(lambda x: x.frobenius(1), F16, F4)
    sq = M.matmul(M)
    assert sq == MatrixFq.identity(F4, 2)
    w = embed(F4.x, F16)
    Mw = matrix_of_linear_map(lambda x: w * x, F16, F4)
    assert rank(Mw) == 2
