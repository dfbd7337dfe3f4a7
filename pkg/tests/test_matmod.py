"""Modular matrix helpers: numpy fast path vs plain big-int reference."""

import random

import pytest

from ttdf.arith import next_prime
from ttdf.matmod import (
    _np_matmul_mod,
    bitvec_matmul_mod,
    mat_lincomb_mod,
    matmul_mod,
    vecmat_mod,
)


def ref_matmul(rows_a, rows_b, q):
    cols = list(zip(*rows_b))
    return [[sum(x * y for x, y in zip(row, col)) % q for col in cols]
            for row in rows_a]


def rand_mat(rng, m, n, q):
    return [[rng.randrange(q) for _ in range(n)] for _ in range(m)]


@pytest.mark.parametrize("qbits", [17, 31, 59, 60])
def test_numpy_path_matches_reference(qbits):
    rng = random.Random(qbits)
    q = next_prime(1 << (qbits - 1))
    a = rand_mat(rng, 13, 37, q)
    b = rand_mat(rng, 37, 9, q)
    assert _np_matmul_mod(a, b, q) == ref_matmul(a, b, q)
    assert matmul_mod(a, b, q) == ref_matmul(a, b, q)


def test_large_modulus_falls_back_exactly():
    rng = random.Random(90)
    q = (1 << 90) + 33
    a = rand_mat(rng, 6, 11, q)
    b = rand_mat(rng, 11, 5, q)
    assert matmul_mod(a, b, q) == ref_matmul(a, b, q)


def test_long_inner_dimension_is_chunked():
    # inner dim large enough to force several accumulator reductions
    rng = random.Random(4)
    q = next_prime(1 << 59)
    a = rand_mat(rng, 2, 4000, q)
    b = rand_mat(rng, 4000, 3, q)
    assert matmul_mod(a, b, q) == ref_matmul(a, b, q)


def test_vecmat():
    rng = random.Random(10)
    q = 1000003
    v = [rng.randrange(q) for _ in range(20)]
    m = rand_mat(rng, 20, 7, q)
    assert vecmat_mod(v, m, q) == ref_matmul([v], m, q)[0]


class TestBitvecMatmul:
    def test_matches_selected_row_sum(self):
        rng = random.Random(11)
        q = next_prime(1 << 48)
        m = rand_mat(rng, 30, 8, q)
        bits = [rng.randrange(2) for _ in range(30)]
        expect = [0] * 8
        for bit, row in zip(bits, m):
            if bit:
                expect = [(x + y) % q for x, y in zip(expect, row)]
        assert bitvec_matmul_mod(bits, m, q) == expect
        assert bitvec_matmul_mod(bits, m, (1 << 70) + 9) == [
            sum(row[j] for bit, row in zip(bits, m) if bit) % ((1 << 70) + 9)
            for j in range(8)]

    def test_zero_vector(self):
        m = [[5, 6], [7, 8]]
        assert bitvec_matmul_mod([0, 0], m, 101) == [0, 0]

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            bitvec_matmul_mod([1, 0, 1], [[1], [2]], 101)


def test_mat_lincomb():
    rng = random.Random(12)
    q = 10007
    base = rand_mat(rng, 4, 5, q)
    mats = [rand_mat(rng, 4, 5, q) for _ in range(3)]
    scalars = [rng.randrange(-q, q) for _ in range(3)]
    got = mat_lincomb_mod(base, mats, scalars, q)
    for i in range(4):
        for j in range(5):
            expect = base[i][j] + sum(s * m[i][j] for s, m in zip(scalars, mats))
            assert got[i][j] == expect % q
    # input rows must not be mutated
    assert all(0 <= v < q for row in base for v in row)
