"""Exact matrix and vector arithmetic mod q.

Matrices are plain lists of row lists of Python ints in [0, q).  For q below
roughly 2**60 the products are evaluated through numpy int64 after splitting
every entry into high and low halves; partial sums are reduced chunkwise so
nothing ever overflows 63 bits.  Larger moduli (they appear when many
identities inflate the cleared-coefficient bound) fall back to plain Python
big-int loops, which stay exact at any size.  Both routes are equivalent and
the tests check them against each other.
"""

from __future__ import annotations

import numpy as np

_NP_LIMIT_BITS = 60


def _np_eligible(q: int) -> bool:
    return q.bit_length() <= _NP_LIMIT_BITS


def _chunked_matmul(a, b, q: int, max_prod: int):
    """a @ b mod q with the inner dimension chunked so sums fit in int64."""
    chunk = max(1, ((1 << 62) - q) // max_prod)
    d = a.shape[1]
    acc = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(0, d, chunk):
        acc = (acc + a[:, k:k + chunk] @ b[k:k + chunk, :]) % q
    return acc


def _np_matmul_mod(rows_a, rows_b, q: int):
    qb = q.bit_length()
    s = (qb + 1) // 2
    mask = (1 << s) - 1
    a = np.array(rows_a, dtype=np.int64)
    b = np.array(rows_b, dtype=np.int64)
    a_hi, a_lo = a >> s, a & mask
    b_hi, b_lo = b >> s, b & mask
    max_part = max(1 << (qb - s), 1 << s) - 1
    max_prod = max_part * max_part
    hh = _chunked_matmul(a_hi, b_hi, q, max_prod)
    hl = _chunked_matmul(a_hi, b_lo, q, max_prod)
    lh = _chunked_matmul(a_lo, b_hi, q, max_prod)
    ll = _chunked_matmul(a_lo, b_lo, q, max_prod)
    # Recombination multiplies by 2**2s and 2**s, which can exceed 64 bits,
    # so it runs on Python ints entrywise.
    p2s = (1 << (2 * s)) % q
    p1s = (1 << s) % q
    out = []
    for rhh, rhl, rlh, rll in zip(hh.tolist(), hl.tolist(),
                                  lh.tolist(), ll.tolist()):
        out.append([(vhh * p2s + (vhl + vlh) * p1s + vll) % q
                    for vhh, vhl, vlh, vll in zip(rhh, rhl, rlh, rll)])
    return out


def matmul_mod(rows_a, rows_b, q: int):
    """(m x d) times (d x w) mod q as lists of row lists."""
    if _np_eligible(q) and rows_a and rows_b:
        return _np_matmul_mod(rows_a, rows_b, q)
    cols_b = list(zip(*rows_b))
    return [[sum(x * y for x, y in zip(row, col)) % q for col in cols_b]
            for row in rows_a]


def vecmat_mod(vec, rows_m, q: int):
    """Row vector (len d) times (d x w) mod q."""
    return matmul_mod([list(vec)], rows_m, q)[0]


def bitvec_matmul_mod(bits, rows_m, q: int):
    """{0,1} row vector times (h x w) mod q: sums the selected rows."""
    if len(bits) != len(rows_m):
        raise ValueError("bit vector length differs from row count")
    selected = [row for bit, row in zip(bits, rows_m) if bit]
    if not selected:
        return [0] * (len(rows_m[0]) if rows_m else 0)
    if _np_eligible(q):
        m = np.array(selected, dtype=np.int64)
        chunk = max(1, ((1 << 62) - q) // (q - 1))
        acc = np.zeros(m.shape[1], dtype=np.int64)
        for k in range(0, m.shape[0], chunk):
            acc = (acc + m[k:k + chunk].sum(axis=0)) % q
        return acc.tolist()
    acc = [0] * len(selected[0])
    for row in selected:
        acc = [(x + y) % q for x, y in zip(acc, row)]
    return acc


def mat_lincomb_mod(base_rows, mats, scalars, q: int):
    """base + sum(scalar_k * mat_k) entrywise mod q."""
    out = [list(row) for row in base_rows]
    for mat, s in zip(mats, scalars):
        s %= q
        for i, row in enumerate(mat):
            tgt = out[i]
            for j, v in enumerate(row):
                tgt[j] = (tgt[j] + s * v) % q
    return out
