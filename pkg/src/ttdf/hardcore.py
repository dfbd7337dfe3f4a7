"""Pairwise-independent hashing over GF(2): h(x) = M*x xor c.

Used as the hardcore extractor for encryption: a random affine map from l
input bits to l' output bits is pairwise independent, so by the leftover
hash lemma it extracts l' = k - 2*lg(1/eps) nearly uniform bits from any
source with k bits of min-entropy.  The default eps is 2**-80.

Rows of M are stored as l-bit integers (bit for input position i at weight
2**(l-1-i), matching MSB-first packing), so evaluation is AND + popcount.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .encoding import (
    Reader,
    bits_to_int,
    encode_u32,
    pack_bits,
    unpack_bits,
)
from .errors import InsufficientEntropy, LengthMismatch, OutTooWide

DEFAULT_EPSILON_LOG2 = 80


@dataclass(frozen=True)
class HashDesc:
    in_bits: int
    out_bits: int
    rows: tuple[int, ...]
    offset: int

    def __post_init__(self):
        if self.out_bits > self.in_bits:
            raise OutTooWide(
                f"output {self.out_bits} wider than input {self.in_bits}")
        if len(self.rows) != self.out_bits:
            raise LengthMismatch("row count differs from output width")
        for r in self.rows:
            if r >> self.in_bits:
                raise LengthMismatch("matrix row wider than input")
        if self.offset >> self.out_bits:
            raise LengthMismatch("offset wider than output")


def hc_sample(in_bits: int, out_bits: int, rng=None,
              toeplitz: bool = False) -> HashDesc:
    """Sample a random affine GF(2) map.

    With toeplitz=True the matrix rows are slices of one random bit window
    of length in_bits + out_bits - 1 (fewer random bits, same pairwise
    independence); the descriptor stores the expanded rows either way.
    """
    if out_bits > in_bits:
        raise OutTooWide(f"output {out_bits} wider than input {in_bits}")
    rng = rng if rng is not None else random.SystemRandom()
    if out_bits == 0:
        return HashDesc(in_bits, 0, (), 0)
    if toeplitz:
        window = rng.getrandbits(in_bits + out_bits - 1)
        mask = (1 << in_bits) - 1
        rows = tuple((window >> i) & mask for i in range(out_bits))
    else:
        rows = tuple(rng.getrandbits(in_bits) for _ in range(out_bits))
    offset = rng.getrandbits(out_bits)
    return HashDesc(in_bits, out_bits, rows, offset)


def hc_eval(desc: HashDesc, x) -> tuple[int, ...]:
    """Apply the map to l input bits, returning l' output bits."""
    if len(x) != desc.in_bits:
        raise LengthMismatch(
            f"input has {len(x)} bits, descriptor expects {desc.in_bits}")
    xv = bits_to_int(x)
    out = []
    for i, row in enumerate(desc.rows):
        bit = (row & xv).bit_count() & 1
        bit ^= (desc.offset >> (desc.out_bits - 1 - i)) & 1
        out.append(bit)
    return tuple(out)


def extractor_width(k: int, epsilon_log2: int = DEFAULT_EPSILON_LOG2) -> int:
    """Extractable width from k bits of min-entropy at error 2**-epsilon_log2.

    Returns k - 2*epsilon_log2; a zero result is returned as-is (callers
    must reject it), a negative one raises InsufficientEntropy.
    """
    width = k - 2 * epsilon_log2
    if width < 0:
        raise InsufficientEntropy(
            f"entropy {k} below the 2*{epsilon_log2} floor")
    return width


def hc_to_bytes(desc: HashDesc) -> bytes:
    matrix_bits = []
    for row in desc.rows:
        matrix_bits.extend((row >> (desc.in_bits - 1 - i)) & 1
                           for i in range(desc.in_bits))
    offset_bits = [(desc.offset >> (desc.out_bits - 1 - i)) & 1
                   for i in range(desc.out_bits)]
    return (encode_u32(desc.in_bits) + encode_u32(desc.out_bits)
            + pack_bits(matrix_bits) + pack_bits(offset_bits))


def hc_from_reader(reader: Reader) -> HashDesc:
    in_bits = reader.u32()
    out_bits = reader.u32()
    matrix = unpack_bits(reader.take((in_bits * out_bits + 7) // 8),
                         in_bits * out_bits)
    offset_bits = unpack_bits(reader.take((out_bits + 7) // 8), out_bits)
    rows = tuple(bits_to_int(matrix[i * in_bits:(i + 1) * in_bits])
                 for i in range(out_bits))
    return HashDesc(in_bits, out_bits, rows, bits_to_int(offset_bits))
