"""Canonical byte encodings used by every serialized artifact.

Unsigned integers are encoded big-endian with a 4-byte big-endian length
prefix; the magnitude is minimal length (zero encodes as length 0).  Signed
integers add one leading sign byte (0x00 positive or zero, 0x01 negative)
before the unsigned encoding of the magnitude.  Bit strings pack MSB-first.
"""

from __future__ import annotations

import io
import struct

from .errors import DeserializeError

FORMAT_VERSION = 0x0001


def encode_uint(value: int) -> bytes:
    if value < 0:
        raise ValueError("encode_uint needs a non-negative value")
    mag = value.to_bytes((value.bit_length() + 7) // 8, "big")
    return struct.pack(">I", len(mag)) + mag


def encode_int(value: int) -> bytes:
    sign = b"\x01" if value < 0 else b"\x00"
    return sign + encode_uint(abs(value))


def pack_bits(bits) -> bytes:
    """Pack a sequence of 0/1 ints MSB-first, zero-padding the last byte."""
    out = bytearray((len(bits) + 7) // 8)
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError("bits must be 0 or 1")
        if b:
            out[i >> 3] |= 0x80 >> (i & 7)
    return bytes(out)


def unpack_bits(data: bytes, nbits: int) -> tuple[int, ...]:
    if len(data) < (nbits + 7) // 8:
        raise DeserializeError("bit payload shorter than declared bit count")
    return tuple((data[i >> 3] >> (7 - (i & 7))) & 1 for i in range(nbits))


def bits_to_int(bits) -> int:
    """Interpret bits MSB-first as an unsigned integer."""
    v = 0
    for b in bits:
        v = (v << 1) | b
    return v


def int_to_bits(value: int, width: int) -> tuple[int, ...]:
    if value < 0 or value >> width:
        raise ValueError("value does not fit the requested width")
    return tuple((value >> (width - 1 - i)) & 1 for i in range(width))


class Reader:
    """Cursor over a bytes buffer that fails loudly on short reads."""

    def __init__(self, data: bytes):
        self._buf = io.BytesIO(data)
        self._len = len(data)

    def take(self, n: int) -> bytes:
        chunk = self._buf.read(n)
        if len(chunk) != n:
            raise DeserializeError(f"expected {n} bytes, got {len(chunk)}")
        return chunk

    def u8(self) -> int:
        return self.take(1)[0]

    def u16(self) -> int:
        return struct.unpack(">H", self.take(2))[0]

    def u32(self) -> int:
        return struct.unpack(">I", self.take(4))[0]

    def uint(self) -> int:
        mag = self.take(self.u32())
        return int.from_bytes(mag, "big")

    def int_(self) -> int:
        sign = self.u8()
        if sign not in (0, 1):
            raise DeserializeError("bad sign byte")
        mag = self.uint()
        return -mag if sign else mag

    def f64(self) -> float:
        return struct.unpack(">d", self.take(8))[0]

    def bits(self) -> tuple[int, ...]:
        nbits = self.u32()
        return unpack_bits(self.take((nbits + 7) // 8), nbits)

    def exhausted(self) -> bool:
        return self._buf.tell() == self._len

    def expect_end(self) -> None:
        if not self.exhausted():
            raise DeserializeError("trailing bytes after artifact")


def encode_bits(bits) -> bytes:
    return struct.pack(">I", len(bits)) + pack_bits(bits)


def encode_f64(value: float) -> bytes:
    return struct.pack(">d", value)


def encode_u32(value: int) -> bytes:
    return struct.pack(">I", value)


def encode_u8(value: int) -> bytes:
    return struct.pack(">B", value)


def encode_u16(value: int) -> bytes:
    return struct.pack(">H", value)
