"""Prime-order subgroups of Z_N* (Schnorr groups).

A group is (p, modulus, g): p is the prime order, modulus the prime field
size with p | modulus - 1, and g a generator of the order-p subgroup.
Exponents live mod p, elements mod modulus.

Named security levels come from fixed pregenerated parameters; generating a
fresh 15360-bit field prime takes minutes, so runtime generation is only
offered through generate_schnorr_group for custom (small) sizes.  Level
'toy' (modulus 23, order 11) keeps exhaustive tests cheap, 'tiny' (768-bit
modulus, 192-bit order) is the smallest level whose order clears the
extractor entropy floor for encryption tests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .arith import ModInt, invmod, is_probable_prime, powmod
from .encoding import Reader, encode_uint
from .errors import InconsistentParams, NotInGroup, ParamsMismatch
from ._group_data import FIXED_GROUPS

_LEVEL_SIZES = {"tiny": (192, 768), "128": (256, 3072),
                "256": (512, 7680), "512": (1024, 15360)}


@dataclass(frozen=True)
class GroupParams:
    p: int
    modulus: int
    g: int

    def __post_init__(self):
        if not is_probable_prime(self.p):
            raise InconsistentParams("group order is not prime")
        if not is_probable_prime(self.modulus):
            raise InconsistentParams("group modulus is not prime")
        if (self.modulus - 1) % self.p != 0:
            raise InconsistentParams("order does not divide modulus - 1")
        if self.g % self.modulus in (0, 1):
            raise InconsistentParams("generator must not be 0 or 1")
        if powmod(self.g, self.p, self.modulus) != 1:
            raise InconsistentParams("generator order does not divide p")


_PARAMS_CACHE: dict[tuple[int, int, int], GroupParams] = {}


def group_params(p: int, modulus: int, g: int) -> GroupParams:
    """Validated, interned GroupParams (validation runs once per triple)."""
    key = (p, modulus, g)
    params = _PARAMS_CACHE.get(key)
    if params is None:
        params = GroupParams(p, modulus, g)
        _PARAMS_CACHE[key] = params
    return params


def group_gen(level, rng=None) -> GroupParams:
    """Group parameters for a named level: toy, tiny, 128, 256 or 512.

    The named levels are fixed constants, so rng is accepted only for
    interface uniformity.
    """
    name = str(level)
    if name not in FIXED_GROUPS:
        raise InconsistentParams(
            f"unknown level {level!r}; choose from {sorted(FIXED_GROUPS)}")
    p, modulus, g = FIXED_GROUPS[name]
    params = group_params(p, modulus, g)
    if name in _LEVEL_SIZES:
        p_bits, mod_bits = _LEVEL_SIZES[name]
        if p.bit_length() != p_bits or modulus.bit_length() != mod_bits:
            raise InconsistentParams(f"fixed parameters for {name} corrupted")
    return params


def generate_schnorr_group(order_bits: int, modulus_bits: int,
                           rng=None) -> GroupParams:
    """Sample a fresh group; practical only for modest modulus sizes."""
    rng = rng if rng is not None else random.SystemRandom()
    while True:
        p = rng.getrandbits(order_bits) | (1 << (order_bits - 1)) | 1
        while not is_probable_prime(p):
            p += 2
        if p.bit_length() == order_bits:
            break
    kbits = modulus_bits - order_bits
    while True:
        k = (rng.getrandbits(kbits) | (1 << (kbits - 1))) & ~1
        modulus = k * p + 1
        if modulus.bit_length() != modulus_bits:
            continue
        if is_probable_prime(modulus):
            break
    while True:
        h = rng.randrange(2, modulus - 1)
        g = powmod(h, (modulus - 1) // p, modulus)
        if g != 1:
            return group_params(p, modulus, g)


@dataclass(frozen=True)
class GroupElem:
    value: int
    params: GroupParams

    def __post_init__(self):
        if not 1 <= self.value < self.params.modulus:
            raise NotInGroup(f"value {self.value} outside [1, modulus)")

    def _check(self, other: "GroupElem") -> None:
        if self.params is not other.params and self.params != other.params:
            raise ParamsMismatch("elements from different groups")

    def __mul__(self, other: "GroupElem") -> "GroupElem":
        self._check(other)
        return GroupElem(self.value * other.value % self.params.modulus,
                         self.params)

    def inverse(self) -> "GroupElem":
        return GroupElem(invmod(self.value, self.params.modulus), self.params)


def identity(params: GroupParams) -> GroupElem:
    return GroupElem(1, params)


def generator(params: GroupParams) -> GroupElem:
    return GroupElem(params.g, params)


def exp(base: GroupElem, e) -> GroupElem:
    """base**e with the exponent reduced mod the group order.

    e may be an int or a ModInt over the group order.
    """
    if isinstance(e, ModInt):
        if e.modulus != base.params.p:
            raise ParamsMismatch("exponent modulus is not the group order")
        e = e.value
    return GroupElem(powmod(base.value, e % base.params.p,
                            base.params.modulus), base.params)


def random_exponent(params: GroupParams, rng) -> int:
    return rng.randrange(params.p)


def elem_to_bytes(elem: GroupElem) -> bytes:
    return encode_uint(elem.value)


def elem_from_reader(reader: Reader, params: GroupParams) -> GroupElem:
    """Deserialize an element and verify subgroup membership."""
    value = reader.uint()
    if not 1 <= value < params.modulus:
        raise NotInGroup("deserialized value outside the field")
    if powmod(value, params.p, params.modulus) != 1:
        raise NotInGroup("deserialized value outside the order-p subgroup")
    return GroupElem(value, params)
