"""Uniform capability interface over the three trapdoor backends.

The encryption layers are written once against this surface: generation,
sharing, relation sampling (a random preimage with its image), partial
inversion, combining, and the metadata the extractor needs (hash input
width and residual entropy of a preimage given a lossy image).

Preimages are opaque here: bit tuples for the matrix schemes, a pair of
group elements for the relation scheme.  hc_input turns either into a
fixed-width bit tuple for the pairwise-independent hash.
"""

from __future__ import annotations

import random
from abc import ABC, abstractmethod

from . import ddh, lwe, ttdr
from .errors import InconsistentParams
from .group import GroupParams
from .lwe import LweParams


def _rng_or_system(rng):
    return rng if rng is not None else random.SystemRandom()


class TtdfInterface(ABC):
    """Operation handles plus metadata for one configured backend."""

    scheme: str
    n: int
    t: int
    input_bits: int      # width of the hash input encoding
    lossiness: int       # residual preimage entropy k, in bits
    identity_max: int    # identities live in [1..identity_max]

    @abstractmethod
    def gen(self, rng=None):
        """Injective-mode index and master trapdoor."""

    @abstractmethod
    def share(self, mtd, identity):
        ...

    @abstractmethod
    def sample_relation(self, ek, rng=None):
        """A fresh (preimage, image) pair."""

    @abstractmethod
    def invert_share(self, std, image, rng=None):
        ...

    @abstractmethod
    def combine(self, ek, shares, image):
        ...

    @abstractmethod
    def combine_to_share(self, ek, x, image, shares, target):
        ...

    @abstractmethod
    def hc_input(self, x) -> tuple:
        """Fixed-width bit encoding of a preimage."""

    def __eq__(self, other):
        return type(other) is type(self) and other.__dict__ == self.__dict__

    def __hash__(self):
        return hash((type(self).__name__, self.n, self.t))

    def dummy_ids(self) -> tuple:
        """The t-1 reserved identities at the top of the identity space."""
        return tuple(self.identity_max - i for i in range(self.t - 1))


class DdhBackend(TtdfInterface):
    scheme = "ddh"

    def __init__(self, params: GroupParams, l: int, n: int, t: int):
        self.params = params
        self.l = l
        self.n = n
        self.t = t
        self.input_bits = l
        self.lossiness = l - params.p.bit_length()
        self.identity_max = params.p - 1

    def gen(self, rng=None):
        return ddh.sample_injective(self.params, self.l, self.n, self.t,
                                    _rng_or_system(rng))

    def share(self, mtd, identity):
        return ddh.derive_share(mtd, identity)

    def sample_relation(self, ek, rng=None):
        rng = _rng_or_system(rng)
        x = tuple(rng.randrange(2) for _ in range(self.l))
        return x, ddh.evaluate(ek, x)

    def invert_share(self, std, image, rng=None):
        return ddh.invert_share(std, image)

    def combine(self, ek, shares, image):
        return ddh.combine(ek, shares, image)

    def combine_to_share(self, ek, x, image, shares, target):
        return ddh.combine_to_share(ek, x, shares, target)

    def hc_input(self, x):
        return tuple(x)


class LweBackend(TtdfInterface):
    scheme = "lwe"

    def __init__(self, params: LweParams, residual_entropy: int = 0):
        """residual_entropy is the claimed lossiness k; the asymptotic
        guarantee has no closed form at concrete sizes, so callers assert
        a value and the extractor budget follows from it."""
        self.params = params
        self.n = params.n
        self.t = params.t
        self.input_bits = params.h
        self.lossiness = residual_entropy
        self.identity_max = params.n

    def gen(self, rng=None):
        return lwe.sample_injective(self.params, _rng_or_system(rng))

    def share(self, mtd, identity):
        return lwe.derive_share(mtd, identity)

    def sample_relation(self, ek, rng=None):
        rng = _rng_or_system(rng)
        x = tuple(rng.randrange(2) for _ in range(self.params.h))
        return x, lwe.evaluate(ek, x)

    def invert_share(self, std, image, rng=None):
        return lwe.invert_share(std, image.a, _rng_or_system(rng))

    def combine(self, ek, shares, image):
        return lwe.combine(self.params, shares, image.y)

    def combine_to_share(self, ek, x, image, shares, target):
        return lwe.combine_to_share(ek, x, shares, target)

    def hc_input(self, x):
        return tuple(x)


class TtdrBackend(TtdfInterface):
    scheme = "ttdr"

    def __init__(self, params: GroupParams, n: int, t: int):
        self.params = params
        self.n = n
        self.t = t
        self.input_bits = 2 * params.modulus.bit_length()
        self.lossiness = params.p.bit_length() - 1
        self.identity_max = params.p - 1

    def gen(self, rng=None):
        return ttdr.ttdr_gen(self.params, self.n, self.t, True,
                             _rng_or_system(rng))

    def share(self, mtd, identity):
        return ttdr.derive_share(mtd, identity)

    def sample_relation(self, ek, rng=None):
        rel = ttdr.ttdr_sample(ek, _rng_or_system(rng))
        return rel.x, rel.y

    def invert_share(self, std, image, rng=None):
        return ttdr.ttdr_invert_share(std, image)

    def combine(self, ek, shares, image):
        return ttdr.ttdr_combine(ek, shares, image)

    def combine_to_share(self, ek, x, image, shares, target):
        return ttdr.ttdr_combine_to_share(ek, x, image, shares, target)

    def hc_input(self, x):
        width = self.params.modulus.bit_length()
        bits = []
        for elem in x:
            bits.extend((elem.value >> (width - 1 - i)) & 1
                        for i in range(width))
        return tuple(bits)


def from_tltdf(scheme: str, params, *, l: int = 0, n: int, t: int,
               residual_entropy: int = 0) -> TtdfInterface:
    """Wrap an injective-mode lossy-function parameter set as a backend."""
    if scheme == "ddh":
        if l < 1:
            raise InconsistentParams("ddh backend needs an input length l")
        return DdhBackend(params, l, n, t)
    if scheme == "lwe":
        if (n, t) != (params.n, params.t):
            raise InconsistentParams("n, t must match the parameter set")
        return LweBackend(params, residual_entropy)
    raise InconsistentParams(f"unknown scheme {scheme!r}")


def from_ttdr(params: GroupParams, n: int, t: int) -> TtdfInterface:
    """Wrap the relation sampler; preimages are group-element pairs."""
    return TtdrBackend(params, n, t)
