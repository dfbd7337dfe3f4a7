"""Threshold public-key encryption over any configured trapdoor backend.

Key generation samples an injective function index and a pairwise
independent hash whose output width is what the backend's residual
entropy supports at the default extraction slack (k - 160 bits).  A
ciphertext is the image of a fresh random preimage plus the hash of that
preimage XORed onto the message.  Any t decryption servers invert the
image; combining their shares recovers the preimage and hence the mask.

Messages are bit tuples of exactly the key's message width.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .adapter import TtdfInterface
from .errors import InsufficientEntropy, LengthMismatch
from .hardcore import HashDesc, extractor_width, hc_eval, hc_sample


@dataclass(frozen=True, eq=False)
class TpkePublicKey:
    iface: TtdfInterface
    ek: object
    hc: HashDesc

    @property
    def message_bits(self) -> int:
        return self.hc.out_bits


@dataclass(frozen=True, eq=False)
class TpkeMasterKey:
    iface: TtdfInterface
    mtd: object


@dataclass(frozen=True, eq=False)
class TpkeSecretShare:
    iface: TtdfInterface
    id: int
    std: object


@dataclass(frozen=True)
class TpkeCiphertext:
    c1: object
    c2: tuple         # message_bits masked bits


@dataclass(frozen=True)
class TpkeDecryptionShare:
    id: int
    payload: object


def tpke_gen(iface: TtdfInterface,
             rng=None) -> tuple[TpkePublicKey, TpkeMasterKey]:
    """Sample a key pair; the hash width comes from the lossiness budget."""
    rng = rng if rng is not None else random.SystemRandom()
    width = extractor_width(iface.lossiness)
    if width <= 0:
        raise InsufficientEntropy(
            f"residual entropy {iface.lossiness} supports no message bits")
    ek, mtd = iface.gen(rng)
    hc = hc_sample(iface.input_bits, width, rng)
    return TpkePublicKey(iface, ek, hc), TpkeMasterKey(iface, mtd)


def tpke_share(msk: TpkeMasterKey, identity: int) -> TpkeSecretShare:
    return TpkeSecretShare(msk.iface, identity,
                           msk.iface.share(msk.mtd, identity))


def tpke_enc(pk: TpkePublicKey, message, rng=None) -> TpkeCiphertext:
    if len(message) != pk.hc.out_bits:
        raise LengthMismatch(
            f"message has {len(message)} bits, key wants {pk.hc.out_bits}")
    rng = rng if rng is not None else random.SystemRandom()
    x, image = pk.iface.sample_relation(pk.ek, rng)
    mask = hc_eval(pk.hc, pk.iface.hc_input(x))
    return TpkeCiphertext(image,
                          tuple(m ^ b for m, b in zip(message, mask)))


def tpke_dec(sk: TpkeSecretShare, ct: TpkeCiphertext,
             rng=None) -> TpkeDecryptionShare:
    """One server's partial inversion of the ciphertext image."""
    return TpkeDecryptionShare(
        sk.id, sk.iface.invert_share(sk.std, ct.c1, rng))


def tpke_combine(pk: TpkePublicKey, shares, ct: TpkeCiphertext) -> tuple:
    """Recover the message from t decryption shares."""
    x = pk.iface.combine(pk.ek, [s.payload for s in shares], ct.c1)
    mask = hc_eval(pk.hc, pk.iface.hc_input(x))
    return tuple(c ^ b for c, b in zip(ct.c2, mask))
