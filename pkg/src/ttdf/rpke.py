"""Revocation encryption: everyone except a chosen set can decrypt.

The group controller hands each member a key share of a threshold-t
trapdoor.  To revoke up to t-1 members it encrypts as in the threshold
scheme but additionally publishes the revoked identities' decryption
shares inside the ciphertext.  A non-revoked member adds its own share,
reaching t distinct interpolation nodes; a revoked member's own share
duplicates a published node, so it structurally cannot combine.

When fewer than t-1 members are revoked, the controller pads the
published list with shares of reserved dummy identities (the top t-1
identities, never issued to members).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .adapter import TtdfInterface
from .errors import (
    DuplicateNode,
    ReservedIdentity,
    RevokedKey,
    WrongCount,
)
from .hardcore import hc_eval
from .tpke import (
    TpkeCiphertext,
    TpkeDecryptionShare,
    TpkeMasterKey,
    TpkePublicKey,
    TpkeSecretShare,
    tpke_dec,
    tpke_enc,
    tpke_gen,
    tpke_share,
)


@dataclass(frozen=True, eq=False)
class RpkeController:
    """Held by the group controller only: master key plus the dummy pool."""
    msk: TpkeMasterKey
    dummy_ids: tuple


@dataclass(frozen=True)
class RpkeCiphertext:
    c1: object
    c2: tuple
    published: tuple    # t-1 TpkeDecryptionShares, distinct ids


def rpke_gen(iface: TtdfInterface,
             rng=None) -> tuple[TpkePublicKey, RpkeController]:
    pk, msk = tpke_gen(iface, rng)
    return pk, RpkeController(msk, iface.dummy_ids())


def rpke_reg(gc: RpkeController, identity: int) -> TpkeSecretShare:
    """Issue a member key; reserved dummy identities are refused."""
    if identity in gc.dummy_ids:
        raise ReservedIdentity(
            f"identity {identity} is reserved for revocation padding")
    return tpke_share(gc.msk, identity)


def rpke_enc(pk: TpkePublicKey, revoked, session_key, rng=None,
             gc: RpkeController = None) -> RpkeCiphertext:
    """Encrypt a session key everyone outside the revoked set can read.

    revoked holds the revoked members' key shares; with fewer than t-1 of
    them the controller handle must be supplied so dummies fill the gap.
    """
    t = pk.iface.t
    if len(revoked) > t - 1:
        raise WrongCount(
            f"at most {t - 1} revocations per ciphertext, got {len(revoked)}")
    keys = list(revoked)
    if len(keys) < t - 1:
        if gc is None:
            raise WrongCount(
                f"need {t - 1} revoked keys or a controller handle to pad")
        for dummy in gc.dummy_ids:
            if len(keys) == t - 1:
                break
            if all(k.id != dummy for k in keys):
                keys.append(tpke_share(gc.msk, dummy))
    ids = [k.id for k in keys]
    if len(set(ids)) != len(ids):
        raise DuplicateNode(f"revoked identities repeat: {ids}")
    rng = rng if rng is not None else random.SystemRandom()
    base = tpke_enc(pk, session_key, rng)
    published = tuple(tpke_dec(k, base, rng) for k in keys)
    return RpkeCiphertext(base.c1, base.c2, published)


def rpke_dec(pk: TpkePublicKey, sk: TpkeSecretShare, ct: RpkeCiphertext,
             rng=None) -> tuple:
    """A non-revoked member recovers the session key on its own."""
    if any(share.id == sk.id for share in ct.published):
        raise RevokedKey(f"identity {sk.id} is revoked in this ciphertext")
    base = TpkeCiphertext(ct.c1, ct.c2)
    own = tpke_dec(sk, base, rng)
    shares = [*ct.published, own]
    x = pk.iface.combine(pk.ek, [s.payload for s in shares], ct.c1)
    mask = hc_eval(pk.hc, pk.iface.hc_input(x))
    return tuple(c ^ b for c, b in zip(ct.c2, mask))
