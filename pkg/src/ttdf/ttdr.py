"""Threshold trapdoor relation over DDH-style groups.

A cheaper sibling of the full matrix function: the index is only 2 x 3 (the
l = 2 instance of the DDH construction), but instead of evaluating on chosen
bit strings, encryptors sample a random related pair

    x = (g**x1, g**x2)
    y = (c11**x1 * c21**x2,  c12**x1 * c22**x2,  c13**x1 * c23**x2)

for secret exponents x1, x2.  Inversion recovers the group-element pair x
(never the exponents).  Sharing, partial inversion and interpolation work
exactly as in the matrix scheme, so those types are reused with l = 2.

In injective mode y_1 = y_0**s_1 * g**x1 and y_2 = y_0**s_2 * g**x2, hence
x is recoverable; in lossy mode the image depends only on r1*x1 + r2*x2.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .ddh import (
    DdhIndex,
    DdhMasterTrapdoor,
    DdhShare,
    DdhSharedTrapdoor,
    _interpolated_column_bases,
    _require_subgroup,
    _sample,
    check_identity,
    derive_share,  # noqa: F401  (re-exported for the relation scheme)
)
from .errors import (
    DuplicateNode,
    LengthMismatch,
    ParamsMismatch,
    TargetCollision,
    WrongCount,
)
from .group import GroupElem, exp, generator


@dataclass(frozen=True)
class TtdrRelation:
    x: tuple[GroupElem, GroupElem]
    y: tuple[GroupElem, GroupElem, GroupElem]


def ttdr_gen(params, n: int, t: int, injective: bool = True,
             rng=None) -> tuple[DdhIndex, DdhMasterTrapdoor]:
    return _sample(params, 2, n, t, injective, rng)


def ttdr_sample(ek: DdhIndex, rng=None) -> TtdrRelation:
    """Sample a random (preimage, image) pair from the relation."""
    if ek.l != 2:
        raise LengthMismatch("relation index must be 2 x 3")
    rng = rng if rng is not None else random.SystemRandom()
    p = ek.params.p
    x1 = rng.randrange(p)
    x2 = rng.randrange(p)
    g = generator(ek.params)
    x = (exp(g, x1), exp(g, x2))
    y = tuple(exp(ek.rows[0][j], x1) * exp(ek.rows[1][j], x2)
              for j in range(3))
    return TtdrRelation(x, y)


def ttdr_invert_share(td: DdhSharedTrapdoor, y) -> DdhShare:
    """Partial inversion from the first image coordinate."""
    y0 = y[0]
    if y0.params != td.params:
        raise ParamsMismatch("image group differs from trapdoor group")
    _require_subgroup(y0)
    return DdhShare(td.id, tuple(exp(y0, v) for v in td.values))


def ttdr_combine(ek: DdhIndex, shares: list[DdhShare],
                 y) -> tuple[GroupElem, GroupElem]:
    """Recover the pair (g**x1, g**x2) from t partial inversions."""
    if len(shares) != ek.t:
        raise WrongCount(f"need exactly {ek.t} shares, got {len(shares)}")
    ids = [s.id for s in shares]
    if len(set(ids)) != len(ids):
        raise DuplicateNode(f"duplicate share identities: {ids}")
    if len(y) != 3:
        raise LengthMismatch("relation image has three coordinates")
    bases = _interpolated_column_bases(ek.params, shares, ids, 0, 2)
    return (y[1] * bases[0].inverse(), y[2] * bases[1].inverse())


def ttdr_combine_to_share(ek: DdhIndex, x, y, shares: list[DdhShare],
                          target: int) -> DdhShare:
    """Derive a target identity's partial inversion from a known preimage.

    The node-0 share is y_(j+1) / x_j, computable from the group-element
    pair alone; no discrete logs are needed.
    """
    if len(shares) != ek.t - 1:
        raise WrongCount(f"need exactly {ek.t - 1} shares, got {len(shares)}")
    ids = [s.id for s in shares]
    if len(set(ids)) != len(ids):
        raise DuplicateNode(f"duplicate share identities: {ids}")
    check_identity(ek.params, target)
    if target in ids:
        raise TargetCollision(f"target {target} already among shares")
    zero_share = DdhShare(0, (y[1] * x[0].inverse(), y[2] * x[1].inverse()))
    values = _interpolated_column_bases(ek.params, [zero_share, *shares],
                                        [0, *ids], target, 2)
    return DdhShare(target, tuple(values))
