"""Shamir secret sharing over a prime field.

A (n, t) sharing embeds the secret as p(0) of a random degree t-1
polynomial; identity i receives p(i).  Any t distinct points recover the
secret by interpolation at 0, fewer reveal nothing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .arith import ModInt, lagrange_at, poly_eval
from .errors import (
    BadThreshold,
    DuplicateNode,
    IdentityOutOfRange,
    WrongCount,
    ZeroIdentity,
)


@dataclass(frozen=True)
class SharePoint:
    id: int
    value: ModInt


@dataclass(frozen=True)
class SharingState:
    """Secret plus the random coefficients a_1..a_{t-1} of the polynomial."""

    secret: ModInt
    coeffs: tuple[ModInt, ...]
    n: int
    t: int


def make_sharing(secret: ModInt, n: int, t: int, rng=None) -> SharingState:
    if t < 2 or t > n:
        raise BadThreshold(f"need 2 <= t <= n, got t={t} n={n}")
    if n >= secret.modulus:
        raise BadThreshold(f"n={n} does not fit in the field of size {secret.modulus}")
    rng = rng if rng is not None else random.SystemRandom()
    m = secret.modulus
    coeffs = tuple(ModInt(rng.randrange(m), m) for _ in range(t - 1))
    return SharingState(secret, coeffs, n, t)


def share(state: SharingState, identity: int) -> SharePoint:
    if identity == 0:
        raise ZeroIdentity("identity 0 is the secret's own node")
    if not 1 <= identity <= state.n:
        raise IdentityOutOfRange(f"identity {identity} outside [1..{state.n}]")
    m = state.secret.modulus
    value = poly_eval([state.secret, *state.coeffs], ModInt(identity, m))
    return SharePoint(identity, value)


def combine(points: list[SharePoint], t: int) -> ModInt:
    """Recover the secret from exactly t share points."""
    if len(points) != t:
        raise WrongCount(f"need exactly {t} points, got {len(points)}")
    ids = [p.id for p in points]
    if len(set(ids)) != len(ids):
        raise DuplicateNode(f"duplicate identities: {ids}")
    modulus = points[0].value.modulus
    lag = lagrange_at(ids, 0, modulus)
    acc = ModInt(0, modulus)
    for coeff, point in zip(lag, points):
        acc = acc + coeff * point.value
    return acc
