"""Threshold lossy trapdoor function from DDH-style groups.

The public index is an l x (l+1) matrix of group elements.  Row i holds
g**r_i followed by g**(r_i * s_j) for each column j; in injective mode an
extra factor g sits on the diagonal entry (i, i+1).  Evaluation at a bit
string x multiplies down each column the rows selected by the set bits:

    y_0     = g ** <r, x>
    y_(j+1) = y_0 ** s_j  * g ** x_j      (injective mode)

so each input bit is recoverable from the quotient y_(j+1) / y_0**s_j, which
equals g for a one bit and the identity for a zero bit.  In lossy mode the
diagonal factor is absent and the whole image depends only on <r, x> mod p.

The trapdoor is the column secrets s_j.  For an (n, t) threshold, each s_j
is Shamir-shared by a degree t-1 polynomial f_j with f_j(0) = s_j; identity
v's shared trapdoor is (f_1(v), ..., f_l(v)).  A partial inversion of an
image is delta_v = (y_0 ** f_1(v), ..., y_0 ** f_l(v)), and any t of those
interpolate in the exponent to y_0 ** s_j.

Identities live in Z_p minus 0 (node 0 is the secret itself).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .arith import lagrange_at
from .errors import (
    BadThreshold,
    DuplicateNode,
    IdentityOutOfRange,
    LengthMismatch,
    NotInGroup,
    NotInImage,
    ParamsMismatch,
    TargetCollision,
    WrongCount,
    ZeroIdentity,
)
from .group import GroupElem, GroupParams, exp, generator, identity


@dataclass(frozen=True)
class DdhIndex:
    """Public function index: dimensions and the element matrix."""

    params: GroupParams
    l: int
    n: int
    t: int
    rows: tuple[tuple[GroupElem, ...], ...]  # l rows, each l+1 wide


@dataclass(frozen=True)
class DdhMasterTrapdoor:
    params: GroupParams
    l: int
    n: int
    t: int
    s: tuple[int, ...]                 # column secrets, one per output bit
    d: tuple[tuple[int, ...], ...]     # sharing coefficients, l x (t-1)


@dataclass(frozen=True)
class DdhSharedTrapdoor:
    params: GroupParams
    l: int
    n: int
    t: int
    id: int
    values: tuple[int, ...]            # f_j(id) for each column j


@dataclass(frozen=True)
class DdhImage:
    values: tuple[GroupElem, ...]      # y_0 .. y_l


@dataclass(frozen=True)
class DdhShare:
    id: int
    values: tuple[GroupElem, ...]      # y_0 ** f_j(id) for each column j


def _check_nt(params: GroupParams, n: int, t: int) -> None:
    if t < 2 or t > n:
        raise BadThreshold(f"need 2 <= t <= n, got t={t} n={n}")
    if n >= params.p:
        raise BadThreshold(f"n={n} does not fit in Z_p for p={params.p}")


def index_from_exponents(params: GroupParams, r: list[int], s: list[int],
                         d: list[list[int]], injective: bool,
                         n: int, t: int) -> tuple[DdhIndex, DdhMasterTrapdoor]:
    """Build an index from explicit exponents (used by samplers and tests)."""
    l = len(r)
    if len(s) != l or len(d) != l:
        raise LengthMismatch("r, s and d must all have l entries")
    _check_nt(params, n, t)
    g = generator(params)
    rows = []
    for i in range(l):
        row = [exp(g, r[i])]
        for j in range(l):
            e = exp(g, r[i] * s[j] % params.p)
            if injective and i == j:
                e = e * g
            row.append(e)
        rows.append(tuple(row))
    index = DdhIndex(params, l, n, t, tuple(rows))
    mtd = DdhMasterTrapdoor(params, l, n, t, tuple(s),
                            tuple(tuple(di) for di in d))
    return index, mtd


def _sample(params: GroupParams, l: int, n: int, t: int, injective: bool,
            rng) -> tuple[DdhIndex, DdhMasterTrapdoor]:
    rng = rng if rng is not None else random.SystemRandom()
    p = params.p
    r = [rng.randrange(p) for _ in range(l)]
    s = [rng.randrange(p) for _ in range(l)]
    d = [[rng.randrange(p) for _ in range(t - 1)] for _ in range(l)]
    return index_from_exponents(params, r, s, d, injective, n, t)


def sample_injective(params: GroupParams, l: int, n: int, t: int,
                     rng=None) -> tuple[DdhIndex, DdhMasterTrapdoor]:
    return _sample(params, l, n, t, True, rng)


def sample_lossy(params: GroupParams, l: int, n: int, t: int,
                 rng=None) -> tuple[DdhIndex, DdhMasterTrapdoor]:
    return _sample(params, l, n, t, False, rng)


def check_identity(params: GroupParams, identity_: int) -> None:
    if identity_ == 0:
        raise ZeroIdentity("identity 0 is reserved for the secret")
    if not 1 <= identity_ < params.p:
        raise IdentityOutOfRange(
            f"identity {identity_} outside [1, p-1] for p={params.p}")


def derive_share(mtd: DdhMasterTrapdoor, identity_: int) -> DdhSharedTrapdoor:
    """Shared trapdoor for one identity: every f_j evaluated at it."""
    check_identity(mtd.params, identity_)
    p = mtd.params.p
    values = []
    for j in range(mtd.l):
        acc = 0
        for coeff in reversed(mtd.d[j]):
            acc = (acc + coeff) * identity_ % p
        values.append((acc + mtd.s[j]) % p)
    return DdhSharedTrapdoor(mtd.params, mtd.l, mtd.n, mtd.t,
                             identity_, tuple(values))


def evaluate(ek: DdhIndex, bits) -> DdhImage:
    if len(bits) != ek.l:
        raise LengthMismatch(f"input has {len(bits)} bits, index wants {ek.l}")
    out = []
    for j in range(ek.l + 1):
        acc = identity(ek.params)
        for i, bit in enumerate(bits):
            if bit:
                acc = acc * ek.rows[i][j]
        out.append(acc)
    return DdhImage(tuple(out))


def _require_subgroup(y0: GroupElem) -> None:
    if pow(y0.value, y0.params.p, y0.params.modulus) != 1:
        raise NotInGroup("image base lies outside the order-p subgroup")


def invert_share(td: DdhSharedTrapdoor, image: DdhImage) -> DdhShare:
    """Partial inversion: y_0 raised to each trapdoor share value."""
    y0 = image.values[0]
    if y0.params != td.params:
        raise ParamsMismatch("image group differs from trapdoor group")
    _require_subgroup(y0)
    return DdhShare(td.id, tuple(exp(y0, v) for v in td.values))


def _interpolated_column_bases(params: GroupParams, shares: list[DdhShare],
                               nodes: list[int], target: int, l: int):
    """Per column j, the product of share values raised to Lagrange weights."""
    lag = lagrange_at(nodes, target, params.p)
    out = []
    for j in range(l):
        acc = identity(params)
        for coeff, share in zip(lag, shares):
            acc = acc * exp(share.values[j], coeff.value)
        out.append(acc)
    return out


def combine(ek: DdhIndex, shares: list[DdhShare], image: DdhImage):
    """Recover the input bits from t partial inversions."""
    if len(shares) != ek.t:
        raise WrongCount(f"need exactly {ek.t} shares, got {len(shares)}")
    ids = [s.id for s in shares]
    if len(set(ids)) != len(ids):
        raise DuplicateNode(f"duplicate share identities: {ids}")
    if len(image.values) != ek.l + 1:
        raise LengthMismatch("image length differs from index arity")
    for s in shares:
        if len(s.values) != ek.l:
            raise LengthMismatch("share length differs from index arity")
    g = generator(ek.params)
    one = identity(ek.params)
    bases = _interpolated_column_bases(ek.params, shares, ids, 0, ek.l)
    bits = []
    for j in range(ek.l):
        quotient = image.values[j + 1] * bases[j].inverse()
        if quotient == one:
            bits.append(0)
        elif quotient == g:
            bits.append(1)
        else:
            raise NotInImage(f"column {j} quotient is neither 1 nor g")
    return tuple(bits)


def combine_to_share(ek: DdhIndex, bits, shares: list[DdhShare],
                     target: int) -> DdhShare:
    """Derive the partial inversion of a target identity without its key.

    Knowing a preimage x lets anyone synthesize the node-0 share
    (y_(j+1) / g**x_j = y_0**s_j), which together with t-1 real shares gives
    t interpolation nodes, enough to evaluate the sharing polynomials in the
    exponent at any other identity.
    """
    if len(shares) != ek.t - 1:
        raise WrongCount(f"need exactly {ek.t - 1} shares, got {len(shares)}")
    ids = [s.id for s in shares]
    if len(set(ids)) != len(ids):
        raise DuplicateNode(f"duplicate share identities: {ids}")
    check_identity(ek.params, target)
    if target in ids:
        raise TargetCollision(f"target {target} already among shares")
    image = evaluate(ek, bits)
    ginv = generator(ek.params).inverse()
    zero_share = DdhShare(0, tuple(
        image.values[j + 1] * ginv if bits[j] else image.values[j + 1]
        for j in range(ek.l)))
    all_shares = [zero_share, *shares]
    nodes = [0, *ids]
    values = _interpolated_column_bases(ek.params, all_shares, nodes,
                                        target, ek.l)
    return DdhShare(target, tuple(values))
