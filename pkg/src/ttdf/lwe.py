"""Threshold lossy trapdoor function from LWE.

The public index is a pair (A, C) with A uniform in Z_q^(h x d) and

    C = A Z + round(q/p * M) + E        (entrywise, mod q)

where Z is the trapdoor, E has discretized Gaussian entries, and M encodes
the message structure: in injective mode M is the block matrix with column
blocks (1, 2, ..., 2**(l-1)) for l = floor(lg p), so an h-bit input x
splits into w = h/l blocks whose little-endian values m_i appear in
x*C scaled by q/p; in lossy mode M = 0.

Evaluation: F(x) = (a, y) = (x A, x C).  The trapdoor column z_i lets one
strip a Z from y_i; thresholding shares each z entry with a degree t-1
polynomial mod q, and a partial inversion by identity v is

    delta_v[i] = <a, T_v[.][i]> + fresh noise,

with T_v the polynomial evaluations at v.  Combination clears Lagrange
denominators instead of dividing mod q: with eta = (n!)**3, scale D and
integer coefficients Lam_v (Lam_v / D the exact Lagrange coefficient),

    R_i = eta*y_i - (eta/D) * sum_v Lam_v * delta_v[i]    (mod q)
        = eta * (q/p * m_i + small error)                 (mod q)

Reduced mod q, the candidate codewords sit at q*(eta*m mod p)/p, spaced
q/p apart, so decoding divides out eta mod p:

    m_i = eta^-1 * round(p * centered(R_i) / q)   (mod p)

which the tests cross-check against brute-force nearest-codeword search.
Noise keeps decoding exact because the parameter validator sizes alpha
against the worst-case cleared-coefficient magnitude gamma: alpha is set to
1/(16p(h+g)) for g = max(h, gamma**2) and q to a prime at least
max(4p(h+gamma), 2*sqrt(d)/alpha).

Derived shares (from combine_to_share) carry the interpolation scale D;
combine only accepts unit-scale shares in this version.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations

from .arith import (
    ModInt,
    centered_mod,
    invmod,
    is_probable_prime,
    lagrange_cleared,
    next_prime,
)
from .errors import (
    BadThreshold,
    BoundViolation,
    DuplicateNode,
    IdentityOutOfRange,
    InconsistentParams,
    LengthMismatch,
    NotInImage,
    ScaleMismatch,
    TargetCollision,
    WrongCount,
)
from .matmod import (
    bitvec_matmul_mod,
    mat_lincomb_mod,
    matmul_mod,
    vecmat_mod,
)


@dataclass(frozen=True)
class LweParams:
    """Validated parameter set; see make_params / make_params_explicit."""

    d: int          # secret dimension
    q: int          # working modulus (prime)
    p: int          # message modulus (prime, > n)
    h: int          # input bits
    l: int          # bits per block, floor(lg p)
    w: int          # number of blocks, h / l
    alpha: float    # Gaussian parameter of the noise distribution
    n: int          # number of identities
    t: int          # threshold
    eta: int        # (n!)**3, clears every Lagrange denominator
    gamma: int      # worst-case sum of |eta * L_v| over t-subsets
    g_stat: int     # statistical slack exponent, max(h, gamma**2)


def worst_cleared_weight(n: int, t: int) -> int:
    """Max over t-subsets S of [0..n] and targets outside S of sum|eta*L_v|."""
    eta = math.factorial(n) ** 3
    best = 0
    for nodes in combinations(range(n + 1), t):
        for target in range(n + 1):
            if target in nodes:
                continue
            cleared = lagrange_cleared(list(nodes), target, n)
            if eta % cleared.scale:
                raise BoundViolation("eta does not clear a node denominator")
            weight = (eta // cleared.scale) * sum(abs(c) for c in cleared.coeffs)
            best = max(best, weight)
    return best


def _finish_params(d: int, h: int, p: int, n: int, t: int) -> LweParams:
    if t < 2 or t > n:
        raise BadThreshold(f"need 2 <= t <= n, got t={t} n={n}")
    if not is_probable_prime(p):
        raise InconsistentParams(f"p={p} is not prime")
    if p <= n:
        raise InconsistentParams(f"p={p} must exceed n={n} for decoding")
    l = p.bit_length() - 1
    if l < 1:
        raise InconsistentParams(f"p={p} leaves no bits per block")
    if h % l:
        raise InconsistentParams(f"block width {l} does not divide h={h}")
    w = h // l
    gamma = worst_cleared_weight(n, t)
    eta = math.factorial(n) ** 3
    g_stat = max(h, gamma * gamma)
    denom = 16 * p * (h + g_stat)
    alpha = 1.0 / denom
    # 2*sqrt(d)/alpha as an integer lower bound, with headroom so the float
    # form of the inequality holds comfortably after rounding.
    noise_floor = math.isqrt(4 * d * denom * denom) + 1
    q0 = max(4 * p * (h + gamma), noise_floor + noise_floor // 1000)
    q = next_prime(q0)
    params = LweParams(d, q, p, h, l, w, alpha, n, t, eta, gamma, g_stat)
    validate_params(params)
    return params


def make_params_explicit(d: int, h: int, p: int, n: int, t: int) -> LweParams:
    """Parameters from an explicit shape (d, h, p); q and alpha are derived."""
    return _finish_params(d, h, p, n, t)


def make_params(d: int, c1: float, c2: float, c3: float,
                n: int, t: int) -> LweParams:
    """Parameters from the exponent recipe h ~ d**c3, p ~ h**c1.

    c2 (the nominal exponent capping q at p * h**c2) is accepted for
    interface completeness but not enforced: with the exact worst-case
    coefficient weight for small n the noise inequalities force q above
    that window, and q correctness is what matters here.
    """
    if c3 <= 1:
        raise InconsistentParams(f"need c3 > 1, got {c3}")
    if c1 <= 0 or c2 <= 0:
        raise InconsistentParams("exponents must be positive")
    h0 = math.ceil(d ** c3)
    p = next_prime(max(2, math.ceil(h0 ** c1)))
    while p <= t:
        p = next_prime(p + 1)
    l = p.bit_length() - 1
    h = (h0 // l) * l
    if h == 0:
        raise InconsistentParams("shape leaves no input bits")
    return _finish_params(d, h, p, n, t)


def validate_params(params: LweParams) -> None:
    """Re-check every defining inequality; raises InconsistentParams."""
    failures = []
    if params.h != params.w * params.l:
        failures.append("h != w * l")
    if not (2 ** params.l <= params.p < 2 ** (params.l + 1)):
        failures.append("l != floor(lg p)")
    if not is_probable_prime(params.q):
        failures.append("q not prime")
    if not is_probable_prime(params.p):
        failures.append("p not prime")
    if params.p <= params.n:
        failures.append("p <= n")
    if params.q < 4 * params.p * (params.h + params.gamma):
        failures.append("q < 4p(h + gamma)")
    if params.g_stat < max(params.h, params.gamma ** 2):
        failures.append("g_stat < max(h, gamma^2)")
    if params.alpha * (16 * params.p * (params.h + params.g_stat)) > 1 + 1e-9:
        failures.append("alpha > 1/(16p(h+g))")
    if params.q * params.alpha < 2 * math.sqrt(params.d):
        failures.append("q < 2 sqrt(d) / alpha")
    if failures:
        raise InconsistentParams("; ".join(failures))


def gauss_sample(alpha: float, q: int, rng=None) -> ModInt:
    """Discretized Gaussian: round q times a normal of std alpha/sqrt(2 pi)."""
    rng = rng if rng is not None else random.SystemRandom()
    x = rng.gauss(0.0, alpha / math.sqrt(2 * math.pi))
    return ModInt(math.floor(q * x + 0.5), q)


def _gauss_int(alpha: float, q: int, rng) -> int:
    return math.floor(q * rng.gauss(0.0, alpha / math.sqrt(2 * math.pi)) + 0.5) % q


def round_scaled(value: int, num: int, den: int) -> int:
    """round(value * num / den) with half rounded up, exact in integers."""
    return (2 * value * num + den) // (2 * den)


@dataclass(frozen=True)
class LweIndex:
    params: LweParams
    a: list            # h x d
    c: list            # h x w


@dataclass(frozen=True)
class LweMasterTrapdoor:
    params: LweParams
    z: list            # d x w
    dmats: tuple       # t-1 matrices of d x w sharing coefficients


@dataclass(frozen=True)
class LweSharedTrapdoor:
    params: LweParams
    id: int
    t_mat: list        # d x w, the sharing polynomials evaluated at id


@dataclass(frozen=True)
class LweImage:
    a: list            # length d
    y: list            # length w


@dataclass(frozen=True)
class LweShare:
    id: int
    delta: list        # length w
    scale: int = 1


def index_from_matrices(params: LweParams, a, z, e,
                        injective: bool) -> LweIndex:
    """Assemble the public index from explicit matrices (samplers, tests)."""
    q, p = params.q, params.p
    c = matmul_mod(a, z, q)
    for row_e, row_c in zip(e, c):
        for j, v in enumerate(row_e):
            row_c[j] = (row_c[j] + v) % q
    if injective:
        for block in range(params.w):
            for k in range(params.l):
                row = block * params.l + k
                c[row][block] = (c[row][block]
                                 + round_scaled(1 << k, q, p)) % q
    return LweIndex(params, a, c)


def _sample(params: LweParams, injective: bool,
            rng) -> tuple[LweIndex, LweMasterTrapdoor]:
    rng = rng if rng is not None else random.SystemRandom()
    q = params.q
    a = [[rng.randrange(q) for _ in range(params.d)] for _ in range(params.h)]
    z = [[rng.randrange(q) for _ in range(params.w)] for _ in range(params.d)]
    e = [[_gauss_int(params.alpha, q, rng) for _ in range(params.w)]
         for _ in range(params.h)]
    dmats = tuple(
        [[rng.randrange(q) for _ in range(params.w)] for _ in range(params.d)]
        for _ in range(params.t - 1))
    return (index_from_matrices(params, a, z, e, injective),
            LweMasterTrapdoor(params, z, dmats))


def sample_injective(params: LweParams, rng=None):
    return _sample(params, True, rng)


def sample_lossy(params: LweParams, rng=None):
    return _sample(params, False, rng)


def _check_identity(params: LweParams, identity: int) -> None:
    if not 1 <= identity <= params.n:
        raise IdentityOutOfRange(
            f"identity {identity} outside [1..{params.n}]")


def derive_share(mtd: LweMasterTrapdoor, identity: int) -> LweSharedTrapdoor:
    """Evaluate every sharing polynomial at the identity."""
    _check_identity(mtd.params, identity)
    q = mtd.params.q
    scalars = [pow(identity, k, q) for k in range(1, mtd.params.t)]
    t_mat = mat_lincomb_mod(mtd.z, mtd.dmats, scalars, q)
    return LweSharedTrapdoor(mtd.params, identity, t_mat)


def evaluate(ek: LweIndex, bits) -> LweImage:
    if len(bits) != ek.params.h:
        raise LengthMismatch(
            f"input has {len(bits)} bits, index wants {ek.params.h}")
    q = ek.params.q
    return LweImage(bitvec_matmul_mod(bits, ek.a, q),
                    bitvec_matmul_mod(bits, ek.c, q))


def invert_share(td: LweSharedTrapdoor, a, rng=None) -> LweShare:
    """Partial inversion of an image first coordinate, with fresh noise."""
    params = td.params
    if len(a) != params.d:
        raise LengthMismatch(f"vector length {len(a)} != d={params.d}")
    rng = rng if rng is not None else random.SystemRandom()
    q = params.q
    base = vecmat_mod(a, td.t_mat, q)
    delta = [(v + _gauss_int(params.alpha, q, rng)) % q for v in base]
    return LweShare(td.id, delta, 1)


def block_values(params: LweParams, bits) -> list[int]:
    """Little-endian value of each l-bit block of the input."""
    return [sum(bits[i * params.l + k] << k for k in range(params.l))
            for i in range(params.w)]


def _decode_residue(params: LweParams, r: int, eta_inv: int) -> tuple[int, int]:
    """Message residue and its distance to the nearest codeword."""
    q, p, eta = params.q, params.p, params.eta
    centered = centered_mod(r, q)
    j = round_scaled(centered, p, q) % p
    m = j * eta_inv % p
    codeword = eta * round_scaled(m, q, p) % q
    dist = abs(centered_mod(r - codeword, q))
    return m, dist


def decode_argmin(params: LweParams, r: int) -> tuple[int, int]:
    """Brute-force nearest-codeword decode; the oracle for the fast path."""
    q, p, eta = params.q, params.p, params.eta
    best = None
    for m in range(p):
        dist = abs(centered_mod(r - eta * round_scaled(m, q, p), q))
        if best is None or dist < best[1]:
            best = (m, dist)
    return best


def combine(params: LweParams, shares: list[LweShare], y) -> tuple[int, ...]:
    """Recover the input bits from t unit-scale partial inversions."""
    if len(shares) != params.t:
        raise WrongCount(f"need exactly {params.t} shares, got {len(shares)}")
    ids = [s.id for s in shares]
    if len(set(ids)) != len(ids):
        raise DuplicateNode(f"duplicate share identities: {ids}")
    for s in shares:
        _check_identity(params, s.id)
        if s.scale != 1:
            raise ScaleMismatch(
                f"share for identity {s.id} carries scale {s.scale}")
        if len(s.delta) != params.w:
            raise LengthMismatch("share width differs from w")
    if len(y) != params.w:
        raise LengthMismatch("image width differs from w")

    q, eta = params.q, params.eta
    cleared = lagrange_cleared(ids, 0, params.n)
    if eta % cleared.scale:
        raise BoundViolation("eta does not clear the interpolation scale")
    mult = eta // cleared.scale
    coeffs = [mult * c for c in cleared.coeffs]
    eta_inv = invmod(eta % params.p, params.p)
    threshold = (eta * q) // (2 * params.p)

    bits = []
    for i in range(params.w):
        acc = eta * y[i]
        for coeff, s in zip(coeffs, shares):
            acc -= coeff * s.delta[i]
        m, dist = _decode_residue(params, acc % q, eta_inv)
        if m >= 1 << params.l:
            raise NotInImage(f"block {i} decoded to {m} >= 2^l")
        if dist > threshold:
            raise NotInImage(f"block {i} residue too far from a codeword")
        bits.extend((m >> k) & 1 for k in range(params.l))
    return tuple(bits)


def combine_to_share(ek: LweIndex, bits, shares: list[LweShare],
                     target: int) -> LweShare:
    """Derive a target identity's partial inversion from a known preimage.

    The image minus the rounded message term is the node-0 share; t-1 real
    shares plus that node interpolate at the target.  The output carries
    the cleared interpolation denominator as its scale.
    """
    params = ek.params
    if len(shares) != params.t - 1:
        raise WrongCount(
            f"need exactly {params.t - 1} shares, got {len(shares)}")
    ids = [s.id for s in shares]
    if len(set(ids)) != len(ids):
        raise DuplicateNode(f"duplicate share identities: {ids}")
    if target == 0:
        raise TargetCollision("target 0 is the synthesized node")
    _check_identity(params, target)
    if target in ids:
        raise TargetCollision(f"target {target} already among shares")
    for s in shares:
        if s.scale != 1:
            raise ScaleMismatch("input shares must be unit scale")

    q, p = params.q, params.p
    image = evaluate(ek, bits)
    zero_delta = [(yv - round_scaled(m, q, p)) % q
                  for yv, m in zip(image.y, block_values(params, bits))]
    cleared = lagrange_cleared([0, *ids], target, params.n)
    if cleared.scale > math.factorial(params.n) ** 2:
        raise BoundViolation("interpolation scale exceeds (n!)^2")
    deltas = [zero_delta, *(s.delta for s in shares)]
    out = []
    for i in range(params.w):
        acc = 0
        for coeff, delta in zip(cleared.coeffs, deltas):
            acc += coeff * delta[i]
        out.append(acc % q)
    return LweShare(target, out, cleared.scale)
