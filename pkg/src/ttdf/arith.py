"""Prime-field arithmetic and Lagrange interpolation.

Two flavors of Lagrange coefficients live here.  ``lagrange_at`` is the usual
field version: coefficients live mod an odd prime and use field inverses.
``lagrange_cleared`` never divides; it returns exact integer coefficients
together with the common denominator ("scale") that was cleared out.  The
cleared flavor is what the lattice scheme needs, because dividing by a
Lagrange denominator mod q would amplify the decryption noise.

For node sets inside [1..n] interpolated at 0, the cleared coefficients obey
a hard bound: (n!)^2 * L_v is an integer with |(n!)^2 * L_v| <= (n!)^3.
``lagrange_cleared`` asserts this whenever it applies and raises
BoundViolation on failure, which would indicate a bug rather than bad input.

All integers are arbitrary precision.  Probable-prime checks run at least 64
Miller-Rabin rounds and are cached per modulus; gmpy2 accelerates them when
installed, with a pure-Python fallback.
"""

from __future__ import annotations

import functools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BoundViolation,
    DuplicateNode,
    ModulusMismatch,
)

try:
    import gmpy2 as _gmpy2
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _gmpy2 = None

_SYS_RAND = random.SystemRandom()

_SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                 59, 61, 67, 71, 73, 79, 83, 89, 97]


def powmod(base: int, exp: int, modulus: int) -> int:
    """Modular exponentiation, delegated to gmpy2 when available."""
    if _gmpy2 is not None:
        return int(_gmpy2.powmod(base, exp, modulus))
    return pow(base, exp, modulus)


def invmod(value: int, modulus: int) -> int:
    if _gmpy2 is not None:
        return int(_gmpy2.invert(value, modulus))
    return pow(value, -1, modulus)


def _miller_rabin(n: int, rounds: int) -> bool:
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for _ in range(rounds):
        a = _SYS_RAND.randrange(2, n - 1)
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@functools.lru_cache(maxsize=4096)
def is_probable_prime(n: int, rounds: int = 64) -> bool:
    """Miller-Rabin probable-prime test with at least 64 rounds by default."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if _gmpy2 is not None:
        return bool(_gmpy2.is_prime(n, max(rounds, 25)))
    return _miller_rabin(n, rounds)


def next_prime(n: int) -> int:
    """Smallest probable prime >= n."""
    if n <= 2:
        return 2
    cand = n | 1
    while not is_probable_prime(cand):
        cand += 2
    return cand


@dataclass(frozen=True, slots=True)
class ModInt:
    """Residue with an explicit odd prime modulus.

    The constructor reduces the value into [0, modulus) and verifies the
    modulus is an odd probable prime (cached per modulus, 64 MR rounds).
    """

    value: int
    modulus: int

    def __post_init__(self):
        m = self.modulus
        if m <= 2 or not is_probable_prime(m):
            raise ModulusMismatch(f"modulus {m} is not an odd prime > 2")
        object.__setattr__(self, "value", self.value % m)

    def _check(self, other: "ModInt") -> None:
        if self.modulus != other.modulus:
            raise ModulusMismatch(
                f"mixed moduli {self.modulus} and {other.modulus}")

    def __add__(self, other: "ModInt") -> "ModInt":
        self._check(other)
        return ModInt(self.value + other.value, self.modulus)

    def __sub__(self, other: "ModInt") -> "ModInt":
        self._check(other)
        return ModInt(self.value - other.value, self.modulus)

    def __mul__(self, other: "ModInt") -> "ModInt":
        self._check(other)
        return ModInt(self.value * other.value, self.modulus)

    def __neg__(self) -> "ModInt":
        return ModInt(-self.value, self.modulus)

    def inverse(self) -> "ModInt":
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse")
        return ModInt(invmod(self.value, self.modulus), self.modulus)

    def scaled(self, k: int) -> "ModInt":
        """Multiply by a plain integer."""
        return ModInt(self.value * k, self.modulus)


def centered_lift(v: ModInt) -> int:
    """Representative of v in (-q/2, q/2]."""
    q = v.modulus
    return v.value if v.value <= q // 2 else v.value - q


def centered_mod(value: int, q: int) -> int:
    """Centered representative of an arbitrary integer mod q."""
    r = value % q
    return r if r <= q // 2 else r - q


def poly_eval(coeffs: list[ModInt], x: ModInt) -> ModInt:
    """Evaluate sum(coeffs[i] * x**i) by Horner's rule.

    coeffs is in ascending degree order and must be non-empty.
    """
    if not coeffs:
        raise ValueError("empty coefficient list")
    for c in coeffs:
        if c.modulus != x.modulus:
            raise ModulusMismatch("coefficient modulus differs from point")
    acc = ModInt(0, x.modulus)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def lagrange_at(nodes: list[int], target: int, modulus: int) -> list[ModInt]:
    """Field Lagrange coefficients for interpolating at target from nodes.

    Returns one coefficient per node, in node order.  Nodes that collide
    modulo the modulus raise DuplicateNode.
    """
    reduced = [n % modulus for n in nodes]
    if len(set(reduced)) != len(reduced):
        raise DuplicateNode(f"nodes collide mod {modulus}: {nodes}")
    out = []
    for v in nodes:
        num = 1
        den = 1
        for u in nodes:
            if u == v:
                continue
            num = num * (target - u) % modulus
            den = den * (v - u) % modulus
        out.append(ModInt(num * invmod(den, modulus), modulus))
    return out


@dataclass(frozen=True)
class ScaledLagrange:
    """Denominator-cleared Lagrange coefficients.

    coeffs[v] / scale is the exact rational coefficient for nodes[v]; scale
    is the lcm of the individual denominators, so sum(coeffs) == scale.
    """

    coeffs: tuple[int, ...]
    scale: int
    nodes: tuple[int, ...]
    target: int


def lagrange_cleared(nodes: list[int], target: int, n: int) -> ScaledLagrange:
    """Exact integer Lagrange coefficients with the denominator cleared.

    nodes must be distinct integers in [0..n] and target an integer in
    [0..n].  When nodes lie in [1..n] and target is 0, the classical bound
    is asserted: (n!)^2 times each rational coefficient is an integer of
    magnitude at most (n!)^3.
    """
    if len(set(nodes)) != len(nodes):
        raise DuplicateNode(f"duplicate nodes: {nodes}")
    if not nodes:
        raise ValueError("empty node list")
    for v in nodes:
        if not 0 <= v <= n:
            raise ValueError(f"node {v} outside [0..{n}]")
    if not 0 <= target <= n:
        raise ValueError(f"target {target} outside [0..{n}]")

    fracs = []
    for v in nodes:
        f = Fraction(1)
        for u in nodes:
            if u != v:
                f *= Fraction(target - u, v - u)
        fracs.append(f)

    scale = 1
    for f in fracs:
        scale = scale * f.denominator // math.gcd(scale, f.denominator)
    coeffs = tuple(int(f * scale) for f in fracs)

    if sum(coeffs) != scale:
        raise BoundViolation("cleared coefficients do not sum to the scale")

    if target == 0 and all(1 <= v <= n for v in nodes):
        nf2 = math.factorial(n) ** 2
        nf3 = nf2 * math.factorial(n)
        for f in fracs:
            scaled = f * nf2
            if scaled.denominator != 1:
                raise BoundViolation(
                    f"(n!)^2 * coefficient not integral for nodes {nodes}")
            if abs(scaled.numerator) > nf3:
                raise BoundViolation(
                    f"|(n!)^2 * coefficient| exceeds (n!)^3 for nodes {nodes}")

    return ScaledLagrange(coeffs, scale, tuple(nodes), target)
