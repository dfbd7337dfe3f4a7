"""Timing harness producing one CSV row per (scheme, size, operation).

The group rows run the relation-sampling construction (the 2x3 index),
which is the variant whose key generation stays in the millisecond range
at real security levels; the full bit-matrix index is only exercised at
toy scale by the test suite.  The lattice rows run the published shape
fixtures (d, h, p); q and alpha are derived by the parameter validator,
which lands on larger moduli than the original experiments implied, so
absolute times are indicative only.

Reference timings from the original experiments are carried alongside for
comparison and are never asserted: hardware, group arithmetic, and the
derived moduli all differ.
"""

from __future__ import annotations

import csv
import random
import statistics
import time
from dataclasses import dataclass

from .adapter import LweBackend, TtdrBackend
from .group import group_gen
from .lwe import make_params_explicit
from .rpke import RpkeController, rpke_dec, rpke_enc
from .tpke import tpke_combine, tpke_dec, tpke_enc, tpke_gen, tpke_share

OPS = ("keygen", "share", "encrypt", "partial_dec", "combine",
       "revoke_encrypt", "dec")

# (d, h, p) shape fixtures for the lattice scheme; "toy" is for smoke runs.
LWE_SHAPES = {
    "toy": (16, 208, 17),
    "512": (512, 2200, 2063),
    "768": (768, 3360, 6029),
    "1024": (1024, 4420, 9859),
}

# Published timings in milliseconds, keyed like our CSV rows.  The group
# figures are per security level; the lattice figures are per dimension.
REFERENCE_MS = {
    ("ddh", "128"): {"keygen": 2.184, "encrypt": 0.263,
                     "partial_dec": 0.145, "combine": 0.309,
                     "revoke_encrypt": 0.390, "dec": 0.467},
    ("ddh", "256"): {"keygen": 9.499, "encrypt": 0.517,
                     "partial_dec": 0.312, "combine": 0.566,
                     "revoke_encrypt": 0.839, "dec": 0.770},
    ("ddh", "512"): {"keygen": 68.08, "encrypt": 1.311,
                     "partial_dec": 0.797, "combine": 1.318,
                     "revoke_encrypt": 1.890, "dec": 1.786},
    ("lwe", "512"): {"keygen": 2178.0, "encrypt": 76.0,
                     "partial_dec": 5.0, "combine": 2273.0,
                     "revoke_encrypt": 92.0, "dec": 2146.0},
    ("lwe", "768"): {"keygen": 4451.0, "encrypt": 167.0,
                     "partial_dec": 12.0, "combine": 8949.0,
                     "revoke_encrypt": 209.0, "dec": 9032.0},
    ("lwe", "1024"): {"keygen": 7724.0, "encrypt": 293.0,
                      "partial_dec": 21.0, "combine": 17554.0,
                      "revoke_encrypt": 382.0, "dec": 17962.0},
}

CSV_COLUMNS = ("scheme", "level_or_d", "op", "mean_ms", "stddev_ms", "trials")


@dataclass(frozen=True)
class BenchRow:
    scheme: str
    level_or_d: str
    op: str
    mean_ms: float
    stddev_ms: float
    trials: int


def build_iface(scheme: str, level: str, n: int, t: int):
    if scheme == "ddh":
        return TtdrBackend(group_gen(level), n, t)
    if scheme == "lwe":
        d, h, p = LWE_SHAPES[level]
        params = make_params_explicit(d, h, p, n, t)
        # The asymptotic lossiness bound is vacuous at these concrete
        # sizes; claim half the input entropy so the extractor has work.
        # The toy shape is too short for that (104 bits), so it borrows
        # the profile used by the command line tool.
        residual = 176 if level == "toy" else h // 2
        return LweBackend(params, residual)
    raise ValueError(f"unknown bench scheme {scheme!r}")


def _time(fn, trials: int) -> tuple[float, float]:
    samples = []
    for _ in range(trials):
        start = time.perf_counter()
        fn()
        samples.append((time.perf_counter() - start) * 1e3)
    mean = statistics.fmean(samples)
    stddev = statistics.stdev(samples) if len(samples) > 1 else 0.0
    return mean, stddev


def bench_suite(scheme: str, level: str, n: int = 4, t: int = 3,
                r: int = 2, trials: int = 5, rng=None) -> list[BenchRow]:
    """Time all seven operations at one (scheme, size) point."""
    rng = rng if rng is not None else random.Random(0x7E57)
    iface = build_iface(scheme, level, n, t)
    rows = []

    def emit(op, fn, reps=trials):
        mean, stddev = _time(fn, reps)
        rows.append(BenchRow(scheme, level, op, mean, stddev, reps))

    emit("keygen", lambda: tpke_gen(iface, rng))
    pk, msk = tpke_gen(iface, rng)
    emit("share", lambda: tpke_share(msk, 1))
    members = [tpke_share(msk, i) for i in range(1, n + 1)]

    message = tuple(rng.randrange(2) for _ in range(pk.message_bits))
    emit("encrypt", lambda: tpke_enc(pk, message, rng))
    ct = tpke_enc(pk, message, rng)
    emit("partial_dec", lambda: tpke_dec(members[0], ct, rng))
    dec_shares = [tpke_dec(members[i], ct, rng) for i in range(t)]
    emit("combine", lambda: tpke_combine(pk, dec_shares, ct))

    # Revocation: with r = t-1 the published list needs no dummy padding;
    # with smaller r the reserved identities would fill in, which costs
    # the same share computation, so timing r = t-1 covers the worst case.
    gc = RpkeController(msk, iface.dummy_ids())
    revoked = [tpke_share(msk, n - i) for i in range(r)]
    session = tuple(rng.randrange(2) for _ in range(pk.message_bits))
    emit("revoke_encrypt", lambda: rpke_enc(pk, revoked, session, rng, gc))
    rct = rpke_enc(pk, revoked, session, rng, gc)
    emit("dec", lambda: rpke_dec(pk, members[0], rct, rng))
    return rows


def write_csv(rows, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow((row.scheme, row.level_or_d, row.op,
                             f"{row.mean_ms:.3f}", f"{row.stddev_ms:.3f}",
                             row.trials))


def format_report(rows) -> str:
    lines = []
    for row in rows:
        ref = REFERENCE_MS.get((row.scheme, row.level_or_d), {})
        tail = (f"  (published: {ref[row.op]:.3f} ms)"
                if row.op in ref else "")
        lines.append(
            f"{row.scheme:>4} {row.level_or_d:>5} {row.op:<15}"
            f"{row.mean_ms:>12.3f} ms  +/-{row.stddev_ms:8.3f}{tail}")
    return "\n".join(lines)
