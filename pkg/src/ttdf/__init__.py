"""Threshold trapdoor functions with encryption layers on top.

Submodules, roughly bottom-up:

* arith, shamir: modular arithmetic, Lagrange interpolation (field and
  denominator-cleared integer forms), secret sharing
* group, hardcore, matmod, encoding: prime-order subgroups, pairwise
  independent hashing, modular matrix products, byte encodings
* ddh, lwe, ttdr: the three trapdoor constructions
* adapter: the uniform backend interface
* tpke, rpke: threshold and revocation encryption
* serial, net, cli, bench: files, sockets, operator tooling, timings
"""

from .adapter import (
    DdhBackend,
    LweBackend,
    TtdfInterface,
    TtdrBackend,
    from_tltdf,
    from_ttdr,
)
from .errors import TtdfError
from .rpke import RpkeController, rpke_dec, rpke_enc, rpke_gen, rpke_reg
from .tpke import (
    tpke_combine,
    tpke_dec,
    tpke_enc,
    tpke_gen,
    tpke_share,
)

__all__ = [
    "DdhBackend",
    "LweBackend",
    "RpkeController",
    "TtdfError",
    "TtdfInterface",
    "TtdrBackend",
    "from_tltdf",
    "from_ttdr",
    "rpke_dec",
    "rpke_enc",
    "rpke_gen",
    "rpke_reg",
    "tpke_combine",
    "tpke_dec",
    "tpke_enc",
    "tpke_gen",
    "tpke_share",
]

__version__ = "0.1.0"
