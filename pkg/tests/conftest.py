"""Shared fixtures: the toy group and small pregenerated key material.

Key generation for the encryption layers is the slow part of the suite,
so anything reusable is module- or session-scoped and seeded for
reproducibility.
"""

import random

import pytest

from ttdf.group import group_gen


@pytest.fixture(scope="session")
def toy_group():
    return group_gen("toy")


@pytest.fixture()
def rng():
    return random.Random(0xC0FFEE)


class FixedRng:
    """Deterministic stand-in feeding preset values to randrange/gauss.

    randrange pops from ``values``; getrandbits pops from ``bit_values``
    if given, else returns 0; gauss always returns 0.0.
    """

    def __init__(self, values=(), bit_values=None):
        self.values = list(values)
        self.bit_values = list(bit_values) if bit_values is not None else None

    def randrange(self, *args):
        return self.values.pop(0)

    def getrandbits(self, _n):
        if self.bit_values is not None:
            return self.bit_values.pop(0)
        return 0

    def gauss(self, _mu, _sigma):
        return 0.0


@pytest.fixture()
def fixed_rng():
    return FixedRng
