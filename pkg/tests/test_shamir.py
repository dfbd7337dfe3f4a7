"""Threshold secret sharing over a prime field."""

import random
from collections import Counter
from itertools import combinations, product

import pytest

from ttdf.arith import ModInt
from ttdf.errors import (
    BadThreshold,
    DuplicateNode,
    IdentityOutOfRange,
    WrongCount,
    ZeroIdentity,
)
from ttdf.shamir import SharePoint, SharingState, combine, make_sharing, share


def fixture_state():
    # p(x) = 5 + 3x over F_17, n=4, t=2
    return SharingState(ModInt(5, 17), (ModInt(3, 17),), 4, 2)


def test_make_sharing_pinned_randomness(fixed_rng):
    st = make_sharing(ModInt(5, 17), 4, 2, fixed_rng([3]))
    assert st == fixture_state()


def test_zero_polynomial_shares_are_zero():
    st = SharingState(ModInt(0, 17), (ModInt(0, 17),), 4, 2)
    assert all(share(st, i).value.value == 0 for i in range(1, 5))


@pytest.mark.parametrize("n,t", [(4, 1), (3, 4), (17, 2)])
def test_bad_threshold(n, t):
    with pytest.raises(BadThreshold):
        make_sharing(ModInt(5, 17), n, t, random.Random(0))


def test_share_fixture_values():
    st = fixture_state()
    assert share(st, 1) == SharePoint(1, ModInt(8, 17))
    assert share(st, 2) == SharePoint(2, ModInt(11, 17))


def test_share_rejects_identity_zero():
    with pytest.raises(ZeroIdentity):
        share(fixture_state(), 0)


def test_share_rejects_out_of_range_identity():
    with pytest.raises(IdentityOutOfRange):
        share(fixture_state(), 5)


def test_combine_fixture_subsets():
    pts = {i: share(fixture_state(), i) for i in (1, 2, 3)}
    assert combine([pts[1], pts[2]], 2).value == 5
    assert combine([pts[1], pts[3]], 2).value == 5
    assert pts[3].value.value == 14


def test_combine_wrong_count():
    st = fixture_state()
    with pytest.raises(WrongCount):
        combine([share(st, 1)], 2)


def test_combine_duplicate_identity():
    st = fixture_state()
    with pytest.raises(DuplicateNode):
        combine([share(st, 1), share(st, 1)], 2)


def test_exhaustive_reconstruction_small_n():
    rng = random.Random(41)
    modulus = 101
    for n in range(2, 6):
        for t in range(2, n + 1):
            secret = ModInt(rng.randrange(modulus), modulus)
            st = make_sharing(secret, n, t, rng)
            points = [share(st, i) for i in range(1, n + 1)]
            for subset in combinations(points, t):
                assert combine(list(subset), t) == secret


@pytest.mark.parametrize("t,known", [(2, (1,)), (3, (1, 2)), (3, (2, 4))])
def test_partial_views_are_secret_independent(t, known):
    """Any t-1 shares have the same distribution whatever the secret is.

    Enumerating every coefficient vector over F_7 makes this an exact
    multiset comparison rather than a statistical one.
    """
    m = 7

    def view_multiset(secret):
        views = Counter()
        for coeffs in product(range(m), repeat=t - 1):
            st = SharingState(ModInt(secret, m),
                              tuple(ModInt(c, m) for c in coeffs), 5, t)
            views[tuple(share(st, i).value.value for i in known)] += 1
        return views

    assert view_multiset(0) == view_multiset(3)
