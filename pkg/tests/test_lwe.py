"""Lattice-based threshold trapdoor function.

The small blessed parameter set (d=64, h=40, p=17, n=4, t=3) is frozen
here: q, the block shape, the cleared-coefficient bound and the noise rate
are all pinned so a regression in parameter derivation cannot hide.
"""

import dataclasses
import math
import random
import statistics
from itertools import combinations

import pytest

from ttdf.arith import ModInt, centered_lift, centered_mod, invmod, next_prime
from ttdf.errors import (
    BadThreshold,
    DuplicateNode,
    IdentityOutOfRange,
    InconsistentParams,
    LengthMismatch,
    NotInImage,
    ScaleMismatch,
    TargetCollision,
    WrongCount,
)
from ttdf.lwe import (
    LweMasterTrapdoor,
    LweShare,
    _decode_residue,
    block_values,
    combine,
    combine_to_share,
    decode_argmin,
    derive_share,
    evaluate,
    gauss_sample,
    index_from_matrices,
    invert_share,
    make_params,
    make_params_explicit,
    round_scaled,
    sample_injective,
    sample_lossy,
    validate_params,
    worst_cleared_weight,
)
from ttdf.matmod import vecmat_mod


@pytest.fixture(scope="module")
def toy_params():
    return make_params_explicit(64, 40, 17, 4, 3)


class TestParams:
    def test_frozen_small_set(self, toy_params):
        p = toy_params
        assert p.q == 240595919536603
        assert (p.l, p.w) == (4, 10)
        assert p.eta == 24 ** 3 == 13824
        assert p.gamma == 235008
        assert p.g_stat == p.gamma ** 2
        assert p.alpha == 1.0 / (16 * 17 * (40 + p.gamma ** 2))
        validate_params(p)

    def test_worst_cleared_weight_hand_checked(self):
        # n=2, t=2: nodes {0,1}->2 and {1,2}->0 both give 8 * (1 + 2) = 24
        assert worst_cleared_weight(2, 2) == 24

    @pytest.mark.parametrize("d,h,p,l,w", [
        (512, 2200, 2063, 11, 200),
        (1024, 4420, 9859, 13, 340),
    ])
    def test_larger_shapes(self, d, h, p, l, w):
        params = make_params_explicit(d, h, p, 4, 3)
        assert (params.l, params.w) == (l, w)
        assert params.h == params.w * params.l
        assert params.q >= 4 * params.p * (params.h + params.gamma)
        assert params.q * params.alpha >= 2 * math.sqrt(d)

    def test_recipe(self):
        params = make_params(16, 1.1, 2.0, 1.2, 4, 3)
        # h0 = ceil(16**1.2) = 28, p = next_prime(40) = 41, l = 5
        assert params.p == 41
        assert (params.l, params.h, params.w) == (5, 25, 5)

    def test_recipe_rejects_bad_exponents(self):
        with pytest.raises(InconsistentParams):
            make_params(16, 1.1, 2.0, 1.0, 4, 3)
        with pytest.raises(InconsistentParams):
            make_params(16, -0.1, 2.0, 1.2, 4, 3)

    @pytest.mark.parametrize("n,t", [(4, 1), (3, 4)])
    def test_bad_threshold(self, n, t):
        with pytest.raises(BadThreshold):
            make_params_explicit(64, 40, 17, n, t)

    def test_p_must_exceed_n(self):
        with pytest.raises(InconsistentParams):
            make_params_explicit(64, 40, 17, 17, 3)

    def test_block_width_must_divide_h(self):
        with pytest.raises(InconsistentParams):
            make_params_explicit(64, 42, 17, 4, 3)

    @pytest.mark.parametrize("field,value", [
        ("h", 44),
        ("l", 5),
        ("q", 240595919536604),
        ("p", 15),
        ("alpha", 1.0),
        ("g_stat", 1),
        ("gamma", 10 ** 12),
    ])
    def test_validator_catches_tampering(self, toy_params, field, value):
        bad = dataclasses.replace(toy_params, **{field: value})
        with pytest.raises(InconsistentParams):
            validate_params(bad)


class TestGauss:
    def test_returns_residue_mod_q(self):
        q = next_prime(1 << 40)
        v = gauss_sample(1e-12, q, random.Random(0))
        assert isinstance(v, ModInt) and v.modulus == q

    def test_degenerate_width_concentrates_at_zero(self):
        # std is about 0.44 in units of q, so draws stay within one step
        q = next_prime(1 << 40)
        rng = random.Random(1)
        draws = [centered_lift(gauss_sample(1e-12, q, rng))
                 for _ in range(1000)]
        assert all(abs(v) <= 1 for v in draws)
        assert any(v == 0 for v in draws)

    def test_moments_match_the_target_distribution(self):
        q = next_prime(1 << 40)
        alpha = 2e-10
        sigma = q * alpha / math.sqrt(2 * math.pi)
        rng = random.Random(0xFEED)
        draws = [centered_lift(gauss_sample(alpha, q, rng))
                 for _ in range(100_000)]
        assert 0.9 < statistics.pstdev(draws) / sigma < 1.1
        assert abs(statistics.fmean(draws)) < 4 * sigma / math.sqrt(len(draws))

    def test_pinned_rng_gives_zero(self, fixed_rng):
        q = next_prime(1 << 40)
        assert gauss_sample(1e-12, q, fixed_rng([])) == ModInt(0, q)


class TestRoundScaled:
    def test_half_rounds_up(self):
        assert round_scaled(1, 1, 2) == 1
        assert round_scaled(-1, 1, 2) == 0
        assert round_scaled(3, 1, 2) == 2
        assert round_scaled(7, 3, 2) == 11

    def test_against_fraction_reference(self):
        from fractions import Fraction
        rng = random.Random(3)
        for _ in range(500):
            v = rng.randrange(-10 ** 6, 10 ** 6)
            num = rng.randrange(1, 1000)
            den = rng.randrange(1, 1000)
            exact = Fraction(v * num, den)
            expect = math.floor(exact + Fraction(1, 2))
            assert round_scaled(v, num, den) == expect


def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def rand_mat(rng, rows, cols, q):
    return [[rng.randrange(q) for _ in range(cols)] for _ in range(rows)]


class TestIndexConstruction:
    def test_block_structure_visible_with_zero_trapdoor(self, toy_params):
        pr = toy_params
        rng = random.Random(4)
        a = rand_mat(rng, pr.h, pr.d, pr.q)
        ek = index_from_matrices(pr, a, zeros(pr.d, pr.w),
                                 zeros(pr.h, pr.w), True)
        for row in range(pr.h):
            for block in range(pr.w):
                if block == row // pr.l:
                    expect = round_scaled(1 << (row % pr.l), pr.q, pr.p)
                else:
                    expect = 0
                assert ek.c[row][block] == expect

    def test_modes_differ_by_the_block_diagonal(self, toy_params):
        pr = toy_params
        rng = random.Random(5)
        a = rand_mat(rng, pr.h, pr.d, pr.q)
        z = rand_mat(rng, pr.d, pr.w, pr.q)
        e = [[rng.randrange(3) for _ in range(pr.w)] for _ in range(pr.h)]
        inj = index_from_matrices(pr, a, z, e, True)
        lossy = index_from_matrices(pr, a, z, e, False)
        assert inj.a == lossy.a
        for row in range(pr.h):
            for block in range(pr.w):
                diff = (inj.c[row][block] - lossy.c[row][block]) % pr.q
                if block == row // pr.l:
                    assert diff == round_scaled(1 << (row % pr.l), pr.q, pr.p)
                else:
                    assert diff == 0


@pytest.fixture(scope="module")
def toy_instance(toy_params):
    return sample_injective(toy_params, random.Random(0x1E))


class TestEvaluate:
    def test_zero_input(self, toy_instance):
        ek, _ = toy_instance
        img = evaluate(ek, (0,) * 40)
        assert img.a == [0] * 64 and img.y == [0] * 10

    def test_unit_vector_selects_one_row(self, toy_instance):
        ek, _ = toy_instance
        bits = [0] * 40
        bits[7] = 1
        img = evaluate(ek, bits)
        assert img.a == ek.a[7] and img.y == ek.c[7]

    def test_disjoint_supports_add(self, toy_instance):
        ek, _ = toy_instance
        q = ek.params.q
        rng = random.Random(6)
        lo = [rng.randrange(2) for _ in range(20)] + [0] * 20
        hi = [0] * 20 + [rng.randrange(2) for _ in range(20)]
        both = [x | y for x, y in zip(lo, hi)]
        img_lo, img_hi, img = (evaluate(ek, v) for v in (lo, hi, both))
        assert img.a == [(x + y) % q for x, y in zip(img_lo.a, img_hi.a)]
        assert img.y == [(x + y) % q for x, y in zip(img_lo.y, img_hi.y)]

    def test_wrong_length(self, toy_instance):
        ek, _ = toy_instance
        with pytest.raises(LengthMismatch):
            evaluate(ek, (1,) * 39)


class TestDeriveShare:
    def test_t_shares_interpolate_back_to_z(self, toy_instance):
        from ttdf.arith import lagrange_at
        _, mtd = toy_instance
        q = mtd.params.q
        tds = [derive_share(mtd, v) for v in (1, 2, 3)]
        lag = lagrange_at([1, 2, 3], 0, q)
        for i in range(mtd.params.d):
            for j in range(mtd.params.w):
                acc = sum(c.value * td.t_mat[i][j]
                          for c, td in zip(lag, tds)) % q
                assert acc == mtd.z[i][j]

    def test_zero_coefficients_reproduce_z(self, toy_params):
        pr = toy_params
        rng = random.Random(8)
        z = rand_mat(rng, pr.d, pr.w, pr.q)
        mtd = LweMasterTrapdoor(pr, z, (zeros(pr.d, pr.w), zeros(pr.d, pr.w)))
        for v in (1, 4):
            assert derive_share(mtd, v).t_mat == z

    @pytest.mark.parametrize("identity", [0, 5, -1])
    def test_identity_out_of_range(self, toy_instance, identity):
        _, mtd = toy_instance
        with pytest.raises(IdentityOutOfRange):
            derive_share(mtd, identity)


class TestInvertShare:
    def test_zero_vector_leaves_pure_noise(self, toy_instance):
        _, mtd = toy_instance
        pr = mtd.params
        td = derive_share(mtd, 2)
        share = invert_share(td, [0] * pr.d, random.Random(9))
        # sigma = q*alpha/sqrt(2 pi) is about 6.4 at these parameters
        assert all(abs(centered_mod(v, pr.q)) < 1000 for v in share.delta)
        assert share.id == 2 and share.scale == 1

    def test_noiseless_share_is_the_matrix_product(self, toy_instance,
                                                   fixed_rng):
        _, mtd = toy_instance
        pr = mtd.params
        rng = random.Random(10)
        a = [rng.randrange(pr.q) for _ in range(pr.d)]
        td = derive_share(mtd, 3)
        share = invert_share(td, a, fixed_rng([]))
        assert share.delta == vecmat_mod(a, td.t_mat, pr.q)

    def test_wrong_vector_length(self, toy_instance):
        _, mtd = toy_instance
        td = derive_share(mtd, 1)
        with pytest.raises(LengthMismatch):
            invert_share(td, [0] * 63, random.Random(0))


class TestDecode:
    def test_eta_inverse_fixture(self, toy_params):
        pr = toy_params
        assert pr.eta % pr.p == 3
        assert invmod(pr.eta % pr.p, pr.p) == 6

    def test_exact_codewords_decode_cleanly(self, toy_params):
        pr = toy_params
        eta_inv = invmod(pr.eta % pr.p, pr.p)
        for m in range(pr.p):
            r = pr.eta * round_scaled(m, pr.q, pr.p) % pr.q
            assert _decode_residue(pr, r, eta_inv) == (m, 0)

    def test_fast_path_matches_argmin_oracle(self, toy_params):
        pr = toy_params
        eta_inv = invmod(pr.eta % pr.p, pr.p)
        rng = random.Random(0xDEC0)
        for _ in range(2000):
            r = rng.randrange(pr.q)
            assert _decode_residue(pr, r, eta_inv) == decode_argmin(pr, r)


class TestCombine:
    def full_setup(self, toy_instance):
        ek, mtd = toy_instance
        tds = {v: derive_share(mtd, v) for v in range(1, 5)}
        return ek, mtd, tds

    def test_round_trip_over_subsets(self, toy_instance):
        ek, _, tds = self.full_setup(toy_instance)
        rng = random.Random(0xAB)
        for _ in range(10):
            bits = tuple(rng.randrange(2) for _ in range(40))
            img = evaluate(ek, bits)
            for subset in combinations(range(1, 5), 3):
                shares = [invert_share(tds[v], img.a, rng) for v in subset]
                assert combine(ek.params, shares, img.y) == bits

    def test_zero_input_round_trip(self, toy_instance):
        ek, _, tds = self.full_setup(toy_instance)
        img = evaluate(ek, (0,) * 40)
        shares = [invert_share(tds[v], img.a, random.Random(11))
                  for v in (1, 2, 4)]
        assert combine(ek.params, shares, img.y) == (0,) * 40

    def test_out_of_range_block_rejected(self, toy_instance):
        ek, _, tds = self.full_setup(toy_instance)
        img = evaluate(ek, (0,) * 40)
        shares = [invert_share(tds[v], img.a, random.Random(12))
                  for v in (1, 2, 3)]
        # push block 0 from value 0 to 16, which no 4-bit block can hold
        bad_y = list(img.y)
        bad_y[0] = (bad_y[0] + round_scaled(16, ek.params.q, ek.params.p)) \
            % ek.params.q
        with pytest.raises(NotInImage):
            combine(ek.params, shares, bad_y)

    def test_scaled_share_rejected(self, toy_instance):
        ek, _, tds = self.full_setup(toy_instance)
        img = evaluate(ek, (1,) * 40)
        shares = [invert_share(tds[v], img.a, random.Random(13))
                  for v in (1, 2, 3)]
        shares[1] = LweShare(shares[1].id, shares[1].delta, 2)
        with pytest.raises(ScaleMismatch):
            combine(ek.params, shares, img.y)

    def test_wrong_count_and_duplicates(self, toy_instance):
        ek, _, tds = self.full_setup(toy_instance)
        img = evaluate(ek, (1,) * 40)
        rng = random.Random(14)
        shares = [invert_share(tds[v], img.a, rng) for v in (1, 2, 3)]
        with pytest.raises(WrongCount):
            combine(ek.params, shares[:2], img.y)
        with pytest.raises(DuplicateNode):
            combine(ek.params, [shares[0], shares[0], shares[2]], img.y)
        alien = LweShare(9, shares[0].delta, 1)
        with pytest.raises(IdentityOutOfRange):
            combine(ek.params, [alien, shares[1], shares[2]], img.y)

    def test_width_checks(self, toy_instance):
        ek, _, tds = self.full_setup(toy_instance)
        img = evaluate(ek, (1,) * 40)
        rng = random.Random(15)
        shares = [invert_share(tds[v], img.a, rng) for v in (1, 2, 3)]
        with pytest.raises(LengthMismatch):
            combine(ek.params, shares, img.y[:-1])
        short = LweShare(4, shares[0].delta[:-1], 1)
        with pytest.raises(LengthMismatch):
            combine(ek.params, [short, shares[1], shares[2]], img.y)


def one_bit_per_block_input(params, rng):
    """Inputs whose blocks hold at most one set bit avoid rounding slack."""
    bits = [0] * params.h
    for block in range(params.w):
        k = rng.randrange(params.l + 1)
        if k < params.l:
            bits[block * params.l + k] = 1
    return tuple(bits)


@pytest.fixture(scope="module")
def noiseless_instance(toy_params):
    """Index built with E = 0 so share arithmetic is exact."""
    pr = toy_params
    rng = random.Random(0xE0)
    a = rand_mat(rng, pr.h, pr.d, pr.q)
    z = rand_mat(rng, pr.d, pr.w, pr.q)
    ek = index_from_matrices(pr, a, z, zeros(pr.h, pr.w), True)
    dmats = tuple(rand_mat(rng, pr.d, pr.w, pr.q) for _ in range(pr.t - 1))
    return ek, LweMasterTrapdoor(pr, z, dmats)


class TestCombineToShare:
    def test_matches_direct_share_up_to_scale(self, noiseless_instance,
                                              fixed_rng):
        ek, mtd = noiseless_instance
        pr = ek.params
        rng = random.Random(0x51)
        for ids, target in (([1, 2], 3), ([1, 3], 2), ([2, 4], 1)):
            bits = one_bit_per_block_input(pr, rng)
            img = evaluate(ek, bits)
            helpers = [invert_share(derive_share(mtd, v), img.a, fixed_rng([]))
                       for v in ids]
            out = combine_to_share(ek, bits, helpers, target)
            direct = invert_share(derive_share(mtd, target), img.a,
                                  fixed_rng([]))
            assert out.id == target
            assert math.factorial(pr.n) ** 2 % out.scale == 0
            assert out.delta == [out.scale * v % pr.q for v in direct.delta]

    def test_scale_fixture(self, noiseless_instance, fixed_rng):
        # nodes {0,1,2} -> 3 interpolate integrally; {0,1,3} -> 2 do not
        ek, mtd = noiseless_instance
        bits = (0,) * 40
        img = evaluate(ek, bits)
        mk = lambda v: invert_share(derive_share(mtd, v), img.a, fixed_rng([]))
        assert combine_to_share(ek, bits, [mk(1), mk(2)], 3).scale == 1
        assert combine_to_share(ek, bits, [mk(1), mk(3)], 2).scale == 3

    def test_linear_form_recomputation(self, toy_instance):
        from ttdf.arith import lagrange_cleared
        ek, mtd = toy_instance
        pr = ek.params
        rng = random.Random(0x52)
        bits = tuple(rng.randrange(2) for _ in range(40))
        img = evaluate(ek, bits)
        ids = [2, 3]
        target = 4
        helpers = [invert_share(derive_share(mtd, v), img.a, rng) for v in ids]
        out = combine_to_share(ek, bits, helpers, target)
        zero_delta = [(yv - round_scaled(m, pr.q, pr.p)) % pr.q
                      for yv, m in zip(img.y, block_values(pr, bits))]
        cleared = lagrange_cleared([0, *ids], target, pr.n)
        assert out.scale == cleared.scale
        deltas = [zero_delta, *(s.delta for s in helpers)]
        for i in range(pr.w):
            expect = sum(c * d[i] for c, d in zip(cleared.coeffs, deltas))
            assert out.delta[i] == expect % pr.q

    def test_unit_scale_output_feeds_combine(self, noiseless_instance,
                                             fixed_rng):
        ek, mtd = noiseless_instance
        pr = ek.params
        bits = one_bit_per_block_input(pr, random.Random(0x53))
        img = evaluate(ek, bits)
        mk = lambda v: invert_share(derive_share(mtd, v), img.a, fixed_rng([]))
        out = combine_to_share(ek, bits, [mk(1), mk(2)], 3)
        assert out.scale == 1
        assert combine(pr, [mk(1), mk(2), out], img.y) == bits

    def test_scaled_output_rejected_by_combine(self, noiseless_instance,
                                               fixed_rng):
        ek, mtd = noiseless_instance
        bits = (0,) * 40
        img = evaluate(ek, bits)
        mk = lambda v: invert_share(derive_share(mtd, v), img.a, fixed_rng([]))
        out = combine_to_share(ek, bits, [mk(1), mk(3)], 2)
        assert out.scale == 3
        with pytest.raises(ScaleMismatch):
            combine(ek.params, [mk(1), mk(3), out], img.y)

    def test_target_collisions(self, noiseless_instance, fixed_rng):
        ek, mtd = noiseless_instance
        bits = (0,) * 40
        img = evaluate(ek, bits)
        mk = lambda v: invert_share(derive_share(mtd, v), img.a, fixed_rng([]))
        helpers = [mk(1), mk(2)]
        with pytest.raises(TargetCollision):
            combine_to_share(ek, bits, helpers, 2)
        with pytest.raises(TargetCollision):
            combine_to_share(ek, bits, helpers, 0)
        with pytest.raises(IdentityOutOfRange):
            combine_to_share(ek, bits, helpers, 5)

    def test_scaled_inputs_rejected(self, noiseless_instance, fixed_rng):
        ek, mtd = noiseless_instance
        bits = (0,) * 40
        img = evaluate(ek, bits)
        mk = lambda v: invert_share(derive_share(mtd, v), img.a, fixed_rng([]))
        a, b = mk(1), mk(2)
        scaled = LweShare(a.id, a.delta, 2)
        with pytest.raises(ScaleMismatch):
            combine_to_share(ek, bits, [scaled, b], 3)

    def test_wrong_helper_count(self, noiseless_instance, fixed_rng):
        ek, mtd = noiseless_instance
        bits = (0,) * 40
        img = evaluate(ek, bits)
        mk = lambda v: invert_share(derive_share(mtd, v), img.a, fixed_rng([]))
        with pytest.raises(WrongCount):
            combine_to_share(ek, bits, [mk(1), mk(2), mk(3)], 4)
        with pytest.raises(DuplicateNode):
            combine_to_share(ek, bits, [mk(1), mk(1)], 4)


def test_lossy_mode_collapses_block_structure(toy_params):
    # with Z = 0 and E = 0 the lossy index is all zeros in C, so every
    # input maps to y = 0: only x*A survives
    pr = toy_params
    rng = random.Random(0x54)
    a = rand_mat(rng, pr.h, pr.d, pr.q)
    ek = index_from_matrices(pr, a, zeros(pr.d, pr.w),
                             zeros(pr.h, pr.w), False)
    for _ in range(5):
        bits = tuple(rng.randrange(2) for _ in range(pr.h))
        assert evaluate(ek, bits).y == [0] * pr.w


def test_block_values_little_endian(toy_params):
    bits = [1, 0, 0, 1] + [0, 1, 1, 0] + [0] * 32
    vals = block_values(toy_params, bits)
    assert vals[0] == 9 and vals[1] == 6
    assert vals[2:] == [0] * 8


def test_sample_lossy_round_trip_loses_information(toy_params):
    # lossy images carry no block diagonal, so combining decodes junk or
    # raises; it must never reproduce a nonzero input reliably
    ek, mtd = sample_lossy(toy_params, random.Random(0x55))
    rng = random.Random(0x56)
    bits = tuple([1] + [0] * 39)
    img = evaluate(ek, bits)
    shares = [invert_share(derive_share(mtd, v), img.a, rng) for v in (1, 2, 3)]
    try:
        out = combine(ek.params, shares, img.y)
    except NotInImage:
        return
    assert out != bits
