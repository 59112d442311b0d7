import random

import pytest
from hypothesis import given, strategies as st

from toricsurf.fan import (
    BadConsecutiveDeterminant,
    KING_RAYS,
    MixedFans,
    NonPrimitiveRay,
    TooFewRays,
    UnknownName,
    blowup,
    build_named,
    canonical_divisor,
    det2,
    fan_from_json,
    fan_to_json,
    intersection,
    intersection_data,
    normalize,
    pairing,
    parse_coeffs,
    principal_divisor,
    validate_fan,
)

from conftest import random_blowup_chain


class TestValidation:
    def test_king_rays_valid(self):
        fan = validate_fan([(1, -1), (2, -1), (3, -1), (1, 0), (0, 1), (-1, 2), (0, -1)])
        assert fan.rays == KING_RAYS

    def test_p2_valid(self):
        assert validate_fan([(1, 0), (0, 1), (-1, -1)]).n == 3

    def test_reordered_rays_rejected(self):
        with pytest.raises(BadConsecutiveDeterminant):
            validate_fan([(0, 1), (1, 0), (-1, 2), (0, -1)])

    def test_too_few_rays(self):
        with pytest.raises(TooFewRays):
            validate_fan([(1, 0), (0, 1)])

    def test_non_primitive_ray(self):
        with pytest.raises(NonPrimitiveRay):
            validate_fan([(2, 0), (0, 1), (-1, -1)])

    def test_all_consecutive_determinants_plus_one(self, king):
        n = king.n
        assert all(det2(king.rays[i], king.rays[(i + 1) % n]) == 1 for i in range(n))

    def test_clockwise_rejected(self):
        with pytest.raises(BadConsecutiveDeterminant):
            validate_fan([(-1, -1), (0, 1), (1, 0)])


class TestBuilders:
    def test_hirzebruch_2(self):
        assert build_named("hirzebruch", 2).rays == ((1, 0), (0, 1), (-1, 2), (0, -1))

    def test_p1p1(self):
        assert build_named("p1p1").rays == ((1, 0), (0, 1), (-1, 0), (0, -1))

    def test_king_alias(self):
        assert build_named("king").rays == build_named("king-counterexample").rays == KING_RAYS

    def test_unknown_name(self):
        with pytest.raises(UnknownName):
            build_named("dp3")

    def test_negative_hirzebruch_parameter(self):
        with pytest.raises(UnknownName):
            build_named("hirzebruch", -1)


class TestBlowup:
    def test_blowup_p2(self, p2):
        assert blowup(p2, 1).rays == ((1, 0), (1, 1), (0, 1), (-1, -1))

    def test_blowup_increments_ray_count(self, king):
        for i in range(1, king.n + 1):
            assert blowup(king, i).n == king.n + 1

    def test_triple_blowup_of_f2_gives_king(self, f2):
        # (0,-1)+(1,0) = (1,-1); (1,-1)+(1,0) = (2,-1); (2,-1)+(1,0) = (3,-1)
        fan = blowup(blowup(blowup(f2, 4), 5), 6)
        rotations = [fan.rays[i:] + fan.rays[:i] for i in range(fan.n)]
        assert KING_RAYS in rotations

    def test_cyclic_edge_index(self, p2):
        assert blowup(p2, 4).rays == blowup(p2, 1).rays


class TestPairing:
    def test_examples(self):
        assert pairing((-1, 2), (1, 0)) == -1
        assert pairing((0, -1), (0, 0)) == 0
        assert pairing((3, -1), (-3, -1)) == -8


class TestNormalize:
    def test_basis_divisor_e6_on_king(self, king):
        D = king.divisor([0, 0, 0, 0, 0, 1, 0])
        assert normalize(D).coeffs == (1, 2, 3, 1, 0, 0, 0)

    def test_idempotent(self, king):
        D = king.divisor([3, -1, 4, 1, -5, 0, 0])
        assert normalize(D).coeffs == D.coeffs

    def test_principal_divisor_normalizes_to_zero(self, king):
        D = principal_divisor(king, (1, 0))
        assert D.coeffs == (1, 2, 3, 1, 0, -1, 0)
        assert normalize(D).coeffs == (0,) * 7

    @given(st.integers(-50, 50), st.integers(-50, 50))
    def test_translation_invariance(self, u, v):
        king = build_named("king")
        D = king.divisor([5, -3, 2, 7, -1, 4, -2])
        assert normalize(D + principal_divisor(king, (u, v))).coeffs == normalize(D).coeffs

    def test_translation_invariance_random_fans(self):
        rng = random.Random(11)
        for _ in range(10):
            fan = random_blowup_chain(rng, rng.randint(0, 4))
            D = fan.divisor([rng.randint(-9, 9) for _ in range(fan.n)])
            for _ in range(100):
                m = (rng.randint(-20, 20), rng.randint(-20, 20))
                assert normalize(D + principal_divisor(fan, m)).coeffs == normalize(D).coeffs


class TestIntersection:
    def test_d4_squared_on_king(self, king):
        e4 = king.divisor([0, 0, 0, 1, 0, 0, 0])
        assert intersection(e4, e4) == -3

    def test_line_squared_on_p2(self, p2):
        e1 = p2.divisor([1, 0, 0])
        assert intersection(e1, e1) == 1

    def test_k_squared_on_king(self, king):
        K = canonical_divisor(king)
        assert intersection(K, K) == 5

    def test_noether_on_builtins_and_chains(self):
        fans = [build_named("p2"), build_named("p1p1"), build_named("hirzebruch", 3)]
        rng = random.Random(5)
        fans += [random_blowup_chain(rng, rng.randint(1, 6)) for _ in range(50)]
        for fan in fans:
            K = canonical_divisor(fan)
            assert intersection(K, K) + fan.n == 12

    def test_symmetric_bilinear_principal_vanishing(self):
        rng = random.Random(17)
        for _ in range(25):
            fan = random_blowup_chain(rng, rng.randint(0, 5))
            c = lambda: fan.divisor([rng.randint(-8, 8) for _ in range(fan.n)])
            D, E, F = c(), c(), c()
            assert intersection(D, E) == intersection(E, D)
            assert intersection(D + F, E) == intersection(D, E) + intersection(F, E)
            m = (rng.randint(-10, 10), rng.randint(-10, 10))
            assert intersection(principal_divisor(fan, m), E) == 0

    def test_mixed_fans_rejected(self, king, p2):
        with pytest.raises(MixedFans):
            intersection(king.zero_divisor(), p2.zero_divisor())

    def test_adjacency_table(self, king):
        data = intersection_data(king)
        assert data.canonical.coeffs == (-1,) * 7
        n = king.n
        for i in range(n):
            ei = king.divisor([int(j == i) for j in range(n)])
            for j in range(n):
                ej = king.divisor([int(t == j) for t in range(n)])
                expected = (
                    data.self_int[i]
                    if i == j
                    else 1 if (j - i) % n in (1, n - 1) else 0
                )
                assert intersection(ei, ej) == expected


class TestCanonical:
    def test_all_minus_one(self, king):
        assert canonical_divisor(king).coeffs == (-1,) * 7

    def test_anticanonical_sections_on_p2(self, p2):
        # independent oracle: lattice points of the triangle {l_i(m) >= -1}
        count = sum(
            1
            for u in range(-5, 6)
            for v in range(-5, 6)
            if all(pairing(l, (u, v)) >= -1 for l in p2.rays)
        )
        assert count == 10


class TestJson:
    def test_round_trip(self, king):
        assert fan_from_json(fan_to_json(king)).rays == king.rays

    def test_parse_coeffs_padding(self, king):
        assert parse_coeffs(king, "[1,2,3,1,0]").coeffs == (1, 2, 3, 1, 0, 0, 0)
        assert parse_coeffs(king, [1, 2, 3, 1, 0, 0, 0]).coeffs == (1, 2, 3, 1, 0, 0, 0)
        with pytest.raises(ValueError):
            parse_coeffs(king, "[1,2,3]")


class TestDivisorArithmetic:
    def test_add_sub_neg_scalar(self, p2):
        D = p2.divisor([1, 2, 3])
        E = p2.divisor([1, 0, -1])
        assert (D + E).coeffs == (2, 2, 2)
        assert (D - E).coeffs == (0, 2, 4)
        assert (-D).coeffs == (-1, -2, -3)
        assert (2 * D).coeffs == (2, 4, 6)

    def test_length_mismatch(self, p2):
        with pytest.raises(ValueError):
            p2.divisor([1, 2])
