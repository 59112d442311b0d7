import json

import pytest

from toricsurf.classify import A_LIST, B_SERIES, C_LIST, STEP, pad
from toricsurf.exceptional import (
    DuplicateClass,
    FoundSequence,
    compatible,
    compatible_set,
    ext_profile,
    find_sequences,
    is_strongly_exceptional,
    solve_offsets,
    verify_counterexample,
)
ZERO5 = (0, 0, 0, 0, 0)


def _d(king, t5):
    return king.divisor(pad(t5))


class TestCompatible:
    def test_with_zero_is_biacyclicity(self, king):
        from toricsurf.classify import is_biacyclic

        for t in [(2, 4, 7, 3, 2), (2, 4, 8, 3, 2), (1, 2, 3, 1, 0)]:
            D = _d(king, t)
            assert compatible(king.zero_divisor(), D) == is_biacyclic(D)

    def test_c10_with_a1_but_not_a3(self, king):
        c10 = _d(king, C_LIST[9])
        assert compatible(c10, _d(king, A_LIST[0]))
        assert not compatible(c10, _d(king, A_LIST[2]))

    def test_series_step_neighbours(self, king):
        b41 = _d(king, B_SERIES[3].member(1))
        assert compatible(b41, b41 + _d(king, STEP))

    def test_symmetry_and_translation(self, king):
        import random

        rng = random.Random(4)
        for _ in range(40):
            D = king.divisor([rng.randint(-4, 4) for _ in range(7)])
            E = king.divisor([rng.randint(-4, 4) for _ in range(7)])
            T = king.divisor([rng.randint(-4, 4) for _ in range(7)])
            assert compatible(D, E) == compatible(E, D)
            assert compatible(D + T, E + T) == compatible(D, E)
            assert compatible(-D, -E) == compatible(D, E)


class TestStronglyExceptional:
    def test_beilinson_on_p2(self, p2):
        seq = [p2.divisor([a, 0, 0]) for a in (0, 1, 2)]
        ok, order = is_strongly_exceptional(seq)
        assert ok and order == [0, 1, 2]

    def test_order_recovered_from_shuffle(self, p2):
        seq = [p2.divisor([a, 0, 0]) for a in (2, 0, 1)]
        ok, order = is_strongly_exceptional(seq)
        assert ok and [seq[i].coeffs[0] for i in order] == [0, 1, 2]

    def test_p1p1_square(self, p1p1):
        seq = [p1p1.divisor(list(t) + [0, 0]) for t in ((0, 0), (1, 0), (0, 1), (1, 1))]
        ok, order = is_strongly_exceptional(seq)
        assert ok
        assert order[0] == 0 and order[-1] == 3  # (1,1) receives Homs from all

    def test_fails_on_non_biacyclic_pair(self, king):
        seq = [king.zero_divisor(), _d(king, (2, 4, 8, 3, 2))]
        ok, order = is_strongly_exceptional(seq)
        assert not ok and order is None

    def test_duplicate_rejected(self, p2):
        from toricsurf.fan import principal_divisor

        D = p2.divisor([1, 0, 0])
        E = D + principal_divisor(p2, (3, 1))
        with pytest.raises(DuplicateClass):
            is_strongly_exceptional([D, E])

    def test_ext_profile_dimensions(self, p2):
        seq = [p2.divisor([a, 0, 0]) for a in (0, 1, 2)]
        prof = ext_profile(seq)
        assert prof.hom(0, 1) == 3  # sections of O(1)
        assert prof.hom(0, 2) == 6  # sections of O(2)
        assert prof.hom(1, 0) == 0
        assert prof.ext1(0, 1) == prof.ext2(0, 1) == 0


class TestSolveOffsets:
    def test_step_multiples(self):
        sols = solve_offsets(ZERO5, STEP)
        assert sols.is_finite() and sols.finite_points() == (-1, 0, 1)

    def test_a1_plus_multiples(self):
        sols = solve_offsets(A_LIST[0], STEP)
        assert sols.is_finite() and sols.finite_points() == (-1, 0)

    def test_b2_minus_a4_is_b5_family(self):
        base = tuple(b - a for b, a in zip(B_SERIES[1].base, A_LIST[3]))
        sols = solve_offsets(base, STEP)
        assert sols.min_k == 2 and not sols.points and sols.max_k is None
        # spot check: B_2(k) - A_4 = B_5(k-1)
        for k in (2, 3, 7):
            got = tuple(b + k * s for b, s in zip(base, STEP))
            assert got == B_SERIES[4].member(k - 1)

    def test_constant_family(self):
        assert solve_offsets(A_LIST[3], ZERO5).all_k
        assert solve_offsets((9, 9, 9, 9, 9), ZERO5).is_empty()

    def test_moving_c5(self):
        sols = solve_offsets(ZERO5, (0, 0, 0, 0, 1))
        assert sols.contains(0) and not sols.contains(1)

    def test_high_c5_empty(self):
        assert solve_offsets((0, 0, 0, 0, 3), STEP).is_empty()


class TestCompatibleSet:
    def test_c10(self):
        labels, families = compatible_set(C_LIST[9])
        assert not families
        assert sorted(str(l) for l in labels) == [
            "A_1",
            "A_2",
            "A_4",
            "B_{4,1}",
            "B_{4,2}",
            "C_3",
            "C_7",
            "C_9",
        ]

    def test_eleventh_c_class(self):
        labels, families = compatible_set(C_LIST[10])
        assert not families
        assert sorted(str(l) for l in labels) == [
            "-A_1",
            "A_3",
            "B_{6,1}",
            "B_{6,2}",
            "B_{7,0}",
            "B_{7,1}",
            "C_2",
            "C_5",
        ]

    def test_a7_has_infinite_companions(self):
        labels, families = compatible_set(A_LIST[6])
        assert families  # whole tails of series are compatible with the step


class TestFindSequences:
    def test_p2_contains_beilinson(self, p2):
        seqs = find_sequences(p2, 3, bounds=3)
        assert any(s.classes == ((0, 0, 0), (1, 0, 0), (2, 0, 0)) for s in seqs)

    def test_p1p1_contains_box_sequence(self, p1p1):
        seqs = find_sequences(p1p1, 4, bounds=2)
        target = {(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0)}
        assert any(set(s.classes) == target for s in seqs)

    def test_every_result_is_strongly_exceptional(self, p1p1):
        for s in find_sequences(p1p1, 4, bounds=1):
            ok, _ = is_strongly_exceptional([p1p1.divisor(c) for c in s.classes])
            assert ok

    def test_king_has_none_in_box(self, king):
        assert find_sequences(king, 7, bounds=6) == []

    def test_json_shape(self):
        s = FoundSequence(((0, 0, 0), (1, 0, 0)), (0, 1))
        assert s.to_json_obj() == {"classes": [[0, 0, 0], [1, 0, 0]], "hom_order": [0, 1]}


@pytest.fixture(scope="module")
def cert():
    return verify_counterexample()


class TestCertificate:
    def test_verdict_pass(self, cert):
        assert cert.verdict == "pass"
        assert cert.sequences_found == []

    def test_all_nine_claims_recorded(self, cert):
        assert [c.id for c in cert.claims] == list(range(1, 10))
        assert all(c.result == "pass" for c in cert.claims)

    def test_methods(self, cert):
        methods = {c.id: c.method for c in cert.claims}
        assert methods[3] == methods[5] == methods[7] == "symbolic"
        assert methods[2] == methods[4] == methods[6] == methods[8] == "exhaustive"

    def test_cited_assumption_listed(self, cert):
        assert any("outside" in a for a in cert.cited_assumptions)

    def test_c10_candidates(self, cert):
        d = cert.claim(8).details["C_10"]
        assert d["candidates"] == [
            "A_1",
            "A_2",
            "A_4",
            "B_{4,1}",
            "B_{4,2}",
            "C_3",
            "C_7",
            "C_9",
        ]
        assert d["max_extension"] <= 4

    def test_every_c_eliminated(self, cert):
        details = cert.claim(8).details
        assert len([k for k in details if k.startswith("C_")]) == len(C_LIST)
        for j in range(1, len(C_LIST) + 1):
            assert details[f"C_{j}"]["max_extension"] <= 4

    def test_signed_b_cliques_documented(self, cert):
        d = cert.claim(6).details
        assert d["max_same_sign_clique"] == 3
        assert d["max_signed_clique"] == 4  # why the translation step exists
        assert len(d["mixed_pairs"]) > 0

    def test_skip_yields_qualified(self):
        cert = verify_counterexample(skip=(5,), corroboration_bounds=4)
        assert cert.verdict == "qualified"
        assert cert.claim(5).result == "skipped"

    def test_json_round_trip(self, cert):
        obj = json.loads(cert.to_json())
        assert obj["surface"] == "king-counterexample"
        assert obj["verdict"] == "pass"
        assert obj["sequences_found"] == []
        assert [c["id"] for c in obj["claims"]] == list(range(1, 10))
        assert {c["method"] for c in obj["claims"]} <= {"symbolic", "exhaustive", "cited-assumption"}
