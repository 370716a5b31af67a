"""Brute-force decodability checks, the radius swap, and region harnesses."""

import itertools
import json
from fractions import Fraction

import pytest

from insdel_lab.codes import Code, helberg, vt_binary
from insdel_lab.verify import (
    Verdict,
    Witness,
    binary_vt_distance4_onset,
    bound_region_pairs,
    check_ball_containment,
    check_bound_region,
    check_unique_vs_list,
    decoder_ball_matches_channel,
    list_decodable,
    min_levenshtein_distance,
    region_payload,
    unique_payload,
    verdict_payload,
)
from insdel_lab.words import all_words, in_insdel_ball, word, words_up_to


def cube(n: int) -> Code:
    return Code(q=2, n=n, codewords=frozenset(all_words(2, n)))


class TestMinDistance:
    def test_frozen_values(self):
        assert min_levenshtein_distance(vt_binary(4, 0)) == 4
        assert min_levenshtein_distance(cube(3)) == 2
        two_words = Code(
            q=2, n=4, codewords=frozenset({word([0] * 4, 2), word([1] * 4, 2)})
        )
        assert min_levenshtein_distance(two_words) == 8

    def test_singleton_rejected(self):
        with pytest.raises(ValueError):
            min_levenshtein_distance(
                Code(q=2, n=2, codewords=frozenset({word([0, 0], 2)}))
            )


class TestListDecodable:
    def test_trivial_radius_zero(self):
        verdict = list_decodable(cube(3), 0, 0, 1)
        assert verdict.decodable

    def test_cube_fails_under_one_insertion(self):
        verdict = list_decodable(cube(3), 1, 0, 1, want_witness=True)
        assert not verdict.decodable
        assert verdict.witness is not None
        assert verdict.witness.received == word([0, 0, 0, 1], 2)
        assert verdict.witness.codewords == (
            word([0, 0, 0], 2),
            word([0, 0, 1], 2),
        )

    def test_witness_members_verified_independently(self):
        verdict = list_decodable(vt_binary(6, 0), 1, 1, 2, want_witness=True)
        assert not verdict.decodable
        witness = verdict.witness
        assert witness is not None
        assert len(witness.codewords) > 2
        # each claimed codeword really reaches the received word
        for c in witness.codewords:
            assert in_insdel_ball(witness.received, c, 1, 1)
        # and no other codeword does
        others = set(vt_binary(6, 0).codewords) - set(witness.codewords)
        for c in others:
            assert not in_insdel_ball(witness.received, c, 1, 1)

    def test_monotone_in_radii_and_list_size(self):
        code = vt_binary(5, 0)
        verdicts = {
            (ti, td, ls): list_decodable(code, ti, td, ls).decodable
            for ti in range(3)
            for td in range(3)
            for ls in range(1, 4)
        }
        for (ti, td, ls), ok in verdicts.items():
            if ok:
                for ti2 in range(ti + 1):
                    for td2 in range(td + 1):
                        for ls2 in range(ls, 4):
                            assert verdicts[(ti2, td2, ls2)]

    def test_worker_counts_agree(self):
        code = vt_binary(6, 0)
        payloads = [
            json.dumps(
                verdict_payload(
                    list_decodable(code, 1, 1, 2, want_witness=True, workers=w)
                ),
                sort_keys=True,
            )
            for w in (1, 2, 3)
        ]
        assert payloads[0] == payloads[1] == payloads[2]

    def test_early_exit_and_census_verdicts_agree(self):
        code = cube(3)
        fast = list_decodable(code, 1, 0, 1)
        full = list_decodable(code, 1, 0, 1, want_witness=True)
        assert fast.decodable == full.decodable is False
        assert fast.witness is None and full.witness is not None

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            list_decodable(cube(2), 0, 0, 0)
        with pytest.raises(ValueError):
            list_decodable(cube(2), -1, 0, 1)
        with pytest.raises(ValueError):
            list_decodable(cube(2), 0, 3, 1)

    def test_decodable_verdict_never_carries_witness(self):
        with pytest.raises(ValueError):
            Verdict(
                True,
                0,
                0,
                1,
                witness=Witness(word([0], 2), (word([0], 2),)),
            )


class TestRadiusSwap:
    def test_equivalence_on_samples(self):
        for symbols in [(0, 1, 0), (1, 1, 1), (0, 0, 1, 1)]:
            w = word(list(symbols), 2)
            for t_ins in range(3):
                for t_del in range(min(2, len(w)) + 1):
                    assert decoder_ball_matches_channel(w, t_ins, t_del)

    def test_membership_swap_identity(self):
        words = list(words_up_to(2, 3))
        for a in words:
            for b in words:
                for ti in range(2):
                    for td in range(2):
                        assert in_insdel_ball(a, b, ti, td) == in_insdel_ball(
                            b, a, td, ti
                        )


class TestUniqueVsList:
    def test_two_deletion_code(self):
        report = check_unique_vs_list(helberg(2, 5, 2, 0))
        assert report.distance == 6
        assert report.radius == 2
        assert report.ok
        assert report.checked == ((0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2))

    def test_repetition_pair(self):
        two_words = Code(
            q=2, n=4, codewords=frozenset({word([0] * 4, 2), word([1] * 4, 2)})
        )
        report = check_unique_vs_list(two_words)
        assert report.radius == 3
        assert report.ok
        assert len(report.checked) == 10

    def test_distance_two_checks_only_origin(self):
        report = check_unique_vs_list(cube(3))
        assert report.radius == 0
        assert report.checked == ((0, 0),)
        assert report.ok


class TestBoundRegion:
    def test_frozen_pairs_vt6_list2(self):
        pairs = bound_region_pairs(6, Fraction(1, 3), 2)
        assert pairs == [(0, 0), (1, 0), (0, 1)]

    def test_frozen_pairs_helberg_list3(self):
        pairs = bound_region_pairs(5, Fraction(3, 5), 3)
        assert pairs == [(0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (1, 1), (0, 2)]

    def test_region_check_vt6(self):
        report = check_bound_region(vt_binary(6, 0), 2)
        assert report.delta == Fraction(1, 3)
        assert report.ok
        assert not report.skipped
        assert report.checked == ((0, 0), (1, 0), (0, 1))
        assert not report.beats_unique_decoding  # 1/3 < 2/3

    def test_region_check_vt8_list3(self):
        report = check_bound_region(vt_binary(8, 0), 3)
        assert report.delta == Fraction(1, 4)
        assert report.ok
        assert report.checked == ((0, 0), (1, 0), (0, 1))

    def test_region_check_beats_unique(self):
        report = check_bound_region(helberg(2, 5, 2, 0), 3)
        assert report.ok
        assert report.beats_unique_decoding  # 3/5 > 2/4
        assert len(report.checked) == 7

    def test_full_distance_rejected(self):
        two_words = Code(
            q=2, n=2, codewords=frozenset({word([0, 0], 2), word([1, 1], 2)})
        )
        with pytest.raises(ValueError):
            check_bound_region(two_words, 2)


class TestBallContainment:
    def test_holds_on_small_samples(self):
        samples = list(words_up_to(2, 3))
        radii = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1)]
        assert check_ball_containment(samples, radii) == []


class TestPayloads:
    def test_verdict_payload_round_trips_through_json(self):
        verdict = list_decodable(cube(3), 1, 0, 1, want_witness=True)
        payload = verdict_payload(verdict)
        restored = json.loads(json.dumps(payload))
        assert restored["decodable"] is False
        assert restored["witness"]["received"] == "0,0,0,1"
        assert restored["witness"]["codewords"] == ["0,0,0", "0,0,1"]

    def test_region_payload_shape(self):
        payload = region_payload(check_bound_region(vt_binary(6, 0), 2))
        assert payload["delta"] == "1/3"
        assert payload["ok"] is True
        assert payload["checked"] == [[0, 0], [1, 0], [0, 1]]
        json.dumps(payload)

    def test_unique_payload_shape(self):
        payload = unique_payload(check_unique_vs_list(helberg(2, 5, 2, 0)))
        assert payload["distance"] == 6
        assert payload["ok"] is True
        json.dumps(payload)


class TestDistanceOnset:
    def test_attained_immediately(self):
        assert binary_vt_distance4_onset(4) == 2
        assert binary_vt_distance4_onset(2) == 2

    def test_empty_range(self):
        assert binary_vt_distance4_onset(1) is None
