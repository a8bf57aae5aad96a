"""Profile transforms: flip, swap, update, fold transforms, partition lists,
and the constructive swap-list builder."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import BALLOTS, permuted_partner, profile_st, random_profile
from mayskit import (
    Ballot,
    ContractError,
    Outcome,
    Profile,
    build_swap_list,
    count,
    count_helper,
    flip,
    flip_vote,
    is_against,
    is_for,
    is_indifferent,
    left_false_right_true,
    left_true_right_false,
    parse_profile,
    swap,
    swaps,
    tally,
    update,
    upgrade_vote_list,
)


class TestFlip:
    def test_ballot_values(self):
        assert flip(Ballot.INDIFFERENT) is Ballot.INDIFFERENT
        assert flip(Ballot.FOR) is Ballot.AGAINST
        assert flip(Ballot.AGAINST) is Ballot.FOR

    def test_outcome_values(self):
        assert flip(Outcome.TIE) is Outcome.TIE
        assert flip(Outcome.FOR_WINS) is Outcome.AGAINST_WINS
        assert flip(Outcome.AGAINST_WINS) is Outcome.FOR_WINS

    def test_involution(self):
        for b in Ballot:
            assert flip(flip(b)) is b
        for o in Outcome:
            assert flip(flip(o)) is o

    def test_preserves_kind(self):
        assert isinstance(flip(Ballot.FOR), Ballot)
        assert isinstance(flip(Outcome.FOR_WINS), Outcome)


class TestFlipVote:
    def test_pointwise(self):
        assert flip_vote(parse_profile("+-0")) == parse_profile("-+0")

    def test_fixed_point(self):
        p = parse_profile("0000")
        assert flip_vote(p) == p

    @settings(max_examples=300)
    @given(profile_st())
    def test_involution(self, p):
        assert flip_vote(flip_vote(p)) == p

    @settings(max_examples=300)
    @given(profile_st())
    def test_count_reversal(self, p):
        assert count(is_against, flip_vote(p)) == count(is_for, p)
        assert count(is_for, flip_vote(p)) == count(is_against, p)


class TestSwap:
    @settings(max_examples=200)
    @given(profile_st(min_n=1), st.data())
    def test_swap_same(self, p, data):
        v = data.draw(st.integers(0, p.n - 1))
        assert swap(v, v, p) == p

    def test_transposition(self):
        assert swap(0, 1, parse_profile("+-0")) == parse_profile("-+0")

    @settings(max_examples=200)
    @given(profile_st(min_n=1), st.data())
    def test_involution(self, p, data):
        v1 = data.draw(st.integers(0, p.n - 1))
        v2 = data.draw(st.integers(0, p.n - 1))
        assert swap(v1, v2, swap(v1, v2, p)) == p

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            swap(0, 3, parse_profile("+-0"))

    def test_preserves_multiset(self):
        rng = np.random.default_rng(21)
        for _ in range(500):
            n = int(rng.integers(1, 9))
            p = random_profile(rng, n)
            v1, v2 = int(rng.integers(0, n)), int(rng.integers(0, n))
            q = swap(v1, v2, p)
            assert sorted(q.ballots) == sorted(p.ballots)


class TestUpdate:
    def test_noop_write(self):
        p = parse_profile("+-0")
        for v in range(3):
            assert update(v, p[v], p) == p

    def test_single_position(self):
        assert update(1, Ballot.FOR, parse_profile("+-0")) == parse_profile("++0")

    def test_against_to_indifferent_count(self):
        rng = np.random.default_rng(22)
        seen = 0
        while seen < 500:
            n = int(rng.integers(1, 9))
            p = random_profile(rng, n)
            v = int(rng.integers(0, n))
            if p[v] is not Ballot.AGAINST:
                continue
            assert count(is_against, p) == 1 + count(is_against, update(v, Ballot.INDIFFERENT, p))
            seen += 1

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            update(5, Ballot.FOR, parse_profile("+-"))


class TestSwaps:
    def test_empty_list(self):
        p = parse_profile("+-0")
        assert swaps(p, []) == p

    def test_singleton(self):
        p = parse_profile("+-0")
        assert swaps(p, [(0, 2)]) == swap(0, 2, p)

    def test_pair_example(self):
        assert swaps(parse_profile("+-"), [(0, 1)]) == parse_profile("-+")

    def test_last_element_applied_first(self):
        # swaps("+-0", [(0,1),(1,2)]): (1,2) first gives "+0-", then (0,1)
        # gives "0+-"; head-first application would give "-0+" instead
        assert swaps(parse_profile("+-0"), [(0, 1), (1, 2)]) == parse_profile("0+-")

    @settings(max_examples=200)
    @given(profile_st(min_n=1), st.data())
    def test_matches_reversed_fold(self, p, data):
        pairs = data.draw(
            st.lists(st.tuples(st.integers(0, p.n - 1), st.integers(0, p.n - 1)), max_size=6)
        )
        expected = p
        for v1, v2 in reversed(pairs):
            expected = swap(v1, v2, expected)
        assert swaps(p, pairs) == expected


class TestUpgradeVoteList:
    def test_empty(self):
        p = parse_profile("--")
        assert upgrade_vote_list(p, []) == p

    def test_single(self):
        assert upgrade_vote_list(parse_profile("--"), [0]) == parse_profile("+-")

    def test_all_listed_end_for(self):
        rng = np.random.default_rng(23)
        for _ in range(500):
            n = int(rng.integers(1, 9))
            p = random_profile(rng, n)
            k = int(rng.integers(0, n + 1))
            l = [int(v) for v in rng.permutation(n)[:k]]
            q = upgrade_vote_list(p, l)
            for v in range(n):
                expected = Ballot.FOR if v in l else p[v]
                assert q[v] is expected

    def test_tally_arithmetic_on_against_voters(self):
        rng = np.random.default_rng(24)
        for _ in range(500):
            n = int(rng.integers(1, 9))
            p = random_profile(rng, n)
            against = [v for v in range(n) if p[v] is Ballot.AGAINST]
            rng.shuffle(against)
            k = int(rng.integers(0, len(against) + 1))
            l = against[:k]
            before, after = tally(p), tally(upgrade_vote_list(p, l))
            assert after.a == before.a + len(l)
            assert after.b == before.b - len(l)


class TestPartitionLists:
    def test_equal_profiles_empty(self):
        p = parse_profile("+-0")
        assert left_true_right_false(p, p, [0, 1, 2]) == []
        assert left_false_right_true(p, p, [0, 1, 2]) == []

    def test_examples(self):
        p, q = parse_profile("+-"), parse_profile("-+")
        assert left_true_right_false(p, q, [0, 1]) == [0]
        assert left_false_right_true(p, q, [0, 1]) == [1]

    def test_complement_symmetry(self):
        rng = np.random.default_rng(25)
        for _ in range(500):
            n = int(rng.integers(0, 9))
            p, q = random_profile(rng, n), random_profile(rng, n)
            l = [int(v) for v in rng.permutation(n)]
            assert left_true_right_false(p, q, l) == left_false_right_true(q, p, l)

    def test_disjoint(self):
        rng = np.random.default_rng(26)
        for _ in range(500):
            n = int(rng.integers(0, 9))
            p, q = random_profile(rng, n), random_profile(rng, n)
            l = list(range(n))
            l1 = left_true_right_false(p, q, l)
            l2 = left_false_right_true(p, q, l)
            assert not set(l1) & set(l2)

    def test_scan_order_preserved(self):
        p = parse_profile("++-")
        q = parse_profile("---")
        assert left_true_right_false(p, q, [2, 0, 1]) == [0, 1]
        assert left_true_right_false(p, q, [1, 0]) == [1, 0]


class TestBuildSwapList:
    def test_identical_profiles(self):
        p = parse_profile("+-0")
        assert build_swap_list(p, p) == []
        assert swaps(p, build_swap_list(p, p)) == p

    def test_pair_example(self):
        l = build_swap_list(parse_profile("+-"), parse_profile("-+"))
        assert l == [(0, 1)]
        assert swaps(parse_profile("-+"), l) == parse_profile("+-")

    def test_rejects_arity_mismatch(self):
        with pytest.raises(ContractError, match="voter count"):
            build_swap_list(parse_profile("+-"), parse_profile("+-0"))

    def test_rejects_indifference_mismatch(self):
        with pytest.raises(ContractError, match="indifference sets differ"):
            build_swap_list(parse_profile("+0"), parse_profile("+-"))

    def test_rejects_count_mismatch(self):
        with pytest.raises(ContractError, match="For-counts differ"):
            build_swap_list(parse_profile("++"), parse_profile("+-"))

    def test_replay_on_permuted_pairs(self):
        rng = np.random.default_rng(27)
        for _ in range(1_000):
            n = int(rng.integers(0, 9))
            p = random_profile(rng, n)
            q = permuted_partner(rng, p)
            l = build_swap_list(p, q)
            assert swaps(q, l) == p

    def test_partition_lengths_equal_under_preconditions(self):
        rng = np.random.default_rng(28)
        for _ in range(1_000):
            n = int(rng.integers(0, 9))
            p = random_profile(rng, n)
            q = permuted_partner(rng, p)
            l = [int(v) for v in rng.permutation(n)]
            assert len(left_true_right_false(p, q, l)) == len(left_false_right_true(p, q, l))


class TestIndifferencePreservation:
    @staticmethod
    def _ind(p: Profile) -> frozenset:
        return frozenset(v for v in range(p.n) if p[v] is Ballot.INDIFFERENT)

    def test_across_transforms(self):
        rng = np.random.default_rng(29)
        for _ in range(500):
            n = int(rng.integers(1, 9))
            p = random_profile(rng, n)
            ind = self._ind(p)
            assert self._ind(flip_vote(p)) == ind
            v1, v2 = int(rng.integers(0, n)), int(rng.integers(0, n))
            if p[v1] is not Ballot.INDIFFERENT and p[v2] is not Ballot.INDIFFERENT:
                assert self._ind(swap(v1, v2, p)) == ind
            targets = [v for v in range(n) if p[v] is Ballot.AGAINST]
            assert self._ind(upgrade_vote_list(p, targets)) == ind
