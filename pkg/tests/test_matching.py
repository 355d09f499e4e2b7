"""Detection, counting, left-aligned variants and the detection-based estimate."""
import itertools
import random
from math import comb, isqrt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permpat import matching
from permpat.core import Permutation, delete_leftmost, layered

P = Permutation.parse


@st.composite
def perm(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return Permutation(draw(st.permutations(list(range(1, n + 1)))))


def all_perms(n):
    return [Permutation(v) for v in itertools.permutations(range(1, n + 1))]


class TestContains:
    def test_highlighted_copy(self):
        assert matching.contains(P("312"), P("24153")) is True

    def test_decreasing_in_increasing(self):
        assert matching.contains(P("321"), P("123")) is False

    def test_singleton_pattern(self):
        for tau in all_perms(3):
            assert matching.contains(P("1"), tau) is True

    def test_empty_pattern_rejected(self):
        with pytest.raises(ValueError, match="empty pattern"):
            matching.contains(Permutation(()), P("1"))

    def test_empty_text_avoids_everything(self):
        assert matching.contains(P("1"), Permutation(())) is False


class TestCountCopies:
    def test_examples(self):
        assert matching.count_copies(P("312"), P("24153")) == 1
        assert matching.count_copies(P("1"), P("24153")) == 5
        assert matching.count_copies(P("12"), P("123")) == 3

    def test_matches_naive_exhaustively(self):
        for k in range(1, 4):
            for pi in all_perms(k):
                for n in range(1, 6):
                    for tau in all_perms(n):
                        assert matching.count_copies(pi, tau) == matching.count_copies_naive(pi, tau)

    def test_detection_iff_positive_count(self):
        for pi in all_perms(3):
            for tau in all_perms(5):
                assert matching.contains(pi, tau) == (matching.count_copies(pi, tau) >= 1)

    def test_monotone_bound_with_equality_cases(self):
        # count <= binom(n, k); for n > k >= 2 equality only on the two
        # monotone-aligned pairs
        for k in range(2, 4):
            for pi in all_perms(k):
                for n in range(k + 1, 6):
                    for tau in all_perms(n):
                        c = matching.count_copies(pi, tau)
                        assert c <= comb(n, k)
                        monotone = (
                            pi == Permutation.increasing(k)
                            and tau == Permutation.increasing(n)
                        ) or (
                            pi == Permutation.decreasing(k)
                            and tau == Permutation.decreasing(n)
                        )
                        assert (c == comb(n, k)) == monotone

    @given(perm(max_n=4), perm(max_n=7))
    @settings(max_examples=150)
    def test_reverse_and_complement_symmetry(self, pi, tau):
        c = matching.count_copies(pi, tau)
        assert matching.count_copies(pi.reverse(), tau.reverse()) == c
        assert matching.count_copies(pi.complement(), tau.complement()) == c

    def test_complexity_envelope_k10_n40(self):
        # k = 10, n = 40 must complete; layered texts give closed-form
        # counts (an increasing subsequence takes exactly one element per
        # layer, a decreasing one stays inside a single layer)
        text = layered([4] * 10)
        assert matching.count_copies(Permutation.increasing(10), text) == 4**10
        assert matching.count_copies(Permutation.decreasing(10), text) == 0
        rng = random.Random(271828)
        vals = list(range(1, 41))
        rng.shuffle(vals)
        assert matching.count_copies(Permutation.increasing(10), Permutation(vals)) == 0

    def test_concurrent_calls_are_deterministic(self):
        from concurrent.futures import ThreadPoolExecutor

        pi = P("2413")
        rng = random.Random(5)
        vals = list(range(1, 31))
        rng.shuffle(vals)
        tau = Permutation(vals)
        expected = matching.count_copies(pi, tau)
        with ThreadPoolExecutor(max_workers=8) as pool:
            results = list(pool.map(lambda _: matching.count_copies(pi, tau), range(64)))
        assert results == [expected] * 64


class TestLeftAligned:
    def test_examples(self):
        assert matching.contains_left_aligned(P("213"), P("24153")) is True
        assert matching.contains_left_aligned(P("12"), P("21")) is False
        assert matching.contains_left_aligned(P("1"), P("312")) is True

    def test_empty_inputs_rejected(self):
        with pytest.raises(ValueError, match="empty inputs"):
            matching.contains_left_aligned(P("1"), Permutation(()))
        with pytest.raises(ValueError, match="empty inputs"):
            matching.count_left_aligned(Permutation(()), P("1"))

    def test_count_example_both_routes(self):
        pi, tau = P("213"), P("24153")
        assert matching.count_left_aligned_direct(pi, tau) == 2
        assert matching.count_copies(pi, tau) == 3
        assert matching.count_copies(pi, delete_leftmost(tau)) == 1
        assert matching.count_left_aligned(pi, tau) == 2

    def test_singleton_pattern_counts_once(self):
        for tau in all_perms(4):
            assert matching.count_left_aligned(P("1"), tau) == 1

    @given(perm(max_n=4), perm(max_n=8))
    @settings(max_examples=200)
    def test_pinned_equals_difference(self, pi, tau):
        direct = matching.count_left_aligned_direct(pi, tau)
        assert direct == matching.count_left_aligned_by_difference(pi, tau)


class TestInversions:
    def test_examples(self):
        assert matching.count_inversions(P("21")) == 1
        assert matching.count_inversions(P("12345")) == 0
        assert matching.count_inversions(P("24153")) == 4
        assert matching.count_inversions(Permutation(())) == 0

    def test_equals_descent_pattern_count_exhaustive(self):
        two_one = P("21")
        for n in range(0, 9):
            for tau in all_perms(n):
                assert matching.count_inversions(tau) == matching.count_copies(two_one, tau)

    def test_equals_descent_pattern_count_random_large(self):
        two_one = P("21")
        rng = random.Random(3)
        for n in (40, 300, 1000):
            vals = list(range(1, n + 1))
            rng.shuffle(vals)
            tau = Permutation(vals)
            assert matching.count_inversions(tau) == matching.count_copies(two_one, tau)


class TestEnumerate:
    def test_unique_copy(self):
        embs, truncated = matching.enumerate_embeddings(P("312"), P("24153"), 10)
        assert embs == [(2, 3, 5)] and not truncated

    def test_no_copies(self):
        embs, truncated = matching.enumerate_embeddings(P("21"), P("12"), 10)
        assert embs == [] and not truncated

    def test_cap_hit(self):
        embs, truncated = matching.enumerate_embeddings(P("1"), P("21"), 1)
        assert embs == [(1,)] and truncated

    def test_zero_cap_rejected(self):
        with pytest.raises(ValueError):
            matching.enumerate_embeddings(P("1"), P("21"), 0)

    def test_lexicographic_order_and_count_agreement(self):
        pi, tau = P("12"), P("14235")
        embs, truncated = matching.enumerate_embeddings(pi, tau, 100)
        assert not truncated
        assert embs == sorted(embs)
        assert len(embs) == matching.count_copies(pi, tau)

    def test_left_aligned_enumeration(self):
        embs, _ = matching.enumerate_embeddings(P("213"), P("24153"), 10, require_left_aligned=True)
        assert embs == [(1, 3, 4), (1, 3, 5)]
        assert all(e[0] == 1 for e in embs)

    @given(perm(max_n=3), perm(max_n=6))
    @settings(max_examples=100)
    def test_full_enumeration_matches_counts(self, pi, tau):
        embs, truncated = matching.enumerate_embeddings(pi, tau, 10**6)
        assert not truncated
        assert len(embs) == matching.count_copies(pi, tau)
        pinned, _ = matching.enumerate_embeddings(pi, tau, 10**6, require_left_aligned=True)
        assert len(pinned) == matching.count_left_aligned(pi, tau)


class TestApproxCount:
    def test_examples(self):
        assert matching.approx_count(P("321"), P("123")) == 0
        assert matching.approx_count(P("312"), P("24153")) == 11
        assert matching.approx_count(P("21"), P("21")) == 2

    def test_empty_inputs_rejected(self):
        with pytest.raises(ValueError):
            matching.approx_count(Permutation(()), P("1"))
        with pytest.raises(ValueError):
            matching.approx_count(P("1"), Permutation(()))

    def test_error_bound_small_exhaustive(self):
        # squared-integer form of the n^(k/2) error guarantee: the ideal
        # estimate's square is exactly n^k
        for k in range(1, 4):
            for pi in all_perms(k):
                for n in range(1, 6):
                    for tau in all_perms(n):
                        est = matching.approx_count(pi, tau)
                        c = matching.count_copies(pi, tau)
                        if c == 0:
                            assert est == 0
                            continue
                        power = n**k
                        assert est == isqrt(power)
                        assert est * est <= c * c * power
                        assert c * c <= power * power
