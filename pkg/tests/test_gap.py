"""Gap parameters, inflation construction, bound chains, decision rule."""
import itertools
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permpat import gap, matching
from permpat.core import Permutation

P = Permutation.parse

SAMPLE_EPSILONS = (Fraction(1, 3), Fraction(2, 5), Fraction(49, 100))


@st.composite
def perm(draw, min_n=1, max_n=4):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return Permutation(draw(st.permutations(list(range(1, n + 1)))))


class TestGapParams:
    def test_boundary_epsilon_rejected(self):
        for bad in (Fraction(1, 2), Fraction(0), Fraction(-1, 3), Fraction(3, 4)):
            with pytest.raises(ValueError):
                gap.gap_params(bad, 2, 5)

    def test_alpha_values(self):
        assert gap.gap_params(Fraction(1, 3), 2, 5).alpha == 6
        assert gap.gap_params(Fraction(2, 5), 2, 10).alpha == 5
        assert gap.gap_params(Fraction(49, 100), 1, 10).alpha == 5

    def test_threshold_flag(self):
        params = gap.gap_params(Fraction(2, 5), 2, 10)
        assert params.below_threshold  # 10^2 < 12^50
        above = gap.gap_params(Fraction(1, 3), 1, 7**36)
        assert not above.below_threshold

    def test_threshold_is_exact_at_the_edge(self):
        # alpha = 5 at eps = 2/5 and k = 1: threshold value is 6^25
        edge = 6**25
        assert gap.gap_params(Fraction(2, 5), 1, edge - 1).below_threshold
        assert not gap.gap_params(Fraction(2, 5), 1, edge).below_threshold


class TestBuildCore:
    def test_frozen_examples(self):
        assert gap.build_core(P("21"), P("21"), 1) == (P("231"), P("32541"))
        assert gap.build_core(P("12"), P("21"), 1) == (P("123"), P("32541"))
        assert gap.build_core(P("1"), P("1"), 1) == (P("1"), P("1"))

    def test_empty_and_bad_alpha(self):
        with pytest.raises(ValueError):
            gap.build_core(Permutation(()), P("1"), 1)
        with pytest.raises(ValueError):
            gap.build_core(P("1"), P("1"), 0)

    def test_safety_cap(self):
        # (k=2, n=2, alpha=2) inflates to n' = 1 + 4 * 4 = 17
        with pytest.raises(ValueError, match="too large"):
            gap.build_core(P("12"), P("12"), 2, max_text_len=16)
        gap.build_core(P("12"), P("12"), 2, max_text_len=17)

    def test_cap_from_environment(self, monkeypatch):
        monkeypatch.setenv("PERMPAT_MAX_TEXT_LEN", "16")
        with pytest.raises(ValueError, match="too large"):
            gap.build_core(P("12"), P("12"), 2)

    @given(perm(max_n=3), perm(max_n=3), st.integers(1, 3))
    @settings(max_examples=120)
    def test_sizes(self, pi, tau, alpha):
        k, n = len(pi), len(tau)
        pattern, text = gap.build_core(pi, tau, alpha)
        assert len(pattern) == alpha * k + (k - 1)
        assert len(text) == n - 1 + alpha * k * n**alpha

    @given(perm(max_n=3), perm(max_n=3), st.integers(1, 2))
    @settings(max_examples=80)
    def test_structural_size_bounds(self, pi, tau, alpha):
        lo_ok, hi_ok = gap.initial_block_bounds(len(tau), len(pi), alpha)
        assert lo_ok and hi_ok

    def test_structural_bounds_worked_example(self):
        # n = 2, k = 2, alpha = 1: n' = 5 and 2 <= 5 <= 8
        n_prime = 2 - 1 + 1 * 2 * 2
        assert n_prime == 5
        assert gap.initial_block_bounds(2, 2, 1) == (True, True)


class TestBuildGapInstance:
    def test_trivial_yes(self):
        inst = gap.build_gap_instance(P("213"), P("24153"), Fraction(1, 3))
        assert inst.branch == "trivial_yes"
        assert (inst.pattern, inst.text) == gap.TRIVIAL_YES
        assert inst.k_prime == 1 and inst.n_prime == 1

    def test_trivial_no(self):
        inst = gap.build_gap_instance(P("12"), P("21"), Fraction(1, 3))
        assert inst.branch == "trivial_no"
        assert (inst.pattern, inst.text) == gap.TRIVIAL_NO

    def test_trivial_branch_meets_gap_definition(self):
        for eps in SAMPLE_EPSILONS:
            yes_pi, yes_tau = gap.TRIVIAL_YES
            count = matching.count_copies(yes_pi, yes_tau)
            assert gap.meets_yes_threshold(count, len(yes_tau), len(yes_pi), eps)
            no_pi, no_tau = gap.TRIVIAL_NO
            count = matching.count_copies(no_pi, no_tau)
            assert gap.meets_no_threshold(count, len(no_tau), len(no_pi), eps)
            assert not gap.meets_yes_threshold(count, len(no_tau), len(no_pi), eps)

    def test_threshold_always_trivial_at_desk_scale(self):
        # alpha >= 5 for every admissible epsilon, so the threshold is at
        # least 6^20 and any constructible text takes a trivial branch
        for eps in SAMPLE_EPSILONS:
            inst = gap.build_gap_instance(P("21"), P("4231"), eps)
            assert inst.branch in ("trivial_yes", "trivial_no")

    def test_inflated_branch_plumbing(self, monkeypatch):
        # the above-threshold regime is unreachable with real permutations;
        # force it to check the record-keeping of the inflated branch
        eps = Fraction(1, 3)

        def fake_params(epsilon, k, n):
            return gap.GapParams(epsilon=Fraction(epsilon), alpha=2, k=k, n=n,
                                 below_threshold=False)

        monkeypatch.setattr(gap, "gap_params", fake_params)
        pi, tau = P("21"), P("312")
        inst = gap.build_gap_instance(pi, tau, eps)
        assert inst.branch == "inflated"
        assert (inst.pattern, inst.text) == gap.build_core(pi, tau, 2)
        assert inst.k_prime == 2 * 2 + 1 == len(inst.pattern)
        assert inst.n_prime == 3 - 1 + 2 * 2 * 3**2 == len(inst.text)
        assert inst.initial_block_pattern_len == 4
        assert inst.initial_block_text_len == 36
        assert gap.copies_touching_initial_block(inst) >= 0


class TestTouchingCount:
    def test_requires_inflated_branch(self):
        inst = gap.build_gap_instance(P("12"), P("21"), Fraction(1, 3))
        with pytest.raises(ValueError):
            gap.copies_touching_initial_block(inst)

    def _core_instance(self, pi, tau, alpha):
        pattern, text = gap.build_core(pi, tau, alpha)
        k, n = len(pi), len(tau)
        return gap.GapInstance(
            pattern=pattern,
            text=text,
            k_prime=alpha * k + (k - 1),
            n_prime=n - 1 + alpha * k * n**alpha,
            branch="inflated",
            initial_block_pattern_len=alpha * k,
            initial_block_text_len=alpha * k * n**alpha,
            alpha=alpha,
        )

    def test_no_instance_untouched(self):
        inst = self._core_instance(P("12"), P("21"), 1)
        assert matching.count_copies(inst.pattern, inst.text) == 0
        assert gap.copies_touching_initial_block(inst) == 0

    def test_yes_instance_all_copies_touch(self):
        inst = self._core_instance(P("21"), P("21"), 1)
        assert matching.count_copies(inst.pattern, inst.text) == 4
        assert gap.copies_touching_initial_block(inst) == 4

    def test_pattern_longer_than_suffix(self):
        # suffix shorter than the pattern: touching equals the total
        inst = self._core_instance(P("21"), P("12"), 1)
        total = matching.count_copies(inst.pattern, inst.text)
        assert gap.copies_touching_initial_block(inst) == total


class TestVerifyCore:
    def test_yes_case_bound(self):
        report = gap.verify_core(P("21"), P("21"), 1)
        assert report.source_has_left_aligned_copy
        assert report.total_copies == 4 == 2 ** (1 * 1 * 2)
        assert report.yes_lower_bound_holds
        assert report.checks_pass

    def test_yes_case_spot_check_alpha_2(self):
        # k = 2, n = 3, alpha = 2: at least 3^(4*2) = 6561 copies
        report = gap.verify_core(P("21"), P("321"), 2)
        assert report.source_has_left_aligned_copy
        assert report.total_copies >= 3**8
        assert report.checks_pass

    def test_no_case_structure(self):
        report = gap.verify_core(P("12"), P("21"), 1)
        assert not report.source_has_left_aligned_copy
        assert report.touching_initial_block == 0
        assert report.no_upper_bound_holds
        assert report.total_copies <= comb(len(P("21")) - 1, report.k_prime)
        assert report.checks_pass

    def test_block_usage_lemma(self):
        report = gap.verify_core(P("21"), P("21"), 1)
        assert report.block_usage_lemma_holds


class TestCheckBounds:
    def test_below_threshold_rejected(self):
        with pytest.raises(ValueError, match="threshold precondition unmet"):
            gap.check_bounds(10, 2, Fraction(1, 3))

    @pytest.mark.parametrize(
        "eps,k,n",
        [
            (Fraction(1, 3), 1, 7**36),
            (Fraction(2, 5), 1, 6**25),
            (Fraction(49, 100), 1, 6**21),
        ],
    )
    def test_chains_hold_above_threshold(self, eps, k, n):
        report = gap.check_bounds(n, k, eps)
        assert report.all_hold, [c.name for c in report.checks if not c.holds]
        assert len(report.checks) == 7

    def test_report_serializes(self):
        report = gap.check_bounds(7**36, 1, Fraction(1, 3))
        obj = report.to_json_obj()
        assert obj["all_hold"] is True
        assert len(obj["checks"]) == 7


class TestDecideViaApprox:
    def test_zero_estimate(self):
        assert gap.decide_via_approx(P("12"), P("1234"), 0) is False

    def test_boundary(self):
        assert gap.decide_via_approx(P("12"), P("1234"), 5) is True
        assert gap.decide_via_approx(P("12"), P("1234"), 4) is False

    def test_promise_consistency_on_desk_instances(self):
        # fed an estimator that actually meets a sub-n^(k/2) error bound
        # (here: the exact count), the rule decides every promise instance
        # on the correct side; fed the detection-based estimate, a positive
        # answer would certify the high side, and a low-side-only instance
        # is always answered negatively
        for pi_vals in itertools.permutations((1, 2)):
            pi = Permutation(pi_vals)
            for n in range(1, 4):
                for tau_vals in itertools.permutations(range(1, n + 1)):
                    tau = Permutation(tau_vals)
                    for alpha in (1, 2):
                        pattern, text = gap.build_core(pi, tau, alpha)
                        count = matching.count_copies(pattern, text)
                        exact_answer = gap.decide_via_approx(pattern, text, count)
                        detect_answer = gap.decide_via_approx(
                            pattern, text, matching.approx_count(pattern, text)
                        )
                        k2, n2 = len(pattern), len(text)
                        for eps in SAMPLE_EPSILONS:
                            hi = gap.meets_yes_threshold(count, n2, k2, eps)
                            lo = gap.meets_no_threshold(count, n2, k2, eps)
                            if hi and not lo:
                                assert exact_answer is True
                            if lo and not hi:
                                assert exact_answer is False
                                assert detect_answer is False
                            if detect_answer:
                                assert hi
