"""Gap-producing reduction from left-aligned detection to promise counting.

Given a pattern pi (length k), a text tau (length n) and a rational
0 < epsilon < 1/2, the reduction sets alpha = ceil(2/epsilon).  Small
inputs (n below a threshold exponential in alpha/epsilon) are decided
outright by exact left-aligned counting and replaced by a canonical
trivial instance; large inputs are inflated: the pattern's leftmost
element becomes an increasing run of length alpha*k and the text's
leftmost element becomes a layered permutation with alpha*k layers of
size n^alpha (the "initial blocks").  A left-aligned copy then fans out
into at least n^(alpha^2 k) copies, while the absence of one caps the
count at binomial(n-1, k') -- the two sides of the promise gap.

Every inequality here is checked in exact integer arithmetic; rational
exponents are cleared by raising both sides to the exponent denominator.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, comb

from permpat.core import Permutation, inflate, layered, standardize
from permpat.matching import (
    BigCount,
    contains_left_aligned,
    count_copies,
    count_left_aligned,
    enumerate_embeddings,
)

DEFAULT_MAX_TEXT_LEN = 10**6

TRIVIAL_YES = (Permutation((1,)), Permutation((1,)))
TRIVIAL_NO = (Permutation((1, 2)), Permutation((2, 1)))


def _max_text_len(override: int | None) -> int:
    if override is not None:
        return override
    env = os.environ.get("PERMPAT_MAX_TEXT_LEN")
    return int(env) if env else DEFAULT_MAX_TEXT_LEN


@dataclass(frozen=True)
class GapParams:
    epsilon: Fraction
    alpha: int
    k: int
    n: int
    below_threshold: bool


def gap_params(epsilon: Fraction, k: int, n: int) -> GapParams:
    """Reduction parameters for a given epsilon, pattern and text length.

    alpha = ceil(2/epsilon); the threshold test n < ((alpha+1)*k)^(2*alpha/epsilon)
    is evaluated exactly as n^p < ((alpha+1)*k)^(2*alpha*q) for epsilon = p/q.
    """
    epsilon = Fraction(epsilon)
    if not (0 < epsilon < Fraction(1, 2)):
        raise ValueError("epsilon must lie strictly between 0 and 1/2")
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    alpha = ceil(Fraction(2) / epsilon)
    p, q = epsilon.numerator, epsilon.denominator
    below = n**p < ((alpha + 1) * k) ** (2 * alpha * q)
    return GapParams(epsilon=epsilon, alpha=alpha, k=k, n=n, below_threshold=below)


def inflated_lengths(n: int, k: int, alpha: int) -> tuple[int, int]:
    """Lengths (k', n') of the inflated pattern and text:
    k' = alpha*k + (k-1) and n' = n - 1 + alpha*k*n^alpha."""
    return alpha * k + (k - 1), n - 1 + alpha * k * n**alpha


@dataclass(frozen=True)
class GapInstance:
    pattern: Permutation
    text: Permutation
    k_prime: int
    n_prime: int
    branch: str  # trivial_yes | trivial_no | inflated
    initial_block_pattern_len: int
    initial_block_text_len: int
    epsilon: Fraction | None = None
    alpha: int | None = None

    def to_json_obj(self) -> dict:
        return {
            "pattern": self.pattern.to_text(),
            "text": self.text.to_text(),
            "k_prime": self.k_prime,
            "n_prime": self.n_prime,
            "branch": self.branch,
            "initial_block_pattern_len": self.initial_block_pattern_len,
            "initial_block_text_len": self.initial_block_text_len,
            "epsilon": str(self.epsilon) if self.epsilon is not None else None,
            "alpha": self.alpha,
        }


def build_core(
    pi: Permutation,
    tau: Permutation,
    alpha: int,
    max_text_len: int | None = None,
) -> tuple[Permutation, Permutation]:
    """The inflation step alone, for an explicit alpha.

    Exposed separately because the threshold test forces the trivial branch
    for every desk-scale text, so only the alpha-parametrized core can be
    exercised against brute force.  Inflated texts above the safety cap
    (default 10^6, env PERMPAT_MAX_TEXT_LEN) are rejected.
    """
    k, n = len(pi), len(tau)
    if k < 1 or n < 1:
        raise ValueError("empty inputs")
    if alpha < 1:
        raise ValueError("alpha must be positive")
    _, n_prime = inflated_lengths(n, k, alpha)
    if n_prime > _max_text_len(max_text_len):
        raise ValueError("instance too large")
    one = Permutation((1,))
    pattern_blocks = [Permutation.increasing(alpha * k)] + [one] * (k - 1)
    text_blocks = [layered([n**alpha] * (alpha * k))] + [one] * (n - 1)
    return inflate(pi, pattern_blocks), inflate(tau, text_blocks)


def build_gap_instance(
    pi: Permutation,
    tau: Permutation,
    epsilon: Fraction,
    max_text_len: int | None = None,
) -> GapInstance:
    """Full reduction: decide small inputs exactly, inflate large ones."""
    params = gap_params(epsilon, len(pi), len(tau))
    if params.below_threshold:
        if count_left_aligned(pi, tau) > 0:
            pattern, text = TRIVIAL_YES
            branch = "trivial_yes"
        else:
            pattern, text = TRIVIAL_NO
            branch = "trivial_no"
        return GapInstance(
            pattern=pattern,
            text=text,
            k_prime=len(pattern),
            n_prime=len(text),
            branch=branch,
            initial_block_pattern_len=0,
            initial_block_text_len=0,
            epsilon=params.epsilon,
            alpha=params.alpha,
        )
    alpha, k, n = params.alpha, params.k, params.n
    pattern, text = build_core(pi, tau, alpha, max_text_len)
    k_prime, n_prime = inflated_lengths(n, k, alpha)
    return GapInstance(
        pattern=pattern,
        text=text,
        k_prime=k_prime,
        n_prime=n_prime,
        branch="inflated",
        initial_block_pattern_len=alpha * k,
        initial_block_text_len=alpha * k * n**alpha,
        epsilon=params.epsilon,
        alpha=alpha,
    )


def copies_touching_initial_block(gap: GapInstance) -> BigCount:
    """Number of pattern copies using at least one initial-block element.

    Counted as the difference between the total and the count within the
    re-ranked text suffix that survives removing the initial block.  Must
    be 0 whenever the source was a no-instance of left-aligned detection.
    """
    if gap.branch != "inflated":
        raise ValueError("not an inflated instance")
    total = count_copies(gap.pattern, gap.text)
    suffix_values = gap.text.values[gap.initial_block_text_len :]
    if len(suffix_values) < len(gap.pattern):
        return total
    suffix = standardize(suffix_values)
    return total - count_copies(gap.pattern, suffix)


@dataclass(frozen=True)
class BoundCheck:
    name: str
    holds: bool


@dataclass(frozen=True)
class BoundsReport:
    epsilon: Fraction
    alpha: int
    k: int
    n: int
    k_prime: int
    n_prime: int
    checks: tuple[BoundCheck, ...]

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks)

    def to_json_obj(self) -> dict:
        return {
            "epsilon": str(self.epsilon),
            "alpha": self.alpha,
            "k": self.k,
            "n": str(self.n),
            "k_prime": self.k_prime,
            "n_prime_digits": len(str(self.n_prime)),
            "checks": [{"name": c.name, "holds": c.holds} for c in self.checks],
            "all_hold": self.all_hold,
        }


def initial_block_bounds(n: int, k: int, alpha: int) -> tuple[bool, bool]:
    """The two structural size comparisons n^alpha <= n' <= (alpha+1)*k*n^alpha.

    Usable for any alpha >= 1, independent of the threshold test.
    """
    _, n_prime = inflated_lengths(n, k, alpha)
    return (n**alpha <= n_prime, n_prime <= (alpha + 1) * k * n**alpha)


def check_bounds(n: int, k: int, epsilon: Fraction) -> BoundsReport:
    """Exact verification of the inequality chains behind the gap.

    Requires the above-threshold regime (n >= ((alpha+1)*k)^(2*alpha/epsilon));
    every comparison is performed on integers after clearing the rational
    exponents by raising both sides to the exponent denominator.
    """
    params = gap_params(epsilon, k, n)
    if params.below_threshold:
        raise ValueError("threshold precondition unmet")
    alpha = params.alpha
    p, q = params.epsilon.numerator, params.epsilon.denominator
    k_prime, n_prime = inflated_lengths(n, k, alpha)
    n_alpha = n**alpha
    big = (alpha + 1) * k
    checks = (
        BoundCheck("n^alpha <= n'", n_alpha <= n_prime),
        BoundCheck("n' <= (alpha+1)*k*n^alpha", n_prime <= big * n_alpha),
        BoundCheck(
            "(alpha+1)*k*n^alpha <= n^(eps/(2 alpha)) * n^alpha",
            big ** (2 * alpha * q) <= n**p,
        ),
        BoundCheck(
            "n^(alpha^2 k) >= n'^((1-eps) k')",
            n ** (alpha * alpha * k * q) >= n_prime ** ((q - p) * k_prime),
        ),
        BoundCheck("binom(n-1, k') <= n^k'", comb(n - 1, k_prime) <= n**k_prime),
        BoundCheck("n^k' <= n'^(k'/alpha)", n ** (k_prime * alpha) <= n_prime**k_prime),
        BoundCheck(
            "n'^(k'/alpha) < n'^(eps k')",
            n_prime ** (k_prime * q) < n_prime ** (p * alpha * k_prime),
        ),
    )
    return BoundsReport(
        epsilon=params.epsilon,
        alpha=alpha,
        k=k,
        n=n,
        k_prime=k_prime,
        n_prime=n_prime,
        checks=checks,
    )


def decide_via_approx(pi: Permutation, tau: Permutation, estimate: BigCount) -> bool:
    """Positive answer iff the estimate exceeds n^(k/2), compared exactly
    as estimate^2 > n^k."""
    return estimate * estimate > len(tau) ** len(pi)


def meets_yes_threshold(count: BigCount, n: int, k: int, epsilon: Fraction) -> bool:
    """Exact test of count >= n^((1-epsilon)*k) for epsilon = p/q."""
    epsilon = Fraction(epsilon)
    p, q = epsilon.numerator, epsilon.denominator
    return count**q >= n ** ((q - p) * k)


def meets_no_threshold(count: BigCount, n: int, k: int, epsilon: Fraction) -> bool:
    """Exact test of count <= n^(epsilon*k) for epsilon = p/q."""
    epsilon = Fraction(epsilon)
    p, q = epsilon.numerator, epsilon.denominator
    return count**q <= n ** (p * k)


@dataclass(frozen=True)
class CoreReport:
    """Outcome of the yes/no-case property battery for one (pi, tau, alpha)."""

    source_has_left_aligned_copy: bool
    k_prime: int
    n_prime: int
    total_copies: BigCount
    touching_initial_block: BigCount
    size_bounds_hold: bool
    yes_lower_bound_holds: bool | None
    no_upper_bound_holds: bool | None
    block_usage_lemma_holds: bool | None
    checks_pass: bool

    def to_json_obj(self) -> dict:
        return {
            "source_has_left_aligned_copy": self.source_has_left_aligned_copy,
            "k_prime": self.k_prime,
            "n_prime": self.n_prime,
            "total_copies": str(self.total_copies),
            "touching_initial_block": str(self.touching_initial_block),
            "size_bounds_hold": self.size_bounds_hold,
            "yes_lower_bound_holds": self.yes_lower_bound_holds,
            "no_upper_bound_holds": self.no_upper_bound_holds,
            "block_usage_lemma_holds": self.block_usage_lemma_holds,
            "checks_pass": self.checks_pass,
        }


def verify_core(
    pi: Permutation,
    tau: Permutation,
    alpha: int,
    max_text_len: int | None = None,
) -> CoreReport:
    """Check the structural claims of the inflation on one desk-scale input.

    Yes-side: at least n^(alpha^2 k) copies.  No-side: no copy touches the
    initial block and the total is at most binomial(n-1, k').  Either way,
    when alpha*k >= 2 every embedding uses at most alpha*k initial-block
    positions.
    """
    k, n = len(pi), len(tau)
    pattern, text = build_core(pi, tau, alpha, max_text_len)
    k_prime, n_prime = inflated_lengths(n, k, alpha)
    block_len = alpha * k * n**alpha
    gap = GapInstance(
        pattern=pattern,
        text=text,
        k_prime=k_prime,
        n_prime=n_prime,
        branch="inflated",
        initial_block_pattern_len=alpha * k,
        initial_block_text_len=block_len,
        alpha=alpha,
    )
    yes_side = contains_left_aligned(pi, tau)
    total = count_copies(pattern, text)
    touching = copies_touching_initial_block(gap)
    size_ok = all(initial_block_bounds(n, k, alpha))

    yes_ok: bool | None = None
    no_ok: bool | None = None
    if yes_side:
        yes_ok = total >= n ** (alpha * alpha * k)
    else:
        no_ok = touching == 0 and total <= comb(n - 1, k_prime)

    lemma_ok: bool | None = None
    if alpha * k >= 2:
        embeddings, truncated = enumerate_embeddings(pattern, text, cap=total + 1)
        lemma_ok = not truncated and all(
            sum(1 for pos in emb if pos <= block_len) <= alpha * k for emb in embeddings
        )

    checks = [size_ok]
    checks += [yes_ok] if yes_ok is not None else []
    checks += [no_ok] if no_ok is not None else []
    checks += [lemma_ok] if lemma_ok is not None else []
    return CoreReport(
        source_has_left_aligned_copy=yes_side,
        k_prime=k_prime,
        n_prime=n_prime,
        total_copies=total,
        touching_initial_block=touching,
        size_bounds_hold=size_ok,
        yes_lower_bound_holds=yes_ok,
        no_upper_bound_holds=no_ok,
        block_usage_lemma_holds=lemma_ok,
        checks_pass=all(checks),
    )
