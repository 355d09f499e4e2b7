"""Pattern detection, exact and approximate counting, left-aligned variants.

A copy of a pattern pi in a text tau is an index-increasing subsequence of
tau order-isomorphic to pi; the tuple of (1-based) text positions is the
embedding.  A copy is left-aligned when it uses the first text position.

Counting functions return exact Python integers (never floats); counts can
exceed machine words.  The hot search loops live in the kernel backend; the
naive subset-enumeration counter is kept separate as an independent oracle.
"""
from __future__ import annotations

from itertools import combinations
from math import isqrt
from typing import Iterator

from permpat import backend
from permpat._kernels_py import order_constraints
from permpat.core import Permutation, delete_leftmost

BigCount = int
Embedding = tuple[int, ...]


def _require_pattern(pi: Permutation) -> None:
    if len(pi) == 0:
        raise ValueError("empty pattern")


def _require_nonempty(pi: Permutation, tau: Permutation) -> None:
    if len(pi) == 0 or len(tau) == 0:
        raise ValueError("empty inputs")


def contains(pi: Permutation, tau: Permutation) -> bool:
    """Whether tau contains a copy of pi."""
    _require_pattern(pi)
    if len(pi) > len(tau):
        return False
    return backend.count_pattern(pi.values, tau.values, limit=1) > 0


def contains_left_aligned(pi: Permutation, tau: Permutation) -> bool:
    """Whether tau contains a copy of pi using the first text position."""
    _require_nonempty(pi, tau)
    if len(pi) > len(tau):
        return False
    return backend.count_pattern(pi.values, tau.values, pin_first=True, limit=1) > 0


def count_copies(pi: Permutation, tau: Permutation) -> BigCount:
    """Exact number of copies of pi in tau (pruned backtracking)."""
    _require_pattern(pi)
    if len(pi) > len(tau):
        return 0
    return backend.count_pattern(pi.values, tau.values)


def count_copies_naive(pi: Permutation, tau: Permutation) -> BigCount:
    """Oracle counter: test every k-subset of text positions.

    Deliberately independent of the backtracking path; exponentially slower
    and intended for cross-checking at small sizes only.
    """
    _require_pattern(pi)
    k, n = len(pi), len(tau)
    if k > n:
        return 0
    pat = pi.values
    txt = tau.values
    pairs = [(a, b) for a in range(k) for b in range(a + 1, k)]
    total = 0
    for comb in combinations(range(n), k):
        if all((pat[a] < pat[b]) == (txt[comb[a]] < txt[comb[b]]) for a, b in pairs):
            total += 1
    return total


def count_left_aligned(pi: Permutation, tau: Permutation) -> BigCount:
    """Exact number of left-aligned copies of pi in tau.

    Computed two ways -- direct pinned backtracking, and as
    count_copies(pi, tau) - count_copies(pi, tau without its leftmost
    element) -- which must agree.
    """
    _require_nonempty(pi, tau)
    direct = count_left_aligned_direct(pi, tau)
    diff = count_left_aligned_by_difference(pi, tau)
    if direct != diff:
        raise RuntimeError(
            f"left-aligned count mismatch: direct {direct} != difference {diff}"
        )
    return direct


def count_left_aligned_direct(pi: Permutation, tau: Permutation) -> BigCount:
    """Left-aligned count by backtracking with the first position pinned."""
    _require_nonempty(pi, tau)
    if len(pi) > len(tau):
        return 0
    return backend.count_pattern(pi.values, tau.values, pin_first=True)


def count_left_aligned_by_difference(pi: Permutation, tau: Permutation) -> BigCount:
    """Left-aligned count as the difference of two unrestricted counts.

    Every copy either uses the first text position or survives its removal,
    so the left-aligned count is count(pi, tau) - count(pi, tau').
    """
    _require_nonempty(pi, tau)
    return count_copies(pi, tau) - count_copies(pi, delete_leftmost(tau))


def count_inversions(tau: Permutation) -> BigCount:
    """Number of inversions, i.e. copies of 2 1; O(n log n) merge counting."""
    return backend.count_inversions(tau.values)


def _embeddings(pattern: tuple[int, ...], text: tuple[int, ...], pin_first: bool) -> Iterator[tuple[int, ...]]:
    """Yield embeddings as 0-based index tuples in lexicographic order."""
    k, n = len(pattern), len(text)
    if k > n:
        return
    pred, succ = order_constraints(pattern)
    idx = [0] * k
    val = [0] * k

    def rec(j: int, start: int) -> Iterator[tuple[int, ...]]:
        lo = val[pred[j]] if pred[j] >= 0 else 0
        hi = val[succ[j]] if succ[j] >= 0 else n + 1
        last = 0 if (pin_first and j == 0) else n - (k - j)
        for i in range(start, last + 1):
            v = text[i]
            if lo < v < hi:
                idx[j] = i
                val[j] = v
                if j == k - 1:
                    yield tuple(idx)
                else:
                    yield from rec(j + 1, i + 1)

    yield from rec(0, 0)


def enumerate_embeddings(
    pi: Permutation,
    tau: Permutation,
    cap: int,
    require_left_aligned: bool = False,
) -> tuple[list[Embedding], bool]:
    """List embeddings of pi into tau as 1-based index tuples.

    Embeddings come in lexicographic index order; at most ``cap`` are
    returned and the second component reports whether the cap cut the
    enumeration short.
    """
    _require_pattern(pi)
    if cap < 1:
        raise ValueError("cap must be positive")
    out: list[Embedding] = []
    truncated = False
    for emb in _embeddings(pi.values, tau.values, require_left_aligned):
        if len(out) == cap:
            truncated = True
            break
        out.append(tuple(i + 1 for i in emb))
    return out, truncated


def approx_count(pi: Permutation, tau: Permutation) -> BigCount:
    """Detection-based estimate of the copy count.

    Returns 0 when tau avoids pi, and otherwise the canonical integer
    estimate isqrt(n^k), the integer square root of the exact power.  The
    ideal estimate's square is exactly n^k, giving multiplicative error at
    most n^(k/2) in squared-integer form: n^k <= C^2 * n^k and
    C^2 <= n^k * n^k whenever the true count C is at least 1.
    """
    _require_nonempty(pi, tau)
    if not contains(pi, tau):
        return 0
    return isqrt(len(tau) ** len(pi))
