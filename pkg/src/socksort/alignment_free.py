"""Alignment-free 2-uniform orderings and their permutation side.

When every color appears exactly twice and the first n socks are pairwise
distinct, the ordering is determined by the permutation formed by the
second halves. This module carries that bijection, the spread-out predicate
that characterizes the single-foot sortable members, a constructive sorter
for them, and the Fibonacci enumeration of the class.
"""

from __future__ import annotations

from typing import Sequence

from .core import SockOrdering, contains, standardize, word_contains, PATTERN_AABB
from .foot import Certificate, Move

#: Permutations of the 14 minimal obstructions to single-foot sortability
#: within the alignment-free 2-uniform class.
FORBIDDEN_SIGMAS: tuple[tuple[int, ...], ...] = tuple(
    tuple(int(ch) for ch in s)
    for s in (
        "54123", "1234", "2314",
        "54132", "1243", "3124",
        "54213", "1324", "3142",
        "45132", "2134", "3214",
        "45213", "2143",
    )
)

_SUFFIX_PATTERNS = ((1, 2, 3), (1, 3, 2), (2, 1, 3))


def _check_permutation(sigma: Sequence[int]) -> tuple[int, ...]:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{len(sigma)}")
    return sigma


def sigma_of(rho: SockOrdering) -> tuple[int, ...]:
    """The permutation read off the second half of an alignment-free ordering."""
    if not is_alignment_free(rho):
        raise ValueError(f"{rho} is not an alignment-free 2-uniform ordering")
    n = rho.n_colors
    return rho.word[n:]


def rho_of(sigma: Sequence[int]) -> SockOrdering:
    """Inverse of :func:`sigma_of`: the word 1..n followed by sigma."""
    sigma = _check_permutation(sigma)
    n = len(sigma)
    return SockOrdering(tuple(range(1, n + 1)) + sigma)


def is_alignment_free(rho: SockOrdering) -> bool:
    """First n socks all distinct; equivalently, the aabb pattern is avoided."""
    if not rho.is_uniform(2):
        raise ValueError(f"{rho} is not 2-uniform")
    n = rho.n_colors
    by_prefix = len(set(rho.word[:n])) == n
    by_pattern = not contains(rho, PATTERN_AABB)
    assert by_prefix == by_pattern, "alignment characterizations disagree"
    return by_prefix


def _suffix_avoids(suffix: Sequence[int]) -> bool:
    return not any(word_contains(suffix, p) for p in _SUFFIX_PATTERNS)


def _is_descending_with_disjoint_swaps(perm: Sequence[int]) -> bool:
    """Does ``perm`` equal m(m-1)...1 with some disjoint adjacent pairs swapped?"""
    m = len(perm)
    i = 0
    while i < m:
        want = m - i
        if perm[i] == want:
            i += 1
        elif i + 1 < m and perm[i] == want - 1 and perm[i + 1] == want:
            i += 2
        else:
            return False
    return True


def is_spread_out(sigma: Sequence[int]) -> bool:
    """The sortability criterion on the permutation side.

    Either sigma(1) < n and sigma(2..n) avoids 123, 132 and 213, or
    sigma(1) = n and sigma(3..n) avoids them. Cross-checked against the
    equivalent "descending with disjoint adjacent swaps" description of the
    avoidance class.
    """
    sigma = _check_permutation(sigma)
    n = len(sigma)
    if n == 0:
        return True
    suffix = sigma[1:] if sigma[0] < n else sigma[2:]
    primary = _suffix_avoids(suffix)
    cross = _is_descending_with_disjoint_swaps(standardize(suffix)) if suffix else True
    assert primary == cross, f"spread-out characterizations disagree on {sigma}"
    return primary


def _ascending_runs(seq: Sequence[int]) -> list[list[int]]:
    runs: list[list[int]] = []
    for x in seq:
        if runs and runs[-1][-1] < x:
            runs[-1].append(x)
        else:
            runs.append([x])
    return runs


def spread_out_sorter(rho: SockOrdering) -> Certificate:
    """Single-foot sorting certificate for a spread-out ordering.

    Phase 1 loads the first n socks, emitting the one early color on the
    way. Phase 2 clears the prefix of the second half that involves that
    color (and the largest color, when it leads), then handles the rest as
    ascending runs of size 1 or 2: the run's colors sit outermost on the
    foot, so pairing each first sock with its incoming twin empties a run
    in a handful of moves.
    """
    sigma = sigma_of(rho)
    if not is_spread_out(sigma):
        raise ValueError(f"{rho} is not spread-out; no certificate exists")
    n = len(sigma)
    moves: list[Move] = []
    early = sigma[0] if sigma[0] < n or n == 1 else sigma[1]

    # Phase 1: load 1..n, dropping the early color straight through.
    for c in range(1, n + 1):
        moves.append(Move.PUSH)
        if c == early:
            moves.append(Move.POP)

    # Phase 2 prologue: finish the early color; when the largest color
    # leads the second half it rides along and comes off first.
    if sigma[0] == early:
        moves += [Move.PUSH, Move.POP]
        rest = sigma[1:]
    else:
        moves += [Move.PUSH, Move.PUSH, Move.POP, Move.POP, Move.POP]
        rest = sigma[2:]

    for run in _ascending_runs(rest):
        if len(run) == 1:
            moves += [Move.PUSH, Move.POP, Move.POP]
        elif len(run) == 2:
            moves += [Move.POP, Move.PUSH, Move.PUSH, Move.POP, Move.POP, Move.POP]
        else:
            raise RuntimeError(
                f"ascending run {run} of size {len(run)} in a spread-out ordering"
            )
    return Certificate(n=2 * n, moves=tuple(moves))


def fibonacci(k: int) -> int:
    """F(1) = F(2) = 1."""
    if k < 1:
        raise ValueError("defined for k >= 1")
    if k <= 2:
        return 1
    a, b = 1, 1
    for _ in range(k - 2):
        a, b = b, a + b
    return b


def count_foot_sortable_af(n: int) -> int:
    """(n-1) * F(n+1): single-foot sortable alignment-free orderings, n colors."""
    if n < 2:
        raise ValueError("defined for n >= 2")
    return (n - 1) * fibonacci(n + 1)


def forbidden_patterns() -> list[SockOrdering]:
    """The 14 alignment-free obstructions, as canonical orderings."""
    return [rho_of(sigma) for sigma in FORBIDDEN_SIGMAS]


def count_avoiders(m: int) -> int:
    """|Av_m(123, 132, 213)| by exhaustive pruned search over S_m.

    Grows permutations left to right, discarding a prefix as soon as it
    contains one of the three patterns; every pruned branch is patternless
    extension-free, so leaves at depth m are exactly the avoiders. The
    feasibility test is O(1): a new value x is safe iff at most one earlier
    value is below x (else 123 or 213) and no earlier value above x follows
    the minimum (else 132).
    """
    if m < 0:
        raise ValueError("defined for m >= 0")
    if m == 0:
        return 1
    count = 0
    used = [False] * (m + 1)

    def extend(depth: int, m1: int, m2: int, max_after_m1: int) -> None:
        nonlocal count
        if depth == m:
            count += 1
            return
        for x in range(1, m + 1):
            if used[x]:
                continue
            if x > m2:
                continue  # two earlier values below x
            if m1 < x < max_after_m1:
                continue  # earlier low value, later high value
            used[x] = True
            if x < m1:
                extend(depth + 1, x, m1, 0)
            else:
                extend(depth + 1, m1, min(m2, x), max(max_after_m1, x))
            used[x] = False

    big = m + 1
    extend(0, big, big, 0)
    return count
