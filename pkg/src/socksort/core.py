"""Sock orderings as canonical words, with pattern containment and generators.

A sock ordering is a line of colored socks considered up to renaming of the
colors, i.e. a set partition of the positions {1..N}. We represent each
ordering by its restricted-growth word: colors are numbered 1, 2, ... in
order of first appearance, so two lines of socks are equal exactly when
their canonical words are equal.
"""

from __future__ import annotations

import string
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence


class ParseError(ValueError):
    """Raised when a textual ordering cannot be tokenized."""


class BudgetExceeded(RuntimeError):
    """A capped search ran out of its node budget before reaching an answer."""


DEFAULT_CONTAINS_BUDGET = 10**7


@dataclass(frozen=True)
class SockOrdering:
    """Canonical (restricted-growth) word of a sock ordering.

    Invariants enforced at construction: the first letter is 1, and each
    letter exceeds the running maximum by at most one. Use ``canonicalize``
    to build one from an arbitrary word.
    """

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "word", tuple(self.word))
        seen_max = 0
        for i, c in enumerate(self.word):
            if not isinstance(c, int) or c < 1:
                raise ValueError(f"colors must be positive integers, got {c!r}")
            if c > seen_max + 1:
                raise ValueError(
                    f"word not canonical at position {i}: {c} after running max {seen_max}"
                )
            if c > seen_max:
                seen_max = c

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.word)

    @property
    def n_colors(self) -> int:
        return max(self.word, default=0)

    def multiplicities(self) -> Counter[int]:
        """Number of socks of each color."""
        return Counter(self.word)

    def is_uniform(self, r: int) -> bool:
        """True iff every color occurs exactly ``r`` times."""
        return all(v == r for v in self.multiplicities().values())

    def letters(self) -> str:
        """Render with color letters a, b, c, ... (at most 26 colors)."""
        if self.n_colors > 26:
            raise ValueError("letter form supports at most 26 colors")
        return "".join(string.ascii_lowercase[c - 1] for c in self.word)


def canonicalize(letters: Sequence[int]) -> SockOrdering:
    """Relabel colors by order of first appearance. Idempotent."""
    relabel: dict[int, int] = {}
    out = []
    for c in letters:
        if c not in relabel:
            relabel[c] = len(relabel) + 1
        out.append(relabel[c])
    return SockOrdering(tuple(out))


def parse(text: str) -> SockOrdering:
    """Parse letter form (``abaacb``) or integer form (``1 2 1 1 3 2`` or ``121132``).

    Whitespace-separated tokens must be single letters a-z or positive
    integers; without whitespace every character is one token. Mixing
    letters and digits is an error.
    """
    stripped = text.strip()
    if not stripped:
        return SockOrdering(())
    tokens = stripped.split() if any(ch.isspace() for ch in stripped) else list(stripped)
    values: list[int] = []
    kind = None  # "letters" or "integers"
    for tok in tokens:
        if tok.isdigit():
            tok_kind = "integers"
            v = int(tok)
            if v < 1:
                raise ParseError(f"colors must be positive integers: token {tok!r}")
        elif len(tok) == 1 and tok in string.ascii_lowercase:
            tok_kind = "letters"
            v = ord(tok) - ord("a") + 1
        else:
            raise ParseError(f"unrecognized token {tok!r}")
        if kind is None:
            kind = tok_kind
        elif kind != tok_kind:
            raise ParseError(f"mixed letter/integer alphabet at token {tok!r}")
        values.append(v)
    return canonicalize(values)


def is_sorted(rho: SockOrdering) -> bool:
    """True iff each color's socks appear consecutively."""
    return _blocks_contiguous(rho.word)


def _blocks_contiguous(word: Sequence[int]) -> bool:
    seen: set[int] = set()
    cur = None
    for c in word:
        if c != cur:
            if c in seen:
                return False
            seen.add(c)
            cur = c
    return True


def contains(
    rho: SockOrdering, pi: SockOrdering, node_budget: int = DEFAULT_CONTAINS_BUDGET
) -> bool:
    """True iff ``pi`` can be obtained from ``rho`` by deleting socks.

    Containment is up to renaming of colors: we search for a subsequence of
    ``rho`` whose canonical word equals ``pi``'s, i.e. for an injective map
    of pattern colors to host colors realizing the pattern. Backtracking
    with per-color multiplicity pruning; raises :class:`BudgetExceeded`
    after ``node_budget`` match attempts.
    """
    hw, pw = rho.word, pi.word
    if len(pw) > len(hw):
        return False
    if not pw:
        return True

    # Multiset feasibility: k-th largest pattern multiplicity must fit.
    host_counts = sorted(Counter(hw).values(), reverse=True)
    pat_counts = sorted(Counter(pw).values(), reverse=True)
    if len(pat_counts) > len(host_counts):
        return False
    if any(p > h for p, h in zip(pat_counts, host_counts)):
        return False

    # suffix_counts[k][c] = occurrences of host color c at positions >= k
    suffix_counts: list[Counter[int]] = [Counter() for _ in range(len(hw) + 1)]
    for k in range(len(hw) - 1, -1, -1):
        suffix_counts[k] = suffix_counts[k + 1].copy()
        suffix_counts[k][hw[k]] += 1
    pat_remaining: list[Counter[int]] = [Counter() for _ in range(len(pw) + 1)]
    for j in range(len(pw) - 1, -1, -1):
        pat_remaining[j] = pat_remaining[j + 1].copy()
        pat_remaining[j][pw[j]] += 1

    mapping: dict[int, int] = {}
    used_host: set[int] = set()
    nodes = 0

    def dfs(j: int, i: int) -> bool:
        nonlocal nodes
        if j == len(pw):
            return True
        pc = pw[j]
        bound = len(hw) - (len(pw) - j - 1)
        for k in range(i, bound):
            hc = hw[k]
            bound_color = mapping.get(pc)
            if bound_color is not None:
                if hc != bound_color:
                    continue
            else:
                if hc in used_host:
                    continue
                if suffix_counts[k][hc] < pat_remaining[j][pc]:
                    continue
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceeded(
                    f"containment search exceeded {node_budget} nodes"
                )
            fresh = bound_color is None
            if fresh:
                mapping[pc] = hc
                used_host.add(hc)
            if dfs(j + 1, k + 1):
                return True
            if fresh:
                del mapping[pc]
                used_host.discard(hc)
        return False

    return dfs(0, 0)


def enumerate_orderings(length: int) -> Iterator[SockOrdering]:
    """Yield every canonical ordering of the given length exactly once.

    Lexicographic over restricted-growth words; the count is the Bell number
    of ``length``.
    """
    if length < 0:
        raise ValueError("length must be nonnegative")
    if length == 0:
        yield SockOrdering(())
        return
    prefix = [1]

    def rec() -> Iterator[SockOrdering]:
        if len(prefix) == length:
            yield SockOrdering(tuple(prefix))
            return
        top = max(prefix)
        for c in range(1, top + 2):
            prefix.append(c)
            yield from rec()
            prefix.pop()

    yield from rec()


def standardize(letters: Sequence[int]) -> tuple[int, ...]:
    """Replace the i-th smallest value with i (equal values share a rank)."""
    for x in letters:
        if not isinstance(x, int) or x < 1:
            raise ValueError(f"word letters must be positive integers, got {x!r}")
    rank = {v: i + 1 for i, v in enumerate(sorted(set(letters)))}
    return tuple(rank[x] for x in letters)


def word_contains(
    w: Sequence[int], v: Sequence[int], node_budget: int = DEFAULT_CONTAINS_BUDGET
) -> bool:
    """True iff some subsequence of ``w`` standardizes to the pattern ``v``.

    ``v`` must itself be standardized (contract violation otherwise).
    """
    w = tuple(w)
    v = tuple(v)
    if standardize(v) != v:
        raise ValueError(f"pattern {v} is not standardized")
    if not v:
        return True
    if len(v) > len(w):
        return False

    chosen: list[int] = []
    nodes = 0

    def dfs(j: int, i: int) -> bool:
        nonlocal nodes
        if j == len(v):
            return True
        bound = len(w) - (len(v) - j - 1)
        for k in range(i, bound):
            x = w[k]
            if all(
                ((v[l] < v[j]) == (chosen[l] < x))
                and ((v[l] == v[j]) == (chosen[l] == x))
                for l in range(j)
            ):
                nodes += 1
                if nodes > node_budget:
                    raise BudgetExceeded(
                        f"word pattern search exceeded {node_budget} nodes"
                    )
                chosen.append(x)
                if dfs(j + 1, k + 1):
                    return True
                chosen.pop()
        return False

    return dfs(0, 0)


#: The pattern whose avoidance characterizes sorted orderings.
PATTERN_ABA = SockOrdering((1, 2, 1))

#: The alignment pattern; 2-uniform orderings avoiding it are alignment-free.
PATTERN_AABB = SockOrdering((1, 1, 2, 2))
