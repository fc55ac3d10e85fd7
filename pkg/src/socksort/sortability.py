"""Decide single-foot sortability three ways: memoized search, relabeling, brute force.

The primary decider searches machine runs under the rule that the emitted
line must stay extendable to a sorted one. Its state drops the emitted
output entirely: future legality depends only on the input position, the
run-length-compressed foot, which color block is currently open, and which
colors are finished.
"""

from __future__ import annotations

from typing import NamedTuple

from .core import BudgetExceeded, SockOrdering
from .foot import Certificate, Move

DEFAULT_DECISION_BUDGET = 10**7
DEFAULT_RELABEL_COLOR_LIMIT = 10
BRUTE_FORCE_LENGTH_LIMIT = 12


class DecisionState(NamedTuple):
    """Memo key for the sortability search."""

    input_index: int
    stack_runs: tuple[tuple[int, int], ...]
    open_color: int | None
    closed: frozenset[int]


def _push_run(runs: tuple[tuple[int, int], ...], color: int) -> tuple[tuple[int, int], ...]:
    if runs and runs[-1][0] == color:
        return runs[:-1] + ((color, runs[-1][1] + 1),)
    return runs + ((color, 1),)


def _pop_run(runs: tuple[tuple[int, int], ...]) -> tuple[tuple[int, int], ...]:
    color, count = runs[-1]
    if count == 1:
        return runs[:-1]
    return runs[:-1] + ((color, count - 1),)


def is_foot_sortable(
    rho: SockOrdering, node_budget: int = DEFAULT_DECISION_BUDGET
) -> tuple[bool, Certificate | None]:
    """Exact decision with a replayable certificate on success.

    A pop of color x is legal iff x matches the open output block, or no
    block is open. A block closes as soon as its color has no copies left
    on the foot or in the input, which keeps the state normalized. Pops are
    tried before pushes, so certificates emit greedily.
    """
    word = rho.word
    n = len(word)
    # remaining[c] = copies of c on the foot plus in the unread input
    remaining = [0] * (rho.n_colors + 1)
    for c in word:
        remaining[c] += 1
    failed: set[DecisionState] = set()
    path: list[Move] = []
    nodes = 0

    def solve(i: int, runs: tuple[tuple[int, int], ...], open_color: int | None,
              closed: frozenset[int]) -> bool:
        nonlocal nodes
        if i == n and not runs:
            return True
        state = DecisionState(i, runs, open_color, closed)
        if state in failed:
            return False
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded(f"sortability search exceeded {node_budget} nodes")
        if runs:
            top = runs[-1][0]
            if open_color is None or top == open_color:
                remaining[top] -= 1
                if remaining[top] == 0:
                    new_open, new_closed = None, closed | {top}
                else:
                    new_open, new_closed = top, closed
                path.append(Move.POP)
                if solve(i, _pop_run(runs), new_open, new_closed):
                    return True
                path.pop()
                remaining[top] += 1
        if i < n:
            path.append(Move.PUSH)
            if solve(i + 1, _push_run(runs, word[i]), open_color, closed):
                return True
            path.pop()
        failed.add(state)
        return False

    if solve(0, (), None, frozenset()):
        return True, Certificate(n=n, moves=tuple(path))
    return False, None


def _contains_231(values: list[int]) -> bool:
    """231 occurrence check over a fully assigned word, via prefix bitmasks."""
    m = len(values)
    seen_mask = 0
    masks = []  # masks[j] = bitmask of values strictly before position j
    for x in values:
        masks.append(seen_mask)
        seen_mask |= 1 << x
    for j in range(m):
        vj = values[j]
        if vj < 3:
            continue
        between_all = (1 << vj) - 1
        for k in range(j + 1, m):
            vk = values[k]
            if vk >= vj - 1:
                continue
            # any earlier value strictly between vk and vj?
            if masks[j] & between_all & ~((1 << (vk + 1)) - 1):
                return True
    return False


def is_foot_sortable_via_relabeling(
    rho: SockOrdering, max_colors: int = DEFAULT_RELABEL_COLOR_LIMIT
) -> bool:
    """True iff some renaming of the colors yields a 231-avoiding word.

    Searches color images lexicographically, pruning as soon as the
    partially relabeled word already contains 231.
    """
    n = rho.n_colors
    if n > max_colors:
        raise BudgetExceeded(
            f"relabeling search limited to {max_colors} colors, got {n}"
        )
    word = rho.word
    image = [0] * (n + 1)
    free = [True] * (n + 1)

    def assigned_word(upto: int) -> list[int]:
        return [image[c] for c in word if c <= upto]

    def extend(color: int) -> bool:
        if color > n:
            return True
        for v in range(1, n + 1):
            if not free[v]:
                continue
            image[color] = v
            free[v] = False
            if not _contains_231(assigned_word(color)) and extend(color + 1):
                return True
            free[v] = True
        image[color] = 0
        return False

    return extend(1)


def brute_force_oracle(rho: SockOrdering) -> bool:
    """Reference decision: explore every raw machine configuration.

    No state compression; configurations keep the full emitted output, and
    sortedness is only tested on completed runs. Guarded to short inputs.
    """
    n = len(rho)
    if n > BRUTE_FORCE_LENGTH_LIMIT:
        raise ValueError(
            f"brute force oracle limited to length {BRUTE_FORCE_LENGTH_LIMIT}, got {n}"
        )
    word = rho.word
    start = ((), (), 0)  # output, foot, input position
    seen = {start}
    todo = [start]
    while todo:
        out, stack, i = todo.pop()
        if i == n and not stack:
            if _output_sorted(out):
                return True
            continue
        if i < n:
            nxt = (out, stack + (word[i],), i + 1)
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
        if stack:
            nxt = (out + (stack[-1],), stack[:-1], i)
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return False


def _output_sorted(out: tuple[int, ...]) -> bool:
    finished: set[int] = set()
    cur = None
    for c in out:
        if c != cur:
            if c in finished:
                return False
            finished.add(c)
            cur = c
    return True
