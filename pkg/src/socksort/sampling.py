"""Seeded random generators: orderings, machine runs, and sortable instances.

Everything takes an explicit ``random.Random`` so harness results are
reproducible from their seed alone.
"""

from __future__ import annotations

import random
from .core import SockOrdering, canonicalize
from .foot import Certificate, Move
from .multifoot import stratified


def random_ordering(
    rng: random.Random, length: int, n_colors: int | None = None
) -> SockOrdering:
    """A random canonical ordering; with ``n_colors`` set, exactly that many colors."""
    if n_colors is None:
        word: list[int] = []
        top = 0
        for _ in range(length):
            c = rng.randint(1, top + 1)
            word.append(c)
            top = max(top, c)
        return SockOrdering(tuple(word))
    if not 0 <= n_colors <= length:
        raise ValueError(f"cannot fit {n_colors} colors in {length} socks")
    values = list(range(1, n_colors + 1))
    values += [rng.randint(1, n_colors) for _ in range(length - n_colors)]
    rng.shuffle(values)
    return canonicalize(values)


def random_sorted(rng: random.Random, length: int) -> SockOrdering:
    """A random sorted ordering (random composition into color blocks)."""
    if length == 0:
        return SockOrdering(())
    n_blocks = rng.randint(1, length)
    cuts = sorted(rng.sample(range(1, length), n_blocks - 1))
    word: list[int] = []
    prev = 0
    for color, cut in enumerate([*cuts, length], start=1):
        word.extend([color] * (cut - prev))
        prev = cut
    return SockOrdering(tuple(word))


def random_stratified(rng: random.Random, n: int, r: int) -> SockOrdering:
    chunks = []
    for _ in range(r):
        p = list(range(1, n + 1))
        rng.shuffle(p)
        chunks.append(tuple(p))
    return stratified(n, chunks)


def random_run(rng: random.Random, rho: SockOrdering) -> tuple[SockOrdering, Certificate]:
    """One complete single-foot run drawn uniformly over legal moves."""
    word = rho.word
    n = len(word)
    stack: list[int] = []
    out: list[int] = []
    moves: list[Move] = []
    i = 0
    while len(out) < n:
        can_push = i < n
        can_pop = bool(stack)
        push = can_push and (not can_pop or rng.random() < 0.5)
        if push:
            stack.append(word[i])
            i += 1
            moves.append(Move.PUSH)
        else:
            out.append(stack.pop())
            moves.append(Move.POP)
    return canonicalize(out), Certificate(n=n, moves=tuple(moves))


def random_foot_sortable(rng: random.Random, length: int) -> SockOrdering:
    """A random single-foot sortable ordering.

    Runs the machine backwards from a random sorted line: un-pop moves the
    rightmost output sock onto the foot, un-push moves the top foot sock to
    the front of the input. The forward replay of the reversed moves sorts
    the result, so sortability holds by construction.
    """
    out = list(random_sorted(rng, length).word)
    stack: list[int] = []
    acc: list[int] = []  # input socks, rightmost first
    while out or stack:
        can_unpop = bool(out)
        can_unpush = bool(stack)
        unpop = can_unpop and (not can_unpush or rng.random() < 0.5)
        if unpop:
            stack.append(out.pop())
        else:
            acc.append(stack.pop())
    return canonicalize(acc[::-1])


def random_t_foot_sortable(rng: random.Random, length: int, t: int) -> SockOrdering:
    """A random t-foot sortable ordering, by the same reverse-run trick."""
    if t < 1:
        raise ValueError(f"need at least one foot, got t={t}")
    out = list(random_sorted(rng, length).word)
    stacks: list[list[int]] = [[] for _ in range(t)]
    acc: list[int] = []
    remaining = len(out) * (t + 1)
    while remaining:
        options: list[int] = []  # t means un-output, j < t means un-transfer/un-push
        if out:
            options.append(t)
        options.extend(j for j in range(t) if stacks[j])
        choice = rng.choice(options)
        if choice == t:
            stacks[t - 1].append(out.pop())
        elif choice == 0:
            acc.append(stacks[0].pop())
        else:
            stacks[choice - 1].append(stacks[choice].pop())
        remaining -= 1
    return canonicalize(acc[::-1])


def random_deletion(rng: random.Random, rho: SockOrdering) -> SockOrdering:
    """Remove one uniformly chosen sock and canonicalize."""
    if not len(rho):
        raise ValueError("cannot delete from the empty ordering")
    k = rng.randrange(len(rho))
    return canonicalize(rho.word[:k] + rho.word[k + 1 :])


def random_alignment_free(rng: random.Random, n: int) -> SockOrdering:
    """A random alignment-free 2-uniform ordering with n colors."""
    sigma = list(range(1, n + 1))
    rng.shuffle(sigma)
    return SockOrdering(tuple(range(1, n + 1)) + tuple(sigma))


def all_stratified(n: int, r: int) -> list[SockOrdering]:
    """Every canonical r-uniform stratified ordering with n colors."""
    import itertools

    perms = list(itertools.permutations(range(1, n + 1)))
    seen: set[SockOrdering] = set()
    # The first chunk canonicalizes to the identity, so fix it.
    for rest in itertools.product(perms, repeat=r - 1):
        seen.add(stratified(n, [tuple(range(1, n + 1)), *rest]))
    return sorted(seen, key=lambda s: s.word)
