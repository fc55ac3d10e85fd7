"""The t-foot machine: feet in series, bounded sortability, and the halving sorter.

Feet are numbered f_1..f_t from the input side. A sock always travels
input -> f_1 -> f_2 -> ... -> f_t -> output, so every certificate gives each
sock exactly t+1 moves.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import BudgetExceeded, SockOrdering, canonicalize
from .foot import InvalidCertificateError

DEFAULT_DECISION_BUDGET = 10**7


@dataclass(frozen=True)
class MoveT:
    """push (input to f_1), transfer i (f_i to f_{i+1}), or output (f_t out)."""

    op: str
    src: int | None = None

    def __post_init__(self) -> None:
        if self.op not in ("push", "transfer", "output"):
            raise ValueError(f"unknown move op {self.op!r}")
        if (self.op == "transfer") != (self.src is not None):
            raise ValueError("transfer moves carry a source foot, others do not")

    def to_json_obj(self) -> dict:
        if self.op == "transfer":
            return {"op": "transfer", "from": self.src}
        return {"op": self.op}


PUSH_T = MoveT("push")
OUTPUT_T = MoveT("output")


def transfer(i: int) -> MoveT:
    return MoveT("transfer", i)


@dataclass(frozen=True)
class CertificateT:
    """A complete t-foot run; every sock crosses every foot once."""

    t: int
    moves: tuple[MoveT, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "moves", tuple(self.moves))
        if self.t < 1:
            raise InvalidCertificateError(f"need at least one foot, got t={self.t}")
        sizes = [0] * (self.t + 1)  # sizes[0] counts pushes not yet transferred on
        pushes = outputs = 0
        for idx, m in enumerate(self.moves):
            if m.op == "push":
                sizes[1] += 1
                pushes += 1
            elif m.op == "transfer":
                if not 1 <= m.src <= self.t - 1:
                    raise InvalidCertificateError(
                        f"transfer from foot {m.src} out of range at move {idx}",
                        index=idx,
                    )
                if sizes[m.src] == 0:
                    raise InvalidCertificateError(
                        f"transfer from empty foot {m.src} at move {idx}", index=idx
                    )
                sizes[m.src] -= 1
                sizes[m.src + 1] += 1
            else:
                if sizes[self.t] == 0:
                    raise InvalidCertificateError(
                        f"output from empty foot {self.t} at move {idx}", index=idx
                    )
                sizes[self.t] -= 1
                outputs += 1
        if pushes != outputs or any(sizes[1:]):
            raise InvalidCertificateError(
                "certificate ends with socks still on the feet"
            )

    @property
    def n(self) -> int:
        return sum(1 for m in self.moves if m.op == "push")

    def to_json(self) -> str:
        return json.dumps({"t": self.t, "moves": [m.to_json_obj() for m in self.moves]})

    @classmethod
    def from_json(cls, text: str) -> "CertificateT":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise InvalidCertificateError(f"certificate is not valid JSON: {e}")
        if not isinstance(obj, dict) or "t" not in obj or "moves" not in obj:
            raise InvalidCertificateError('certificate JSON needs "t" and "moves"')
        moves = []
        for idx, m in enumerate(obj["moves"]):
            op = m.get("op") if isinstance(m, dict) else None
            if op == "push":
                moves.append(PUSH_T)
            elif op == "output":
                moves.append(OUTPUT_T)
            elif op == "transfer":
                moves.append(transfer(m.get("from")))
            else:
                raise InvalidCertificateError(f"unknown move {m!r} at {idx}", index=idx)
        return cls(t=obj["t"], moves=tuple(moves))


def t_replay(rho: SockOrdering, cert: CertificateT) -> SockOrdering:
    """Execute ``cert`` on ``rho`` and return the canonicalized output."""
    word = rho.word
    stacks: list[list[int]] = [[] for _ in range(cert.t)]
    out: list[int] = []
    i = 0
    for idx, m in enumerate(cert.moves):
        if m.op == "push":
            if i >= len(word):
                raise InvalidCertificateError(
                    f"push past end of input at move {idx}", index=idx
                )
            stacks[0].append(word[i])
            i += 1
        elif m.op == "transfer":
            if not stacks[m.src - 1]:
                raise InvalidCertificateError(
                    f"transfer from empty foot {m.src} at move {idx}", index=idx
                )
            stacks[m.src].append(stacks[m.src - 1].pop())
        else:
            if not stacks[-1]:
                raise InvalidCertificateError(
                    f"output from empty foot {cert.t} at move {idx}", index=idx
                )
            out.append(stacks[-1].pop())
    if i < len(word) or any(stacks):
        raise InvalidCertificateError(
            "certificate ends with socks still on the feet or in the input",
            index=len(cert.moves),
        )
    return canonicalize(out)


def is_t_foot_sortable(
    rho: SockOrdering, t: int, node_budget: int = DEFAULT_DECISION_BUDGET
) -> tuple[bool, CertificateT | None]:
    """Exact bounded-feet decision, mirroring the single-foot search.

    State: input position, t run-length-compressed stacks, open output
    color. Outputs are tried first, then transfers nearest the output, then
    pushes. Raises :class:`BudgetExceeded` rather than answer inexactly.
    """
    if t < 1:
        raise ValueError(f"need at least one foot, got t={t}")
    word = rho.word
    n = len(word)
    remaining = [0] * (rho.n_colors + 1)
    for c in word:
        remaining[c] += 1
    Runs = tuple[tuple[int, int], ...]
    failed: set[tuple[int, tuple[Runs, ...], int | None]] = set()
    path: list[MoveT] = []
    nodes = 0

    def push_run(runs: Runs, color: int) -> Runs:
        if runs and runs[-1][0] == color:
            return runs[:-1] + ((color, runs[-1][1] + 1),)
        return runs + ((color, 1),)

    def pop_run(runs: Runs) -> Runs:
        color, count = runs[-1]
        return runs[:-1] if count == 1 else runs[:-1] + ((color, count - 1),)

    def solve(i: int, stacks: tuple[Runs, ...], open_color: int | None) -> bool:
        nonlocal nodes
        if i == n and not any(stacks):
            return True
        state = (i, stacks, open_color)
        if state in failed:
            return False
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded(
                f"{t}-foot sortability search exceeded {node_budget} nodes"
            )
        last = stacks[t - 1]
        if last:
            top = last[-1][0]
            if open_color is None or top == open_color:
                remaining[top] -= 1
                new_open = None if remaining[top] == 0 else top
                new_stacks = stacks[: t - 1] + (pop_run(last),)
                path.append(OUTPUT_T)
                if solve(i, new_stacks, new_open):
                    return True
                path.pop()
                remaining[top] += 1
        for j in range(t - 2, -1, -1):
            if stacks[j]:
                color = stacks[j][-1][0]
                new_stacks = (
                    stacks[:j]
                    + (pop_run(stacks[j]), push_run(stacks[j + 1], color))
                    + stacks[j + 2 :]
                )
                path.append(transfer(j + 1))
                if solve(i, new_stacks, open_color):
                    return True
                path.pop()
        if i < n:
            new_stacks = (push_run(stacks[0], word[i]),) + stacks[1:]
            path.append(PUSH_T)
            if solve(i + 1, new_stacks, open_color):
                return True
            path.pop()
        failed.add(state)
        return False

    if solve(0, ((),) * t, None):
        return True, CertificateT(t=t, moves=tuple(path))
    return False, None


def feet_needed(n_colors: int) -> int:
    """ceil(log2(n)) feet, with a single pass-through foot for n <= 1."""
    if n_colors <= 1:
        return 1
    return max(1, math.ceil(math.log2(n_colors)))


def tarjan_sort(rho: SockOrdering) -> CertificateT:
    """A sorting certificate using exactly ``feet_needed(n)`` feet.

    Halve the color set at each foot: colors from the first half pass the
    foot immediately, the rest are held until the whole input segment has
    entered and then leave reversed. The two halves are then handled one
    after the other on the remaining feet, so their socks never mix on any
    single foot.
    """
    t = feet_needed(rho.n_colors)
    schedules: list[list[str]] = [[] for _ in range(t + 1)]  # 1-based feet

    def plan(segment: Sequence[int], depth: int) -> None:
        if depth > t:
            assert len(set(segment)) <= 1, "segment reaching past the last foot must be one block"
            return
        colors = sorted(set(segment))
        first_half = set(colors[: (len(colors) + 1) // 2])
        sched = schedules[depth]
        held: list[int] = []
        for c in segment:
            sched.append("U")
            if c in first_half:
                sched.append("D")
            else:
                held.append(c)
        sched.extend("D" * len(held))
        passed = [c for c in segment if c in first_half]
        plan(passed, depth + 1)
        plan(held[::-1], depth + 1)

    plan(list(rho.word), 1)

    # Merge the per-foot schedules into one machine run: pulling a sock out
    # of foot i first drives foot i through its pending intakes, each of
    # which recursively pulls one sock out of foot i-1 (or from the input).
    moves: list[MoveT] = []
    ptr = [0] * (t + 1)

    def emit(i: int) -> None:
        sched = schedules[i]
        while sched[ptr[i]] == "U":
            if i == 1:
                moves.append(PUSH_T)
            else:
                emit(i - 1)
            ptr[i] += 1
        ptr[i] += 1
        moves.append(OUTPUT_T if i == t else transfer(i))

    for _ in range(len(rho)):
        emit(t)
    assert all(ptr[i] == len(schedules[i]) for i in range(1, t + 1))
    return CertificateT(t=t, moves=tuple(moves))


def t_foot_image(
    rho: SockOrdering, t: int, node_budget: int = 10**8
) -> frozenset[SockOrdering]:
    """All orderings reachable from ``rho`` with t feet (exhaustive)."""
    if t < 1:
        raise ValueError(f"need at least one foot, got t={t}")
    word = rho.word
    n = len(word)
    memo: dict = {}
    nodes = 0

    def futures(i: int, stacks: tuple[tuple[int, ...], ...]) -> frozenset[tuple[int, ...]]:
        nonlocal nodes
        key = (i, stacks)
        cached = memo.get(key)
        if cached is not None:
            return cached
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded(f"{t}-foot image exceeded {node_budget} nodes")
        acc: set[tuple[int, ...]] = set()
        if i == n and not any(stacks):
            acc.add(())
        if i < n:
            acc |= futures(i + 1, (stacks[0] + (word[i],),) + stacks[1:])
        for j in range(t - 1):
            if stacks[j]:
                moved = (
                    stacks[:j]
                    + (stacks[j][:-1], stacks[j + 1] + (stacks[j][-1],))
                    + stacks[j + 2 :]
                )
                acc |= futures(i, moved)
        if stacks[-1]:
            top = stacks[-1][-1]
            acc.update((top,) + f for f in futures(i, stacks[:-1] + (stacks[-1][:-1],)))
        result = frozenset(acc)
        memo[key] = result
        return result

    outputs = futures(0, ((),) * t)
    return frozenset(canonicalize(o) for o in outputs)


def stratified(n: int, chunk_perms: Iterable[Sequence[int]]) -> SockOrdering:
    """Concatenate chunks, each a permutation of the n colors; canonicalized."""
    chunks = [tuple(p) for p in chunk_perms]
    if n < 1 or not chunks:
        raise ValueError("need n >= 1 colors and at least one chunk")
    for p in chunks:
        if sorted(p) != list(range(1, n + 1)):
            raise ValueError(f"chunk {p} is not a permutation of 1..{n}")
    word: list[int] = []
    for p in chunks:
        word.extend(p)
    return canonicalize(word)


def r_of_n(n: int) -> int:
    """Uniformity that forces the full feet requirement: r(2)=2,
    r(n) = r(ceil(n/2))^2 * binom(n, ceil(n/2))."""
    if n < 2:
        raise ValueError("defined for n >= 2")
    if n == 2:
        return 2
    half = (n + 1) // 2
    return r_of_n(half) ** 2 * math.comb(n, half)
