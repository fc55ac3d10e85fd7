"""Single-foot machine: certificate replay, Dyck encoding, image and preimage.

The machine holds a stack of socks ("the foot"). A run alternates two moves:
push the leftmost remaining input sock onto the foot, or pop the outermost
foot sock to the right end of the output. A certificate records one complete
run and can be replayed against any ordering of the matching length.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .core import BudgetExceeded, SockOrdering, canonicalize

DEFAULT_NODE_BUDGET = 10**8


class Move(Enum):
    PUSH = "U"
    POP = "D"


class InvalidCertificateError(ValueError):
    """Certificate is malformed or illegal for the ordering it is applied to."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


@dataclass(frozen=True)
class Certificate:
    """A complete single-foot run: n pushes and n pops, prefix-balanced."""

    n: int
    moves: tuple[Move, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "moves", tuple(self.moves))
        depth = 0
        pushes = 0
        for i, m in enumerate(self.moves):
            if m is Move.PUSH:
                depth += 1
                pushes += 1
            elif m is Move.POP:
                depth -= 1
                if depth < 0:
                    raise InvalidCertificateError(
                        f"pop at move {i} with empty foot", index=i
                    )
            else:
                raise InvalidCertificateError(f"unknown move {m!r} at {i}", index=i)
        if pushes != self.n or depth != 0:
            raise InvalidCertificateError(
                f"certificate must contain exactly {self.n} pushes and pops"
                f" (got {pushes} pushes, {len(self.moves) - pushes} pops)"
            )

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "moves": [m.value for m in self.moves]})

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise InvalidCertificateError(f"certificate is not valid JSON: {e}")
        if not isinstance(obj, dict) or "n" not in obj or "moves" not in obj:
            raise InvalidCertificateError('certificate JSON needs "n" and "moves"')
        moves = []
        for i, m in enumerate(obj["moves"]):
            if m == "U":
                moves.append(Move.PUSH)
            elif m == "D":
                moves.append(Move.POP)
            else:
                raise InvalidCertificateError(f"unknown move {m!r} at {i}", index=i)
        return cls(n=obj["n"], moves=tuple(moves))


def certificate_from_dyck(word: str) -> Certificate:
    """Build a certificate from a U/D string such as ``"UUDD"``."""
    moves = []
    for i, ch in enumerate(word):
        if ch == "U":
            moves.append(Move.PUSH)
        elif ch == "D":
            moves.append(Move.POP)
        else:
            raise InvalidCertificateError(f"unknown letter {ch!r} at {i}", index=i)
    return Certificate(n=len(word) // 2, moves=tuple(moves))


def dyck_encode(cert: Certificate) -> str:
    """U for each push, D for each pop."""
    return "".join(m.value for m in cert.moves)


def replay(rho: SockOrdering, cert: Certificate) -> SockOrdering:
    """Execute ``cert`` on ``rho`` and return the canonicalized output."""
    word = rho.word
    out: list[int] = []
    stack: list[int] = []
    i = 0
    for idx, m in enumerate(cert.moves):
        if m is Move.PUSH:
            if i >= len(word):
                raise InvalidCertificateError(
                    f"push past end of input at move {idx}", index=idx
                )
            stack.append(word[i])
            i += 1
        else:
            if not stack:
                raise InvalidCertificateError(
                    f"pop with empty foot at move {idx}", index=idx
                )
            out.append(stack.pop())
    if i < len(word) or stack:
        raise InvalidCertificateError(
            "certificate ends with socks still on the foot or in the input",
            index=len(cert.moves),
        )
    return canonicalize(out)


@dataclass(frozen=True)
class ImageResult:
    """A deduplicated set of canonical orderings, with a truncation flag.

    ``truncated`` is True when a result cap trimmed the set; the underlying
    enumeration is always exhaustive (a node budget raises instead of
    silently dropping runs).
    """

    orderings: frozenset[SockOrdering]
    truncated: bool = False

    def __iter__(self) -> Iterator[SockOrdering]:
        return iter(self.orderings)

    def __len__(self) -> int:
        return len(self.orderings)

    def __contains__(self, item: object) -> bool:
        return item in self.orderings


def _apply_cap(canon: set[SockOrdering], cap: int | None) -> ImageResult:
    if cap is not None and len(canon) > cap:
        kept = sorted(canon, key=lambda s: s.word)[:cap]
        return ImageResult(frozenset(kept), truncated=True)
    return ImageResult(frozenset(canon), truncated=False)


def foot_image(
    rho: SockOrdering, cap: int | None = None, node_budget: int = DEFAULT_NODE_BUDGET
) -> ImageResult:
    """All orderings reachable from ``rho`` by some complete run.

    Depth-first over machine configurations with a memo keyed by
    (input position, foot contents): the output emitted so far cannot
    influence future moves, so each state's set of possible emission
    suffixes is computed once.
    """
    word = rho.word
    n = len(word)
    memo: dict[tuple[int, tuple[int, ...]], frozenset[tuple[int, ...]]] = {}
    nodes = 0

    def futures(i: int, stack: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
        nonlocal nodes
        key = (i, stack)
        cached = memo.get(key)
        if cached is not None:
            return cached
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded(f"foot image exceeded {node_budget} nodes")
        acc: set[tuple[int, ...]] = set()
        if i == n and not stack:
            acc.add(())
        if i < n:
            acc |= futures(i + 1, stack + (word[i],))
        if stack:
            top = stack[-1]
            acc.update((top,) + f for f in futures(i, stack[:-1]))
        result = frozenset(acc)
        memo[key] = result
        return result

    outputs = futures(0, ())
    return _apply_cap({canonicalize(o) for o in outputs}, cap)


def foot_preimage(
    rho: SockOrdering, cap: int | None = None, node_budget: int = DEFAULT_NODE_BUDGET
) -> ImageResult:
    """All orderings from which some run produces ``rho``.

    Runs the machine in reverse from the finished configuration: un-pop
    moves the rightmost output sock back onto the foot, un-push moves the
    outermost foot sock back to the front of the input. Never larger than
    the Catalan number of ``len(rho)``.
    """
    out = rho.word
    n = len(out)
    memo: dict[tuple[int, tuple[int, ...]], frozenset[tuple[int, ...]]] = {}
    nodes = 0

    def builds(j: int, stack: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
        # Input prefixes (left-to-right) still to be produced from this
        # reverse state; j output socks remain unconsumed.
        nonlocal nodes
        key = (j, stack)
        cached = memo.get(key)
        if cached is not None:
            return cached
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded(f"foot preimage exceeded {node_budget} nodes")
        acc: set[tuple[int, ...]] = set()
        if j == 0 and not stack:
            acc.add(())
        if j > 0:
            acc |= builds(j - 1, stack + (out[j - 1],))
        if stack:
            top = stack[-1]
            acc.update(p + (top,) for p in builds(j, stack[:-1]))
        result = frozenset(acc)
        memo[key] = result
        return result

    inputs = builds(n, ())
    return _apply_cap({canonicalize(w) for w in inputs}, cap)


def transform_certificate(
    source: SockOrdering, target: SockOrdering, node_budget: int = 10**7
) -> Certificate | None:
    """A certificate whose replay of ``source`` equals ``target``, or None.

    The emitted word only has to match ``target`` up to color renaming; the
    search carries the partial bijection and prefers pops, so the first
    certificate found is deterministic.
    """
    sw, tw = source.word, target.word
    n = len(sw)
    if len(tw) != n or source.n_colors != target.n_colors:
        return None
    fwd: dict[int, int] = {}
    rev: dict[int, int] = {}
    moves: list[Move] = []
    nodes = 0

    def dfs(i: int, stack: tuple[int, ...], j: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded(f"transform search exceeded {node_budget} nodes")
        if j == n:
            return True
        if stack:
            x = stack[-1]
            tc = tw[j]
            bound = fwd.get(x)
            legal = (bound == tc) if bound is not None else (tc not in rev)
            if legal:
                fresh = bound is None
                if fresh:
                    fwd[x] = tc
                    rev[tc] = x
                moves.append(Move.POP)
                if dfs(i, stack[:-1], j + 1):
                    return True
                moves.pop()
                if fresh:
                    del fwd[x]
                    del rev[tc]
        if i < n:
            moves.append(Move.PUSH)
            if dfs(i + 1, stack + (sw[i],), j):
                return True
            moves.pop()
        return False

    if dfs(0, (), 0):
        return Certificate(n=n, moves=tuple(moves))
    return None
