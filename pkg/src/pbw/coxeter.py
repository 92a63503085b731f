"""The symmetric group on adjacent transpositions, viewed as a Coxeter group.

A generator word is a sequence of 1-based positions p, each meaning "swap
slots p and p+1".  Three local moves preserve the evaluated permutation:
cancelling an equal adjacent pair, commuting generators at distance >= 2,
and the braid substitution s_i s_{i+1} s_i <-> s_{i+1} s_i s_{i+1}.
`contract_loop` reduces any identity loop to the empty word with these
moves and returns a replayable certificate.

Codimension-2 cells of the associated complex correspond to cosets of the
rank-2 subgroups <s_i, s_j>: hexagonal ("tricky") when the generators are
adjacent, square ("easy") when they commute.

>>> evaluate(GeneratorWord(3, (1, 2, 1)))
(2, 1, 0)
>>> evaluate(GeneratorWord(3, (1, 2, 1))) == evaluate(GeneratorWord(3, (2, 1, 2)))
True
"""

from __future__ import annotations

import enum
import itertools
import math
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import SearchBudgetExceeded

__all__ = [
    "BRAID",
    "CANCEL",
    "COMMUTE",
    "CellType",
    "GeneratorWord",
    "Move",
    "MoveError",
    "Permutation",
    "apply_move",
    "classify_pair",
    "codim2_census",
    "codim2_census_by_cosets",
    "contract_loop",
    "evaluate",
    "hexagon_loop",
    "identity",
    "is_identity_loop",
    "loop_from_arrangements",
    "random_identity_loop",
    "replay",
    "sample_excursion_s4",
    "square_loop",
]

#: One-line notation: position t holds the letter perm[t].
Permutation = tuple[int, ...]

CANCEL = "cancel"
COMMUTE = "commute"
BRAID = "braid"


def identity(n: int) -> Permutation:
    return tuple(range(n))


@dataclass(frozen=True)
class GeneratorWord:
    """A word in adjacent transpositions of n slots; indices are 1-based."""

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.n < 1:
            raise ValueError("need n >= 1")
        for p in self.letters:
            if not 1 <= p <= self.n - 1:
                raise ValueError(f"generator index {p} out of range for n={self.n}")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)


def evaluate(g: GeneratorWord) -> Permutation:
    """Compose the swaps in order, starting from the identity arrangement."""
    perm = list(range(g.n))
    for p in g.letters:
        perm[p - 1], perm[p] = perm[p], perm[p - 1]
    return tuple(perm)


def is_identity_loop(g: GeneratorWord) -> bool:
    return evaluate(g) == identity(g.n)


@dataclass(frozen=True)
class Move:
    """One local rewriting move at a 1-based position."""

    kind: str
    pos: int

    def __str__(self):
        return f"{self.kind}@{self.pos}"


class MoveError(ValueError):
    """A move was not applicable; `step` is set when raised during replay."""

    def __init__(self, message: str, step: int | None = None):
        super().__init__(message)
        self.step = step


def _apply_to_letters(w: tuple[int, ...], move: Move) -> tuple[int, ...]:
    p = move.pos
    if move.kind == CANCEL:
        if not (1 <= p < len(w)) or w[p - 1] != w[p]:
            raise MoveError(f"{move} not applicable to {w}")
        return w[: p - 1] + w[p + 1 :]
    if move.kind == COMMUTE:
        if not (1 <= p < len(w)) or abs(w[p - 1] - w[p]) < 2:
            raise MoveError(f"{move} not applicable to {w}")
        return w[: p - 1] + (w[p], w[p - 1]) + w[p + 1 :]
    if move.kind == BRAID:
        if not (1 <= p <= len(w) - 2) or w[p - 1] != w[p + 1] or abs(w[p - 1] - w[p]) != 1:
            raise MoveError(f"{move} not applicable to {w}")
        x, y = w[p - 1], w[p]
        return w[: p - 1] + (y, x, y) + w[p + 2 :]
    raise MoveError(f"unknown move kind {move.kind!r}")


def apply_move(g: GeneratorWord, move: Move) -> GeneratorWord:
    """Apply one local move; the evaluated permutation is unchanged."""
    return GeneratorWord(g.n, _apply_to_letters(g.letters, move))


def replay(g: GeneratorWord, certificate: Iterable[Move]) -> GeneratorWord:
    """Apply a certificate move by move; reports the failing step index."""
    letters = g.letters
    for k, move in enumerate(certificate, start=1):
        try:
            letters = _apply_to_letters(letters, move)
        except MoveError as e:
            raise MoveError(f"step {k}: {e}", step=k) from None
    return GeneratorWord(g.n, letters)


def _first_cancel(letters: tuple[int, ...]) -> int | None:
    for p in range(1, len(letters)):
        if letters[p - 1] == letters[p]:
            return p
    return None


def _length_preserving_moves(letters: tuple[int, ...]) -> list[Move]:
    out = []
    for p in range(1, len(letters)):
        if abs(letters[p - 1] - letters[p]) >= 2:
            out.append(Move(COMMUTE, p))
    for p in range(1, len(letters) - 1):
        if letters[p - 1] == letters[p + 1] and abs(letters[p - 1] - letters[p]) == 1:
            out.append(Move(BRAID, p))
    return out


def _search_cancellable(letters, budget: int):
    """BFS through the commute/braid class until some word has an equal
    adjacent pair; returns (move path, word found, budget left)."""
    parents: dict[tuple[int, ...], tuple | None] = {letters: None}
    queue = deque([letters])
    while queue:
        cur = queue.popleft()
        if _first_cancel(cur) is not None:
            path: list[Move] = []
            node = cur
            while parents[node] is not None:
                prev, mv = parents[node]
                path.append(mv)
                node = prev
            path.reverse()
            return path, cur, budget - len(parents)
        for mv in _length_preserving_moves(cur):
            nxt = _apply_to_letters(cur, mv)
            if nxt in parents:
                continue
            parents[nxt] = (cur, mv)
            if len(parents) > budget:
                raise SearchBudgetExceeded("loop contraction exceeded its node budget")
            queue.append(nxt)
    # Unreachable for genuine identity loops: a nonempty word for the
    # identity is never reduced, so its braid class contains a cancellation.
    raise RuntimeError("commute/braid class exhausted without a cancellation")


def contract_loop(g: GeneratorWord, max_nodes: int = 200_000) -> list[Move]:
    """A certificate of local moves reducing an identity loop to ().

    Greedy: cancel an equal adjacent pair whenever one exists, otherwise
    search the commute/braid class breadth-first for a word that has one.
    The certificate replays to the empty word but is not minimized.
    """
    if not is_identity_loop(g):
        raise ValueError("word does not evaluate to the identity")
    cert: list[Move] = []
    letters = g.letters
    budget = max_nodes
    while letters:
        p = _first_cancel(letters)
        if p is not None:
            cert.append(Move(CANCEL, p))
            letters = letters[: p - 1] + letters[p + 1 :]
            continue
        path, letters, budget = _search_cancellable(letters, budget)
        cert.extend(path)
    return cert


class CellType(enum.Enum):
    """Rank-2 cell flavor: hexagon (adjacent pair) or square (commuting pair)."""

    TRICKY = "tricky"
    EASY = "easy"


def classify_pair(i: int, j: int, n: int | None = None) -> CellType:
    """TRICKY iff the generator indices are adjacent (j = i + 1)."""
    if not (isinstance(i, int) and isinstance(j, int)) or not 1 <= i < j:
        raise ValueError(f"need 1 <= i < j, got ({i}, {j})")
    if n is not None and j > n - 1:
        raise ValueError(f"generator index {j} out of range for n={n}")
    return CellType.TRICKY if j == i + 1 else CellType.EASY


def codim2_census(n: int) -> dict[CellType, int]:
    """Counts of codim-2 cells by type, via the closed coset-count formula.

    Each unordered generator pair {i, j} contributes the cosets of
    <s_i, s_j>: n!/6 of them for an adjacent pair, n!/4 otherwise.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    nf = math.factorial(n)
    tricky_pairs = n - 2
    easy_pairs = (n - 1) * (n - 2) // 2 - (n - 2)
    return {
        CellType.TRICKY: tricky_pairs * nf // 6,
        CellType.EASY: easy_pairs * nf // 4,
    }


def _compose(x: Permutation, y: Permutation) -> Permutation:
    """(x ∘ y)[t] = x[y[t]]."""
    return tuple(x[t] for t in y)


def _adjacent_transposition(n: int, p: int) -> Permutation:
    perm = list(range(n))
    perm[p - 1], perm[p] = perm[p], perm[p - 1]
    return tuple(perm)


def _rank2_subgroup(n: int, i: int, j: int) -> set[Permutation]:
    gens = (_adjacent_transposition(n, i), _adjacent_transposition(n, j))
    group = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for h in frontier:
            for s in gens:
                prod = _compose(h, s)
                if prod not in group:
                    group.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return group


def codim2_census_by_cosets(n: int) -> dict[CellType, int]:
    """Same counts as `codim2_census`, by explicitly partitioning S_n into
    cosets of each rank-2 subgroup.  Independent route, kept for checking."""
    if n < 3:
        raise ValueError("need n >= 3")
    perms = list(itertools.permutations(range(n)))
    counts = {CellType.TRICKY: 0, CellType.EASY: 0}
    for i in range(1, n):
        for j in range(i + 1, n):
            sub = _rank2_subgroup(n, i, j)
            seen: set[Permutation] = set()
            cells = 0
            for w in perms:
                if w in seen:
                    continue
                seen.update(_compose(w, h) for h in sub)
                cells += 1
            counts[classify_pair(i, j, n)] += cells
    return counts


def hexagon_loop(n: int = 3, i: int = 1) -> GeneratorWord:
    """The six-step loop (s_i s_{i+1})^3 around a tricky cell."""
    if not 1 <= i <= n - 2:
        raise ValueError(f"need 1 <= i <= n-2 for a hexagon, got i={i}, n={n}")
    return GeneratorWord(n, (i, i + 1) * 3)


def square_loop(n: int = 4, i: int = 1, j: int = 3) -> GeneratorWord:
    """The four-step loop (s_i s_j)^2 around an easy cell; needs |i-j| >= 2."""
    if abs(i - j) < 2:
        raise ValueError("square loops need commuting generators (|i-j| >= 2)")
    return GeneratorWord(n, (i, j, i, j))


def loop_from_arrangements(n: int, arrangements: Sequence[Sequence[int]]) -> GeneratorWord:
    """Generator word stepping through consecutive arrangements, each pair
    differing by exactly one adjacent swap."""
    arrs = [tuple(a) for a in arrangements]
    for a in arrs:
        if sorted(a) != list(range(n)):
            raise ValueError(f"{a} is not an arrangement of 0..{n - 1}")
    letters = []
    for a, b in zip(arrs, arrs[1:]):
        diff = [t for t in range(n) if a[t] != b[t]]
        if (len(diff) != 2 or diff[1] != diff[0] + 1
                or a[diff[0]] != b[diff[1]] or a[diff[1]] != b[diff[0]]):
            raise ValueError(f"{a} -> {b} is not an adjacent swap")
        letters.append(diff[0] + 1)
    return GeneratorWord(n, tuple(letters))


_TOUR_S4 = ("abcd abdc adbc adcb acdb cadb cdab dcab dacb dabc dbac dbca "
            "dcba cdba cbda cbad bcad bacd abcd").split()


def sample_excursion_s4() -> GeneratorWord:
    """An 18-step identity loop through 18 distinct arrangements of 4 letters."""
    arrs = [tuple(ord(ch) - ord("a") for ch in word) for word in _TOUR_S4]
    return loop_from_arrangements(4, arrs)


def random_identity_loop(n: int, max_len: int = 12,
                         rng: random.Random | None = None) -> GeneratorWord:
    """Rejection-sample a nonempty identity loop of even length <= max_len."""
    if n < 2 or max_len < 2:
        raise ValueError("need n >= 2 and max_len >= 2")
    rng = rng if rng is not None else random.Random(0)
    lengths = range(2, max_len + 1, 2)
    while True:
        length = rng.choice(lengths)
        letters = tuple(rng.randint(1, n - 1) for _ in range(length))
        g = GeneratorWord(n, letters)
        if is_identity_loop(g):
            return g
