"""Straightening to canonical form: weakly increasing words only.

The rewrite replaces a descent x⊗y (adjacent letters with x > y) by
y⊗x + [x, y] in context.  The swapped word loses exactly one inversion and
the bracket correction is one letter shorter, so rewriting terminates no
matter the order.  `normalize` fixes the order with a deterministic redex
rule plus a descent strategy; `normalize_all_ways` branches over every
(word, descent) redex instead, and is the brute-force oracle that decides
whether all reduction orders agree on a given input.
"""

from __future__ import annotations

import enum

from .errors import SearchBudgetExceeded
from .presentation import LiePresentation
from .tensor import TensorElement, Word, bracket_in_context, monomial, term_order

__all__ = [
    "Strategy",
    "descents",
    "inversions",
    "is_canonical",
    "normalize",
    "normalize_all_ways",
    "swap_reduce_at",
]


class Strategy(enum.Enum):
    """Which descent of the selected word is rewritten first."""

    LEFTMOST = "leftmost"
    RIGHTMOST = "rightmost"


def descents(w: Word) -> list[int]:
    """1-based positions p with w[p] > w[p+1]."""
    return [p for p in range(1, len(w)) if w[p - 1] > w[p]]


def inversions(w: Word) -> int:
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


def is_canonical(x: TensorElement) -> bool:
    """True iff every word of x is weakly increasing (repeats allowed)."""
    return all(not descents(w) for w in x.terms)


def swap_reduce_at(L: LiePresentation, w, p: int) -> TensorElement:
    """Rewrite the descent at p: ...x y... -> ...y x... + prefix [x,y] suffix."""
    w = tuple(w)
    if not 1 <= p < len(w):
        raise IndexError(f"position {p} out of range for a word of length {len(w)}")
    x, y = w[p - 1], w[p]
    if x <= y:
        raise ValueError(f"position {p} is not a descent of {w}")
    swapped = w[: p - 1] + (y, x) + w[p + 1 :]
    # one inversion must disappear per step; this is the termination measure
    assert inversions(swapped) == inversions(w) - 1
    return monomial(L, swapped) + bracket_in_context(L, w[: p - 1], x, y, w[p + 1 :])


def _pick_redex(x: TensorElement) -> Word | None:
    """Deterministic redex word: highest degree, then first in printing order."""
    best: Word | None = None
    for w in x.terms:
        if not descents(w):
            continue
        if best is None or len(w) > len(best) or (len(w) == len(best) and w < best):
            best = w
    return best


def normalize(L: LiePresentation, x: TensorElement,
              strategy: Strategy = Strategy.LEFTMOST, trace=None) -> TensorElement:
    """Canonical form of x: linear, terminating, idempotent.

    `trace`, when given, is called with (word, position, replacement) for
    every rewrite step, in order.
    """
    if not (x.alg is L or x.alg == L):
        raise ValueError("element belongs to a different presentation")
    cur = x
    while True:
        w = _pick_redex(cur)
        if w is None:
            return cur
        ps = descents(w)
        p = ps[0] if strategy is Strategy.LEFTMOST else ps[-1]
        c = cur.terms[w]
        repl = c * swap_reduce_at(L, w, p)
        if trace is not None:
            trace(w, p, repl)
        cur = (cur - monomial(L, w, c)) + repl


def normalize_all_ways(L: LiePresentation, w, max_results: int = 100_000,
                       memo: dict | None = None) -> set[TensorElement]:
    """Every canonical form reachable from {w: 1} by descent rewrites.

    At each step every (word, descent) redex of the current element is
    branched on; a singleton result certifies that all reduction orders
    agree on this input.  States are memoized by their term map, so a
    shared `memo` dict may be passed to reuse work across many words of
    the same presentation (never share it across presentations).  Raises
    SearchBudgetExceeded after expanding more than `max_results` states.
    """
    start = monomial(L, tuple(w))
    if memo is None:
        memo = {}
    expanded = 0

    def explore(el: TensorElement) -> frozenset[TensorElement]:
        nonlocal expanded
        key = frozenset(el.terms.items())
        hit = memo.get(key)
        if hit is not None:
            return hit
        expanded += 1
        if expanded > max_results:
            raise SearchBudgetExceeded(
                f"normalize_all_ways expanded more than {max_results} states")
        redexes = sorted(
            ((word, p) for word in el.terms for p in descents(word)),
            key=lambda t: (term_order(t[0]), t[1]),
        )
        if not redexes:
            out = frozenset((el,))
        else:
            acc: set[TensorElement] = set()
            for word, p in redexes:
                c = el.terms[word]
                nxt = (el - monomial(L, word, c)) + c * swap_reduce_at(L, word, p)
                acc.update(explore(nxt))
            out = frozenset(acc)
        memo[key] = out
        return out

    return set(explore(start))
