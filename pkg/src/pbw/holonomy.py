"""Transport of monomials around generator-word loops, with frozen remainders.

Each transport step swaps two adjacent letters of the leading word and
deposits the bracket correction, in context, into a remainder that is never
touched again.  Steps are allowed at descents and ascents alike, since a
loop necessarily traverses both.  Around an identity loop the leading word
returns to its start and the accumulated remainder is the loop's holonomy;
it normalizes to zero precisely when the structure constants satisfy the
Jacobi identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .coxeter import GeneratorWord, is_identity_loop
from .normalizer import Strategy, normalize
from .presentation import LiePresentation, Vector, check_jacobi
from .tensor import TensorElement, Word, bracket_in_context, zero

__all__ = [
    "ConsistencyReport",
    "TransportState",
    "check_pbw_consistency",
    "hexagon_defect",
    "square_residuals",
    "start_state",
    "transport_loop",
    "transport_step",
]


@dataclass(frozen=True)
class TransportState:
    """Leading word plus the frozen lower-degree remainder collected so far."""

    top: Word
    remainder: TensorElement
    steps: int = 0


def start_state(L: LiePresentation, w: Iterable[int]) -> TransportState:
    return TransportState(tuple(w), zero(L), 0)


def transport_step(L: LiePresentation, st: TransportState, p: int) -> TransportState:
    """Swap slots p, p+1 of the leading word; the remainder gains
    prefix ⊗ [x, y] ⊗ suffix with x, y read off before the swap."""
    top = st.top
    if not 1 <= p < len(top):
        raise IndexError(f"position {p} out of range for a word of length {len(top)}")
    x, y = top[p - 1], top[p]
    new_top = top[: p - 1] + (y, x) + top[p + 1 :]
    corr = bracket_in_context(L, top[: p - 1], x, y, top[p + 1 :])
    return TransportState(new_top, st.remainder + corr, st.steps + 1)


def transport_loop(L: LiePresentation, w: Iterable[int], g: GeneratorWord) -> TensorElement:
    """Holonomy remainder of transporting the word w around the loop g."""
    w = tuple(w)
    if not is_identity_loop(g):
        raise ValueError("generator word does not evaluate to the identity")
    if len(w) != g.n:
        raise ValueError(f"word length {len(w)} does not match the loop's n={g.n}")
    st = start_state(L, w)
    for p in g.letters:
        st = transport_step(L, st, p)
    assert st.top == w
    return st.remainder


def _transport_path(L: LiePresentation, w: Word, positions: Sequence[int]) -> TransportState:
    st = start_state(L, w)
    for p in positions:
        st = transport_step(L, st, p)
    return st


def hexagon_defect(L: LiePresentation, i: int, j: int, k: int) -> Vector:
    """Difference of the two three-step transports of (k, j, i) to (i, j, k).

    The degree-2 parts of the two remainders cancel pairwise and each
    residual x⊗v - v⊗x straightens uniquely to [x, v], so the result is a
    degree-1 element equal to the Jacobi defect of (i, j, k) for every
    antisymmetric table, Lie or not.
    """
    for t in (i, j, k):
        L.check_index(t)
    w = (k, j, i)
    r1 = _transport_path(L, w, (1, 2, 1)).remainder
    r2 = _transport_path(L, w, (2, 1, 2)).remainder
    nf = normalize(L, r1 - r2)
    out: Vector = {}
    for word, c in nf.terms.items():
        assert len(word) == 1
        out[word[0]] = c
    return out


def square_residuals(L: LiePresentation, w: Iterable[int], p: int, q: int):
    """Remainders of transporting w by (p, q) and by (q, p); the two swap
    positions must commute (|p - q| >= 2), so both paths end at the same
    leading word."""
    w = tuple(w)
    if abs(p - q) < 2:
        raise ValueError(f"positions {p}, {q} overlap; that is a hexagon, not a square")
    s1 = _transport_path(L, w, (p, q))
    s2 = _transport_path(L, w, (q, p))
    assert s1.top == s2.top
    return s1.remainder, s2.remainder


@dataclass
class ConsistencyReport:
    """Aggregated result of transporting sample words around sample loops."""

    words: int
    loops: int
    failures: list[tuple[Word, tuple[int, ...], TensorElement]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def checked(self) -> int:
        return self.words * self.loops

    def first_counterexample(self):
        return self.failures[0] if self.failures else None


def check_pbw_consistency(L: LiePresentation, n: int,
                          word_sample: Iterable[Iterable[int]],
                          loop_sample: Iterable[GeneratorWord],
                          strategy: Strategy = Strategy.LEFTMOST) -> ConsistencyReport:
    """Verify zero holonomy for every sampled word around every sampled loop.

    Refuses non-Jacobi presentations: rewriting is inconsistent there by
    design, and `hexagon_defect` is the tool that localizes the failure.
    """
    if check_jacobi(L):
        raise ValueError(
            "presentation fails the Jacobi identity; use hexagon_defect to "
            "locate the failing triples")
    words = [tuple(w) for w in word_sample]
    loops = list(loop_sample)
    for w in words:
        if len(w) != n:
            raise ValueError(f"sample word {w} does not have length n={n}")
    for g in loops:
        if g.n != n:
            raise ValueError(f"sample loop {g} is not over n={n}")
    failures = []
    for w in words:
        for g in loops:
            nf = normalize(L, transport_loop(L, w, g), strategy)
            if nf:
                failures.append((w, g.letters, nf))
    failures.sort(key=lambda t: (t[0], t[1]))
    return ConsistencyReport(words=len(words), loops=len(loops), failures=failures)
