"""Sparse exact arithmetic in the tensor algebra of a presented Lie algebra.

Elements are finite rational linear combinations of words; a word is a
tuple of basis indices and the empty word is the multiplicative unit.
Nothing here imposes the straightening relation: this is the multilinear
bookkeeping layer shared by the normalizer and the holonomy transport.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .presentation import LiePresentation, Vector, bracket

__all__ = [
    "TensorElement",
    "Word",
    "add",
    "bracket_in_context",
    "concat",
    "from_vector",
    "monomial",
    "scale",
    "term_order",
    "unit",
    "zero",
]

Word = tuple[int, ...]


def term_order(w: Word):
    """Printing order key: word length ascending, then lexicographic."""
    return (len(w), w)


class TensorElement:
    """Immutable sparse map word -> nonzero rational over one presentation."""

    __slots__ = ("alg", "terms", "_hash")

    def __init__(self, alg: LiePresentation, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, Fraction] = {}
        for w, c in items:
            w = tuple(w)
            for t in w:
                if not 0 <= t < alg.dim:
                    raise IndexError(f"basis index {t} out of range in word {w}")
            c = Fraction(c)
            if not c:
                continue
            s = acc.get(w)
            s = c if s is None else s + c
            if s:
                acc[w] = s
            else:
                del acc[w]
        self.alg = alg
        self.terms = acc
        self._hash = None

    @property
    def degree(self) -> int:
        """Longest word present; 0 for the zero element."""
        return max((len(w) for w in self.terms), default=0)

    def sorted_terms(self) -> list[tuple[Word, Fraction]]:
        """Terms in printing order (length ascending, then lexicographic)."""
        return sorted(self.terms.items(), key=lambda t: term_order(t[0]))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        if self.terms != other.terms:
            return False
        return self.alg is other.alg or self.alg == other.alg

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self.terms.items()))
            self._hash = h
        return h

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(-1, other))

    def __neg__(self):
        return scale(-1, self)

    def __mul__(self, c):
        if isinstance(c, (int, Fraction)):
            return scale(c, self)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        if not self.terms:
            return "TensorElement(0)"
        bits = []
        for w, c in self.sorted_terms():
            word = " ".join(self.alg.names[t] for t in w) if w else "1"
            bits.append(f"{c}*({word})")
        return "TensorElement(" + " + ".join(bits) + ")"


def _require_same(x: TensorElement, y: TensorElement) -> None:
    if not (x.alg is y.alg or x.alg == y.alg):
        raise ValueError("elements belong to different presentations")


def zero(L: LiePresentation) -> TensorElement:
    return TensorElement(L)


def unit(L: LiePresentation) -> TensorElement:
    """The empty word with coefficient 1."""
    return TensorElement(L, {(): 1})


def monomial(L: LiePresentation, word: Iterable[int], coeff=1) -> TensorElement:
    return TensorElement(L, {tuple(word): coeff})


def from_vector(L: LiePresentation, v: Vector) -> TensorElement:
    """Lift a degree-1 sparse vector into the tensor algebra."""
    return TensorElement(L, {(k,): c for k, c in v.items()})


def add(x: TensorElement, y: TensorElement) -> TensorElement:
    _require_same(x, y)
    out = dict(x.terms)
    for w, c in y.terms.items():
        s = out.get(w)
        s = c if s is None else s + c
        if s:
            out[w] = s
        else:
            del out[w]
    return TensorElement(x.alg, out)


def scale(c, x: TensorElement) -> TensorElement:
    c = Fraction(c)
    if not c:
        return TensorElement(x.alg)
    return TensorElement(x.alg, {w: c * v for w, v in x.terms.items()})


def concat(x: TensorElement, y: TensorElement) -> TensorElement:
    """Bilinear extension of word concatenation; unit(L) is the identity."""
    _require_same(x, y)
    acc: dict[Word, Fraction] = {}
    for wx, cx in x.terms.items():
        for wy, cy in y.terms.items():
            w = wx + wy
            s = acc.get(w)
            c = cx * cy
            s = c if s is None else s + c
            if s:
                acc[w] = s
            else:
                del acc[w]
    return TensorElement(x.alg, acc)


def bracket_in_context(L: LiePresentation, prefix: Iterable[int], i: int, j: int,
                       suffix: Iterable[int]) -> TensorElement:
    """prefix ⊗ [e_i, e_j] ⊗ suffix, expanded through the bracket table.

    Every word in the result has length len(prefix) + 1 + len(suffix).
    """
    prefix, suffix = tuple(prefix), tuple(suffix)
    vec = bracket(L, i, j)
    return TensorElement(L, {prefix + (k,) + suffix: c for k, c in vec.items()})
