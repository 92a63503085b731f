"""Lie algebra presentations: an ordered basis with exact structure constants.

A presentation lists basis names (listing order defines the basis ordering
used everywhere downstream) and, for each index pair i < j, the sparse
rational expansion of the bracket [e_i, e_j].  Antisymmetry is structural:
only i < j pairs are stored, [e_j, e_i] is derived by negation, and
[e_i, e_i] is zero because the pair (i, i) cannot be represented at all.

Whether a table satisfies the Jacobi identity is a question, answered by
`check_jacobi`, not a construction requirement: the holonomy machinery
deliberately consumes non-Jacobi tables to exhibit inconsistent rewriting.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = [
    "LieFormatError",
    "LiePresentation",
    "Vector",
    "bracket",
    "check_jacobi",
    "jacobi_defect",
    "parse_presentation",
    "serialize_presentation",
    "vec_add",
    "vec_scale",
]

#: Sparse element of the Lie algebra: basis index -> nonzero rational.
Vector = dict[int, Fraction]

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


class LieFormatError(ValueError):
    """Malformed `.lie` text or invalid presentation data."""


def vec_add(u: Vector, v: Vector) -> Vector:
    """Sum of sparse vectors; entries that cancel are dropped."""
    out = dict(u)
    for k, c in v.items():
        s = out.get(k, Fraction(0)) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def vec_scale(c, v: Vector) -> Vector:
    c = Fraction(c)
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


class LiePresentation:
    """Ordered basis names plus the bracket table over the rationals."""

    __slots__ = ("names", "constants", "_index")

    def __init__(self, names: Iterable[str], constants: Mapping | None = None):
        names = tuple(names)
        if not names:
            raise LieFormatError("a presentation needs at least one basis name")
        index: dict[str, int] = {}
        for nm in names:
            if not isinstance(nm, str) or not _NAME.match(nm):
                raise LieFormatError(f"invalid basis name {nm!r}")
            if nm in index:
                raise LieFormatError(f"duplicate basis name {nm!r}")
            index[nm] = len(index)
        table: dict[tuple[int, int], Vector] = {}
        for pair, vec in (constants or {}).items():
            i, j = pair
            if not (0 <= i < len(names) and 0 <= j < len(names)):
                raise LieFormatError(f"bracket pair {pair} out of range")
            if i == j:
                raise LieFormatError(
                    f"self-bracket [{names[i]}, {names[i]}] is zero by antisymmetry"
                )
            if i > j:
                raise LieFormatError(f"bracket pair {pair} must be keyed with i < j")
            clean: Vector = {}
            for k, c in dict(vec).items():
                if not 0 <= k < len(names):
                    raise LieFormatError(f"coefficient index {k} out of range")
                c = Fraction(c)
                if c:
                    clean[int(k)] = c
            if clean:
                table[(int(i), int(j))] = clean
        self.names = names
        self.constants = table
        self._index = index

    @property
    def dim(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise LieFormatError(f"unknown basis name {name!r}") from None

    def name(self, i: int) -> str:
        self.check_index(i)
        return self.names[i]

    def check_index(self, i: int) -> None:
        if not isinstance(i, int) or not 0 <= i < self.dim:
            raise IndexError(f"basis index {i} out of range for dimension {self.dim}")

    def __eq__(self, other):
        if not isinstance(other, LiePresentation):
            return NotImplemented
        return self.names == other.names and self.constants == other.constants

    def __repr__(self):
        return f"LiePresentation(basis={' '.join(self.names)}, brackets={len(self.constants)})"


def parse_presentation(text: str) -> LiePresentation:
    """Parse the line-oriented `.lie` format.

    `#` starts a comment; the first significant line is `basis n1 n2 ...`
    (listing order defines the basis order); each following line reads
    `bracket x y = TERM ((+|-) TERM)*` with TERM being `[sign] [rational]
    name`, or literally `0` for an explicit zero bracket.  Unlisted pairs
    are zero.  A pair written in descending order is stored negated under
    the ascending key.
    """
    names: tuple[str, ...] | None = None
    index: dict[str, int] = {}
    seen_pairs: set[tuple[int, int]] = set()
    constants: dict[tuple[int, int], Vector] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if names is None:
            if fields[0] != "basis" or len(fields) < 2:
                raise LieFormatError(f"line {lineno}: expected 'basis name...' first")
            names = tuple(fields[1:])
            for nm in names:
                if not _NAME.match(nm):
                    raise LieFormatError(f"line {lineno}: invalid basis name {nm!r}")
                if nm in index:
                    raise LieFormatError(f"line {lineno}: duplicate basis name {nm!r}")
                index[nm] = len(index)
            continue
        if fields[0] != "bracket" or len(fields) < 5 or fields[3] != "=":
            raise LieFormatError(f"line {lineno}: expected 'bracket x y = ...'")
        x, y = fields[1], fields[2]
        for nm in (x, y):
            if nm not in index:
                raise LieFormatError(f"line {lineno}: unknown basis name {nm!r}")
        i, j = index[x], index[y]
        if i == j:
            raise LieFormatError(f"line {lineno}: self-bracket [{x}, {x}]")
        key = (min(i, j), max(i, j))
        if key in seen_pairs:
            raise LieFormatError(f"line {lineno}: pair ({x}, {y}) listed twice")
        seen_pairs.add(key)
        vec = _parse_bracket_terms(fields[4:], index, lineno)
        if i > j:
            vec = vec_scale(-1, vec)
        if vec:
            constants[key] = vec
    if names is None:
        raise LieFormatError("missing 'basis' line")
    return LiePresentation(names, constants)


def _parse_bracket_terms(tokens: list[str], index: dict[str, int], lineno: int) -> Vector:
    if tokens == ["0"]:
        return {}
    out: Vector = {}
    sign = 1
    pending_sign = False
    coeff: Fraction | None = None
    for tok in tokens:
        if tok in ("+", "-"):
            if coeff is not None:
                raise LieFormatError(f"line {lineno}: coefficient without a name")
            if tok == "-":
                sign = -sign
            pending_sign = True
        elif tok in index:
            c = sign * (coeff if coeff is not None else Fraction(1))
            k = index[tok]
            s = out.get(k, Fraction(0)) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
            sign, coeff, pending_sign = 1, None, False
        elif tok[0].isdigit() or tok[0] in "+-":
            if coeff is not None:
                raise LieFormatError(f"line {lineno}: two coefficients in one term")
            if not _RATIONAL.match(tok):
                raise LieFormatError(f"line {lineno}: malformed rational {tok!r}")
            try:
                coeff = Fraction(tok)
            except ZeroDivisionError:
                raise LieFormatError(f"line {lineno}: malformed rational {tok!r}") from None
        else:
            raise LieFormatError(f"line {lineno}: unknown basis name {tok!r}")
    if coeff is not None or pending_sign:
        raise LieFormatError(f"line {lineno}: trailing sign or coefficient")
    return out


def serialize_presentation(L: LiePresentation) -> str:
    """Emit `.lie` text that re-parses to an identical presentation."""
    lines = ["basis " + " ".join(L.names)]
    for i, j in sorted(L.constants):
        parts: list[str] = []
        for k, c in sorted(L.constants[(i, j)].items()):
            body = f"{abs(c)} {L.names[k]}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        lines.append(f"bracket {L.names[i]} {L.names[j]} = " + " ".join(parts))
    return "\n".join(lines) + "\n"


def bracket(L: LiePresentation, i: int, j: int) -> Vector:
    """Expansion of [e_i, e_j]; antisymmetric by construction."""
    L.check_index(i)
    L.check_index(j)
    if i == j:
        return {}
    if i < j:
        return dict(L.constants.get((i, j), {}))
    return {k: -c for k, c in L.constants.get((j, i), {}).items()}


def _ad(L: LiePresentation, i: int, v: Vector) -> Vector:
    """[e_i, v] for a sparse vector v."""
    out: Vector = {}
    for m, c in v.items():
        out = vec_add(out, vec_scale(c, bracket(L, i, m)))
    return out


def jacobi_defect(L: LiePresentation, i: int, j: int, k: int) -> Vector:
    """[e_i,[e_j,e_k]] + [[e_i,e_k],e_j] + [e_k,[e_i,e_j]].

    Zero on every triple exactly when the table is a Lie algebra; the
    expression is alternating in (i, j, k) for any antisymmetric table.
    """
    t1 = _ad(L, i, bracket(L, j, k))
    t2 = vec_scale(-1, _ad(L, j, bracket(L, i, k)))  # [[i,k],j] = -[j,[i,k]]
    t3 = _ad(L, k, bracket(L, i, j))
    return vec_add(vec_add(t1, t2), t3)


def check_jacobi(L: LiePresentation) -> list[tuple[tuple[int, int, int], Vector]]:
    """All triples i < j < k with nonzero Jacobi defect; empty means Lie."""
    bad = []
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            for k in range(j + 1, L.dim):
                d = jacobi_defect(L, i, j, k)
                if d:
                    bad.append(((i, j, k), d))
    return bad
