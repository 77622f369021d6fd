"""Primitive elements of a fixed length, as the kernel of the reduced coproduct."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import Element, Tensor, delta_plus
from .enumeration import generate_packed
from .words import Word, sort_key

Vector = list[Fraction]


@dataclass(frozen=True)
class GradeBasis:
    n: int
    words: tuple[Word, ...]
    index: dict[Word, int] = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.words)


def grade_basis(n: int) -> GradeBasis:
    words = tuple(sorted(generate_packed(n), key=sort_key))
    return GradeBasis(n, words, {w: i for i, w in enumerate(words)})


@dataclass
class RationalMatrix:
    """Sparse exact matrix: ``rows[r]`` maps column index to a nonzero entry."""

    row_labels: list
    col_labels: list
    rows: list[dict[int, Fraction]]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.col_labels)

    def dense(self) -> list[list[Fraction]]:
        out = []
        for row in self.rows:
            line = [Fraction(0)] * len(self.col_labels)
            for j, c in row.items():
                line[j] = Fraction(c)
            out.append(line)
        return out

    def apply(self, vec: Sequence) -> list[Fraction]:
        return [sum((Fraction(c) * vec[j] for j, c in row.items()), Fraction(0)) for row in self.rows]

    @classmethod
    def from_dense(cls, data: Sequence[Sequence]) -> "RationalMatrix":
        ncols = len(data[0]) if data else 0
        rows = [{j: Fraction(c) for j, c in enumerate(r) if c} for r in data]
        kept = [r for r in rows if r]
        return cls(list(range(len(kept))), list(range(ncols)), kept)


def delta_plus_matrix(n: int, basis: GradeBasis | None = None) -> RationalMatrix:
    """Coordinates of the reduced coproduct of each length-n packed word, one column per word."""
    if n < 1:
        raise ValueError("grade must be >= 1")
    basis = basis or grade_basis(n)
    columns = [delta_plus(Element.basis(w)) for w in basis.words]
    pairs = sorted({key for t in columns for key in t.terms()}, key=lambda p: (sort_key(p[0]), sort_key(p[1])))
    row_of = {p: r for r, p in enumerate(pairs)}
    rows: list[dict[int, Fraction]] = [{} for _ in pairs]
    for j, t in enumerate(columns):
        for key, c in t.terms().items():
            rows[row_of[key]][j] = Fraction(c)
    return RationalMatrix(pairs, list(basis.words), rows)


def _rref(rows: list[dict[int, Fraction]], ncols: int) -> tuple[list[dict[int, Fraction]], list[int]]:
    """Sparse Gauss-Jordan elimination; pivots by smallest absolute value."""
    work = [dict(r) for r in rows if r]
    pivots: list[int] = []
    done: list[dict[int, Fraction]] = []
    for col in range(ncols):
        candidates = [i for i, r in enumerate(work) if col in r]
        if not candidates:
            continue
        p = min(candidates, key=lambda i: (abs(work[i][col]), len(work[i])))
        prow = work.pop(p)
        inv = 1 / Fraction(prow[col])
        prow = {j: c * inv for j, c in prow.items()}
        for r in work + done:
            c = r.get(col)
            if c:
                for j, v in prow.items():
                    s = r.get(j, 0) - c * v
                    if s:
                        r[j] = s
                    else:
                        r.pop(j, None)
        done.append(prow)
        pivots.append(col)
    return done, pivots


def _normalize(vec: Vector) -> Vector:
    denom = 1
    for c in vec:
        if c:
            denom = denom * c.denominator // math.gcd(denom, c.denominator)
    ints = [int(c * denom) for c in vec]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    lead = next((c for c in ints if c), 1)
    sign = -1 if lead < 0 else 1
    return [Fraction(sign * c, g or 1) for c in ints]


def kernel_basis(m: RationalMatrix | Sequence[Sequence]) -> list[Vector]:
    """Exact nullspace basis, one vector per free column in column order.

    Vectors are scaled to coprime integers with a positive leading entry.
    """
    if not isinstance(m, RationalMatrix):
        m = RationalMatrix.from_dense(m) if m and len(m[0]) else m
        if not isinstance(m, RationalMatrix):
            raise ValueError("cannot infer column count of an empty matrix")
    ncols = len(m.col_labels)
    reduced, pivots = _rref(m.rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            c = row.get(free)
            if c:
                vec[pc] = -c
        basis.append(_normalize(vec))
    return basis


def rank(m: RationalMatrix | Sequence[Sequence]) -> int:
    if not isinstance(m, RationalMatrix):
        m = RationalMatrix.from_dense(m)
    return len(_rref(m.rows, len(m.col_labels))[1])


def rank_fraction_free(data: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by Bareiss elimination; no fractions are formed."""
    a = [[int(x) for x in row] for row in data]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    prev = 1
    for col in range(ncols):
        p = next((i for i in range(r, nrows) if a[i][col]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(r + 1, nrows):
            for j in range(col + 1, ncols):
                a[i][j] = (a[r][col] * a[i][j] - a[i][col] * a[r][j]) // prev
            a[i][col] = 0
        prev = a[r][col]
        r += 1
        if r == nrows:
            break
    return r


def verify_primitive(v: Element) -> bool:
    return not delta_plus(v)


@dataclass(frozen=True)
class PrimitiveBasis:
    n: int
    vectors: tuple[Element, ...]
    rows: int
    cols: int

    @property
    def dim(self) -> int:
        return len(self.vectors)


def primitive_basis(n: int) -> PrimitiveBasis:
    basis = grade_basis(n)
    m = delta_plus_matrix(n, basis)
    vectors = []
    for vec in kernel_basis(m):
        elt = Element((w, c) for w, c in zip(basis.words, vec) if c)
        if not verify_primitive(elt):
            raise ArithmeticError(f"kernel vector {elt} is not primitive")
        vectors.append(elt)
    return PrimitiveBasis(n, tuple(vectors), m.shape[0], m.shape[1])


def same_span(a: Sequence[Element], b: Sequence[Element]) -> bool:
    """Whether two families of elements span the same subspace (exact row reduction)."""
    words = sorted({w for e in list(a) + list(b) for w in e.terms()}, key=sort_key)
    col = {w: j for j, w in enumerate(words)}

    def reduced(family):
        rows = [{col[w]: Fraction(c) for w, c in e.terms().items()} for e in family]
        rref, pivots = _rref(rows, len(words))
        return sorted((p, sorted(r.items())) for p, r in zip(pivots, rref))

    return reduced(a) == reduced(b)
