"""Exact rational linear algebra on sparse vectors.

Vectors are dicts ``{key: Fraction}`` with zero entries omitted; keys are
any hashable coordinate labels.  Dense sequences are accepted wherever a
vector is expected and are keyed by position.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence, Union

Vector = Mapping[Hashable, Fraction]
VectorLike = Union[Mapping, Sequence]


def as_sparse(v: VectorLike) -> dict:
    if isinstance(v, Mapping):
        items = v.items()
    else:
        items = enumerate(v)
    return {k: Fraction(x) for k, x in items if x != 0}


def to_dense(v: Vector, n: int) -> list[Fraction]:
    out = [Fraction(0)] * n
    for k, x in v.items():
        out[k] = Fraction(x)
    return out


def axpy(a: Fraction, x: Vector, y: dict) -> None:
    """In place ``y += a*x``, dropping cancelled entries."""
    for k, xv in x.items():
        nv = y.get(k, 0) + a * xv
        if nv:
            y[k] = nv
        else:
            y.pop(k, None)


class Span:
    """Incrementally built subspace kept in echelon form.

    Each stored row has a pivot coordinate where it equals 1, and every row
    vanishes at the pivots of the rows stored before it.  Reducing a vector
    against the rows in insertion order therefore clears all pivots.
    """

    def __init__(self, vectors: Iterable[VectorLike] = ()):
        self._rows: list[tuple[Hashable, dict]] = []
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self._rows)

    @property
    def dim(self) -> int:
        return len(self._rows)

    def reduce(self, v: VectorLike) -> dict:
        r = as_sparse(v)
        for p, row in self._rows:
            c = r.get(p)
            if c:
                axpy(-c, row, r)
        return r

    def __contains__(self, v: VectorLike) -> bool:
        return not self.reduce(v)

    def add(self, v: VectorLike) -> bool:
        """Add ``v``; return False (and change nothing) if it is dependent."""
        r = self.reduce(v)
        if not r:
            return False
        p = next(iter(r))
        c = r[p]
        self._rows.append((p, {k: x / c for k, x in r.items()}))
        return True

    def copy(self) -> "Span":
        s = Span()
        s._rows = list(self._rows)
        return s


def rank(vectors: Iterable[VectorLike]) -> int:
    return Span(vectors).dim


def independent_subset(vectors: Iterable[VectorLike]) -> list[int]:
    """Positions of a greedy maximal independent subfamily."""
    s = Span()
    return [i for i, v in enumerate(vectors) if s.add(v)]


def complement_basis(span: Span, n: int) -> list[list[Fraction]]:
    """Standard unit vectors of length ``n`` completing ``span`` to everything."""
    s = span.copy()
    out = []
    for i in range(n):
        e = [Fraction(0)] * n
        e[i] = Fraction(1)
        if s.add(e):
            out.append(e)
    return out


def rref(rows: Iterable[Sequence], ncols: int) -> tuple[tuple[Fraction, ...], ...]:
    """Reduced row echelon form of the row space; a canonical basis for it."""
    m = [[Fraction(x) for x in r] for r in rows]
    out = []
    col = 0
    while m and col < ncols:
        piv = next((r for r in m if r[col] != 0), None)
        if piv is None:
            col += 1
            continue
        m.remove(piv)
        piv = [x / piv[col] for x in piv]
        m = [[a - r[col] * b for a, b in zip(r, piv)] for r in m]
        out = [[a - r[col] * b for a, b in zip(r, piv)] for r in out]
        out.append(piv)
        m = [r for r in m if any(r)]
        col += 1
    out.sort(key=lambda r: next(i for i, x in enumerate(r) if x != 0))
    return tuple(tuple(r) for r in out)
