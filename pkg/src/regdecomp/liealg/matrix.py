"""Sparse exact matrices realising sl(n+1)."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ..rootsys import RootSystem, beta_difference


class RatMatrix:
    """Square matrix of Fractions stored as ``{(row, col): value}``, 0-based."""

    __slots__ = ("size", "entries")

    def __init__(self, size: int, entries: Mapping[tuple[int, int], object] = ()):
        self.size = size
        ents = {}
        for (r, c), v in dict(entries).items():
            if not (0 <= r < size and 0 <= c < size):
                raise IndexError(f"entry ({r}, {c}) outside a {size}x{size} matrix")
            v = Fraction(v)
            if v:
                ents[(r, c)] = v
        self.entries = ents

    @classmethod
    def unit(cls, size: int, i: int, j: int) -> "RatMatrix":
        """``E_{i,j}`` with 1-based indices."""
        return cls(size, {(i - 1, j - 1): 1})

    @classmethod
    def diagonal(cls, diag: Sequence) -> "RatMatrix":
        return cls(len(diag), {(k, k): d for k, d in enumerate(diag)})

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence]) -> "RatMatrix":
        return cls(len(rows), {(r, c): v for r, row in enumerate(rows) for c, v in enumerate(row)})

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.size for _ in range(self.size)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def _check(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if other.size != self.size:
            raise ValueError(f"size mismatch: {self.size} vs {other.size}")
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        ents = dict(self.entries)
        for k, v in other.entries.items():
            ents[k] = ents.get(k, 0) + v
        return RatMatrix(self.size, ents)

    def __neg__(self):
        return RatMatrix(self.size, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        s = Fraction(scalar)
        return RatMatrix(self.size, {k: s * v for k, v in self.entries.items()})

    def __matmul__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        by_row: dict[int, list] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out: dict = {}
        for (r, k), a in self.entries.items():
            for c, b in by_row.get(k, ()):
                out[(r, c)] = out.get((r, c), 0) + a * b
        return RatMatrix(self.size, out)

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.size == other.size and self.entries == other.entries

    def __hash__(self):
        return hash((self.size, frozenset(self.entries.items())))

    def __bool__(self):
        return bool(self.entries)

    def trace(self) -> Fraction:
        return sum((v for (r, c), v in self.entries.items() if r == c), Fraction(0))

    def is_diagonal(self) -> bool:
        return all(r == c for r, c in self.entries)

    def __repr__(self):
        return f"RatMatrix({self.size}, {self.entries})"


def bracket(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """Commutator ``ab - ba``."""
    if a.size != b.size:
        raise ValueError(f"size mismatch: {a.size} vs {b.size}")
    return a @ b - b @ a


def H(n: int, i: int) -> RatMatrix:
    """``H_i = E_{1,1} - E_{i+1,i+1}``; ``H_0 = 0``."""
    if not 0 <= i <= n:
        raise ValueError(f"H_{i} undefined for sl({n + 1})")
    if i == 0:
        return RatMatrix(n + 1)
    return RatMatrix(n + 1, {(0, 0): 1, (i, i): -1})


def cartan_element(coeffs: Sequence) -> RatMatrix:
    """``sum_i coeffs[i-1] * H_i`` as a traceless diagonal matrix."""
    diag = [sum((Fraction(x) for x in coeffs), Fraction(0))] + [-Fraction(x) for x in coeffs]
    return RatMatrix.diagonal(diag)


def cartan_coeffs(m: RatMatrix) -> list[Fraction]:
    """Inverse of :func:`cartan_element` for traceless diagonal ``m``."""
    if not m.is_diagonal() or m.trace() != 0:
        raise ValueError("not a traceless diagonal matrix")
    return [-m.entries.get((i, i), Fraction(0)) for i in range(1, m.size)]


def root_entry_map(rs: RootSystem) -> dict[int, tuple[int, int]]:
    """Root index of ``-beta_i + beta_j`` to the 1-based position ``(i+1, j+1)``."""
    if rs.family != "A":
        raise ValueError(f"matrix realisation needs type A, got {rs.rtype}")
    n = rs.rank
    return {beta_difference(rs, i, j): (i + 1, j + 1)
            for i in range(n + 1) for j in range(n + 1) if i != j}


def entry_root_map(rs: RootSystem) -> dict[tuple[int, int], int]:
    return {v: k for k, v in root_entry_map(rs).items()}


def root_vector(rs: RootSystem, root: int) -> RatMatrix:
    a, b = root_entry_map(rs)[root]
    return RatMatrix.unit(rs.rank + 1, a, b)


def sl_basis(n: int) -> dict:
    """Off-diagonal units ``E_{i,j}`` and ``H_1..H_n`` of sl(n+1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    units = {(i, j): RatMatrix.unit(n + 1, i, j)
             for i in range(1, n + 2) for j in range(1, n + 2) if i != j}
    hs = [H(n, i) for i in range(1, n + 1)]
    return {"E": units, "H": hs, "dim": len(units) + len(hs)}


def h_alpha_coeffs(root: Iterable[int]) -> list[Fraction]:
    """Coordinates of ``H_alpha`` in the ``H_1..H_n`` basis.

    ``H_alpha = sum c_k H_{alpha_k}`` and ``H_{alpha_k} = H_k - H_{k-1}``.
    """
    c = list(root)
    return [Fraction(c[i] - (c[i + 1] if i + 1 < len(c) else 0)) for i in range(len(c))]
