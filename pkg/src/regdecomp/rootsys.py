"""Finite irreducible root systems in simple-root coordinates.

Roots are integer tuples ``c`` meaning ``c[0]*alpha_1 + ... + c[n-1]*alpha_n``.
Every system is built by closing the simple roots under the simple
reflections of its Cartan matrix, so all queries stay in integer arithmetic.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Root = tuple[int, ...]
RootSet = frozenset  # frozenset of root indices

FAMILIES = "ABCDEFG"

_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*_?\s*(\d+)\s*$")


@dataclass(frozen=True, order=True)
class RootSystemType:
    family: str
    rank: int

    def __post_init__(self):
        fam = self.family.upper() if isinstance(self.family, str) else self.family
        object.__setattr__(self, "family", fam)
        if fam not in FAMILIES or len(fam) != 1:
            raise ValueError(f"unknown root system family {self.family!r}")
        n = self.rank
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValueError(f"rank must be an integer, got {n!r}")
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            # C_2 coincides with B_2
            "C": n >= 3,
            "D": n >= 4,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[fam]
        if not ok:
            raise ValueError(f"invalid rank {n} for family {fam}")

    @classmethod
    def parse(cls, text: str) -> "RootSystemType":
        """Parse names like ``"A3"``, ``"b_2"`` or ``"E 8"``."""
        m = _TYPE_RE.match(text)
        if not m:
            raise ValueError(f"cannot parse root system type {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


def cartan_matrix(rtype: RootSystemType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with ``a[i][j] = 2(alpha_i, alpha_j) / (alpha_i, alpha_i)``.

    Simple roots follow the Dynkin labelling used throughout the package:
    ``B_n`` has its short root last, ``C_n`` its long root last, ``D_n`` forks
    at ``alpha_{n-2}`` into ``alpha_{n-1}`` and ``alpha_n``, and ``E_n`` is the
    chain ``alpha_1 .. alpha_{n-2}`` with the arm ``alpha_{n-1} - alpha_n``
    attached at ``alpha_{n-3}``.  ``F_4`` is ``1 - 2 => 3 - 4`` (long roots
    first) and ``G_2`` has the short root first.
    """
    fam, n = rtype.family, rtype.rank
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2

    def bond(i, j):
        a[i][j] = a[j][i] = -1

    if fam in "ABCF":
        for i in range(n - 1):
            bond(i, i + 1)
    elif fam == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif fam == "E":
        for i in range(n - 3):
            bond(i, i + 1)
        bond(n - 4, n - 2)
        bond(n - 2, n - 1)
    elif fam == "G":
        bond(0, 1)

    # the short root's row carries the multiple bond
    if fam == "B":
        a[n - 1][n - 2] = -2
    elif fam == "C":
        a[n - 2][n - 1] = -2
    elif fam == "F":
        a[2][1] = -2
    elif fam == "G":
        a[0][1] = -3
    return tuple(tuple(row) for row in a)


def height(r: Root) -> int:
    return sum(r)


def reflect(cartan: Sequence[Sequence[int]], i: int, r: Root) -> Root:
    """Apply the simple reflection ``s_i`` (0-based ``i``) to a lattice vector."""
    pairing = sum(c * a for c, a in zip(r, cartan[i]))
    if pairing == 0:
        return tuple(r)
    out = list(r)
    out[i] -= pairing
    return tuple(out)


@dataclass(frozen=True, eq=False)
class RootSystem:
    rtype: RootSystemType
    cartan: tuple[tuple[int, ...], ...]
    roots: tuple[Root, ...]
    neg: tuple[int, ...]
    sum_table: tuple[tuple[int | None, ...], ...] = field(repr=False)
    index: dict = field(repr=False, compare=False, hash=False)

    @property
    def rank(self) -> int:
        return self.rtype.rank

    @property
    def family(self) -> str:
        return self.rtype.family

    def __len__(self):
        return len(self.roots)

    @property
    def num_positive(self) -> int:
        return len(self.roots) // 2

    @property
    def positive(self) -> RootSet:
        return frozenset(range(self.num_positive))

    @property
    def negative(self) -> RootSet:
        return frozenset(range(self.num_positive, len(self.roots)))

    @property
    def all(self) -> RootSet:
        return frozenset(range(len(self.roots)))

    def is_positive(self, i: int) -> bool:
        return i < self.num_positive

    def root_index(self, r: Iterable[int]) -> int:
        """Index of a root given by its coefficients; ``KeyError`` if absent."""
        key = tuple(int(c) for c in r)
        try:
            return self.index[key]
        except KeyError:
            raise KeyError(f"{list(key)} is not a root of {self.rtype}") from None

    def is_root(self, r: Iterable[int]) -> bool:
        return tuple(r) in self.index

    def simple(self, i: int) -> int:
        """Index of the simple root ``alpha_i`` (1-based)."""
        if not 1 <= i <= self.rank:
            raise IndexError(f"simple root index {i} out of range 1..{self.rank}")
        return i - 1

    def add(self, i: int, j: int) -> int | None:
        return self.sum_table[i][j]

    def rootset(self, members: Iterable) -> RootSet:
        """Build a root set from indices or coefficient vectors."""
        out = set()
        for m in members:
            if isinstance(m, int):
                if not 0 <= m < len(self.roots):
                    raise IndexError(f"root index {m} out of range")
                out.add(m)
            else:
                out.add(self.root_index(m))
        return frozenset(out)

    def negate(self, s: Iterable[int]) -> RootSet:
        return frozenset(self.neg[i] for i in s)


def build_root_system(rtype: RootSystemType | str | tuple) -> RootSystem:
    """Close the simple roots under simple reflections.

    Positive roots are ordered by height (simple roots first, in Dynkin
    order), negative roots follow in the same order, so ``neg[i] = i ± N``.
    """
    if isinstance(rtype, str):
        rtype = RootSystemType.parse(rtype)
    elif isinstance(rtype, tuple):
        rtype = RootSystemType(*rtype)
    a = cartan_matrix(rtype)
    n = rtype.rank

    simple = [tuple(int(i == k) for k in range(n)) for i in range(n)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(n):
                s = reflect(a, i, r)
                if s not in found:
                    found.add(s)
                    nxt.append(s)
        frontier = nxt

    pos = sorted((r for r in found if all(c >= 0 for c in r)),
                 key=lambda r: (height(r), tuple(-c for c in r)))
    npos = len(pos)
    if 2 * npos != len(found):
        raise AssertionError(f"{rtype}: root set is not symmetric")
    roots = tuple(pos) + tuple(tuple(-c for c in r) for r in pos)
    index = {r: i for i, r in enumerate(roots)}
    neg = tuple((i + npos) % (2 * npos) for i in range(2 * npos))

    table = []
    for ri in roots:
        row = []
        for rj in roots:
            row.append(index.get(tuple(x + y for x, y in zip(ri, rj))))
        table.append(tuple(row))

    return RootSystem(rtype, a, roots, neg, tuple(table), index)


def is_closed(rs: RootSystem, s: Iterable[int]) -> bool:
    """True iff every root sum of two members of ``s`` lies in ``s``."""
    s = frozenset(s)
    table = rs.sum_table
    for i in s:
        row = table[i]
        for j in s:
            k = row[j]
            if k is not None and k not in s:
                return False
    return True


def closure_violation(rs: RootSystem, s: Iterable[int]) -> tuple[int, int, int] | None:
    """Return a triple ``(i, j, i+j)`` escaping ``s``, or ``None`` if closed."""
    s = frozenset(s)
    for i in sorted(s):
        for j in sorted(s):
            k = rs.sum_table[i][j]
            if k is not None and k not in s:
                return i, j, k
    return None


def symmetric_part(rs: RootSystem, s: Iterable[int]) -> RootSet:
    s = frozenset(s)
    return frozenset(i for i in s if rs.neg[i] in s)


def beta_chain_basis(rs: RootSystem) -> list[int]:
    """Integral basis used to draw partition graphs.

    ``A, B, C, F``: ``beta_i = alpha_1 + ... + alpha_i``.
    ``D_n``: ``beta_1 .. beta_{n-1}`` then ``alpha_1 + ... + alpha_{n-2} + alpha_n``.
    ``E_n``: ``beta_1 .. beta_{n-2}``, ``alpha_1 + ... + alpha_{n-3} + alpha_{n-1}``,
    then that plus ``alpha_n``.  ``G_2``: the two simple roots.
    """
    fam, n = rs.family, rs.rank

    def chain(i):
        return tuple(int(k < i) for k in range(n))

    if fam in "ABCF":
        vecs = [chain(i) for i in range(1, n + 1)]
    elif fam == "D":
        vecs = [chain(i) for i in range(1, n)]
        last = list(chain(n - 2))
        last[n - 1] = 1
        vecs.append(tuple(last))
    elif fam == "E":
        vecs = [chain(i) for i in range(1, n - 1)]
        g = list(chain(n - 3))
        g[n - 2] = 1
        vecs.append(tuple(g))
        g = list(g)
        g[n - 1] = 1
        vecs.append(tuple(g))
    else:
        vecs = [chain(1), (0, 1)]
    return [rs.root_index(v) for v in vecs]


def beta_vector(n: int, i: int) -> Root:
    """``beta_i`` as a lattice vector; ``beta_0`` is the zero vector."""
    return tuple(int(k < i) for k in range(n))


def beta_difference(rs: RootSystem, i: int, j: int) -> int:
    """Index of the root ``-beta_i + beta_j`` (``0 <= i != j <= n``)."""
    if i == j:
        raise ValueError("beta_i - beta_i is not a root")
    n = rs.rank
    bi, bj = beta_vector(n, i), beta_vector(n, j)
    return rs.root_index(tuple(y - x for x, y in zip(bi, bj)))
