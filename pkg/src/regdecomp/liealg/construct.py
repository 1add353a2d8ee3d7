"""Constructions of regular decompositions.

Index conventions differ between the two (m, k) families, so each builder
states which one it takes:

* :func:`construct_k1k` and :func:`construct_kk` take a partition of ``n``
  and number matrix rows ``1..n+1`` directly.
* :func:`construct_k1k_beta` takes the same partition of ``n`` but works with
  source indices ``0..n`` of the roots ``-beta_i + beta_j``; it corresponds to
  the partition ``(lam_1, ..., lam_k, 1)`` of ``n + 1``.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

from ..blocks import BlockPartition
from ..linalg import Span, complement_basis, rank, rref
from ..regpart.combinat import check_int_partition, windows
from ..regpart.partition import is_regular_partition, row_blocks
from ..rootsys import RootSystem, build_root_system, is_closed, symmetric_part
from .decomposition import (RegularDecomposition, RegularSubalgebra, cartan_basis_of)
from .matrix import entry_root_map, h_alpha_coeffs


def _unit(n: int, i: int) -> tuple[Fraction, ...]:
    """Coordinates of ``H_i`` (``H_0 = 0``)."""
    return tuple(Fraction(int(k == i)) for k in range(1, n + 1))


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _type_a(n: int) -> RootSystem:
    if n < 1:
        raise ValueError("n must be >= 1")
    return build_root_system(("A", n))


def _row(rs: RootSystem, emap, i: int) -> set:
    """Roots of the off-diagonal entries in matrix row ``i`` (1-based)."""
    size = rs.rank + 1
    return {emap[(i, j)] for j in range(1, size + 1) if j != i}


def _check_lambda(n: int, lam: Sequence[int]) -> tuple[int, ...]:
    lam = check_int_partition(lam, n)
    if len(lam) < 2:
        raise ValueError(f"need k = len(lambda) >= 2, got lambda = {lam}")
    return lam


def construct_k1k(n: int, lam: Sequence[int]) -> RegularDecomposition:
    """The (k+1, k) family for a partition ``lam`` of ``n`` with ``k >= 2`` parts.

    ``g_1`` is matrix row 1 without Cartan part; ``g_{l}`` for ``l >= 2``
    holds the rows ``i+1`` and elements ``H_i`` for ``i`` in the ``(l-1)``-th
    window of ``lam`` over ``1..n``.
    """
    lam = _check_lambda(n, lam)
    rs = _type_a(n)
    emap = entry_root_map(rs)
    summands = [RegularSubalgebra(_row(rs, emap, 1))]
    for w in windows(lam, start=1):
        roots = set().union(*(_row(rs, emap, i + 1) for i in w))
        summands.append(RegularSubalgebra(roots, [_unit(n, i) for i in w]))
    return RegularDecomposition(rs, summands)


def kk_admissibility(n: int, lam: Sequence[int], x: Sequence) -> str | None:
    """Reason ``x`` is not an admissible element for :func:`construct_kk`, else None."""
    lam = tuple(lam)
    x = tuple(Fraction(v) for v in x)
    if len(x) != n:
        return f"X must have {n} coordinates, got {len(x)}"
    support = [i for i, v in enumerate(x, start=1) if v != 0]
    if all(i <= lam[0] for i in support):
        return None
    if len(support) == 1 and x[support[0] - 1] == 1:
        p = support[0]
        for q, w in enumerate(windows(lam[1:], start=lam[0] + 1), start=2):
            if p in w:
                if lam[q - 1] > 1:
                    return None
                return (f"X = H_{p} lies in block {q}, which needs lambda_{q} > 1 "
                        f"(lambda_{q} = {lam[q - 1]})")
    return (f"X is neither in span(H_1..H_{lam[0]}) nor equal to some H_p "
            f"with p in a block q >= 2 having lambda_q > 1")


def construct_kk(n: int, lam: Sequence[int], x: Sequence | None = None) -> RegularDecomposition:
    """The (k, k) family for a partition ``lam`` of ``n`` and an admissible ``X``.

    ``g_1`` holds rows ``1..lam_1 + 1`` with ``H_1..H_{lam_1}`` and ``X``;
    each later block holds its rows ``i+1`` with the elements ``H_i - X``.
    ``X`` is a coefficient vector over ``H_1..H_n``; ``None`` means zero.
    """
    lam = _check_lambda(n, lam)
    x = tuple(Fraction(v) for v in x) if x is not None else (Fraction(0),) * n
    why = kk_admissibility(n, lam, x)
    if why:
        raise ValueError(f"inadmissible X: {why}")
    rs = _type_a(n)
    emap = entry_root_map(rs)
    first = range(0, lam[0] + 1)
    roots = set().union(*(_row(rs, emap, i + 1) for i in first))
    cartan = [_unit(n, i) for i in first if i >= 1] + [x]
    summands = [RegularSubalgebra(roots, cartan_basis_of(cartan))]
    for w in windows(lam[1:], start=lam[0] + 1):
        roots = set().union(*(_row(rs, emap, i + 1) for i in w))
        cartan = [_sub(_unit(n, i), x) for i in w]
        summands.append(RegularSubalgebra(roots, cartan_basis_of(cartan)))
    return RegularDecomposition(rs, summands)


def construct_k1k_beta(n: int, lam: Sequence[int]) -> RegularDecomposition:
    """The (k+1, k) family in root form.

    For the partition ``(lam_1, ..., lam_k, 1)`` of ``n + 1`` block ``l``
    holds ``-beta_i + beta_j`` and ``H_{beta_n - beta_i}`` for ``i`` in the
    ``l``-th window over ``0..n-1``; the last block is ``{-beta_n + beta_j}``.
    """
    lam = _check_lambda(n, lam)
    check_int_partition(lam + (1,), n + 1)
    rs = _type_a(n)
    rows = row_blocks(rs)
    top = _unit(n, n)
    summands = []
    for w in windows(lam, start=0):
        summands.append(RegularSubalgebra(set().union(*(rows[i] for i in w)),
                                          [_sub(top, _unit(n, i)) for i in w]))
    summands.append(RegularSubalgebra(rows[n]))
    return RegularDecomposition(rs, summands)


def finest_sources(rs: RootSystem, p: BlockPartition) -> tuple[str, list[list[int]]] | None:
    """Match ``p`` to unions of rows (or columns): orientation and source indices per block."""
    rows = row_blocks(rs)
    for orientation, parts in (("row", rows), ("column", [rs.negate(r) for r in rows])):
        sources: list[list[int]] = [[] for _ in p.blocks]
        where = p.block_of()
        ok = True
        for i, part in enumerate(parts):
            homes = {where[r] for r in part}
            if len(homes) != 1:
                ok = False
                break
            sources[homes.pop()].append(i)
        if ok:
            return orientation, sources
    return None


def extend_partition_to_decomposition(rs: RootSystem, p: BlockPartition,
                                      alternative: bool = False) -> RegularDecomposition:
    """Attach Cartan lines to an (m >= 3)-regular partition of ``A_n``.

    The block containing source index ``i`` gets ``H_{beta_i}`` (nothing for
    ``i = 0``); with ``alternative`` it gets ``H_{beta_n - beta_i}`` instead.
    """
    if rs.family != "A":
        raise ValueError(f"(m >= 3)-regular partitions only exist in type A, got {rs.rtype}")
    if len(p) < 3:
        raise ValueError(f"need m >= 3 blocks, got {len(p)}")
    if not is_regular_partition(rs, p):
        raise ValueError("partition is not regular")
    match = finest_sources(rs, p)
    if match is None:
        raise ValueError("partition is not a union of rows or of columns")
    _, sources = match
    n = rs.rank
    summands = []
    for block, src in zip(p.blocks, sources):
        if alternative:
            cartan = [_sub(_unit(n, n), _unit(n, i)) for i in src if i != n]
        else:
            cartan = [_unit(n, i) for i in src if i != 0]
        summands.append(RegularSubalgebra(block, cartan))
    return RegularDecomposition(rs, summands)


def extend_two_block(rs: RootSystem, s1: Iterable[int], s2: Iterable[int],
                     split: tuple[Sequence, Sequence] | None = None) -> RegularDecomposition:
    """Extend a partition into two closed sets to a 2-regular decomposition.

    Each side keeps the coroots ``H_alpha`` of its symmetric part; the
    missing Cartan complement goes entirely to the first summand unless
    ``split`` gives explicit extra vectors ``(for_first, for_second)``.
    """
    s1, s2 = frozenset(s1), frozenset(s2)
    if not s1 or not s2:
        raise ValueError("both sets must be nonempty")
    if s1 & s2 or len(s1 | s2) != len(rs):
        raise ValueError("the two sets must partition the root system")
    for k, s in ((1, s1), (2, s2)):
        if not is_closed(rs, s):
            raise ValueError(f"set {k} is not closed")
    n = rs.rank
    c1 = cartan_basis_of([h_alpha_coeffs(rs.roots[a]) for a in sorted(symmetric_part(rs, s1))])
    c2 = cartan_basis_of([h_alpha_coeffs(rs.roots[a]) for a in sorted(symmetric_part(rs, s2))])
    if rank(c1 + c2) != len(c1) + len(c2):
        raise ValueError("Cartan parts of the symmetric parts intersect")
    if split is None:
        extra1 = complement_basis(Span(c1 + c2), n)
        extra2 = []
    else:
        extra1 = [tuple(Fraction(v) for v in x) for x in split[0]]
        extra2 = [tuple(Fraction(v) for v in x) for x in split[1]]
        allv = c1 + c2 + extra1 + extra2
        if len(allv) != n or rank(allv) != n:
            raise ValueError("split vectors do not complete the Cartan parts to a basis")
    return RegularDecomposition(rs, [RegularSubalgebra(s1, c1 + [tuple(v) for v in extra1]),
                                     RegularSubalgebra(s2, c2 + [tuple(v) for v in extra2])])


# --------------------------------------------------------------- equivalence

def _diag_from_cartan(v):
    return [sum(v, Fraction(0))] + [-x for x in v]


def _cartan_from_diag(d):
    return tuple(-x for x in d[1:])


def _summand_key(rs, to_entry, to_root, s, sigma, sign):
    n = rs.rank
    roots = []
    for r in s.root_part:
        a, b = to_entry[r]
        a, b = sigma[a - 1] + 1, sigma[b - 1] + 1
        if sign:
            a, b = b, a
        roots.append(to_root[(a, b)])
    vecs = []
    for v in s.cartan_basis:
        d = _diag_from_cartan(v)
        pd = [Fraction(0)] * (n + 1)
        for k, x in enumerate(d):
            pd[sigma[k]] = -x if sign else x
        vecs.append(_cartan_from_diag(pd))
    return frozenset(roots), rref(vecs, n)


def decomposition_key(d: RegularDecomposition, sigma=None, sign: bool = False):
    """Order-free normal form of a type-A decomposition after a symmetry.

    ``sigma`` permutes matrix indices ``0..n`` (the Weyl group of ``A_n``);
    ``sign`` applies ``X -> -X^T``, which negates every root.
    """
    rs = d.rs
    n = rs.rank
    sigma = tuple(range(n + 1)) if sigma is None else tuple(sigma)
    to_root = entry_root_map(rs)
    to_entry = {v: k for k, v in to_root.items()}
    keys = [_summand_key(rs, to_entry, to_root, s, sigma, sign) for s in d.summands]
    return tuple(sorted(keys, key=lambda k: (sorted(k[0]), k[1])))


def equivalent_decompositions(d1: RegularDecomposition, d2: RegularDecomposition,
                              weyl: bool = True, sign: bool = True) -> bool:
    """Equal up to renumbering, and optionally the Weyl group and sign swap."""
    if d1.rs.rtype != d2.rs.rtype or len(d1) != len(d2):
        return False
    target = decomposition_key(d2)
    n = d1.n
    sigmas = permutations(range(n + 1)) if weyl else [tuple(range(n + 1))]
    signs = (False, True) if sign else (False,)
    return any(decomposition_key(d1, s, g) == target for s in sigmas for g in signs)
