"""Simple reflections, Weyl words, and canonical forms of partitions.

Weyl group elements are stored as permutations of root indices: ``w[i]`` is
the index of ``w(root_i)``.  The action of ``W`` on roots is faithful, so
these permutations identify group elements.
"""
from __future__ import annotations

import itertools
from math import factorial
from typing import Iterable, Sequence

from .blocks import BlockPartition, check_partition
from .errors import CapacityError
from .rootsys import Root, RootSystem, RootSystemType, reflect

MODULO_CHOICES = ("renumber", "sign", "weyl")
MAX_GROUP_ORDER = 10**7

_EXCEPTIONAL_ORDERS = {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
                       ("F", 4): 1152, ("G", 2): 12}


def parse_modulo(spec: str | Iterable[str] | None) -> frozenset[str]:
    """Parse ``"renumber,sign"`` style equivalence sets; ``"none"`` is empty."""
    if spec is None:
        return frozenset()
    if isinstance(spec, str):
        parts = [s.strip().lower() for s in spec.split(",") if s.strip()]
    else:
        parts = [s.strip().lower() for s in spec]
    parts = [p for p in parts if p not in ("none", "")]
    bad = [p for p in parts if p not in MODULO_CHOICES]
    if bad:
        raise ValueError(f"unknown equivalence(s) {bad}; choose from {MODULO_CHOICES}")
    return frozenset(parts)


def weyl_order(rtype: RootSystemType) -> int:
    fam, n = rtype.family, rtype.rank
    if fam == "A":
        return factorial(n + 1)
    if fam in "BC":
        return 2**n * factorial(n)
    if fam == "D":
        return 2 ** (n - 1) * factorial(n)
    return _EXCEPTIONAL_ORDERS[(fam, n)]


def simple_reflection(rs: RootSystem, i: int, r: Sequence[int]) -> Root:
    """``s_i(r) = r - <r, alpha_i^vee> alpha_i`` for 1-based ``i``."""
    if not 1 <= i <= rs.rank:
        raise ValueError(f"reflection index {i} out of range 1..{rs.rank}")
    r = tuple(int(c) for c in r)
    if not rs.is_root(r):
        raise ValueError(f"{list(r)} is not a root of {rs.rtype}")
    return reflect(rs.cartan, i - 1, r)


def reflection_permutation(rs: RootSystem, i: int) -> tuple[int, ...]:
    return tuple(rs.index[reflect(rs.cartan, i - 1, r)] for r in rs.roots)


def word_permutation(rs: RootSystem, word: Sequence[int]) -> tuple[int, ...]:
    """Permutation of roots induced by ``s_{w1} s_{w2} ... s_{wk}``."""
    perm = tuple(range(len(rs)))
    # rightmost letter acts first
    for letter in reversed(list(word)):
        if not 1 <= letter <= rs.rank:
            raise ValueError(f"reflection index {letter} out of range 1..{rs.rank}")
        s = reflection_permutation(rs, letter)
        perm = tuple(s[x] for x in perm)
    return perm


def apply_word(rs: RootSystem, word: Sequence[int], p: BlockPartition) -> BlockPartition:
    return p.mapped(word_permutation(rs, word))


def weyl_group(rs: RootSystem, max_order: int = MAX_GROUP_ORDER) -> list[tuple[int, ...]]:
    """All Weyl group elements as root permutations, by breadth-first closure."""
    order = weyl_order(rs.rtype)
    if order > max_order:
        raise CapacityError(
            f"|W({rs.rtype})| = {order} exceeds the enumeration limit {max_order}")
    gens = [reflection_permutation(rs, i) for i in range(1, rs.rank + 1)]
    ident = tuple(range(len(rs)))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                sw = tuple(s[x] for x in w)
                if sw not in seen:
                    seen.add(sw)
                    nxt.append(sw)
        frontier = nxt
    if len(seen) != order:
        raise AssertionError(f"enumerated {len(seen)} elements, expected {order}")
    return sorted(seen)


def _symmetries(rs: RootSystem, modulo: frozenset[str], max_order: int):
    group = weyl_group(rs, max_order) if "weyl" in modulo else [tuple(range(len(rs)))]
    if "sign" in modulo:
        neg = rs.neg
        group = group + [tuple(neg[x] for x in w) for w in group]
    return group


def canonical_key(p: BlockPartition, group, renumber: bool):
    return min(p.mapped(g).normal_form(renumber) for g in group)


def canonicalize(rs: RootSystem, p: BlockPartition, modulo: Iterable[str] | str = (),
                 max_order: int = MAX_GROUP_ORDER) -> BlockPartition:
    """Least representative of the orbit of ``p``.

    The orbit is taken under the chosen subset of ``renumber`` (any block
    order), ``sign`` (global negation) and ``weyl`` (the Weyl group).  Blocks
    are compared as sorted index tuples; with ``renumber`` they are also
    sorted by ``(size, members)``, otherwise their order is kept.
    """
    modulo = parse_modulo(modulo)
    check_partition(rs, p)
    group = _symmetries(rs, modulo, max_order)
    return BlockPartition(canonical_key(p, group, "renumber" in modulo))


def canonical_classes(rs: RootSystem, parts: Iterable[BlockPartition],
                      modulo: Iterable[str] | str = (),
                      max_order: int = MAX_GROUP_ORDER) -> list[BlockPartition]:
    """Distinct canonical representatives of ``parts``, sorted.

    Without ``renumber`` every ordering of the blocks of each input counts
    as a separate labelled partition.
    """
    modulo = parse_modulo(modulo)
    group = _symmetries(rs, modulo, max_order)
    renumber = "renumber" in modulo
    keys = set()
    for p in parts:
        variants = [p] if renumber else (
            BlockPartition(order) for order in itertools.permutations(p.blocks))
        for q in variants:
            keys.add(canonical_key(q, group, renumber))
    return [BlockPartition(k) for k in sorted(keys)]
