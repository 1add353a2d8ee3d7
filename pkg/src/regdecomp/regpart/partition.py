"""Regular partitions: verification, finest partitions, coarsening."""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from ..blocks import BlockPartition, check_partition
from ..rootsys import RootSystem, beta_difference, is_closed
from .combinat import check_int_partition, windows


def is_regular_partition(rs: RootSystem, p: BlockPartition) -> bool:
    """Every block and every union of two blocks is closed."""
    check_partition(rs, p)
    if not all(is_closed(rs, b) for b in p.blocks):
        return False
    return all(is_closed(rs, a | b) for a, b in combinations(p.blocks, 2))


def regularity_violation(rs: RootSystem, p: BlockPartition) -> tuple[int, int, int] | None:
    """A root triple ``(x, y, x+y)`` where ``x+y`` sits in neither block of ``x``, ``y``."""
    check_partition(rs, p)
    where = p.block_of()
    n = len(rs)
    for x in range(n):
        for y in range(x, n):
            z = rs.sum_table[x][y]
            if z is not None and where[z] not in (where[x], where[y]):
                return x, y, z
    return None


def _require_type_a(rs: RootSystem, what: str) -> None:
    if rs.family != "A":
        raise ValueError(f"{what} is only defined for type A, got {rs.rtype}")


def row_blocks(rs: RootSystem) -> list[frozenset]:
    """``R_i = {-beta_i + beta_j : j != i}`` for ``i = 0..n``."""
    n = rs.rank
    return [frozenset(beta_difference(rs, i, j) for j in range(n + 1) if j != i)
            for i in range(n + 1)]


def finest_partition(rs: RootSystem, orientation: str = "row") -> BlockPartition:
    """The row partition, or its negation (the column partition)."""
    _require_type_a(rs, "the finest partition")
    if rs.rank < 2:
        raise ValueError("finest partitions need rank >= 2")
    rows = row_blocks(rs)
    if orientation == "row":
        return BlockPartition(rows)
    if orientation in ("column", "col"):
        return BlockPartition(rs.negate(b) for b in rows)
    raise ValueError(f"orientation must be 'row' or 'column', not {orientation!r}")


def partition_from_int_partition(rs: RootSystem, lam: Sequence[int],
                                 orientation: str = "row") -> BlockPartition:
    """Union the rows ``R_i`` over consecutive windows of sizes ``lam``."""
    _require_type_a(rs, "the integer-partition construction")
    lam = check_int_partition(lam, rs.rank + 1)
    if len(lam) < 2:
        raise ValueError("need at least two parts to get a partition into blocks")
    rows = row_blocks(rs)
    blocks = [frozenset().union(*(rows[i] for i in w)) for w in windows(lam)]
    if orientation in ("column", "col"):
        blocks = [rs.negate(b) for b in blocks]
    elif orientation != "row":
        raise ValueError(f"orientation must be 'row' or 'column', not {orientation!r}")
    return BlockPartition(blocks)


def coarsen(p: BlockPartition, merge_spec: Iterable[Iterable[int]]) -> BlockPartition:
    """Union blocks group by group; ``merge_spec`` is a set partition of block positions."""
    groups = [list(g) for g in merge_spec]
    flat = [i for g in groups for i in g]
    if any(not g for g in groups):
        raise ValueError("merge groups must be nonempty")
    if sorted(flat) != list(range(len(p))):
        raise ValueError(f"merge spec {groups} is not a set partition of 0..{len(p) - 1}")
    return BlockPartition(frozenset().union(*(p.blocks[i] for i in g)) for g in groups)


def set_partitions(items: Sequence) -> Iterable[list[list]]:
    """All set partitions of ``items`` (restricted growth order)."""
    items = list(items)
    if not items:
        yield []
        return

    def rec(k, acc):
        if k == len(items):
            yield [list(g) for g in acc]
            return
        for g in acc:
            g.append(items[k])
            yield from rec(k + 1, acc)
            g.pop()
        acc.append([items[k]])
        yield from rec(k + 1, acc)
        acc.pop()

    yield from rec(0, [])
