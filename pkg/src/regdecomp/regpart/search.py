"""Exhaustive backtracking search for regular partitions.

A partition is regular exactly when every additive triple ``x + y = z`` of
roots has ``z`` in the block of ``x`` or the block of ``y``: that single
condition covers closure of each block and of each union of two blocks.
Roots are coloured one at a time in a fixed order; a triple is checked as
soon as its last member is coloured.  Colours are introduced in first-use
order, which removes the block renumbering symmetry from the raw output.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..blocks import BlockPartition
from ..errors import BudgetExceeded
from ..rootsys import RootSystem, beta_chain_basis
from ..weyl import canonical_classes, parse_modulo

DEFAULT_NODE_BUDGET = 10**9


@dataclass
class EnumerationReport:
    rtype: str
    min_blocks: int
    max_blocks: int | None
    modulo: tuple[str, ...]
    classes: list[BlockPartition]
    raw_count: int
    node_count: int
    wall_time: float
    shortcut: bool = field(default=False)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def csv_row(self) -> dict:
        return {"family": self.rtype[0], "rank": int(self.rtype[1:]),
                "min_blocks": self.min_blocks, "modulo": "+".join(self.modulo) or "none",
                "class_count": self.class_count, "node_count": self.node_count,
                "wall_time": f"{self.wall_time:.3f}"}


def search_order(rs: RootSystem) -> list[int]:
    """Basis roots and their negatives first, then greedily the root closing most triples."""
    order: list[int] = []
    for b in beta_chain_basis(rs):
        order += [b, rs.neg[b]]
    placed = set(order)
    n = len(rs)
    while len(order) < n:
        best, best_score = None, -1
        for r in range(n):
            if r in placed:
                continue
            score = 0
            for x in placed:
                z = rs.sum_table[r][x]
                if z is not None and z in placed:
                    score += 1
                for y in placed:
                    if y > x and rs.sum_table[x][y] == r:
                        score += 1
            if score > best_score:
                best, best_score = r, score
        order.append(best)
        placed.add(best)
    return order


def _triple_schedule(rs: RootSystem, order: list[int]) -> list[tuple]:
    """Triples ``(x, y, x+y)`` grouped by the position of their last-coloured member."""
    pos = {r: t for t, r in enumerate(order)}
    sched: list[list] = [[] for _ in order]
    n = len(rs)
    for x in range(n):
        for y in range(x + 1, n):
            z = rs.sum_table[x][y]
            if z is not None:
                sched[max(pos[x], pos[y], pos[z])].append((x, y, z))
    return [tuple(s) for s in sched]


def _run(rs: RootSystem, order, sched, min_blocks, max_blocks, budget,
         prefix=(), stop_depth=None):
    """Depth-first search; returns (colourings, node count).

    ``prefix`` fixes the colours of the first positions.  With ``stop_depth``
    the search returns the valid partial colourings at that depth instead.
    """
    n = len(order)
    colour = [-1] * len(rs)
    found: list[tuple[int, ...]] = []
    nodes = 0
    cap = max_blocks if max_blocks is not None else n
    end = n if stop_depth is None else stop_depth

    for t, c in enumerate(prefix):
        colour[order[t]] = c
    start_blocks = max(prefix, default=-1) + 1

    def dfs(t, used):
        nonlocal nodes
        if t == end:
            if stop_depth is not None:
                found.append(tuple(colour[order[k]] for k in range(t)))
            elif used >= min_blocks:
                found.append(tuple(colour))
            return
        if used + (n - t) < min_blocks:
            return
        r = order[t]
        checks = sched[t]
        for c in range(min(used + 1, cap)):
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(budget, nodes)
            colour[r] = c
            for x, y, z in checks:
                cz = colour[z]
                if cz != colour[x] and cz != colour[y]:
                    break
            else:
                dfs(t + 1, c + 1 if c == used else used)
        colour[r] = -1

    dfs(len(prefix), start_blocks)
    return found, nodes


def _worker(args):
    return _run(*args)


def _to_partition(colouring) -> BlockPartition:
    blocks: dict[int, set] = {}
    for r, c in enumerate(colouring):
        blocks.setdefault(c, set()).add(r)
    return BlockPartition(blocks[c] for c in sorted(blocks))


def search_regular_partitions(rs: RootSystem, min_blocks: int = 3,
                              modulo=("renumber",), max_blocks: int | None = None,
                              node_budget: int = DEFAULT_NODE_BUDGET, jobs: int = 1,
                              split_depth: int = 6,
                              coarsening_shortcut: bool = True) -> EnumerationReport:
    """Enumerate regular partitions with at least ``min_blocks`` blocks.

    Merging blocks of a regular partition keeps it regular, so when no
    partition with exactly ``min_blocks`` blocks exists there is none with
    more.  ``coarsening_shortcut`` runs that cheaper capped search first.
    Weyl reduction is only offered for type A.
    """
    modulo = parse_modulo(modulo)
    if "weyl" in modulo and rs.family != "A":
        raise ValueError("Weyl reduction of enumeration output is only offered for type A")
    if min_blocks < 1:
        raise ValueError("min_blocks must be >= 1")
    if max_blocks is not None and max_blocks < min_blocks:
        raise ValueError("max_blocks must be >= min_blocks")

    t0 = time.perf_counter()
    order = search_order(rs)
    sched = _triple_schedule(rs, order)
    total_nodes = 0
    shortcut = False

    def run(cap, budget):
        if jobs <= 1:
            return _run(rs, order, sched, min_blocks, cap, budget)
        depth = min(split_depth, len(order))
        prefixes, nodes = _run(rs, order, sched, 1, cap, budget, stop_depth=depth)
        tasks = [(rs, order, sched, min_blocks, cap, budget - nodes, pre) for pre in prefixes]
        out: list = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for found, k in pool.map(_worker, tasks):
                out += found
                nodes += k
                if nodes > budget:
                    raise BudgetExceeded(budget, nodes)
        return out, nodes

    colourings = None
    if coarsening_shortcut and min_blocks >= 3 and (max_blocks is None or max_blocks > min_blocks):
        probe, nodes = run(min_blocks, node_budget)
        total_nodes += nodes
        if not probe:
            colourings, shortcut = [], True
    if colourings is None:
        colourings, nodes = run(max_blocks, node_budget - total_nodes)
        total_nodes += nodes

    parts = [_to_partition(c) for c in colourings]
    classes = canonical_classes(rs, parts, modulo)
    return EnumerationReport(str(rs.rtype), min_blocks, max_blocks, tuple(sorted(modulo)),
                             classes, len(parts), total_nodes,
                             time.perf_counter() - t0, shortcut)


def enumerate_regular_partitions(rs: RootSystem, min_blocks: int = 3, modulo=("renumber",),
                                 **kwargs) -> list[BlockPartition]:
    return search_regular_partitions(rs, min_blocks, modulo, **kwargs).classes
