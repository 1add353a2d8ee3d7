"""The labelled multigraph recording where the basis roots of a partition live.

For a basis root ``beta_l`` there is a loop at vertex ``i`` when both
``+beta_l`` and ``-beta_l`` lie in block ``i``, and otherwise an edge whose
``+`` end is the block of ``beta_l`` and whose ``-`` end is the block of
``-beta_l``.  Vertices and labels are 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from ..blocks import BlockPartition, check_partition
from ..rootsys import RootSystem, beta_chain_basis, beta_difference
from .partition import is_regular_partition


@dataclass(frozen=True)
class PartitionGraph:
    m: int
    loops: tuple[tuple[int, int], ...]  # (vertex, label)
    edges: tuple[tuple[int, int, int], ...]  # (plus vertex, minus vertex, label)

    def __post_init__(self):
        object.__setattr__(self, "loops", tuple(sorted(tuple(x) for x in self.loops)))
        object.__setattr__(self, "edges", tuple(sorted(tuple(x) for x in self.edges)))
        labels = [lab for _, lab in self.loops] + [lab for *_, lab in self.edges]
        if sorted(labels) != list(range(1, len(labels) + 1)):
            raise ValueError(f"labels {sorted(labels)} do not cover 1..{len(labels)} once each")
        for v, _ in self.loops:
            if not 1 <= v <= self.m:
                raise ValueError(f"loop vertex {v} out of range 1..{self.m}")
        for a, b, _ in self.edges:
            if not (1 <= a <= self.m and 1 <= b <= self.m):
                raise ValueError(f"edge ({a}, {b}) has a vertex out of range 1..{self.m}")
            if a == b:
                raise ValueError(f"edge ({a}, {b}) joins a vertex to itself; use a loop")

    @property
    def rank(self) -> int:
        return len(self.loops) + len(self.edges)

    def negated(self) -> "PartitionGraph":
        """Graph of the negated partition: every edge swaps its signs."""
        return PartitionGraph(self.m, self.loops, tuple((b, a, lab) for a, b, lab in self.edges))


@dataclass(frozen=True)
class GraphReport:
    a1: bool
    a2: bool
    a3: bool
    a4: bool
    a5: bool
    star: bool
    hub: int | None
    hub_sign: str | None

    @property
    def all_pass(self) -> bool:
        return self.a1 and self.a2 and self.a3 and self.a4 and self.a5

    def as_dict(self) -> dict:
        return {"A1": self.a1, "A2": self.a2, "A3": self.a3, "A4": self.a4,
                "A5": self.a5, "star": self.star, "hub": self.hub,
                "hub_sign": self.hub_sign}


def build_partition_graph(rs: RootSystem, p: BlockPartition,
                          basis: Sequence[int] | None = None) -> PartitionGraph:
    check_partition(rs, p)
    if basis is None:
        basis = beta_chain_basis(rs)
    where = p.block_of()
    loops, edges = [], []
    for label, b in enumerate(basis, start=1):
        plus, minus = where[b] + 1, where[rs.neg[b]] + 1
        if plus == minus:
            loops.append((plus, label))
        else:
            edges.append((plus, minus, label))
    return PartitionGraph(len(p), tuple(loops), tuple(edges))


def check_graph_properties(g: PartitionGraph) -> GraphReport:
    loop_vertices = {v for v, _ in g.loops}
    touched = {v for a, b, _ in g.edges for v in (a, b)}

    a1 = len(loop_vertices) <= 1
    a2 = all(v in loop_vertices or v in touched for v in range(1, g.m + 1))

    signs: dict[int, set] = {}
    for a, b, _ in g.edges:
        signs.setdefault(a, set()).add("+")
        signs.setdefault(b, set()).add("-")
    a3 = all(len(s) == 1 for s in signs.values())

    a4 = all({a1_, b1_} & {a2_, b2_}
             for (a1_, b1_, _), (a2_, b2_, _) in combinations(g.edges, 2))

    common = set(range(1, g.m + 1))
    for a, b, _ in g.edges:
        common &= {a, b}
    a5 = all(v in common for v in loop_vertices)

    hub, hub_sign = _find_hub(g, loop_vertices, signs)
    star = hub is not None and a2
    return GraphReport(a1, a2, a3, a4, a5, star, hub, hub_sign)


def _find_hub(g, loop_vertices, signs):
    """A vertex meeting every edge with one sign and carrying every loop."""
    if not g.edges:
        if g.m == 1:
            return 1, None
        return None, None
    candidates = set(range(1, g.m + 1))
    for a, b, _ in g.edges:
        candidates &= {a, b}
    if len(loop_vertices) > 1:
        return None, None
    candidates = [v for v in sorted(candidates)
                  if len(signs.get(v, ())) == 1 and loop_vertices <= {v}]
    if not candidates:
        return None, None
    # with a single edge both ends qualify; prefer the loop vertex, then '+'
    candidates.sort(key=lambda v: (v not in loop_vertices, "+" not in signs[v], v))
    hub = candidates[0]
    return hub, next(iter(signs[hub]))


def reconstruct_from_graph(rs: RootSystem, g: PartitionGraph) -> BlockPartition:
    """The unique (m >= 3)-regular partition of ``A_n`` with graph ``g``.

    Graph labels refer to the chain ``beta_l = alpha_1 + ... + alpha_l``.
    """
    if rs.family != "A":
        raise ValueError(f"reconstruction is only available for type A, got {rs.rtype}")
    if g.rank != rs.rank:
        raise ValueError(f"graph has {g.rank} labels but {rs.rtype} has rank {rs.rank}")
    if g.m < 3:
        raise ValueError(f"reconstruction needs m >= 3 vertices, got {g.m}")
    report = check_graph_properties(g)
    if not report.all_pass:
        failed = [k for k, v in report.as_dict().items() if k.startswith("A") and not v]
        raise ValueError(f"graph violates properties {failed}")
    if report.hub_sign == "-":
        # the negated partition has a '+' hub
        q = reconstruct_from_graph(rs, g.negated())
        return BlockPartition(rs.negate(b) for b in q.blocks)

    hub = report.hub
    n = rs.rank
    loop_labels = {lab for _, lab in g.loops}
    # minus_at[l]: block holding -beta_l; beta_0 = 0 behaves like a loop at the hub
    minus_at = {0: hub}
    for lab in loop_labels:
        minus_at[lab] = hub
    for _, b, lab in g.edges:
        minus_at[lab] = b

    blocks: list[set] = [set() for _ in range(g.m)]
    for lab in range(1, n + 1):
        blocks[hub - 1].add(beta_difference(rs, 0, lab))
        blocks[minus_at[lab] - 1].add(beta_difference(rs, lab, 0))

    # beta_j - beta_i (i, j >= 1) always joins the block of -beta_i: if i is a
    # loop label that block is the hub, which holds beta_j and -beta_i; otherwise
    # putting it at the hub (or with -beta_j on another leaf) would force -beta_i
    # there as well, and m >= 3 rules out the remaining shared-leaf placement
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                blocks[minus_at[i] - 1].add(beta_difference(rs, i, j))

    p = BlockPartition(blocks)
    if not is_regular_partition(rs, p) or build_partition_graph(rs, p) != g:
        raise ValueError("graph does not describe a regular partition")
    return p
