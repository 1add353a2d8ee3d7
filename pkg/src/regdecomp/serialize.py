"""JSON and CSV encodings of roots, partitions, graphs and decompositions.

Roots are integer coefficient vectors over the simple roots; root sets are
sorted lists of such vectors.  Rationals are written as strings accepted by
``Fraction`` ("3", "-1/2").  Block order is kept as given, since summand
numbers in verifier witnesses refer to it.
"""
from __future__ import annotations

import csv
import io
from fractions import Fraction
from typing import Iterable

from .blocks import BlockPartition
from .liealg.decomposition import RegularDecomposition, RegularSubalgebra
from .regpart.graph import PartitionGraph
from .regpart.search import EnumerationReport
from .rootsys import RootSystem, RootSystemType, build_root_system

CSV_FIELDS = ("family", "rank", "min_blocks", "modulo", "class_count", "node_count", "wall_time")


def rational(x) -> str:
    return str(Fraction(x))


def parse_rational(text) -> Fraction:
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if isinstance(text, str):
        return Fraction(text.strip())
    raise ValueError(f"not a rational: {text!r} (use an integer or a 'p/q' string)")


def rootset_to_json(rs: RootSystem, s: Iterable[int]) -> list[list[int]]:
    return sorted(list(rs.roots[r]) for r in s)


def rootset_from_json(rs: RootSystem, data) -> frozenset:
    out = set()
    for v in data:
        r = tuple(int(x) for x in v)
        if len(r) != rs.rank or not rs.is_root(r):
            raise ValueError(f"{list(r)} is not a root of {rs.rtype}")
        if rs.root_index(r) in out:
            raise ValueError(f"root {list(r)} listed twice")
        out.add(rs.root_index(r))
    return frozenset(out)


def _header(rs: RootSystem) -> dict:
    return {"family": rs.family, "rank": rs.rank}


def _system(data) -> RootSystem:
    try:
        return build_root_system(RootSystemType(str(data["family"]).upper(), int(data["rank"])))
    except KeyError as e:
        raise ValueError(f"missing field {e.args[0]!r}") from None


def partition_to_json(rs: RootSystem, p: BlockPartition) -> dict:
    return {**_header(rs), "blocks": [rootset_to_json(rs, b) for b in p.blocks]}


def partition_from_json(data) -> tuple[RootSystem, BlockPartition]:
    rs = _system(data)
    if "blocks" not in data:
        raise ValueError("missing field 'blocks'")
    return rs, BlockPartition(rootset_from_json(rs, b) for b in data["blocks"])


def graph_to_json(g: PartitionGraph) -> dict:
    return {"m": g.m, "loops": [list(x) for x in g.loops], "edges": [list(x) for x in g.edges]}


def graph_from_json(data) -> PartitionGraph:
    try:
        return PartitionGraph(int(data["m"]),
                              tuple(tuple(int(v) for v in x) for x in data.get("loops", [])),
                              tuple(tuple(int(v) for v in x) for x in data.get("edges", [])))
    except KeyError as e:
        raise ValueError(f"missing field {e.args[0]!r}") from None
    except TypeError as e:
        raise ValueError(f"malformed graph: {e}") from None


def decomposition_to_json(d: RegularDecomposition) -> dict:
    rs = d.rs
    return {**_header(rs),
            "blocks": [rootset_to_json(rs, s.root_part) for s in d.summands],
            "cartan": [[[rational(x) for x in v] for v in s.cartan_basis] for s in d.summands]}


def decomposition_from_json(data) -> RegularDecomposition:
    rs, p = partition_from_json(data)
    cartan = data.get("cartan", [[] for _ in p.blocks])
    if len(cartan) != len(p.blocks):
        raise ValueError(f"'cartan' has {len(cartan)} entries for {len(p.blocks)} blocks")
    summands = []
    for block, vecs in zip(p.blocks, cartan):
        vecs = [[parse_rational(x) for x in v] for v in vecs]
        if any(len(v) != rs.rank for v in vecs):
            raise ValueError(f"Cartan vectors must have length {rs.rank}")
        summands.append(RegularSubalgebra(block, vecs))
    return RegularDecomposition(rs, summands)


def report_to_json(rs: RootSystem, rep: EnumerationReport, with_classes: bool = True) -> dict:
    row = rep.csv_row()
    out = {"family": row["family"], "rank": row["rank"], "min_blocks": rep.min_blocks,
           "max_blocks": rep.max_blocks, "modulo": list(rep.modulo),
           "class_count": rep.class_count, "raw_count": rep.raw_count,
           "node_count": rep.node_count, "wall_time": round(rep.wall_time, 3),
           "coarsening_shortcut": rep.shortcut}
    if with_classes:
        out["classes"] = [[rootset_to_json(rs, b) for b in p.blocks] for p in rep.classes]
    return out


def reports_to_csv(reports: Iterable[EnumerationReport]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for rep in reports:
        w.writerow(rep.csv_row())
    return buf.getvalue()
