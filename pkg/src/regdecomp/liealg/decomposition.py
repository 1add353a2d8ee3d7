"""Regular subalgebras and the verifiers for regular decompositions.

A regular subalgebra is ``s + span{E_alpha : alpha in S}`` with ``s`` a
subspace of the Cartan subalgebra.  Cartan parts are stored as coefficient
vectors over ``H_i = H_{alpha_1 + ... + alpha_i}``; in sl(n+1) this is
``E_{1,1} - E_{i+1,i+1}``.

Two verifiers are provided.  :func:`is_regular_decomposition` realises
sl(n+1) by matrices and tests every bracket for span membership by exact row
reduction.  :func:`verify_by_roots` works for any root system and uses only
the root combinatorics: ``[g_a, g_b] = g_{a+b}`` when ``a+b`` is a root and
``[g_a, g_{-a}]`` is the line through ``H_a``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from ..blocks import BlockPartition
from ..linalg import Span, independent_subset, rank
from ..rootsys import RootSystem
from .matrix import RatMatrix, bracket, cartan_element, h_alpha_coeffs, root_entry_map


def _vec(v) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


@dataclass(frozen=True)
class RegularSubalgebra:
    root_part: frozenset
    cartan_basis: tuple[tuple[Fraction, ...], ...] = ()

    def __init__(self, root_part: Iterable[int], cartan_basis: Iterable[Sequence] = ()):
        object.__setattr__(self, "root_part", frozenset(root_part))
        object.__setattr__(self, "cartan_basis", tuple(_vec(v) for v in cartan_basis))

    @property
    def dim(self) -> int:
        return len(self.root_part) + len(self.cartan_basis)

    def with_cartan(self, cartan: Iterable[Sequence]) -> "RegularSubalgebra":
        return RegularSubalgebra(self.root_part, cartan)


@dataclass(frozen=True)
class RegularDecomposition:
    rs: RootSystem
    summands: tuple[RegularSubalgebra, ...]

    def __init__(self, rs: RootSystem, summands: Iterable[RegularSubalgebra]):
        object.__setattr__(self, "rs", rs)
        object.__setattr__(self, "summands", tuple(summands))

    def __len__(self):
        return len(self.summands)

    def __iter__(self):
        return iter(self.summands)

    @property
    def n(self) -> int:
        return self.rs.rank

    def root_partition(self) -> BlockPartition:
        """Forget the Cartan parts."""
        return BlockPartition(s.root_part for s in self.summands)

    def dims(self) -> list[int]:
        return [s.dim for s in self.summands]


@dataclass(frozen=True)
class DecompositionType:
    m: int
    k: int

    def as_list(self) -> list[int]:
        return [self.m, self.k]


def decomposition_type(d: RegularDecomposition) -> DecompositionType:
    k = sum(1 for s in d.summands if s.cartan_basis)
    return DecompositionType(len(d.summands), k)


@dataclass
class Verdict:
    valid: bool
    type: DecompositionType
    witness: dict | None = None
    reason: str | None = None

    def __bool__(self):
        return self.valid

    def as_dict(self) -> dict:
        out = {"valid": self.valid, "type": self.type.as_list(), "witness": self.witness}
        if self.reason:
            out["reason"] = self.reason
        return out


def direct_sum_defect(d: RegularDecomposition) -> str | None:
    """Why the summands fail to be a direct sum of the whole algebra, if they do."""
    rs, n = d.rs, d.n
    if len(d.summands) < 2:
        return f"a decomposition needs at least 2 summands, got {len(d.summands)}"
    seen: set = set()
    for k, s in enumerate(d.summands, start=1):
        if not s.root_part and not s.cartan_basis:
            return f"summand {k} is zero"
        bad = [r for r in s.root_part if not 0 <= r < len(rs)]
        if bad:
            return f"summand {k} has invalid roots {sorted(bad)}"
        if seen & s.root_part:
            return f"summand {k} repeats roots of an earlier summand"
        seen |= s.root_part
        if any(len(v) != n for v in s.cartan_basis):
            return f"summand {k} has Cartan vectors of the wrong length (need {n})"
        if rank(s.cartan_basis) != len(s.cartan_basis):
            return f"summand {k} has a dependent Cartan basis"
    if len(seen) != len(rs):
        return f"root parts cover {len(seen)} of {len(rs)} roots"
    allc = [v for s in d.summands for v in s.cartan_basis]
    if len(allc) != n or rank(allc) != n:
        return f"Cartan parts give {len(allc)} vectors of rank {rank(allc)}, need a basis of size {n}"
    return None


# ---------------------------------------------------------------- matrix route

def _elements(rs, entry, s: RegularSubalgebra):
    size = rs.rank + 1
    out = []
    for r in sorted(s.root_part):
        a, b = entry[r]
        out.append((f"E_{a},{b}", RatMatrix.unit(size, a, b)))
    for v in s.cartan_basis:
        out.append((_h_label(v), cartan_element(v)))
    return out


def _h_label(v) -> str:
    terms = []
    for i, x in enumerate(v, start=1):
        if x == 0:
            continue
        coef = "" if x == 1 else "-" if x == -1 else f"{x}*"
        terms.append(f"{coef}H_{i}")
    return " + ".join(terms).replace("+ -", "- ") or "0"


def _closure_witness(span: Span, pairs):
    for (la, a), (lb, b) in pairs:
        c = bracket(a, b)
        if c.entries not in span:
            return [la, lb], c
    return None


def is_subalgebra(s: RegularSubalgebra, rs: RootSystem) -> bool:
    """Every bracket of basis elements lies in the span (exact row reduction)."""
    return subalgebra_witness(s, rs) is None


def subalgebra_witness(s: RegularSubalgebra, rs: RootSystem):
    entry = root_entry_map(rs)
    elems = _elements(rs, entry, s)
    span = Span(m.entries for _, m in elems)
    if span.dim != len(elems):
        return ["dependent basis"], None
    return _closure_witness(span, combinations(elems, 2))


def is_regular_decomposition(d: RegularDecomposition) -> Verdict:
    """Matrix verification over sl(n+1).

    Checks the direct-sum conditions, then that every summand and every sum
    of two summands is closed under the commutator.  On failure the witness
    names the (1-based) summand pair and a bracket escaping their span.
    """
    typ = decomposition_type(d)
    if d.rs.family != "A":
        raise ValueError(f"matrix verification needs type A, got {d.rs.rtype}")
    defect = direct_sum_defect(d)
    if defect:
        return Verdict(False, typ, None, defect)
    rs = d.rs
    entry = root_entry_map(rs)
    elems = [_elements(rs, entry, s) for s in d.summands]
    spans = [Span(m.entries for _, m in e) for e in elems]

    for i, (e, sp) in enumerate(zip(elems, spans)):
        w = _closure_witness(sp, combinations(e, 2))
        if w:
            return Verdict(False, typ, _witness(i, i, w), "summand not closed under bracket")
    for i, j in combinations(range(len(elems)), 2):
        joint = spans[i].copy()
        for _, m in elems[j]:
            joint.add(m.entries)
        # brackets inside each summand are already known to stay inside it
        cross = ((x, y) for x in elems[i] for y in elems[j])
        w = _closure_witness(joint, cross)
        if w:
            return Verdict(False, typ, _witness(i, j, w), "pairwise sum not closed under bracket")
    return Verdict(True, typ)


def _witness(i, j, w):
    labels, value = w
    return {"pair": [i + 1, j + 1], "bracket_of": labels,
            "bracket": _matrix_label(value), "escapes_span": True}


def _matrix_label(m: RatMatrix | None) -> str | None:
    if m is None:
        return None
    parts = []
    for (r, c), v in sorted(m.entries.items()):
        coef = "" if v == 1 else "-" if v == -1 else f"{v}*"
        parts.append(f"{coef}E_{r + 1},{c + 1}")
    return " + ".join(parts).replace("+ -", "- ") or "0"


# ------------------------------------------------------------------ root route

def _root_closure_witness(rs: RootSystem, roots: frozenset, cartan: Span):
    for a in sorted(roots):
        for b in sorted(roots):
            c = rs.sum_table[a][b]
            if c is not None and c not in roots:
                return {"roots": [list(rs.roots[a]), list(rs.roots[b])],
                        "sum": list(rs.roots[c])}
            if b == rs.neg[a] and a < b and h_alpha_coeffs(rs.roots[a]) not in cartan:
                return {"roots": [list(rs.roots[a]), list(rs.roots[b])],
                        "coroot": [str(x) for x in h_alpha_coeffs(rs.roots[a])]}
    return None


def verify_by_roots(d: RegularDecomposition) -> Verdict:
    """Root-combinatorial verification, valid for every simple type."""
    typ = decomposition_type(d)
    defect = direct_sum_defect(d)
    if defect:
        return Verdict(False, typ, None, defect)
    rs = d.rs
    spans = [Span(s.cartan_basis) for s in d.summands]
    for i, s in enumerate(d.summands):
        w = _root_closure_witness(rs, s.root_part, spans[i])
        if w:
            return Verdict(False, typ, {"pair": [i + 1, i + 1], **w},
                           "summand not closed under bracket")
    for i, j in combinations(range(len(d.summands)), 2):
        joint = Span(d.summands[i].cartan_basis + d.summands[j].cartan_basis)
        w = _root_closure_witness(rs, d.summands[i].root_part | d.summands[j].root_part, joint)
        if w:
            return Verdict(False, typ, {"pair": [i + 1, j + 1], **w},
                           "pairwise sum not closed under bracket")
    return Verdict(True, typ)


def move_root(d: RegularDecomposition, root: int, target: int) -> RegularDecomposition:
    """Move the root vector of ``root`` into summand ``target`` (0-based)."""
    out = []
    for k, s in enumerate(d.summands):
        part = set(s.root_part)
        part.discard(root)
        if k == target:
            part.add(root)
        out.append(RegularSubalgebra(part, s.cartan_basis))
    return RegularDecomposition(d.rs, out)


def cartan_basis_of(vectors: Sequence[Sequence]) -> list[tuple[Fraction, ...]]:
    """Drop zero and dependent vectors, keeping the first independent ones."""
    vectors = [_vec(v) for v in vectors]
    return [vectors[i] for i in independent_subset(vectors)]
