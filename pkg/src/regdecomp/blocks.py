"""Ordered partitions of a root system into blocks of root indices."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .rootsys import RootSystem


@dataclass(frozen=True)
class BlockPartition:
    blocks: tuple[frozenset, ...]

    def __init__(self, blocks: Iterable[Iterable[int]]):
        object.__setattr__(self, "blocks", tuple(frozenset(b) for b in blocks))

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __getitem__(self, i):
        return self.blocks[i]

    @property
    def m(self) -> int:
        return len(self.blocks)

    def block_of(self) -> dict[int, int]:
        """Map each root index to the position of its block."""
        return {r: b for b, block in enumerate(self.blocks) for r in block}

    def normal_form(self, sort_blocks: bool = True) -> tuple[tuple[int, ...], ...]:
        """Blocks as sorted tuples, optionally ordered by ``(size, members)``."""
        nf = [tuple(sorted(b)) for b in self.blocks]
        if sort_blocks:
            nf.sort(key=lambda b: (len(b), b))
        return tuple(nf)

    def mapped(self, perm) -> "BlockPartition":
        """Image under a permutation of root indices (block order kept)."""
        return BlockPartition(frozenset(perm[r] for r in b) for b in self.blocks)

    def same_blocks(self, other: "BlockPartition") -> bool:
        """Equality as unordered set partitions."""
        return set(self.blocks) == set(other.blocks) and len(self) == len(other)


def check_partition(rs: RootSystem, p: BlockPartition) -> None:
    """Raise ``ValueError`` unless ``p`` is a partition of all roots of ``rs``."""
    seen: set[int] = set()
    for k, b in enumerate(p.blocks):
        if not b:
            raise ValueError(f"block {k} is empty")
        bad = [r for r in b if not 0 <= r < len(rs)]
        if bad:
            raise ValueError(f"block {k} has invalid root indices {sorted(bad)}")
        if seen & b:
            raise ValueError(f"block {k} overlaps an earlier block")
        seen |= b
    if len(seen) != len(rs):
        raise ValueError(f"blocks cover {len(seen)} of {len(rs)} roots")


def is_partition(rs: RootSystem, p: BlockPartition) -> bool:
    try:
        check_partition(rs, p)
    except ValueError:
        return False
    return True
