from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

IntPartition = tuple[int, ...]


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind via ``S(n,k) = k S(n-1,k) + S(n-1,k-1)``."""
    if n < 0 or k < 0:
        raise ValueError("arguments must be nonnegative")
    if n == k:
        return 1
    if n == 0 or k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def stirling_count_upper(n: int) -> int:
    """Number of (m >= 3)-regular partition classes of ``A_n`` up to renumbering and sign."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return sum(stirling2(n + 1, k) for k in range(3, n + 2))


def integer_partitions(total: int, min_parts: int = 1,
                       max_parts: int | None = None) -> Iterator[IntPartition]:
    """Non-increasing partitions of ``total``, largest parts first."""

    def rec(rest, cap, acc):
        if rest == 0:
            if len(acc) >= min_parts:
                yield tuple(acc)
            return
        if max_parts is not None and len(acc) >= max_parts:
            return
        for part in range(min(rest, cap), 0, -1):
            acc.append(part)
            yield from rec(rest - part, part, acc)
            acc.pop()

    yield from rec(total, total, [])


def check_int_partition(lam: Sequence[int], total: int) -> IntPartition:
    lam = tuple(int(x) for x in lam)
    if not lam:
        raise ValueError("empty partition")
    if any(x <= 0 for x in lam):
        raise ValueError(f"parts must be positive: {lam}")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"parts must be non-increasing: {lam}")
    if sum(lam) != total:
        raise ValueError(f"{lam} sums to {sum(lam)}, expected {total}")
    return lam


def windows(lam: Sequence[int], start: int = 0) -> list[range]:
    """Consecutive index windows of sizes ``lam`` beginning at ``start``."""
    out, lo = [], start
    for part in lam:
        out.append(range(lo, lo + part))
        lo += part
    return out
