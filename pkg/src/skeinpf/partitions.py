"""Partitions of n viewed as cycle types of permutations in S_n."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True)
class CycleType:
    """A partition of n recorded as (part, multiplicity) pairs, parts ascending.

    The pair list is the useful form here: a permutation of cycle type
    1^r1 2^r2 ... contributes one factor per distinct part k, weighted by its
    multiplicity r_k.
    """

    n: int
    multiplicities: tuple[tuple[int, int], ...]

    def __post_init__(self):
        parts = [k for k, _ in self.multiplicities]
        if parts != sorted(set(parts)) or any(k < 1 for k in parts):
            raise ValueError("parts must be distinct, positive and ascending")
        if any(r < 1 for _, r in self.multiplicities):
            raise ValueError("multiplicities must be positive")
        if sum(k * r for k, r in self.multiplicities) != self.n:
            raise ValueError(f"parts do not sum to {self.n}")

    @classmethod
    def from_parts(cls, parts: Sequence[int]) -> "CycleType":
        if not parts:
            raise ValueError("need at least one part")
        counts: dict[int, int] = {}
        for p in parts:
            counts[int(p)] = counts.get(int(p), 0) + 1
        return cls(sum(parts), tuple(sorted(counts.items())))

    def parts(self) -> tuple[int, ...]:
        """The parts expanded, largest first (the usual display order)."""
        out = []
        for k, r in reversed(self.multiplicities):
            out.extend([k] * r)
        return tuple(out)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts())


def enumerate_partitions(n: int) -> Iterator[CycleType]:
    """All partitions of n, largest-part-first lexicographic, descending.

    For n = 4: [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
    """
    if n < 1:
        raise ValueError("n must be positive")

    def descend(remaining: int, cap: int, prefix: list[int]) -> Iterator[list[int]]:
        if remaining == 0:
            yield prefix
            return
        for p in range(min(remaining, cap), 0, -1):
            yield from descend(remaining - p, p, prefix + [p])

    for parts in descend(n, n, []):
        yield CycleType.from_parts(parts)


def partition_count(n: int) -> int:
    """Number of partitions of n, by the pentagonal number recurrence."""
    counts = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            g2 = j * (3 * j + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = 1 if j % 2 == 1 else -1
            if g1 <= m:
                total += sign * counts[m - g1]
            if g2 <= m:
                total += sign * counts[m - g2]
            j += 1
        counts[m] = total
    return counts[n]


def natural_permutation(ct: CycleType) -> tuple[int, ...]:
    """The standard permutation of 0..n-1 with the given cycle type.

    Cycles occupy consecutive indices, shortest parts first, each cycle
    shifting its block by one: for [1,1,1,3,3] the image list is
    (0, 1, 2, 4, 5, 3, 7, 8, 6).
    """
    image = [0] * ct.n
    offset = 0
    for k, r in ct.multiplicities:
        for _ in range(r):
            for i in range(k):
                image[offset + i] = offset + (i + 1) % k
            offset += k
    return tuple(image)
