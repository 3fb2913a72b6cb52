"""Ordered partitions of {1, ..., n} into contiguous blocks."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadPartition


@dataclass(frozen=True, slots=True)
class Partition:
    """Block sizes (n_1, ..., n_m); block j is the next n_j consecutive indices."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.sizes)
        if not sizes:
            raise BadPartition("at least one block required")
        if any(s < 1 for s in sizes):
            raise BadPartition(f"block sizes must be positive, got {sizes}")
        object.__setattr__(self, "sizes", sizes)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def m(self) -> int:
        """Number of blocks."""
        return len(self.sizes)

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out = []
        start = 1
        for s in self.sizes:
            out.append(tuple(range(start, start + s)))
            start += s
        return tuple(out)

    def boundaries(self) -> tuple[int, ...]:
        """Last index of each non-final block; (c, c+1) straddles two blocks."""
        out = []
        acc = 0
        for s in self.sizes[:-1]:
            acc += s
            out.append(acc)
        return tuple(out)

    def block_of(self, i: int) -> int:
        """0-based block index containing point i."""
        acc = 0
        for b, s in enumerate(self.sizes):
            acc += s
            if i <= acc:
                return b
        raise BadPartition(f"point {i} outside 1..{self.n}")

    def encode(self) -> str:
        """Stable text key, e.g. '2-1' for sizes (2, 1)."""
        return "-".join(str(s) for s in self.sizes)

    def __str__(self) -> str:
        return "(" + ",".join(str(s) for s in self.sizes) + ")"


def partition(*sizes: int) -> Partition:
    return Partition(tuple(sizes))


def all_compositions(n: int) -> tuple[Partition, ...]:
    """Every ordered sequence of positive block sizes summing to n."""
    out: list[Partition] = []

    def grow(prefix: tuple[int, ...], rest: int):
        if rest == 0:
            out.append(Partition(prefix))
            return
        for s in range(1, rest + 1):
            grow(prefix + (s,), rest - s)

    grow((), n)
    return tuple(out)
