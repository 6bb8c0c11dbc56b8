"""Integer partitions, Young diagrams and residues.

A partition is stored as a tuple subclass without trailing zeros, so it
hashes and compares structurally and can be used directly as a dict key.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    NegativePart,
    NodeOutsideDiagram,
    NotAddable,
    NotNonincreasing,
    NotRemovable,
    SplittableError,
)


class Node(NamedTuple):
    row: int
    col: int

    def residue(self, p: int) -> int:
        return (self.col - self.row) % p


class Partition(tuple):
    """Nonincreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        for x in parts:
            if x < 0:
                raise NegativePart(f"negative part in {parts}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise NotNonincreasing(f"{parts} is not nonincreasing")
        end = len(parts)
        while end and parts[end - 1] == 0:
            end -= 1
        return super().__new__(cls, parts[:end])

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("", "()", "∅"):
            return cls(())
        text = text.strip("()")
        try:
            return cls(int(t) for t in text.split(","))
        except ValueError as exc:
            if isinstance(exc, SplittableError):
                raise
            raise SplittableError(f"cannot read partition from {text!r}") from None

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def height(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part, 1-based, zero past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def cells(self) -> Iterator[Node]:
        for r, length in enumerate(self, start=1):
            for c in range(1, length + 1):
                yield Node(r, c)

    def has_node(self, r: int, c: int) -> bool:
        return 1 <= r <= len(self) and 1 <= c <= self[r - 1]


EMPTY = Partition(())


def make_partition(raw: Iterable[int]) -> Partition:
    return Partition(raw)


def prefix_sums(lam: Partition) -> list[int]:
    out, s = [], 0
    for x in lam:
        s += x
        out.append(s)
    return out


def dominates(lam: Partition, mu: Partition) -> bool:
    """True when every prefix sum of ``lam`` is at least that of ``mu``."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def strictly_dominates(lam: Partition, mu: Partition) -> bool:
    return lam != mu and dominates(lam, mu)


@lru_cache(maxsize=None)
def transpose(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return Partition(sum(1 for x in lam if x >= j) for j in range(1, lam[0] + 1))


def hook_length(lam: Partition, i: int, j: int) -> int:
    if not lam.has_node(i, j):
        raise NodeOutsideDiagram(f"({i},{j}) is not a node of {lam}")
    return lam[i - 1] + transpose(lam).part(j) - i - j + 1


def is_p_regular(lam: Partition, p: int) -> bool:
    run = 1
    for a, b in zip(lam, lam[1:]):
        run = run + 1 if a == b else 1
        if run >= p:
            return False
    return True


def removable_nodes(lam: Partition) -> list[Node]:
    return [Node(r, lam[r - 1]) for r in range(1, len(lam) + 1)
            if r == len(lam) or lam[r] < lam[r - 1]]


def addable_nodes(lam: Partition) -> list[Node]:
    out = [Node(1, lam.part(1) + 1)]
    for r in range(2, len(lam) + 2):
        if lam.part(r) < lam.part(r - 1):
            out.append(Node(r, lam.part(r) + 1))
    return out


def boundary_nodes(lam: Partition) -> tuple[list[Node], list[Node]]:
    return removable_nodes(lam), addable_nodes(lam)


def remove_node(lam: Partition, node: tuple[int, int]) -> Partition:
    r, c = node
    if Node(r, c) not in removable_nodes(lam):
        raise NotRemovable(f"({r},{c}) is not removable from {lam}")
    parts = list(lam)
    parts[r - 1] -= 1
    return Partition(parts)


def add_node(lam: Partition, node: tuple[int, int]) -> Partition:
    r, c = node
    if Node(r, c) not in addable_nodes(lam):
        raise NotAddable(f"({r},{c}) is not addable to {lam}")
    parts = list(lam)
    if r > len(parts):
        parts.append(1)
    else:
        parts[r - 1] += 1
    return Partition(parts)


@lru_cache(maxsize=None)
def residue_content(lam: Partition, p: int) -> tuple[int, ...]:
    """Number of nodes of each residue 0..p-1."""
    counts = [0] * p
    for r, length in enumerate(lam, start=1):
        for c in range(1, length + 1):
            counts[(c - r) % p] += 1
    return tuple(counts)


def same_block(lam: Partition, mu: Partition, p: int) -> bool:
    return residue_content(lam, p) == residue_content(mu, p)


def chi(lam: Partition) -> int:
    if not lam:
        return 0
    return lam[0] - lam[-1] + len(lam)


def epsilon_n(n: int, p: int) -> Partition:
    k, d = divmod(n, p - 1)
    return Partition([k + 1] * d + [k] * (p - 1 - d))


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return (EMPTY,)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def partitions_up_to(n_max: int) -> Iterator[Partition]:
    for n in range(n_max + 1):
        yield from partitions_of(n)


def p_regular_partitions(n: int, p: int) -> list[Partition]:
    return [lam for lam in partitions_of(n) if is_p_regular(lam, p)]
