"""Abaci: cofinite 0/1 configurations on the integers.

An abacus is stored as ``(x0, beads)``: every position below ``x0`` holds a
bead, ``x0`` itself is empty, and ``beads`` lists the (proper) beads above
``x0``.  This form is canonical, so two equal abaci compare equal.
"""

from __future__ import annotations

import re
from bisect import bisect_right
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .errors import (
    EmptyS,
    NotEnoughProperBeads,
    NotInitialBead,
    NotInitialSpace,
    SplittableError,
)
from .partitions import Node, Partition

BEAD = "∘"
SPACE = "·"


class Abacus:
    __slots__ = ("x0", "beads", "_set")

    def __init__(self, x0: int, beads: Iterable[int] = ()):
        found = set(b for b in beads if b >= x0)
        while x0 in found:
            found.discard(x0)
            x0 += 1
        self.x0 = x0
        self.beads = tuple(sorted(found))
        self._set = frozenset(found)

    # construction and conversion

    @classmethod
    def from_partition(cls, lam: Partition, shift: int = 0) -> "Abacus":
        h = len(lam)
        return cls(shift - h, (lam[i] - i - 1 + shift for i in range(h)))

    def partition(self) -> Partition:
        # the i-th greatest bead a_i sits in row i and has a_i - x0 - h + i spaces below it
        h = len(self.beads)
        return Partition(self.beads[h - i] - self.x0 - h + i for i in range(1, h + 1))

    # basic queries

    def __call__(self, n: int) -> int:
        return 1 if n < self.x0 or n in self._set else 0

    def is_bead(self, n: int) -> bool:
        return n < self.x0 or n in self._set

    @property
    def shift(self) -> int:
        return self.x0 + len(self.beads)

    @property
    def height(self) -> int:
        return len(self.beads)

    @property
    def smallest_space(self) -> int:
        return self.x0

    @property
    def greatest_bead(self) -> int:
        return self.beads[-1] if self.beads else self.x0 - 1

    def is_proper(self) -> bool:
        return bool(self.beads)

    def translate(self, m: int) -> "Abacus":
        """The abacus ``n -> self(n + m)``."""
        return Abacus(self.x0 - m, (b - m for b in self.beads))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Abacus) and self.x0 == other.x0
                and self.beads == other.beads)

    def __hash__(self) -> int:
        return hash((self.x0, self.beads))

    def __repr__(self) -> str:
        return f"Abacus({self})"

    def __str__(self) -> str:
        return f"x0={self.x0};beads={','.join(map(str, self.beads))}"

    @classmethod
    def parse(cls, text: str) -> "Abacus":
        m = re.fullmatch(r"\s*x0=(-?\d+)\s*;\s*beads=([-\d,\s]*)", text)
        if not m:
            raise SplittableError(f"cannot read abacus from {text!r}")
        beads = [int(t) for t in m.group(2).split(",") if t.strip()]
        return cls(int(m.group(1)), beads)

    # node correspondence

    def beads_above(self, a: int) -> int:
        return len(self.beads) - bisect_right(self.beads, a)

    def spaces_up_to(self, a: int) -> int:
        if a < self.x0:
            return 0
        return a - self.x0 + 1 - bisect_right(self.beads, a)

    def node(self, a: int) -> Node:
        return Node(1 + self.beads_above(a), self.spaces_up_to(a))

    # elementary moves

    def moved(self, remove: Iterable[int], add: Iterable[int]) -> "Abacus":
        """Remove beads at ``remove`` and place beads at ``add`` (caller checks)."""
        below = self.x0
        current = set(self.beads)
        remove = list(remove)
        low = min([below] + remove)
        current.update(range(low, below))
        current.difference_update(remove)
        current.update(add)
        return Abacus(low, current)

    def remove_bead(self, c: int) -> "Abacus":
        """Move the initial bead at ``c`` one place down to ``c - 1``."""
        if not (self.is_bead(c) and not self.is_bead(c - 1)):
            raise NotInitialBead(f"{c} is not an initial bead")
        return self.moved([c], [c - 1])

    def add_bead(self, c: int) -> "Abacus":
        """Move the bead at ``c - 1`` into the initial space ``c``."""
        if not (not self.is_bead(c) and self.is_bead(c - 1)):
            raise NotInitialSpace(f"{c} is not an initial space")
        return self.moved([c - 1], [c])

    def bead_from_top(self, i: int) -> int:
        """The i-th bead counting down from the greatest one."""
        h = len(self.beads)
        if i <= h:
            return self.beads[h - i]
        return self.x0 - (i - h)

    def bead_from_bottom(self, i: int) -> int:
        """The i-th proper bead counting up from the smallest one."""
        if not 1 <= i <= len(self.beads):
            raise NotEnoughProperBeads(f"abacus has {len(self.beads)} proper beads, asked for {i}")
        return self.beads[i - 1]

    # bead and space classes

    def is_initial_bead(self, a: int) -> bool:
        return self.is_bead(a) and not self.is_bead(a - 1)

    def is_initial_space(self, b: int) -> bool:
        return not self.is_bead(b) and self.is_bead(b - 1)

    def is_normal_bead(self, a: int, p: int) -> bool:
        if not self.is_initial_bead(a):
            return False
        total = 0
        top = self.greatest_bead
        k = 1
        while a - 1 + p * k <= top:
            total += self(a + p * k) - self(a - 1 + p * k)
            if total < 0:
                return False
            k += 1
        return True

    def is_conormal_space(self, b: int, p: int) -> bool:
        if not self.is_initial_space(b):
            return False
        total = 0
        k = 1
        while b - p * k >= self.x0:
            total += self(b - 1 - p * k) - self(b - p * k)
            if total < 0:
                return False
            k += 1
        return True

    def is_movable_up(self, a: int, p: int) -> bool:
        return self.is_bead(a) and not self.is_bead(a - p)

    def normal_beads(self, p: int) -> list[int]:
        return [a for a in self.beads if self.is_normal_bead(a, p)]

    def conormal_spaces(self, p: int) -> list[int]:
        top = self.greatest_bead + 1
        return [b for b in range(self.x0, top + 1) if self.is_conormal_space(b, p)]

    def good_beads(self, p: int) -> dict[int, int]:
        """Smallest normal bead on each runner, keyed by runner."""
        good: dict[int, int] = {}
        for a in self.normal_beads(p):
            good.setdefault(a % p, a)
        return good

    def cogood_spaces(self, p: int) -> dict[int, int]:
        """Greatest conormal space on each runner, keyed by runner."""
        cogood: dict[int, int] = {}
        for b in self.conormal_spaces(p):
            cogood[b % p] = b
        return cogood

    def bead_status(self, a: int, p: int) -> "BeadStatus":
        bead = self.is_bead(a)
        normal = self.is_normal_bead(a, p)
        return BeadStatus(
            is_bead=bead,
            proper=bead and a > self.x0,
            initial=self.is_initial_bead(a),
            normal=normal,
            good=normal and self.good_beads(p).get(a % p) == a,
            movable_up=self.is_movable_up(a, p),
        )

    def space_status(self, b: int, p: int) -> "SpaceStatus":
        conormal = self.is_conormal_space(b, p)
        return SpaceStatus(
            is_space=not self.is_bead(b),
            initial=self.is_initial_space(b),
            conormal=conormal,
            cogood=conormal and self.cogood_spaces(p).get(b % p) == b,
        )

    # text table

    def render(self, p: int) -> str:
        """Runner table: a header line, then one line per row that mixes beads and spaces."""
        lines = [f"p={p} shift={self.shift}"]
        first = self.x0 // p
        last = self.greatest_bead // p
        for r in range(first, last + 1):
            glyphs = (BEAD if self.is_bead(p * r + c) else SPACE for c in range(p))
            lines.append(f"{r}: " + " ".join(glyphs))
        return "\n".join(lines)

    @classmethod
    def parse_render(cls, text: str) -> "Abacus":
        lines = [ln for ln in text.strip("\n").splitlines() if ln.strip()]
        m = re.fullmatch(r"p=(\d+) shift=(-?\d+)", lines[0].strip()) if lines else None
        if not m:
            raise SplittableError("rendered abacus must start with 'p=<p> shift=<s>'")
        p, shift = int(m.group(1)), int(m.group(2))
        rows = []
        for ln in lines[1:]:
            head, _, body = ln.partition(":")
            glyphs = body.split()
            if len(glyphs) != p or any(g not in (BEAD, SPACE) for g in glyphs):
                raise SplittableError(f"bad abacus row {ln!r}")
            rows.append((int(head), glyphs))
        if not rows:
            # everything below the shift is a bead
            return cls(shift, ())
        start = rows[0][0] * p
        beads = [p * r + c for r, glyphs in rows for c, g in enumerate(glyphs) if g == BEAD]
        ab = cls(start, beads)
        if ab.shift != shift:
            raise SplittableError("rendered rows disagree with the header shift")
        return ab


@dataclass(frozen=True)
class BeadStatus:
    is_bead: bool
    proper: bool
    initial: bool
    normal: bool
    good: bool
    movable_up: bool


@dataclass(frozen=True)
class SpaceStatus:
    is_space: bool
    initial: bool
    conormal: bool
    cogood: bool


@dataclass(frozen=True)
class NodeSets:
    """Per-residue node classes of a partition; lists are sorted by row."""

    removable: dict[int, list[Node]] = field(default_factory=dict)
    addable: dict[int, list[Node]] = field(default_factory=dict)
    normal: dict[int, list[Node]] = field(default_factory=dict)
    conormal: dict[int, list[Node]] = field(default_factory=dict)
    good: dict[int, Node] = field(default_factory=dict)
    cogood: dict[int, Node] = field(default_factory=dict)


@lru_cache(maxsize=200_000)
def node_classification(lam: Partition, p: int) -> NodeSets:
    """Normal, good, conormal and cogood nodes of ``lam``, read off its abacus.

    The abacus is taken at shift 0 so that a position's runner is the residue
    of the node it corresponds to.
    """
    ab = Abacus.from_partition(lam, 0)
    sets = NodeSets()

    def put(table, a):
        table.setdefault(a % p, []).append(ab.node(a))

    # descending positions give ascending rows
    for a in reversed(ab.beads):
        if ab.is_initial_bead(a):
            put(sets.removable, a)
            if ab.is_normal_bead(a, p):
                put(sets.normal, a)
    for b in range(ab.greatest_bead + 1, ab.x0 - 1, -1):
        if ab.is_initial_space(b):
            put(sets.addable, b)
            if ab.is_conormal_space(b, p):
                put(sets.conormal, b)
    for res, nodes in sets.normal.items():
        sets.good[res] = nodes[-1]
    for res, nodes in sets.conormal.items():
        sets.cogood[res] = nodes[0]
    return sets


def window(x: int, S: Iterable[int], i: int, p: int) -> list[int]:
    """Elements i, ..., i+|S|-1 (0-based) of the increasing list of n >= x with n mod p in S."""
    S = sorted(set(s % p for s in S))
    if not S:
        raise EmptyS("the residue set must be nonempty")
    out = []
    k = 0
    n = x
    while len(out) < len(S):
        if n % p in S:
            if k >= i:
                out.append(n)
            k += 1
        n += 1
    return out
