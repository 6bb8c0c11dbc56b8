"""Mullineux symbols and the Mullineux map on p-regular partitions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .abacus import Abacus
from .errors import NotPRegular, SplittableError, UnrealizableSymbol
from .hooks import p_edge_phi, phi_partition
from .partitions import EMPTY, Partition, is_p_regular


@dataclass(frozen=True)
class MullineuxSymbol:
    """Columns (edge size, height) recorded while peeling p-edges to the empty partition."""

    columns: tuple[tuple[int, int], ...] = ()

    @classmethod
    def column(cls, edge: int, height: int, times: int = 1) -> "MullineuxSymbol":
        return cls(((edge, height),) * max(times, 0))

    def __mul__(self, other: "MullineuxSymbol") -> "MullineuxSymbol":
        return MullineuxSymbol(self.columns + other.columns)

    def __len__(self) -> int:
        return len(self.columns)

    def __str__(self) -> str:
        tops = ",".join(str(a) for a, _ in self.columns)
        bottoms = ",".join(str(r) for _, r in self.columns)
        return f"{tops}/{bottoms}"

    @classmethod
    def parse(cls, text: str) -> "MullineuxSymbol":
        top, sep, bottom = text.strip().partition("/")
        if not sep:
            raise SplittableError(f"symbol {text!r} needs the form A0,A1,.../R0,R1,...")
        tops = [int(t) for t in top.split(",") if t.strip()]
        bottoms = [int(t) for t in bottom.split(",") if t.strip()]
        if len(tops) != len(bottoms):
            raise SplittableError("symbol rows have different lengths")
        return cls(tuple(zip(tops, bottoms)))


@lru_cache(maxsize=100_000)
def mullineux_symbol(lam: Partition, p: int) -> MullineuxSymbol:
    if not is_p_regular(lam, p):
        raise NotPRegular(f"{lam} is not {p}-regular")
    cols = []
    while lam:
        rest, e = phi_partition(lam, p)
        cols.append((e, len(lam)))
        lam = rest
    return MullineuxSymbol(tuple(cols))


def conjugate_symbol(sym: MullineuxSymbol, p: int) -> MullineuxSymbol:
    """Keep each edge size A and replace the height R by A - R + [p does not divide A]."""
    return MullineuxSymbol(tuple((a, a - r + (1 if a % p else 0)) for a, r in sym.columns))


def add_edge(rho: Partition, edge: int, height: int, p: int) -> Partition:
    """The partition of the given height whose p-edge has ``edge`` nodes and leaves ``rho``.

    Works on abaci at shift ``height``, so the wanted abacus has its smallest
    space at 0.  Removing the p-edge moves a chain of beads m_1 > ... > m_N
    up by p (the last one possibly into the smallest space), so we search over
    such chains in the abacus of ``rho`` and confirm each candidate by running
    the forward map.
    """
    if len(rho) > height or edge < 1:
        raise UnrealizableSymbol(f"no partition of height {height} with edge {edge} over {rho}")
    target = Abacus.from_partition(rho, height)
    q, r = divmod(edge, p)
    n_moves = q if r == 0 else q + 1
    found: set[Partition] = set()

    def finish(moved_from: list[int], moved_to: list[int]) -> None:
        cand = target.moved(moved_to, moved_from)
        if cand.x0 != 0 or cand.height != height:
            return
        image, e = p_edge_phi(cand, p)
        if e == edge and image == target:
            found.add(cand.partition())

    def extend(moved_from: list[int], moved_to: list[int], limit: int) -> None:
        # ``limit`` is where the previous bead landed; the next chain bead is
        # the greatest bead at or below it in the unknown abacus.
        if len(moved_from) == n_moves - 1 and r:
            m = r
            if m <= limit and target.is_bead(0) and 0 not in moved_to:
                finish(moved_from + [m], moved_to + [0])
            return
        if len(moved_from) == n_moves:
            finish(moved_from, moved_to)
            return
        candidates = [limit]
        c = limit - 1
        while c > 0 and not target.is_bead(c):
            candidates.append(c)
            c -= 1
        for m in candidates:
            if m <= 0:
                continue
            t = m - p
            if target.is_bead(t) and t not in moved_to:
                extend(moved_from + [m], moved_to + [t], t)

    top = target.greatest_bead
    if n_moves == 1 and r:
        if target.is_bead(0):
            finish([r], [0])
    else:
        for m1 in range(top + 1, top + p + 1):
            t = m1 - p
            if m1 > 0 and target.is_bead(t):
                extend([m1], [t], t)
    if not found:
        raise UnrealizableSymbol(f"no partition of height {height} with edge {edge} over {rho}")
    if len(found) > 1:
        raise UnrealizableSymbol(f"column ({edge},{height}) over {rho} is ambiguous: {sorted(found)}")
    return found.pop()


def partition_from_symbol(sym: MullineuxSymbol, p: int) -> Partition:
    lam = EMPTY
    for edge, height in reversed(sym.columns):
        lam = add_edge(lam, edge, height, p)
    return lam


@lru_cache(maxsize=100_000)
def mullineux(lam: Partition, p: int) -> Partition:
    return partition_from_symbol(conjugate_symbol(mullineux_symbol(lam, p), p), p)
