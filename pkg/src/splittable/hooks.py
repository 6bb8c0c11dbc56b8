"""Rim p-hooks, p-cores and the p-edge removal map."""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache

from .abacus import Abacus
from .errors import InvalidHandle
from .partitions import Node, Partition


@dataclass(frozen=True)
class HookHandle:
    """A rim hook, named by the bead that moves up when it is removed."""

    bead: int
    base: Node


def hook_base(ab: Abacus, a: int, p: int) -> Node:
    """Base node of the rim hook belonging to the movable bead ``a``."""
    return Node(ab.beads_above(a - 1), ab.spaces_up_to(a - p))


def rim_hooks(ab: Abacus, p: int) -> list[HookHandle]:
    return [HookHandle(a, hook_base(ab, a, p)) for a in ab.beads if ab.is_movable_up(a, p)]


def locally_highest_hooks(ab: Abacus, p: int) -> list[HookHandle]:
    return [h for h in rim_hooks(ab, p) if not ab.is_movable_up(h.bead + 1, p)]


def move_up(ab: Abacus, a: int, p: int) -> Abacus:
    if not ab.is_movable_up(a, p):
        raise InvalidHandle(f"bead {a} cannot move up by {p}")
    return ab.moved([a], [a - p])


def remove_rim_hook(lam: Partition, handle: HookHandle, p: int, shift: int = 0) -> Partition:
    """Remove the rim hook ``handle`` taken on the abacus of ``lam`` at ``shift``."""
    ab = Abacus.from_partition(lam, shift)
    if not ab.is_movable_up(handle.bead, p) or hook_base(ab, handle.bead, p) != handle.base:
        raise InvalidHandle(f"{handle} is not a rim {p}-hook of {lam}")
    return move_up(ab, handle.bead, p).partition()


@lru_cache(maxsize=100_000)
def p_core(lam: Partition, p: int) -> tuple[Partition, int]:
    """The p-core and p-weight, removing a locally highest hook at every step."""
    ab = Abacus.from_partition(lam, 0)
    weight = 0
    while True:
        hooks = locally_highest_hooks(ab, p)
        if not hooks:
            return ab.partition(), weight
        ab = move_up(ab, hooks[-1].bead, p)
        weight += 1


def is_p_core(lam: Partition, p: int) -> bool:
    return not rim_hooks(Abacus.from_partition(lam, 0), p)


def edge_chain(ab: Abacus, p: int) -> list[int]:
    """The beads m_1 > m_2 > ... that the p-edge map moves."""
    beads = ab.beads
    chain = [beads[-1]]
    while True:
        t = chain[-1] - p
        if t < ab.x0:
            break
        if ab.is_bead(t):
            chain.append(t)
            continue
        k = bisect_left(beads, t)
        if k == 0:
            break
        chain.append(beads[k - 1])
    return chain


def p_edge_phi(ab: Abacus, p: int) -> tuple[Abacus, int]:
    """Remove the p-edge: returns the new abacus and the number of nodes removed."""
    if not ab.beads:
        return ab, 0
    chain = edge_chain(ab, p)
    last = chain[-1]
    targets = [m - p for m in chain[:-1]]
    targets.append(ab.x0 if last - p < ab.x0 else last - p)
    image = ab.moved(chain, targets)
    e = sum(chain) - sum(targets)
    return image, e


@lru_cache(maxsize=200_000)
def phi_partition(lam: Partition, p: int) -> tuple[Partition, int]:
    image, e = p_edge_phi(Abacus.from_partition(lam, 0), p)
    return image.partition(), e
