"""Bead-moving operators, big and almost completely splittable partitions, and
the parametrised partition families built from abacus windows."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .abacus import Abacus, node_classification, window
from .errors import BadParams, NotApplicable, NotBig
from .hooks import p_core, phi_partition
from .mullineux import MullineuxSymbol, mullineux
from .partitions import EMPTY, Partition, chi, hook_length, is_p_regular

# H_epsilon


def apply_h_epsilon(ab: Abacus, eps: Sequence[int], p: int) -> Abacus:
    """Move the i-th bead from the top by ``p * eps[i-1]`` positions, all at once."""
    sources = [ab.bead_from_top(i) for i in range(1, len(eps) + 1)]
    targets = [b + p * e for b, e in zip(sources, eps)]
    if len(set(targets)) != len(targets):
        raise NotApplicable(f"two beads land on the same position under {tuple(eps)}")
    leaving = set(sources)
    for t in targets:
        if ab.is_bead(t) and t not in leaving:
            raise NotApplicable(f"position {t} is already occupied under {tuple(eps)}")
    return ab.moved(sources, targets)


def h_epsilon(lam: Partition, eps: Sequence[int], p: int) -> Partition:
    return apply_h_epsilon(Abacus.from_partition(lam, 0), eps, p).partition()


def h_epsilon_or_none(lam: Partition, eps: Sequence[int], p: int) -> Partition | None:
    try:
        return h_epsilon(lam, eps, p)
    except NotApplicable:
        return None


def big_epsilon(height: int) -> tuple[int, ...]:
    return (-1,) + (0,) * (height - 2) + (1,)


def is_completely_splittable(lam: Partition, p: int) -> bool:
    return chi(lam) <= p


def is_epsilon_big(lam: Partition, eps: Sequence[int], p: int) -> bool:
    if not is_completely_splittable(lam, p) or len(lam) != len(eps):
        return False
    return h_epsilon_or_none(lam, eps, p) is not None


def is_big(lam: Partition, p: int) -> bool:
    return len(lam) >= 2 and is_epsilon_big(lam, big_epsilon(len(lam)), p)


def is_big_by_hook(lam: Partition, p: int) -> bool:
    """Same predicate via the first hook length."""
    return (is_completely_splittable(lam, p) and len(lam) > 1
            and hook_length(lam, 1, 1) >= p)


def is_big_on_abacus(ab: Abacus, p: int) -> bool:
    """Same predicate read off the beads: b^ > b_ > b^ - p and b^ movable up."""
    if not ab.beads:
        return False
    top, bottom = ab.beads[-1], ab.beads[0]
    return top > bottom > top - p and ab.is_movable_up(top, p)


def tilde(lam: Partition, p: int) -> Partition:
    if not is_big(lam, p):
        raise NotBig(f"{lam} is not big for p={p}")
    return h_epsilon(lam, big_epsilon(len(lam)), p)


def tilde_closed_form(lam: Partition, p: int) -> Partition:
    """Move the highest rim p-hook from the last row to the first, row by row."""
    h = len(lam)
    if h < 2:
        raise NotBig(f"{lam} has height below 2")
    return Partition((lam[-1] - h + p + 1,) + tuple(lam[1:-1]) + (lam[0] + h - p - 1,))


@lru_cache(maxsize=100_000)
def acs_preimage(nu: Partition, p: int) -> Partition | None:
    """The big partition whose tilde is ``nu``, or None when ``nu`` is not of that form."""
    ab = Abacus.from_partition(nu, 0)
    if not ab.beads:
        return None
    a = ab.beads[-1]
    b = ab.x0 - 1 if is_completely_splittable(nu, p) else ab.beads[0]
    if ab.is_bead(a - p) and a - p != b:
        return None
    if ab.is_bead(b + p) and b + p != a:
        return None
    lam = ab.moved([a, b], [a - p, b + p]).partition()
    if is_big(lam, p) and tilde(lam, p) == nu:
        return lam
    return None


def is_almost_completely_splittable(nu: Partition, p: int) -> bool:
    return acs_preimage(nu, p) is not None


# the families lambda^(h,i,x), nu^(H,x), mu^(h,i,x)


def lambda_family_abacus(h: int, i: int, x: int, p: int) -> Abacus:
    if not (0 < i <= h < p and x >= 0):
        raise BadParams(f"need 0 < i <= h < p and x >= 0, got h={h}, i={i}, x={x}, p={p}")
    beads = set(window(0, range(i), x, p)) | set(range(i, h))
    return Abacus(0, beads)


def lambda_family(h: int, i: int, x: int, p: int) -> Partition:
    return lambda_family_abacus(h, i, x, p).partition()


def lambda_hx(H: int, x: int, p: int) -> Partition:
    return lambda_family(H, H, x, p)


def _nu_sets(H: int, x: int, p: int):
    Q, R = divmod(x, H)
    s1 = [c for c in range(p) if c != H - R]
    s2 = [H - R] + list(range(H, p))
    return Q, R, s1, s2


def nu_family_abacus(H: int, x: int, p: int) -> Abacus:
    if not (1 < H < p and x > 0 and x % H):
        raise BadParams(f"need 1 < H < p, x > 0 and H not dividing x, got H={H}, x={x}, p={p}")
    Q, R, s1, s2 = _nu_sets(H, x, p)
    beads = set(window(H, s1, Q, p)) | set(window(p + H - R, s2, x - Q, p))
    return Abacus(H, beads)


def nu_family(H: int, x: int, p: int) -> Partition:
    return nu_family_abacus(H, x, p).partition()


def nu_first_index(H: int, x: int, y: int, p: int) -> int:
    """y-th element of {n >= H : n mod p != H - R}, by the closed form."""
    R = x % H
    return H + y + (R - 1 + y) // (p - 1)


def nu_second_index(H: int, x: int, y: int, p: int) -> int:
    """y-th element of {n >= p + H - R : n mod p in {H - R} or >= H}, by the closed form."""
    R = x % H
    return (p + H - 1 + y + (H - R) * (y // (p - H + 1))
            + (R - 1) * ((y - 1) // (p - H + 1)))


def mu_family_params(h: int, i: int, x: int, p: int) -> tuple[int, list[int]]:
    if not (0 < i <= h < p and x >= i):
        raise BadParams(f"need 0 < i <= h < p and x >= i, got h={h}, i={i}, x={x}, p={p}")
    m = max(i, i + h - x)
    S = list(range(h - m)) + list(range(h, p))
    return m, S


def mu_family_abacus(h: int, i: int, x: int, p: int) -> Abacus:
    m, S = mu_family_params(h, i, x, p)
    beads = set(range(p + h - m, p + h)) | set(window(p, S, x, p))
    return Abacus(p, beads)


def mu_family(h: int, i: int, x: int, p: int) -> Partition:
    return mu_family_abacus(h, i, x, p).partition()


def mu_index(h: int, i: int, x: int, y: int, p: int) -> int:
    """y-th element of {n >= p : n mod p in S}, by the closed form."""
    m, _ = mu_family_params(h, i, x, p)
    return p + y + m + m * ((y + m - h) // (p - m))


# closed-form Mullineux symbols of the families


def tilde_family_symbol(H: int, x: int, p: int) -> MullineuxSymbol:
    """Predicted symbol of tilde(lambda^(H,x)) for H not dividing x."""
    Q, R = divmod(x, H)
    col = MullineuxSymbol.column
    if R > 1:
        return (col(2 * p, H, Q) * col(p + R - 1, H) * col(p, H - 1, x - 2 * (Q + 1))
                * col(p - R + 1, H - R + 1))
    return col(2 * p, H, Q) * col(p, H - 1, x - 2 * Q)


def nu_family_symbol(H: int, x: int, p: int) -> MullineuxSymbol:
    Q, R = divmod(x, H)
    col = MullineuxSymbol.column
    if R > 1:
        return (col(2 * p, 2 * p - H, Q) * col(p + R - 1, p + R - H)
                * col(p, p - H + 1, x - 2 * (Q + 1)) * col(p - R + 1, p - H + 1))
    return col(2 * p, 2 * p - H, Q) * col(p, p - H + 1, x - 2 * Q)


def lambda_family_symbol(h: int, i: int, x: int, p: int) -> MullineuxSymbol:
    """Predicted symbol of lambda^(h,i,x) for x >= i."""
    if not (0 < i <= h < p and x >= i):
        raise BadParams(f"need 0 < i <= h < p and x >= i, got h={h}, i={i}, x={x}, p={p}")

    def run(count: int, drop: int) -> MullineuxSymbol:
        return MullineuxSymbol(tuple((p + h - 1 - 2 * j - 2 * drop, h - j - drop)
                                     for j in range(count)))

    col = MullineuxSymbol.column
    if 2 * i >= h and x >= h:
        return run(h - i, 0) * col(p, i, x - 2 * (h - i)) * run(h - i, i)
    if 2 * i < h and x >= 2 * i:
        return run(i, 0) * col(p, i, x - 2 * i) * run(i, h - i)
    k = i + h - x
    return run(x - i, 0) * col(p, k, 2 * i - x) * run(x - i, k)


# staircases


@dataclass(frozen=True)
class StaircaseParams:
    """Runner breakpoints 0 < r_2 < ... < r_k < p and rows i_1 > ... > i_{k-1} >= 0."""

    rs: tuple[int, ...] = ()
    rows: tuple[int, ...] = ()

    def validate(self, p: int) -> None:
        rs, rows = self.rs, self.rows
        ok = (len(rs) == len(rows)
              and all(a < b for a, b in zip((0,) + rs, rs)) and (not rs or rs[-1] < p)
              and all(a > b for a, b in zip(rows, rows[1:])) and (not rows or rows[-1] >= 0))
        if not ok:
            raise BadParams(f"bad staircase parameters {self}")

    def __str__(self) -> str:
        return f"({','.join(map(str, self.rs))};{','.join(map(str, self.rows))})"


def staircase_abacus(params: StaircaseParams, p: int) -> Abacus:
    params.validate(p)
    beads: set[int] = set()
    lows = (0,) + params.rs[:-1]
    for lo, hi, row in zip(lows, params.rs, params.rows):
        beads.update(range(p * row + lo, p * row + hi))
    return Abacus(0, beads)


def staircase(params: StaircaseParams, p: int) -> Partition:
    return staircase_abacus(params, p).partition()


def staircase_edge(params: StaircaseParams, p: int) -> int:
    """Edge size of a staircase partition from its parameters alone."""
    params.validate(p)
    k = len(params.rs) + 1
    if k == 1 or params.rows[0] == 0:
        # a single segment on row 0 is just another spelling of the empty partition
        return 0
    rows = (None,) + params.rows  # 1-based
    chain = [1]
    while True:
        a = chain[-1]
        if a + 1 <= k - 1 and rows[a + 1] < rows[a] - 1:
            chain.append(a + 1)
        elif a + 2 <= k - 1 and rows[a + 1] == rows[a] - 1:
            chain.append(a + 2)
        else:
            break
    length = len(chain)
    if rows[chain[-1]] > 0:
        return p * length
    return p * (length - 1) + params.rs[-1] - 1


def family_staircase_params(h: int, i: int, x: int, p: int) -> StaircaseParams:
    """Staircase parameters of lambda^(h,i,x) as written in the family's two-case form."""
    q, r = divmod(x, i)
    if r == 0:
        return StaircaseParams((i, h), (q, 0))
    return StaircaseParams((r, i, h), (q + 1, q, 0))


def normal_residues(lam: Partition, p: int) -> set[int]:
    return set(node_classification(lam, p).normal)


def solves_staircase_system(lam: Partition, p: int) -> bool:
    """Height below p, empty core, and all normal nodes of one residue."""
    return (len(lam) < p and p_core(lam, p)[0] == EMPTY
            and len(normal_residues(lam, p)) <= 1)


def solves_minimal_system(lam: Partition, p: int) -> bool:
    return (solves_staircase_system(lam, p) and is_p_regular(lam, p)
            and len(lam) + len(mullineux(lam, p)) < 2 * p)


def classify_staircase(lam: Partition, p: int) -> StaircaseParams | None:
    """Parameters of ``lam`` as a staircase, or None when it solves no staircase system."""
    if not solves_staircase_system(lam, p):
        return None
    return staircase_params_of(lam, p)


def staircase_params_of(lam: Partition, p: int) -> StaircaseParams | None:
    """Read staircase parameters straight off the abacus; None if ``lam`` is not one."""
    if not lam:
        return StaircaseParams()
    h = len(lam)
    if h >= p:
        return None
    ab = Abacus.from_partition(lam, h)  # smallest space at 0, h proper beads
    row_of: dict[int, int] = {}
    for b in ab.beads:
        if b % p in row_of or b % p >= h:
            return None
        row_of[b % p] = b // p
    rs, rows = [], []
    for c in range(h):
        if rows and rows[-1] == row_of[c]:
            rs[-1] = c + 1
            continue
        if rows and rows[-1] < row_of[c]:
            return None
        rs.append(c + 1)
        rows.append(row_of[c])
    # rs currently holds segment ends; the breakpoints r_2..r_k are exactly those ends
    params = StaircaseParams(tuple(rs), tuple(rows))
    return params if staircase(params, p) == lam else None


def classify_minimal(lam: Partition, p: int) -> tuple[int, int, int] | None:
    """(h, i, x) with lam = lambda^(h,i,x) and i <= x when lam solves the minimal system.

    The empty partition is reported as (1, 1, 0).
    """
    if not solves_minimal_system(lam, p):
        return None
    if not lam:
        return (1, 1, 0)
    h, x = len(lam), sum(lam) // p
    for i in range(1, min(h, x) + 1):
        if lambda_family(h, i, x, p) == lam:
            return (h, i, x)
    return None


def edge_size(lam: Partition, p: int) -> int:
    return phi_partition(lam, p)[1]
