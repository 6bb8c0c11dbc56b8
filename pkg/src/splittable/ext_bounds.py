"""Ext^1 bounds between simple modules, as combinatorial statements.

Nothing here computes Ext groups from representation theory.  The functions
evaluate the arithmetic predicate pi, the bead-move sequences attached to it,
the recursive upper bound U and the resulting case classifications.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .abacus import node_classification
from .errors import BadH, BadParams, NotInX, PiNotSatisfied, PreconditionViolated
from .families import (
    acs_preimage,
    h_epsilon_or_none,
    is_big,
    is_completely_splittable,
    lambda_family,
    lambda_hx,
    tilde,
)
from .mullineux import mullineux
from .partitions import (
    EMPTY,
    Partition,
    add_node,
    dominates,
    epsilon_n,
    hook_length,
    is_p_regular,
    remove_node,
    same_block,
    strictly_dominates,
)

INF = math.inf


def epsilon_indicator(lam: Partition, mu: Partition, p: int) -> int:
    """1 when ``lam`` is ``mu`` plus one of its conormal nodes."""
    if sum(lam) != sum(mu) + 1:
        return 0
    for nodes in node_classification(mu, p).conormal.values():
        if any(add_node(mu, b) == lam for b in nodes):
            return 1
    return 0


def gamma_indicator(mu: Partition, lam: Partition, p: int) -> int:
    """1 when ``mu`` is ``lam`` minus one of its normal nodes."""
    if sum(mu) + 1 != sum(lam):
        return 0
    for nodes in node_classification(lam, p).normal.values():
        if any(remove_node(lam, a) == mu for a in nodes):
            return 1
    return 0


# the predicate pi and its sequences


def _split(H: int, x: int, i: int) -> tuple[int, int, int, int]:
    Q, R = divmod(x, H)
    h = H - R
    m = max(i, i + h - x)
    return Q, R, h, m


def pi_inequality(H: int, x: int, i: int, p: int) -> bool:
    """The floor inequality part of pi (brackets are floors)."""
    Q, R, h, m = _split(H, x, i)
    lhs = m * ((p - h + x - 1) // (p - m))
    rhs = (H - Q - 1 + h * ((x - Q - 1) // (p - H + 1))
           + (R - 1) * ((x - Q - 2) // (p - H + 1)))
    return lhs >= rhs


def pi_predicate(H: int, x: int, i: int, p: int) -> bool:
    if p <= 2:
        raise PreconditionViolated("pi is only defined for p > 2")
    R = x % H if H > 0 else 0
    h = H - R
    if not (2 < H < p and R != 0 and 0 < i <= min(x, h) and x > 2):
        return False
    return pi_inequality(H, x, i, p)


def epsilon_seq(H: int, x: int, i: int, p: int) -> tuple[int, ...]:
    """Bead moves taking the abacus of lambda^(H,x) to a translate of lambda^(h,i,x)."""
    if not pi_predicate(H, x, i, p):
        raise PiNotSatisfied(f"pi({H},{x},{i}) fails for p={p}")
    Q, R = divmod(x, H)
    h = H - R
    q, r = divmod(x, i)
    return ((-Q - 1,) * R + (-Q,) * (h - i) + (q - Q,) * (i - r) + (q + 1 - Q,) * r)


def epsilon_seq_large_height(H: int, x: int) -> tuple[int, ...]:
    """The same sequence when x = QH + 1 and i = H - 1."""
    Q = (x - 1) // H
    qbar, r = divmod(Q + 1, H - 1)
    return (-Q - 1,) + (qbar,) * (H - 1 - r) + (qbar + 1,) * r


def enumerate_pi_solutions(H: int, p: int, x_max: int) -> list[tuple[int, int, tuple[int, ...]]]:
    """All (x, i, eps) with x <= x_max and pi(H, x, i), for H >= (p + 3) / 2."""
    if not (2 * H >= p + 3 and H < p):
        raise BadH(f"need (p+3)/2 <= H < p, got H={H}, p={p}")
    out = []
    for x in range(1, x_max + 1):
        for i in range(1, x + 1):
            if pi_predicate(H, x, i, p):
                out.append((x, i, epsilon_seq(H, x, i, p)))
    return out


def dominance_and_inequality(p: int, H: int, x: int, i: int) -> tuple[bool, bool]:
    """Both conditions of the Mullineux dominance criterion for the pair of families.

    The first is computed from the generic Mullineux map, the second is the
    floor inequality.
    """
    R = x % H
    h = H - R
    if not (1 < H < p and R != 0 and 0 < i <= min(x, h)):
        raise BadParams(f"need 1 < H < p, H not dividing x, 0 < i <= min(x, h); "
                        f"got H={H}, x={x}, i={i}, p={p}")
    left = mullineux(tilde(lambda_hx(H, x, p), p), p)
    right = mullineux(lambda_family(h, i, x, p), p)
    return dominates(right, left), pi_inequality(H, x, i, p)


# minimal pairs and the recursive bound


def is_minimal_pair(nu: Partition, mu: Partition, p: int) -> bool:
    if acs_preimage(nu, p) is None or not is_p_regular(mu, p):
        return False
    if strictly_dominates(nu, mu) or not same_block(nu, mu, p):
        return False
    nu_good = node_classification(nu, p).good
    for res in node_classification(mu, p).good:
        b = nu_good.get(res)
        if b is None or acs_preimage(remove_node(nu, b), p) is not None:
            return False
    return True


def in_x_set(a: Partition, mu: Partition, p: int, variant: str) -> bool:
    if sum(a) != sum(mu) or not is_p_regular(mu, p) or not is_p_regular(a, p):
        return False
    if not same_block(a, mu, p):
        return False
    if variant == "CS":
        return is_completely_splittable(a, p) and not dominates(a, mu)
    if variant == "ACS":
        return acs_preimage(a, p) is not None and not strictly_dominates(a, mu)
    raise BadParams(f"unknown variant {variant!r}")


def exceptional_pair(p: int) -> tuple[Partition, Partition]:
    return Partition((p * p, p * p - p)), Partition((2 * p * p - p,))


def zeta(nu: Partition, mu: Partition, p: int) -> float:
    """Base-case bound used by the almost completely splittable variant."""
    if not strictly_dominates(mu, nu):
        return 0
    if not is_minimal_pair(nu, mu, p):
        return INF
    if (nu, mu) == exceptional_pair(p):
        return 1
    lam = acs_preimage(nu, p)
    H = len(lam)
    n = sum(nu)
    if H >= p:
        return 0
    if H > 2 and nu == tilde(lambda_hx(H, 2, p), p) and mu == lambda_hx(H - 2, 2, p):
        return 1
    if n % p == 0 and p > 2:
        x = n // p
        R = x % H
        if R and nu == tilde(lambda_hx(H, x, p), p):
            for i in range(1, min(x, H - R) + 1):
                if mu == lambda_family(H - R, i, x, p) and pi_predicate(H, x, i, p):
                    return INF
    return 0


def u_bound(a: Partition, mu: Partition, p: int, variant: str = "CS") -> float:
    if not (a == EMPTY and mu == EMPTY) and not in_x_set(a, mu, p, variant):
        raise NotInX(f"({a}, {mu}) is outside the {variant} domain for p={p}")
    return _u(a, mu, p, variant)


@lru_cache(maxsize=None)
def _u(a: Partition, mu: Partition, p: int, variant: str) -> float:
    if not a and not mu:
        return 0
    best = zeta(a, mu, p) if variant == "ACS" else INF
    a_good = node_classification(a, p).good
    for res, node in node_classification(mu, p).good.items():
        mu_a = remove_node(mu, node)
        eps = epsilon_indicator(a, mu_a, p)
        b = a_good.get(res)
        if b is None:
            value = eps
        else:
            a_b = remove_node(a, b)
            if (a_b == EMPTY and mu_a == EMPTY) or in_x_set(a_b, mu_a, p, variant):
                value = _u(a_b, mu_a, p, variant) + eps
            else:
                value = INF
        best = min(best, value)
    return best


def ext_dim_cs(lam: Partition, mu: Partition, p: int) -> int:
    """Dimension of Ext^1 between the simples labelled by a completely splittable pair."""
    if p <= 2:
        raise PreconditionViolated("needs p > 2")
    if not (is_completely_splittable(lam, p) and is_p_regular(lam, p) and is_p_regular(mu, p)
            and sum(lam) == sum(mu) and not strictly_dominates(lam, mu)):
        raise PreconditionViolated(f"({lam}, {mu}) is outside the completely splittable domain")
    return int(is_big(lam, p) and mu == tilde(lam, p))


@dataclass(frozen=True)
class ExtClassification:
    """Which case of the almost completely splittable bound applies.

    ``kind`` is "zero", "at_most_one_1", "at_most_one_2", "at_most_one_3" or
    "case_four".
    """

    kind: str
    epsilon: tuple[int, ...] | None = None
    params: tuple[int, int, int] | None = None


def listed_epsilons(H: int, p: int) -> list[tuple[int, ...]]:
    if H == 2:
        return [(1, -1), (-p, p)]
    if H == 3:
        return [(0, -1, 1), (-1, 1, 0), (-1, -1, 2)]
    z = H - 3
    return [(0, -1) + (0,) * z + (1,),
            (-1,) + (0,) * z + (1, 0),
            (-1, -1) + (0,) * (H - 4) + (1, 1)]


def ext_upper_acs(nu: Partition, mu: Partition, p: int) -> ExtClassification:
    lam = acs_preimage(nu, p)
    if (lam is None or not is_p_regular(nu, p) or not is_p_regular(mu, p)
            or sum(nu) != sum(mu) or strictly_dominates(nu, mu)):
        raise PreconditionViolated(f"({nu}, {mu}) is outside the almost completely splittable domain")
    H = len(lam)
    kind = {2: "at_most_one_1", 3: "at_most_one_2"}.get(H, "at_most_one_3")
    for eps in listed_epsilons(H, p):
        if h_epsilon_or_none(lam, eps, p) == mu:
            return ExtClassification(kind, eps)
    if p > 2:
        for x, i in _pi_candidates(H, hook_length(lam, 1, 1), p):
            eps = epsilon_seq(H, x, i, p)
            if h_epsilon_or_none(lam, eps, p) == mu:
                return ExtClassification("case_four", eps, (H, x, i))
    return ExtClassification("zero")


def _pi_candidates(H: int, first_hook: int, p: int) -> Iterator[tuple[int, int]]:
    # the top bead moves down by p(Q+1) and has only first_hook positions to fall
    x_max = H * (first_hook // p + 1)
    for x in range(1, x_max + 1):
        for i in range(1, x + 1):
            if pi_predicate(H, x, i, p):
                yield x, i


def ext_specht_simple_indicator(lam: Partition, mu: Partition, p: int, n: int) -> int:
    if p <= 2:
        raise PreconditionViolated("needs p > 2")
    if not (len(lam) < p and is_p_regular(mu, p) and sum(lam) == n == sum(mu)
            and not strictly_dominates(lam, mu)):
        raise PreconditionViolated(f"({lam}, {mu}) is outside the stated domain")
    return int(lam == mu == epsilon_n(n, p) and n >= p)
