"""Branching rules for residue-restricted induction and restriction, as sums of
simple classes in the Grothendieck group."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .abacus import node_classification
from .errors import NotApplicable, PreconditionViolated, SplittableError, TermNotPRegular
from .families import h_epsilon, is_big, is_completely_splittable, tilde
from .partitions import (
    Node,
    Partition,
    add_node,
    chi,
    hook_length,
    is_p_regular,
    remove_node,
)

SIMPLE = "simple"
SPECHT = "specht"


@dataclass
class GrothendieckSum:
    """A formal sum of module classes with positive integer multiplicities.

    Terms keep insertion order so that printed sums follow the order in which a
    formula lists them.  ``predicted`` marks sums that come from a conjectured
    formula rather than a proved one.
    """

    basis: str = SIMPLE
    terms: dict[Partition, int] = field(default_factory=dict)
    predicted: bool = False

    def __post_init__(self) -> None:
        if self.basis not in (SIMPLE, SPECHT):
            raise SplittableError(f"unknown basis {self.basis!r}")
        self.terms = {Partition(k): v for k, v in self.terms.items() if v}
        if any(v < 0 for v in self.terms.values()):
            raise SplittableError("multiplicities must be positive")
        if len({sum(k) for k in self.terms}) > 1:
            raise SplittableError("labels partition different integers")

    @classmethod
    def of(cls, labels: Iterable[tuple[Partition, int]], basis: str = SIMPLE,
           predicted: bool = False) -> "GrothendieckSum":
        out = cls(basis, {}, predicted)
        for lam, mult in labels:
            out.add(lam, mult)
        return out

    def add(self, lam: Partition, mult: int = 1) -> None:
        lam = Partition(lam)
        if self.terms and sum(lam) != sum(next(iter(self.terms))):
            raise SplittableError(f"{lam} has the wrong size for this sum")
        total = self.terms.get(lam, 0) + mult
        if total < 0:
            raise SplittableError("multiplicities must be positive")
        if total:
            self.terms[lam] = total
        else:
            self.terms.pop(lam, None)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GrothendieckSum):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def total(self) -> int:
        return sum(self.terms.values())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        letter = "D" if self.basis == SIMPLE else "S"
        return "+".join(f"{'' if m == 1 else m}[{letter}^({lam})]" for lam, m in self.terms.items())

    def to_json(self) -> dict:
        out = {"basis": self.basis,
               "terms": [{"label": str(lam), "mult": m} for lam, m in self.terms.items()]}
        if self.predicted:
            out["predicted"] = True
        return out

    def check_p_regular(self, p: int) -> "GrothendieckSum":
        if self.basis == SIMPLE:
            for lam in self.terms:
                if not is_p_regular(lam, p):
                    raise TermNotPRegular(f"term {lam} is not {p}-regular")
        return self


class _Marker:
    def __init__(self, name: str):
        self.name = name

    def __repr__(self) -> str:
        return self.name

    __str__ = __repr__


ZERO = _Marker("Zero")
UNDETERMINED = _Marker("Undetermined")

IND = "ind"
RES = "res"


def check_direction(direction: str) -> None:
    if direction not in (IND, RES):
        raise SplittableError(f"direction must be {IND!r} or {RES!r}, got {direction!r}")


def branch_nodes(lam: Partition, alpha: int, direction: str, p: int) -> list[Node]:
    """Conormal (for induction) or normal (for restriction) nodes of residue alpha, top first."""
    check_direction(direction)
    sets = node_classification(lam, p)
    table = sets.conormal if direction == IND else sets.normal
    return list(table.get(alpha % p, []))


def simple_branch(lam: Partition, alpha: int, direction: str, p: int):
    """The simple label when the branching is simple, else ZERO or UNDETERMINED."""
    if not is_p_regular(lam, p):
        raise PreconditionViolated(f"{lam} is not {p}-regular")
    nodes = branch_nodes(lam, alpha, direction, p)
    if not nodes:
        return ZERO
    if len(nodes) > 1:
        return UNDETERMINED
    node = nodes[0]
    return add_node(lam, node) if direction == IND else remove_node(lam, node)


def _two_nodes(lam: Partition, alpha: int, direction: str, p: int, what: str) -> tuple[Node, Node]:
    nodes = branch_nodes(lam, alpha, direction, p)
    if len(nodes) < 2:
        raise PreconditionViolated(f"{lam} has fewer than two {what} nodes of residue {alpha % p}")
    if len(nodes) > 2:
        raise PreconditionViolated(f"{lam} has {len(nodes)} {what} nodes of residue {alpha % p}")
    return nodes[0], nodes[1]


def _first_column_hook(lam: Partition, row: int) -> int:
    return hook_length(lam, row, 1) if len(lam) >= row else 0


def ind_completely_splittable(lam: Partition, alpha: int, p: int) -> GrothendieckSum:
    """Induction to residue alpha of a completely splittable simple with two conormal nodes."""
    lam = Partition(lam)
    if not is_completely_splittable(lam, p) or not is_p_regular(lam, p):
        raise PreconditionViolated(f"{lam} is not completely splittable for p={p}")
    above, below = _two_nodes(lam, alpha, IND, p, "conormal")
    hook = _first_column_hook(lam, 1)
    column = Partition((1,) * (p - 1))
    row = Partition((p - 1,))
    out = GrothendieckSum()
    if p == 2 and lam == Partition((1,)):
        out.add(Partition((2,)), 2)
    elif p > 2 and lam == column:
        out.add(Partition((2,) + (1,) * (p - 2)), 2)
        out.add(Partition((3,) + (1,) * (p - 3)))
    elif hook != p - 1 or lam == row:
        out.add(add_node(lam, above), 2)
        out.add(add_node(lam, below))
    else:
        top = add_node(lam, above)
        out.add(top, 2)
        out.add(add_node(lam, below))
        out.add(tilde(top, p))
    return out.check_p_regular(p)


@dataclass(frozen=True)
class BottomAddedRestriction:
    """Res of the simple labelled by ``lam`` plus its first-column addable node
    agrees with Ind of the simple labelled by ``lam`` minus the other normal node."""

    restricted: Partition
    induced: Partition
    other_node: Node
    expansion: GrothendieckSum | None


def res_bottom_added(lam: Partition, alpha: int, p: int) -> BottomAddedRestriction:
    lam = Partition(lam)
    if not is_completely_splittable(lam, p) or not is_p_regular(lam, p):
        raise PreconditionViolated(f"{lam} is not completely splittable for p={p}")
    if lam == Partition((1,) * (p - 1)):
        raise PreconditionViolated("the column of height p - 1 is excluded")
    bottom = Node(len(lam) + 1, 1)
    grown = add_node(lam, bottom)
    normal = branch_nodes(grown, alpha, RES, p)
    if len(normal) < 2:
        raise PreconditionViolated(f"{grown} has fewer than two normal nodes of residue {alpha % p}")
    others = [a for a in normal if a != bottom]
    if len(others) != 1:
        raise PreconditionViolated(f"expected one normal node besides {bottom}, got {others}")
    other = others[0]
    smaller = remove_node(lam, other)
    return BottomAddedRestriction(grown, smaller, other, _induced_expansion(smaller, alpha, p))


def _induced_expansion(lam: Partition, alpha: int, p: int) -> GrothendieckSum | None:
    label = simple_branch(lam, alpha, IND, p)
    if label is ZERO:
        return GrothendieckSum()
    if label is not UNDETERMINED:
        return GrothendieckSum.of([(label, 1)]).check_p_regular(p)
    if is_completely_splittable(lam, p) and len(branch_nodes(lam, alpha, IND, p)) == 2:
        return ind_completely_splittable(lam, alpha, p)
    return None


def _excluded_corner(lam: Partition, alpha: int, p: int) -> bool:
    # first part, minus the height and alpha all agree mod p
    return lam[0] % p == (-len(lam)) % p == alpha % p


def ind_big_tilde(lam: Partition, alpha: int, p: int) -> GrothendieckSum:
    """Induction to residue alpha of the simple labelled by the tilde of a big partition."""
    lam = Partition(lam)
    if not is_big(lam, p):
        raise PreconditionViolated(f"{lam} is not big for p={p}")
    if 2 * len(lam) < p + 3:
        raise PreconditionViolated(f"height {len(lam)} is below (p+3)/2")
    if _first_column_hook(lam, 2) == p - 1:
        raise PreconditionViolated("the hook at (2,1) has length p - 1")
    if _excluded_corner(lam, alpha, p):
        raise PreconditionViolated("first part and minus the height are both congruent to alpha")
    nu = tilde(lam, p)
    above, below = _two_nodes(nu, alpha, IND, p, "conormal")
    out = GrothendieckSum()
    out.add(add_node(nu, above), 2)
    out.add(add_node(nu, below))
    return out.check_p_regular(p)


def _moved(lam: Partition, eps: tuple[int, ...], p: int) -> Partition:
    try:
        return h_epsilon(lam, eps, p)
    except NotApplicable as exc:
        raise TermNotPRegular(f"bead move {eps} does not apply to {lam}: {exc}") from exc


def conjecture_one(lam: Partition, alpha: int, p: int) -> GrothendieckSum:
    lam = Partition(lam)
    if not is_big(lam, p):
        raise PreconditionViolated(f"{lam} is not big for p={p}")
    if _excluded_corner(lam, alpha, p):
        raise PreconditionViolated("first part and minus the height are both congruent to alpha")
    H = len(lam)
    nu = tilde(lam, p)
    above, below = _two_nodes(nu, alpha, IND, p, "conormal")
    top = add_node(nu, above)
    out = GrothendieckSum(predicted=True)
    out.add(top, 2)
    out.add(add_node(nu, below))
    if _first_column_hook(lam, 2) == p - 1:
        if H == 2:
            extra = [(-2, 2)]
        elif H == 3:
            extra = [(0, -1, 1), (1, -1, 0)]
        else:
            extra = [(0, -1) + (0,) * (H - 3) + (1,), (0, -1) + (0,) * (H - 4) + (1, 0)]
        for eps in extra:
            out.add(_moved(top, eps, p))
    return out.check_p_regular(p)


def conjecture_two(lam: Partition, alpha: int, p: int) -> GrothendieckSum:
    lam = Partition(lam)
    if not is_completely_splittable(lam, p) or chi(lam) != p or not is_p_regular(lam, p):
        raise PreconditionViolated(f"{lam} must be {p}-regular and completely splittable with chi = {p}")
    H = len(lam)
    if H < 2:
        raise PreconditionViolated("height must be at least 2")
    grown = add_node(lam, Node(1, lam[0] + 1))
    if len(branch_nodes(grown, alpha, RES, p)) < 2:
        raise PreconditionViolated(f"{grown} has fewer than two normal nodes of residue {alpha % p}")
    x = int(_first_column_hook(lam, 2) >= p)
    out = GrothendieckSum(predicted=True)
    out.add(tilde(lam, p), 2)
    out.add(lam)
    if H > 2:
        out.add(_moved(lam, (-1,) + (0,) * (H - 3) + (1, 0), p))
        second = (0, -1) + (0,) * (H - 3) + (1,)
    else:
        second = (1, -1)
    if x:
        out.add(_moved(lam, second, p))
    return out.check_p_regular(p)


def conjecture_three(lam: Partition, p: int) -> GrothendieckSum:
    """Induction to residue -3 for height three and first hook 2p - 1."""
    lam = Partition(lam)
    if not is_completely_splittable(lam, p) or len(lam) != 3 or hook_length(lam, 1, 1) != 2 * p - 1:
        raise PreconditionViolated(f"{lam} must be completely splittable of height 3 "
                                   f"with first hook {2 * p - 1}")
    nu = tilde(lam, p)
    top = add_node(nu, Node(3, nu[2] + 1))
    out = GrothendieckSum(predicted=True)
    out.add(top, 2)
    out.add(add_node(nu, Node(4, 1)))
    out.add(_moved(top, (0, 1, -1), p))
    return out.check_p_regular(p)


def conjecture_sum(which: int, lam: Partition, p: int, alpha: int | None = None) -> GrothendieckSum:
    """Predicted sum of conjecture 1, 2 or 3; the third fixes alpha to -3."""
    if which == 1:
        if alpha is None:
            raise PreconditionViolated("conjecture 1 needs a residue")
        return conjecture_one(lam, alpha, p)
    if which == 2:
        if alpha is None:
            raise PreconditionViolated("conjecture 2 needs a residue")
        return conjecture_two(lam, alpha, p)
    if which == 3:
        if alpha is not None and alpha % p != (-3) % p:
            raise PreconditionViolated(f"conjecture 3 uses residue {(-3) % p}")
        return conjecture_three(lam, p)
    raise PreconditionViolated(f"no conjecture {which}")


def conjecture_alpha(which: int, alpha: int | None, p: int) -> int | None:
    """The residue a conjecture acts on; the third one fixes it."""
    return (-3) % p if which == 3 else alpha


def conjecture_direction(which: int) -> str:
    return RES if which == 2 else IND


def conjecture_source(which: int, lam: Partition, p: int) -> Partition:
    """The label of the simple module the conjectured sum decomposes."""
    lam = Partition(lam)
    if which == 2:
        return add_node(lam, Node(1, lam[0] + 1))
    return tilde(lam, p)
