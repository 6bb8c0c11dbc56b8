"""Exhaustive desk-scale sweeps over the combinatorial statements.

Each suite returns a :class:`SuiteResult` listing every counterexample found;
a suite passes when that list is empty.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .abacus import Abacus, node_classification
from .ext_bounds import (
    dominance_and_inequality,
    epsilon_seq,
    epsilon_seq_large_height,
    ext_dim_cs,
    in_x_set,
    pi_predicate,
    u_bound,
)
from .families import (
    StaircaseParams,
    apply_h_epsilon,
    is_big,
    is_completely_splittable,
    lambda_family,
    lambda_family_abacus,
    lambda_family_symbol,
    lambda_hx,
    mu_family,
    nu_family,
    nu_family_symbol,
    solves_minimal_system,
    solves_staircase_system,
    staircase,
    tilde,
    tilde_closed_form,
    tilde_family_symbol,
)
from .hooks import locally_highest_hooks, move_up, p_core
from .mullineux import mullineux, mullineux_symbol, partition_from_symbol
from .partitions import (
    Partition,
    is_p_regular,
    partitions_of,
    partitions_up_to,
    transpose,
)


@dataclass
class SuiteResult:
    name: str
    params: dict
    checked: int = 0
    counterexamples: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        args = " ".join(f"{k}={v}" for k, v in self.params.items())
        head = (f"{status} {self.name} {args}: {self.checked} cases, "
                f"{len(self.counterexamples)} counterexamples ({self.seconds:.2f}s)")
        return "\n".join([head] + [f"  {c}" for c in self.counterexamples])

    def to_json(self) -> dict:
        return {"suite": self.name, "params": self.params, "passed": self.passed,
                "checked": self.checked, "counterexamples": [str(c) for c in self.counterexamples],
                "seconds": round(self.seconds, 3)}


def _run(name: str, params: dict, body: Callable[[SuiteResult], None]) -> SuiteResult:
    result = SuiteResult(name, params)
    start = time.perf_counter()
    body(result)
    result.seconds = time.perf_counter() - start
    return result


def _normal_counts(lam: Partition, p: int) -> dict[int, int]:
    return {res: len(nodes) for res, nodes in node_classification(lam, p).normal.items()}


def lemma5(primes=(2, 3, 5), n_max: int = 22) -> SuiteResult:
    """Removing a locally highest rim hook never adds normal nodes of any residue."""

    def body(out: SuiteResult) -> None:
        for p in primes:
            for lam in partitions_up_to(n_max):
                before = _normal_counts(lam, p)
                ab = Abacus.from_partition(lam, 0)
                smaller = [move_up(ab, h.bead, p).partition() for h in locally_highest_hooks(ab, p)]
                smaller.append(p_core(lam, p)[0])
                for mu in smaller:
                    out.checked += 1
                    for res, k in _normal_counts(mu, p).items():
                        if k > before.get(res, 0):
                            out.counterexamples.append((p, lam, mu, res))

    return _run("lemma5", {"p": list(primes), "nmax": n_max}, body)


def staircases_up_to(p: int, n_max: int) -> Iterator[Partition]:
    """Every staircase partition of size at most n_max."""
    for k in range(1, p + 1):
        for rs in itertools.combinations(range(1, p), k - 1):
            yield from _staircase_rows(p, n_max, rs, ())


def _staircase_rows(p, n_max, rs, rows):
    if len(rows) == len(rs):
        lam = staircase(StaircaseParams(rs, rows), p)
        if sum(lam) <= n_max:
            yield lam
        return
    left = len(rs) - len(rows) - 1
    top = rows[-1] - 1 if rows else n_max
    for r in range(top, left - 1, -1):
        trial = rows + (r,) + tuple(range(left - 1, -1, -1))
        # the size grows with every row index, so test the smallest completion first
        if sum(staircase(StaircaseParams(rs, trial), p)) > n_max:
            continue
        yield from _staircase_rows(p, n_max, rs, rows + (r,))


def _system_sweep(name, solves, family, cases) -> SuiteResult:
    def body(out: SuiteResult) -> None:
        for p, n_max in cases:
            scanned = list(partitions_up_to(n_max))
            solutions = {lam for lam in scanned if solves(lam, p)}
            expected = set(family(p, n_max))
            out.checked += len(scanned)
            for lam in sorted(solutions - expected):
                out.counterexamples.append((p, lam, "solves the system but is not in the family"))
            for lam in sorted(expected - solutions):
                out.counterexamples.append((p, lam, "is in the family but does not solve the system"))

    return _run(name, {"cases": [f"p={p},nmax={n}" for p, n in cases]}, body)


def lemma71(cases=((5, 30), (3, 22))) -> SuiteResult:
    """Solutions of the staircase system are exactly the staircase partitions."""
    return _system_sweep("lemma71", solves_staircase_system, staircases_up_to, cases)


def _lambda_family_up_to(p: int, n_max: int) -> Iterator[Partition]:
    for h in range(1, p):
        for i in range(1, h + 1):
            x = 0
            while True:
                lam = lambda_family(h, i, x, p)
                if sum(lam) > n_max:
                    break
                yield lam
                x += 1


def lemma72(cases=((5, 30), (3, 22))) -> SuiteResult:
    """Solutions of the minimal system are exactly the lambda^(h,i,x) partitions."""
    return _system_sweep("lemma72", solves_minimal_system, _lambda_family_up_to, cases)


def thm66(primes=(5, 7, 11), x_min: int = 3, x_factor: int = 4,
          x_max: int | None = None) -> SuiteResult:
    """Mullineux dominance between the two families agrees with the floor inequality.

    x runs from ``x_min`` to ``x_factor * H``, or to ``x_max`` when that is given.
    """

    def body(out: SuiteResult) -> None:
        for p in primes:
            for H in range(2, p):
                top = x_factor * H if x_max is None else x_max
                for x in range(x_min, top + 1):
                    R = x % H
                    if not R:
                        continue
                    for i in range(1, min(x, H - R) + 1):
                        out.checked += 1
                        left, right = dominance_and_inequality(p, H, x, i)
                        if left != right:
                            out.counterexamples.append((p, H, x, i, left, right))

    span = f"{x_min}..{x_factor}H" if x_max is None else f"{x_min}..{x_max}"
    return _run("thm66", {"p": list(primes), "x": span}, body)


def lemma82(primes=(5, 7, 11, 13), x_factor: int = 6) -> SuiteResult:
    """For large heights pi holds only at x = QH + 1, i = H - 1, and both epsilon
    formulas agree; the epsilon bead moves realise the family on the whole pi-true set."""

    def body(out: SuiteResult) -> None:
        for p in primes:
            for H in range(3, p):
                large = 2 * H >= p + 3
                for x in range(1, x_factor * H + 1):
                    for i in range(1, x + 1):
                        holds = pi_predicate(H, x, i, p)
                        if large:
                            out.checked += 1
                            expected = x % H == 1 and i == H - 1
                            if holds != expected:
                                out.counterexamples.append((p, H, x, i, "pi", holds))
                            elif holds and epsilon_seq(H, x, i, p) != epsilon_seq_large_height(H, x):
                                out.counterexamples.append((p, H, x, i, "epsilon formulas differ"))
                        if holds:
                            out.checked += 1
                            R = x % H
                            moved = apply_h_epsilon(lambda_family_abacus(H, H, x, p),
                                                    epsilon_seq(H, x, i, p), p)
                            if moved != lambda_family_abacus(H - R, i, x, p).translate(-R):
                                out.counterexamples.append((p, H, x, i, "abacus identity"))

    return _run("lemma82", {"p": list(primes), "x": f"<= {x_factor}H"}, body)


def mull62_65(primes=(5, 7), px_max: int = 140) -> SuiteResult:
    """The generic Mullineux symbol and map agree with the closed forms on the families."""

    def body(out: SuiteResult) -> None:
        for p in primes:
            x_max = px_max // p
            for H in range(2, p):
                for x in range(1, x_max + 1):
                    if x % H == 0:
                        continue
                    lt = tilde(lambda_hx(H, x, p), p)
                    nu = nu_family(H, x, p)
                    out.checked += 1
                    if mullineux(lt, p) != nu:
                        out.counterexamples.append((p, H, x, "m(tilde) != nu"))
                    out.checked += 2
                    if mullineux_symbol(lt, p) != tilde_family_symbol(H, x, p):
                        out.counterexamples.append((p, H, x, "tilde symbol"))
                    if mullineux_symbol(nu, p) != nu_family_symbol(H, x, p):
                        out.counterexamples.append((p, H, x, "nu symbol"))
            for h in range(1, p):
                for i in range(1, h + 1):
                    for x in range(i, x_max + 1):
                        lam = lambda_family(h, i, x, p)
                        out.checked += 2
                        if mullineux_symbol(lam, p) != lambda_family_symbol(h, i, x, p):
                            out.counterexamples.append((p, h, i, x, "lambda symbol"))
                        if mullineux(lam, p) != mu_family(h, i, x, p):
                            out.counterexamples.append((p, h, i, x, "m(lambda) != mu"))

    return _run("mull62_65", {"p": list(primes), "pxmax": px_max}, body)


def tilde_suite(primes=(3, 5, 7), n_max: int = 30) -> SuiteResult:
    """Tilde by bead moves agrees with the row-by-row closed form on every big partition."""

    def body(out: SuiteResult) -> None:
        for p in primes:
            for lam in partitions_up_to(n_max):
                if not is_big(lam, p):
                    continue
                out.checked += 1
                if tilde(lam, p) != tilde_closed_form(lam, p):
                    out.counterexamples.append((p, lam, tilde(lam, p), tilde_closed_form(lam, p)))

    return _run("tilde", {"p": list(primes), "nmax": n_max}, body)


def involution(primes=(2, 3, 5, 7), n_max: int = 22, core_max: int = 20) -> SuiteResult:
    """The Mullineux map is an involution on p-regular partitions and transposes p-cores."""

    def body(out: SuiteResult) -> None:
        for p in primes:
            for lam in partitions_up_to(n_max):
                if not is_p_regular(lam, p):
                    continue
                out.checked += 1
                image = mullineux(lam, p)
                if not is_p_regular(image, p):
                    out.counterexamples.append((p, lam, image, "image is p-singular"))
                elif mullineux(image, p) != lam:
                    out.counterexamples.append((p, lam, image, "not an involution"))
                if partition_from_symbol(mullineux_symbol(lam, p), p) != lam:
                    out.counterexamples.append((p, lam, "symbol does not round-trip"))
                if sum(lam) <= core_max and p_core(lam, p)[1] == 0 and image != transpose(lam):
                    out.counterexamples.append((p, lam, image, "core not sent to its transpose"))

    return _run("involution", {"p": list(primes), "nmax": n_max, "coremax": core_max}, body)


def ubound(primes=(3, 5), n_max: int = 20) -> SuiteResult:
    """The completely splittable bound is 0 off the tilde diagonal, at most 1 on it,
    and never below the exact Ext dimension."""

    def body(out: SuiteResult) -> None:
        for p in primes:
            for n in range(n_max + 1):
                regular = [mu for mu in partitions_of(n) if is_p_regular(mu, p)]
                for lam in regular:
                    if not is_completely_splittable(lam, p):
                        continue
                    diagonal = tilde(lam, p) if is_big(lam, p) else None
                    for mu in regular:
                        if not in_x_set(lam, mu, p, "CS"):
                            continue
                        out.checked += 1
                        u = u_bound(lam, mu, p, "CS")
                        ext = ext_dim_cs(lam, mu, p)
                        if (u > 1 if mu == diagonal else u != 0) or ext > u:
                            out.counterexamples.append((p, lam, mu, u, ext))

    return _run("ubound", {"p": list(primes), "nmax": n_max}, body)


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "lemma5": lemma5,
    "lemma71": lemma71,
    "lemma72": lemma72,
    "thm66": thm66,
    "lemma82": lemma82,
    "mull62_65": mull62_65,
    "tilde": tilde_suite,
    "involution": involution,
    "ubound": ubound,
}
