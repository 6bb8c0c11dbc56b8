"""Decomposition matrices read from text files, and the composition
multiplicities of residue-restricted induction and restriction they imply.

File format, one record per line::

    p 2
    n 3
    S 3 | D 3:1
    S 2,1 | D 2,1:1
    S 1,1,1 | D 3:1

Every partition of n needs an ``S`` row; omitted ``D`` pairs are zero and
lines starting with ``#`` are comments.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from pathlib import Path
from typing import Callable, Iterable

from .errors import (
    DecompSyntaxError,
    DiagonalNotOne,
    MatrixInconsistent,
    MissingMatrix,
    PreconditionViolated,
    SizeMismatch,
    SplittableError,
    UnitriangularityViolation,
)
from .branching import (
    IND,
    RES,
    SPECHT,
    UNDETERMINED,
    ZERO,
    GrothendieckSum,
    check_direction,
    conjecture_direction,
    conjecture_source,
    conjecture_sum,
    ind_big_tilde,
    ind_completely_splittable,
    res_bottom_added,
    simple_branch,
)
from .families import tilde
from .partitions import (
    Partition,
    add_node,
    addable_nodes,
    dominates,
    is_p_regular,
    partitions_of,
    remove_node,
    removable_nodes,
)


@dataclass(frozen=True)
class DecompMatrix:
    p: int
    n: int
    entries: dict[tuple[Partition, Partition], int]
    provenance: str = ""

    @property
    def rows(self) -> tuple[Partition, ...]:
        return partitions_of(self.n)

    @property
    def columns(self) -> list[Partition]:
        return [mu for mu in partitions_of(self.n) if is_p_regular(mu, self.p)]

    def __getitem__(self, key: tuple[Partition, Partition]) -> int:
        return self.entries.get(key, 0)

    def row(self, lam: Partition) -> dict[Partition, int]:
        """[S^lam] in the simple basis."""
        return {mu: d for (l2, mu), d in self.entries.items() if l2 == lam and d}

    def simple_in_specht(self, mu: Partition) -> dict[Partition, int]:
        """[D^mu] written in Specht classes, by back substitution down the dominance order."""
        return self._inverse[Partition(mu)]

    @cached_property
    def _inverse(self) -> dict[Partition, dict[Partition, int]]:
        # partitions_of lists lexicographically decreasing, which refines dominance
        inv: dict[Partition, dict[Partition, int]] = {}
        for lam in self.columns:
            combo = {lam: 1}
            for mu, d in self.row(lam).items():
                if mu == lam:
                    continue
                for nu, c in inv[mu].items():
                    combo[nu] = combo.get(nu, 0) - d * c
            inv[lam] = {k: v for k, v in combo.items() if v}
        return inv


def _parse_partition(text: str, line: int) -> Partition:
    try:
        return Partition.parse(text.strip())
    except (SplittableError, ValueError) as exc:
        raise DecompSyntaxError(f"bad partition {text.strip()!r}: {exc}", line) from exc


def _header(lines: list[tuple[int, str]], key: str) -> tuple[int, int]:
    if not lines:
        raise DecompSyntaxError(f"missing '{key} <int>' line")
    num, text = lines.pop(0)
    parts = text.split()
    if len(parts) != 2 or parts[0] != key or not parts[1].lstrip("-").isdigit():
        raise DecompSyntaxError(f"expected '{key} <int>', got {text!r}", num)
    return num, int(parts[1])


def parse_decomp(text: str) -> DecompMatrix:
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), 1)
             if ln.strip() and not ln.lstrip().startswith("#")]
    num, p = _header(lines, "p")
    if p < 2:
        raise DecompSyntaxError(f"p must be at least 2, got {p}", num)
    num, n = _header(lines, "n")
    if n < 0:
        raise DecompSyntaxError(f"n must be nonnegative, got {n}", num)
    entries: dict[tuple[Partition, Partition], int] = {}
    seen: dict[Partition, int] = {}
    for num, ln in lines:
        if not ln.startswith("S"):
            raise DecompSyntaxError(f"expected an 'S' row, got {ln!r}", num)
        left, bar, right = ln[1:].partition("|")
        if not bar:
            raise DecompSyntaxError("row needs 'S <parts> | D <parts>:<mult>; ...'", num)
        lam = _parse_partition(left, num)
        if sum(lam) != n:
            raise DecompSyntaxError(f"{lam} is not a partition of {n}", num)
        if lam in seen:
            raise DecompSyntaxError(f"row {lam} repeats line {seen[lam]}", num)
        seen[lam] = num
        for item in filter(None, (s.strip() for s in right.split(";"))):
            if not item.startswith("D"):
                raise DecompSyntaxError(f"expected 'D <parts>:<mult>', got {item!r}", num)
            label, colon, mult = item[1:].rpartition(":")
            if not colon or not mult.strip().isdigit():
                raise DecompSyntaxError(f"expected 'D <parts>:<mult>', got {item!r}", num)
            mu = _parse_partition(label, num)
            if sum(mu) != n or not is_p_regular(mu, p):
                raise DecompSyntaxError(f"column {mu} is not a {p}-regular partition of {n}", num)
            if (lam, mu) in entries:
                raise DecompSyntaxError(f"entry ({lam}, {mu}) given twice", num)
            d = int(mult)
            if d and not dominates(mu, lam):
                raise UnitriangularityViolation(f"d({lam}, {mu}) = {d} but {mu} does not dominate {lam}", num)
            if d:
                entries[lam, mu] = d
        if is_p_regular(lam, p) and entries.get((lam, lam), 0) != 1:
            raise DiagonalNotOne(f"d({lam}, {lam}) must be 1", num)
    missing = [lam for lam in partitions_of(n) if lam not in seen]
    if missing:
        raise DecompSyntaxError(f"missing rows for {', '.join(map(str, missing))}")
    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
    return DecompMatrix(p, n, entries, digest)


def load_decomp(path: str | Path) -> DecompMatrix:
    return parse_decomp(Path(path).read_text(encoding="utf-8"))


def bundled_matrix(p: int, n: int) -> DecompMatrix:
    """One of the small matrices shipped with the package (p = 2, n <= 5)."""
    res = resources.files("splittable") / "data" / f"p{p}_n{n}.txt"
    if not res.is_file():
        raise MissingMatrix(f"no bundled matrix for p={p}, n={n}")
    return parse_decomp(res.read_text(encoding="utf-8"))


def bundled_matrices() -> dict[tuple[int, int], DecompMatrix]:
    out = {}
    for res in (resources.files("splittable") / "data").iterdir():
        if res.name.endswith(".txt"):
            m = parse_decomp(res.read_text(encoding="utf-8"))
            out[m.p, m.n] = m
    return out


# Specht branching

def specht_branch(lam: Partition, alpha: int, direction: str, p: int) -> GrothendieckSum:
    """Specht classes reached by adding (ind) or removing (res) one node of residue alpha."""
    check_direction(direction)
    lam = Partition(lam)
    out = GrothendieckSum(SPECHT)
    if direction == IND:
        for node in addable_nodes(lam):
            if node.residue(p) == alpha % p:
                out.add(add_node(lam, node))
    else:
        for node in removable_nodes(lam):
            if node.residue(p) == alpha % p:
                out.add(remove_node(lam, node))
    return out


def induced_simple_multiplicities(lam: Partition, alpha: int, direction: str,
                                  source: DecompMatrix, target: DecompMatrix) -> GrothendieckSum:
    """Exact composition factors of Ind^alpha or Res_alpha of the simple labelled by lam."""
    check_direction(direction)
    lam = Partition(lam)
    p = source.p
    step = 1 if direction == IND else -1
    if target.p != p:
        raise SizeMismatch(f"matrices are for p={source.p} and p={target.p}")
    if sum(lam) != source.n or target.n != source.n + step:
        raise SizeMismatch(f"need matrices for n={sum(lam)} and n={sum(lam) + step}, "
                           f"got {source.n} and {target.n}")
    if not is_p_regular(lam, p):
        raise SplittableError(f"{lam} is not {p}-regular")
    simple: dict[Partition, int] = {}
    for nu, c in source.simple_in_specht(lam).items():
        for kappa, m in specht_branch(nu, alpha, direction, p).terms.items():
            for mu, d in target.row(kappa).items():
                simple[mu] = simple.get(mu, 0) + c * m * d
    if any(v < 0 for v in simple.values()):
        raise MatrixInconsistent(f"negative multiplicities for {lam}: {simple}")
    order = {mu: k for k, mu in enumerate(target.columns)}
    return GrothendieckSum.of(sorted(((mu, v) for mu, v in simple.items() if v),
                                     key=lambda t: order[t[0]]))


# verification against the matrices

@dataclass
class InstanceResult:
    statement: str
    label: Partition
    alpha: int
    p: int
    passed: bool
    predicted: GrothendieckSum
    observed: GrothendieckSum
    provenance: tuple[str, str]

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.statement} p={self.p} lambda={str(self.label) or '()'} alpha={self.alpha}"
        if not self.passed:
            text += f": predicted {self.predicted}, observed {self.observed}"
        return text


@dataclass
class BranchingReport:
    results: list[InstanceResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[InstanceResult]:
        return [r for r in self.results if not r.passed]

    def summary(self) -> str:
        fails = len(self.failures)
        head = f"{'PASS' if not fails else 'FAIL'}: {len(self.results) - fails}/{len(self.results)} instances agree"
        return "\n".join([head] + [r.line() for r in self.results if not r.passed])


def _as_sum(label) -> GrothendieckSum:
    if label is ZERO:
        return GrothendieckSum()
    return GrothendieckSum.of([(label, 1)])


def _prediction(statement: str, lam: Partition, alpha: int, p: int):
    """(source label, direction, predicted sum) for one instance of a statement."""
    if statement in ("simple-ind", "simple-res"):
        direction = IND if statement == "simple-ind" else RES
        label = simple_branch(lam, alpha, direction, p)
        if label is UNDETERMINED:
            raise SplittableError(f"branching of {lam} at residue {alpha} is not simple")
        return lam, direction, _as_sum(label)
    if statement == "ind-cs":
        return lam, IND, ind_completely_splittable(lam, alpha, p)
    if statement == "ind-big-tilde":
        return tilde(lam, p), IND, ind_big_tilde(lam, alpha, p)
    if statement == "res-bottom":
        found = res_bottom_added(lam, alpha, p)
        return found.restricted, RES, None
    if statement.startswith("conjecture-"):
        which = int(statement.rsplit("-", 1)[1])
        return (conjecture_source(which, lam, p), conjecture_direction(which),
                conjecture_sum(which, lam, p, alpha))
    raise SplittableError(f"unknown statement {statement!r}")


STATEMENTS = ("simple-ind", "simple-res", "ind-cs", "ind-big-tilde", "res-bottom",
              "conjecture-1", "conjecture-2", "conjecture-3")


def verify_branching(statement: str, instances: Iterable[tuple[Partition, int]],
                     matrices: dict[tuple[int, int], DecompMatrix] | Callable,
                     p: int) -> BranchingReport:
    """Compare predicted sums with the multiplicities computed from the matrices.

    ``matrices`` maps (p, n) to a matrix, or is a callable with that signature.
    For "res-bottom" the two sides of the stated isomorphism are both computed
    from the matrices.
    """
    get = matrices if callable(matrices) else (lambda q, n: matrices.get((q, n)))

    def need(n: int) -> DecompMatrix:
        m = get(p, n)
        if m is None:
            raise MissingMatrix(f"no decomposition matrix for p={p}, n={n}")
        return m

    report = BranchingReport()
    for lam, alpha in instances:
        lam = Partition(lam)
        source, direction, predicted = _prediction(statement, lam, alpha, p)
        n = sum(source)
        step = 1 if direction == IND else -1
        m_src, m_dst = need(n), need(n + step)
        observed = induced_simple_multiplicities(source, alpha, direction, m_src, m_dst)
        if predicted is None:
            # the other side of the isomorphism
            other = res_bottom_added(lam, alpha, p).induced
            predicted = induced_simple_multiplicities(other, alpha, IND, need(sum(other)),
                                                      need(sum(other) + 1))
        report.results.append(InstanceResult(
            statement, lam, alpha % p, p, predicted == observed, predicted, observed,
            (m_src.provenance, m_dst.provenance)))
    return report


def _applies(fn, *args) -> bool:
    try:
        fn(*args)
    except PreconditionViolated:
        return False
    return True


def instances_for(statement: str, p: int, n: int) -> list[tuple[Partition, int]]:
    """Every (label, residue) of size n for which the statement's hypotheses hold."""
    out = []
    for lam in partitions_of(n):
        for alpha in range(p):
            if statement in ("simple-ind", "simple-res"):
                direction = IND if statement == "simple-ind" else RES
                ok = (is_p_regular(lam, p)
                      and simple_branch(lam, alpha, direction, p) is not UNDETERMINED)
            elif statement == "ind-cs":
                ok = _applies(ind_completely_splittable, lam, alpha, p)
            elif statement == "ind-big-tilde":
                ok = _applies(ind_big_tilde, lam, alpha, p)
            elif statement == "res-bottom":
                ok = _applies(res_bottom_added, lam, alpha, p)
            elif statement == "conjecture-3":
                ok = alpha == (-3) % p and _applies(conjecture_sum, 3, lam, p)
            elif statement.startswith("conjecture-"):
                ok = _applies(conjecture_sum, int(statement[-1]), lam, p, alpha)
            else:
                raise SplittableError(f"unknown statement {statement!r}")
            if ok:
                out.append((lam, alpha))
    return out


def needed_sizes(statement: str, n: int) -> set[int]:
    """Sizes of the matrices that instances with labels of size n need."""
    if statement == "res-bottom":
        return {n - 1, n, n + 1}
    if statement == "conjecture-2":
        return {n, n + 1}
    if statement == "simple-res":
        return {n, n - 1}
    return {n, n + 1}
