"""Command-line front end.

Exit status is 0 on success, 1 on a usage or input error and 2 when a
verification finds a counterexample or a branching check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import verify
from .abacus import Abacus
from .branching import (
    IND,
    RES,
    UNDETERMINED,
    ZERO,
    GrothendieckSum,
    branch_nodes,
    conjecture_sum,
    ind_big_tilde,
    ind_completely_splittable,
    res_bottom_added,
    simple_branch,
)
from .decomp import (
    STATEMENTS,
    bundled_matrices,
    instances_for,
    load_decomp,
    needed_sizes,
    verify_branching,
)
from .errors import PreconditionViolated, SplittableError
from .ext_bounds import epsilon_seq, pi_predicate
from .families import (
    StaircaseParams,
    acs_preimage,
    h_epsilon,
    is_completely_splittable,
    lambda_family,
    mu_family,
    nu_family,
    staircase,
    tilde,
)
from .mullineux import MullineuxSymbol, mullineux, mullineux_symbol, partition_from_symbol
from .partitions import Partition

FAIL = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except SplittableError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _show(lam: Partition) -> str:
    return str(lam) or "()"


class Output:
    def __init__(self, as_json: bool):
        self.as_json = as_json

    def emit(self, text: str, data) -> None:
        if self.as_json:
            print(json.dumps(data))
        else:
            print(text)


# command handlers


def cmd_abacus(args, out: Output) -> int:
    if args.action == "show":
        if args.abacus:
            ab = Abacus.parse(args.abacus)
        elif args.partition is not None:
            ab = Abacus.from_partition(args.partition, args.shift)
        else:
            raise UsageError("abacus show needs --partition or --abacus")
        table = ab.render(args.p)
        out.emit(table, {"abacus": str(ab), "partition": str(ab.partition()),
                         "shift": ab.shift, "table": table.splitlines()})
        return 0
    text = args.text if args.text is not None else sys.stdin.read()
    ab = Abacus.parse_render(text)
    out.emit(f"{_show(ab.partition())}\n{ab}",
             {"partition": str(ab.partition()), "abacus": str(ab), "shift": ab.shift})
    return 0


def cmd_mullineux(args, out: Output) -> int:
    image = mullineux(args.partition, args.p)
    out.emit(_show(image), {"partition": str(args.partition), "image": str(image)})
    return 0


def cmd_symbol(args, out: Output) -> int:
    if args.symbol:
        lam = partition_from_symbol(MullineuxSymbol.parse(args.symbol), args.p)
        out.emit(_show(lam), {"symbol": args.symbol, "partition": str(lam)})
    elif args.partition is not None:
        sym = mullineux_symbol(args.partition, args.p)
        out.emit(str(sym), {"partition": str(args.partition), "symbol": str(sym),
                            "columns": [list(c) for c in sym.columns]})
    else:
        raise UsageError("symbol needs --partition or --symbol")
    return 0


def cmd_tilde(args, out: Output) -> int:
    if args.preimage:
        lam = acs_preimage(args.partition, args.p)
        text = "none" if lam is None else _show(lam)
        out.emit(text, {"partition": str(args.partition),
                        "preimage": None if lam is None else str(lam)})
        return 0
    nu = tilde(args.partition, args.p)
    out.emit(_show(nu), {"partition": str(args.partition), "tilde": str(nu)})
    return 0


def cmd_heps(args, out: Output) -> int:
    mu = h_epsilon(args.partition, args.eps, args.p)
    out.emit(_show(mu), {"partition": str(args.partition), "eps": list(args.eps), "image": str(mu)})
    return 0


def cmd_family(args, out: Output) -> int:
    kind = args.kind
    if kind == "lambda":
        lam = lambda_family(args.h, args.i, args.x, args.p)
    elif kind == "nu":
        lam = nu_family(args.H, args.x, args.p)
    elif kind == "mu":
        lam = mu_family(args.h, args.i, args.x, args.p)
    else:
        if args.rs is None or args.rows is None:
            raise UsageError("staircase needs --rs and --rows")
        lam = staircase(StaircaseParams(args.rs, args.rows), args.p)
    out.emit(_show(lam), {"family": kind, "partition": str(lam)})
    return 0


def cmd_pi(args, out: Output) -> int:
    holds = pi_predicate(args.H, args.x, args.i, args.p)
    out.emit("true" if holds else "false", {"H": args.H, "x": args.x, "i": args.i, "pi": holds})
    return 0


def cmd_epsseq(args, out: Output) -> int:
    eps = epsilon_seq(args.H, args.x, args.i, args.p)
    out.emit(",".join(map(str, eps)), {"eps": list(eps)})
    return 0


def _branch_sum(lam: Partition, alpha: int, direction: str, p: int):
    """The best available answer: a simple label, a theorem's sum, or UNDETERMINED."""
    label = simple_branch(lam, alpha, direction, p)
    if label is ZERO:
        return GrothendieckSum()
    if label is not UNDETERMINED:
        return GrothendieckSum.of([(label, 1)])
    if direction == IND:
        if is_completely_splittable(lam, p):
            return ind_completely_splittable(lam, alpha, p)
        pre = acs_preimage(lam, p)
        if pre is not None:
            try:
                return ind_big_tilde(pre, alpha, p)
            except PreconditionViolated:
                pass
    elif len(lam) > 1 and lam[-1] == 1:
        smaller = Partition(lam[:-1])
        if is_completely_splittable(smaller, p):
            try:
                found = res_bottom_added(smaller, alpha, p)
            except PreconditionViolated:
                found = None
            if found is not None and found.expansion is not None:
                return found.expansion
    return UNDETERMINED


def cmd_branch(args, out: Output) -> int:
    direction = IND if args.direction == "ind" else RES
    result = _branch_sum(args.partition, args.alpha, direction, args.p)
    if result is UNDETERMINED:
        nodes = branch_nodes(args.partition, args.alpha, direction, args.p)
        out.emit(f"undetermined ({len(nodes)} nodes of residue {args.alpha % args.p})",
                 {"undetermined": True, "nodes": [list(n) for n in nodes]})
    else:
        out.emit(str(result), result.to_json())
    return 0


def cmd_conjecture(args, out: Output) -> int:
    s = conjecture_sum(args.which, args.partition, args.p, args.alpha)
    out.emit(f"{s} (predicted)", s.to_json())
    return 0


def cmd_verify(args, out: Output) -> int:
    kwargs = {}
    if args.p:
        kwargs["primes"] = args.p
    if args.nmax is not None:
        if args.suite in ("lemma71", "lemma72"):
            primes = args.p or (5, 3)
            kwargs = {"cases": tuple((q, args.nmax) for q in primes)}
        elif args.suite in ("lemma5", "tilde", "involution", "ubound"):
            kwargs["n_max"] = args.nmax
        else:
            raise UsageError(f"--nmax does not apply to {args.suite}")
    elif args.suite in ("lemma71", "lemma72") and args.p:
        defaults = {5: 30, 3: 22}
        kwargs = {"cases": tuple((q, defaults.get(q, 22)) for q in args.p)}
    if args.xmax is not None:
        if args.suite != "thm66":
            raise UsageError("--xmax only applies to thm66")
        kwargs["x_max"] = args.xmax
    if args.pxmax is not None:
        if args.suite != "mull62_65":
            raise UsageError("--pxmax only applies to mull62_65")
        kwargs["px_max"] = args.pxmax
    if args.coremax is not None:
        if args.suite != "involution":
            raise UsageError("--coremax only applies to involution")
        kwargs["core_max"] = args.coremax
    result = verify.SUITES[args.suite](**kwargs)
    out.emit(result.summary(), result.to_json())
    return 0 if result.passed else FAIL


def cmd_oracle(args, out: Output) -> int:
    matrices = {} if args.no_bundled else bundled_matrices()
    for path in args.decomp or ():
        m = load_decomp(path)
        matrices[m.p, m.n] = m
    loaded = [f"p={p} n={n} sha256={m.provenance[:16]}" for (p, n), m in sorted(matrices.items())]
    if args.conjecture is not None:
        statement = f"conjecture-{args.conjecture}"
    else:
        statement = args.statement
    if statement is None:
        out.emit("\n".join(["loaded:"] + loaded), {"loaded": loaded})
        return 0
    primes = {args.p} if args.p else {p for p, _ in matrices}
    lines, records, ok = [], [], True
    for p in sorted(primes):
        if args.partition is not None:
            lam = args.partition
            alpha = args.alpha if args.alpha is not None else (-3) % p
            if statement.startswith("conjecture-") and statement != "conjecture-3" and args.alpha is None:
                raise UsageError(f"{statement} needs --alpha")
            groups = [[(lam, alpha)]]
        else:
            sizes = sorted(n for q, n in matrices if q == p)
            groups = []
            for n in sizes:
                if needed_sizes(statement, n) <= {m for q, m in matrices if q == p}:
                    groups.append(instances_for(statement, p, n))
        for group in groups:
            report = verify_branching(statement, group, matrices, p)
            ok = ok and report.passed
            for r in report.results:
                lines.append(r.line())
                records.append({"statement": r.statement, "p": r.p, "label": str(r.label),
                                "alpha": r.alpha, "passed": r.passed,
                                "predicted": r.predicted.to_json(),
                                "observed": r.observed.to_json(),
                                "provenance": list(r.provenance)})
    if not records:
        lines.append(f"no instances of {statement} are covered by the loaded matrices")
    head = f"{'PASS' if ok else 'FAIL'} {statement}: {sum(r['passed'] for r in records)}/{len(records)} instances"
    out.emit("\n".join([head] + lines), {"statement": statement, "passed": ok, "instances": records})
    return 0 if ok else FAIL


# parser


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="splittable", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_p(sp, required=True):
        sp.add_argument("--p", type=int, required=required, help="the prime")
        return sp

    sp = sub.add_parser("abacus", help="render or read abacus tables")
    sp.add_argument("action", choices=["show", "parse"])
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--partition", type=_partition)
    sp.add_argument("--shift", type=int, default=0)
    sp.add_argument("--abacus", help="x0=<int>;beads=<list>")
    sp.add_argument("--text", help="rendered table (default: read stdin)")
    sp.set_defaults(func=cmd_abacus)

    sp = with_p(sub.add_parser("mullineux", help="image under the Mullineux map"))
    sp.add_argument("--partition", type=_partition, required=True)
    sp.set_defaults(func=cmd_mullineux)

    sp = with_p(sub.add_parser("symbol", help="Mullineux symbol, or the partition of a symbol"))
    sp.add_argument("--partition", type=_partition)
    sp.add_argument("--symbol", help="A0,A1,.../R0,R1,...")
    sp.set_defaults(func=cmd_symbol)

    sp = with_p(sub.add_parser("tilde", help="tilde of a big partition"))
    sp.add_argument("--partition", type=_partition, required=True)
    sp.add_argument("--preimage", action="store_true", help="invert instead")
    sp.set_defaults(func=cmd_tilde)

    sp = with_p(sub.add_parser("heps", help="move the i-th top bead by p*eps_i"))
    sp.add_argument("--partition", type=_partition, required=True)
    sp.add_argument("--eps", type=_ints, required=True)
    sp.set_defaults(func=cmd_heps)

    sp = with_p(sub.add_parser("family", help="members of the parametrised families"))
    sp.add_argument("kind", choices=["lambda", "nu", "mu", "staircase"])
    for name in ("h", "i", "x", "H"):
        sp.add_argument(f"--{name}", type=int)
    sp.add_argument("--rs", type=_ints)
    sp.add_argument("--rows", type=_ints)
    sp.set_defaults(func=cmd_family)

    for name, func, help_text in (("pi", cmd_pi, "the predicate pi(H,x,i)"),
                                  ("epsseq", cmd_epsseq, "bead moves eps(H,x,i)")):
        sp = with_p(sub.add_parser(name, help=help_text))
        for arg in ("H", "x", "i"):
            sp.add_argument(f"--{arg}", type=int, required=True)
        sp.set_defaults(func=func)

    sp = with_p(sub.add_parser("branch", help="Ind^alpha / Res_alpha of a simple module"))
    sp.add_argument("direction", choices=["ind", "res"])
    sp.add_argument("--partition", type=_partition, required=True)
    sp.add_argument("--alpha", type=int, required=True)
    sp.set_defaults(func=cmd_branch)

    sp = with_p(sub.add_parser("conjecture", help="predicted branching sums"))
    sp.add_argument("which", type=int, choices=[1, 2, 3])
    sp.add_argument("--partition", type=_partition, required=True)
    sp.add_argument("--alpha", type=int)
    sp.set_defaults(func=cmd_conjecture)

    sp = sub.add_parser("verify", help="exhaustive verification suites")
    sp.add_argument("suite", choices=sorted(verify.SUITES))
    sp.add_argument("--p", type=_ints, help="primes, comma separated")
    sp.add_argument("--nmax", type=int)
    sp.add_argument("--xmax", type=int)
    sp.add_argument("--pxmax", type=int)
    sp.add_argument("--coremax", type=int)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("oracle", help="check branching against decomposition matrices")
    sp.add_argument("action", choices=["check"])
    sp.add_argument("--decomp", nargs="+", metavar="FILE")
    sp.add_argument("--no-bundled", action="store_true", help="ignore the bundled p=2 matrices")
    sp.add_argument("--statement", choices=STATEMENTS)
    sp.add_argument("--conjecture", type=int, choices=[1, 2, 3])
    sp.add_argument("--p", type=int)
    sp.add_argument("--partition", type=_partition)
    sp.add_argument("--alpha", type=int)
    sp.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, Output(args.json))
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"splittable: error: {exc}", file=sys.stderr)
        return 1
    except SplittableError as exc:
        print(f"splittable: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
