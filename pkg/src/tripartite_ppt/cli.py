"""Command-line front end: ``tripartite-ppt {gen,reduce,check,verify}``.

Exit codes: ``check`` returns 0 for ENTANGLED and 1 for INCONCLUSIVE;
``verify`` returns 0 when every check passes and 1 otherwise; 2 is a usage
error and 3 an unreadable or invalid matrix.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import matrixio, states, verify
from .criterion import DEFAULT_TOL, ReductionKind, entanglement_criterion, reduce
from .errors import InvalidInput, LemmaViolation
from .linalg import require_density

EXIT_ENTANGLED = 0
EXIT_INCONCLUSIVE = 1
EXIT_USAGE = 2
EXIT_INVALID = 3

FILE_TOL = 1e-8


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load_state(path: str, dim: int = 8):
    try:
        f = matrixio.read(path)
        if f.dim != dim:
            raise InvalidInput(f"expected a {dim}x{dim} matrix, got {f.dim}x{f.dim}")
        return require_density(f.matrix, dim, FILE_TOL)
    except InvalidInput as exc:
        raise CliError(f"invalid input {path}: {exc}", EXIT_INVALID) from None


def _kind(name: str) -> ReductionKind:
    try:
        return ReductionKind.parse(name)
    except InvalidInput as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _generate(args):
    fam = args.family
    try:
        if fam == "ghz":
            return states.ghz(), "ghz"
        if fam == "werner":
            return states.werner_embedded(args.x), f"werner x={args.x!r}"
        if fam == "embed":
            r = _load_state(args.input, 4)
            return states.embed_bipartite(r, args.slot), f"embed slot={args.slot}"
        if fam == "molecule":
            p = states.MoleculeParams(args.p_ab, args.p_bc, args.p_ac)
            return states.molecule_state(p), f"molecule p_ab={args.p_ab!r} p_bc={args.p_bc!r} p_ac={args.p_ac!r}"
        if fam == "upb":
            return states.upb_state(), "upb"
        if fam == "random":
            return states.random_density(args.seed), f"random seed={args.seed}"
        if fam == "separable":
            _, rho = states.random_separable(args.seed, args.k)
            return rho, f"separable seed={args.seed} k={args.k}"
    except InvalidInput as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    raise CliError(f"unknown family {fam}", EXIT_USAGE)


def cmd_gen(args) -> int:
    rho, label = _generate(args)
    matrixio.write(args.out, rho, label)
    return 0


def cmd_reduce(args) -> int:
    rho = _load_state(args.input)
    try:
        sigma = reduce(rho, args.kind, tol=FILE_TOL)
    except LemmaViolation as exc:
        raise CliError(str(exc), EXIT_INVALID) from None
    matrixio.write(args.out, sigma, f"{args.kind.cli_name} reduction")
    return 0


def cmd_check(args) -> int:
    rho = _load_state(args.input)
    try:
        report = entanglement_criterion(rho, args.tol, validate_tol=FILE_TOL)
    except (InvalidInput, LemmaViolation) as exc:
        raise CliError(str(exc), EXIT_INVALID) from None
    if args.json:
        print(json.dumps(report.to_dict(), sort_keys=True, indent=2))
    else:
        print(f"{'kind':<6}{'min PT eigenvalue':>24}  witness")
        for kind, res in report.per_reduction.items():
            mark = "*" if kind in report.witnesses else ""
            print(f"{kind.cli_name:<6}{res.min_pt_eigenvalue:>24.16g}  {mark}")
        if report.entangled:
            names = ",".join(k.cli_name for k in report.witnesses)
            print(f"ENTANGLED (witnesses: {names})")
        else:
            print("INCONCLUSIVE")
    return EXIT_ENTANGLED if report.entangled else EXIT_INCONCLUSIVE


def cmd_verify(args) -> int:
    results = verify.run_all(n_seeds=args.seeds)
    stream = sys.stderr if args.json else sys.stdout
    for r in results:
        print(r.line(), file=stream)
    summary = verify.summarize(results)
    if args.json:
        print(json.dumps(summary, sort_keys=True, indent=2))
    else:
        print(f"{summary['passed']}/{summary['total']} checks passed")
    return 0 if summary["all_passed"] else 1


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tripartite-ppt",
        description="Six-reduction PPT entanglement test for three-qubit density matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a state from one of the built-in families")
    fams = gen.add_subparsers(dest="family", required=True)
    out_opt = argparse.ArgumentParser(add_help=False)
    out_opt.add_argument("--out", default="-", help="output path (default: stdout)")
    fams.add_parser("ghz", parents=[out_opt])
    p = fams.add_parser("werner", parents=[out_opt])
    p.add_argument("--x", type=float, required=True)
    p = fams.add_parser("embed", parents=[out_opt])
    p.add_argument("--slot", type=int, required=True, choices=range(1, 7))
    p.add_argument("--input", required=True, help="4x4 matrix file, or - for stdin")
    p = fams.add_parser("molecule", parents=[out_opt])
    p.add_argument("--p-ab", type=float, required=True)
    p.add_argument("--p-bc", type=float, required=True)
    p.add_argument("--p-ac", type=float, required=True)
    fams.add_parser("upb", parents=[out_opt])
    p = fams.add_parser("random", parents=[out_opt])
    p.add_argument("--seed", type=_nonneg_int, required=True)
    p = fams.add_parser("separable", parents=[out_opt])
    p.add_argument("--seed", type=_nonneg_int, required=True)
    p.add_argument("--k", type=int, required=True)
    gen.set_defaults(func=cmd_gen)

    red = sub.add_parser("reduce", help="compute one of the six two-qubit reductions")
    red.add_argument("input", help="8x8 matrix file, or - for stdin")
    red.add_argument("--kind", type=_kind, required=True, help="ab, ac, bc, a-bc, b-ca or c-ab")
    red.add_argument("--out", default="-")
    red.set_defaults(func=cmd_reduce)

    chk = sub.add_parser("check", help="run the entanglement criterion")
    chk.add_argument("input", help="8x8 matrix file, or - for stdin")
    chk.add_argument("--tol", type=float, default=DEFAULT_TOL)
    chk.add_argument("--json", action="store_true")
    chk.set_defaults(func=cmd_check)

    ver = sub.add_parser("verify", help="run the verification suite")
    ver.add_argument("--seeds", type=_nonneg_int, default=1000)
    ver.add_argument("--json", action="store_true")
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"tripartite-ppt: error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
