"""Command-line interface.

Exit codes: 0 ok, 2 parse/validation failure, 3 size budget exceeded,
4 not completely simple, 5 verification failed.  Reports go to stdout,
diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import zoo
from .bicyclic import no_primitive_witness
from .core import (DEFAULT_MAX_ORDER, Element, FiniteSemigroup,
                   idempotent_indices, validate_table)
from .errors import (AssociativityFailure, NotCompletelySimple, SemigroupError,
                     SizeBudgetExceeded)
from .rees import decompose, to_cayley, verify_decomposition
from .serialize import (FormatError, decomposition_to_dict, dumps,
                        parse_decomposition, parse_rees_spec, parse_semigroup,
                        read_json, rees_spec_to_dict, semigroup_to_dict,
                        write_json)
from .structure import (is_simple, maximal_subgroup_order,
                        primitive_idempotent_indices)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_NOT_COMPLETELY_SIMPLE = 4
EXIT_VERIFY_FAILED = 5


class CommandError(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


def _load_semigroup(path, max_order: int) -> FiniteSemigroup:
    S = parse_semigroup(read_json(path))
    if S.order > max_order:
        raise SizeBudgetExceeded(S.order, max_order)
    try:
        return validate_table(S)
    except AssociativityFailure as exc:
        raise FormatError("table", str(exc)) from None


def analyze_report(S: FiniteSemigroup) -> dict:
    E = idempotent_indices(S)
    simple = is_simple(S)
    prim = primitive_idempotent_indices(S)
    return {
        "order": S.order,
        "verified": S.verified,
        "idempotent_count": int(len(E)),
        "idempotents": [int(e) for e in E],
        "is_simple": simple,
        "primitive_idempotents": [int(e) for e in prim],
        "is_completely_simple": bool(simple and len(prim) > 0),
        "maximal_subgroup_orders": [maximal_subgroup_order(Element(S, int(e))) for e in E],
    }


def cmd_analyze(args) -> int:
    S = _load_semigroup(args.input, args.max_order)
    sys.stdout.write(dumps(analyze_report(S)))
    return EXIT_OK


def cmd_construct(args) -> int:
    R = parse_rees_spec(read_json(args.input))
    S, _ = to_cayley(R, max_order=args.max_order)
    write_json(args.output, semigroup_to_dict(S))
    return EXIT_OK


def cmd_decompose(args) -> int:
    S = _load_semigroup(args.input, args.max_order)
    try:
        D = decompose(S)
    except NotCompletelySimple as exc:
        raise CommandError(EXIT_NOT_COMPLETELY_SIMPLE,
                           f"{exc}; witness: {json.dumps(exc.witness())}") from None
    write_json(args.output, decomposition_to_dict(D))
    return EXIT_OK


def cmd_verify(args) -> int:
    S = _load_semigroup(args.source, args.max_order)
    D = parse_decomposition(read_json(args.decomposition), S)
    report = verify_decomposition(D)
    sys.stdout.write(dumps(report.as_dict()))
    if not report.passed:
        failed = [k for k, v in report.as_dict().items() if k != "passed" and not v]
        raise CommandError(EXIT_VERIFY_FAILED, f"verification failed: {', '.join(failed)}")
    return EXIT_OK


def cmd_zoo(args) -> int:
    kind = args.kind.replace("-", "_")
    if kind == "random_rees":
        if args.params:
            raise FormatError("params", "random-rees takes options, not positional parameters")
        R = zoo.random_rees(args.seed, args.max_group, args.max_x, args.max_y)
        write_json(args.output, rees_spec_to_dict(R))
        return EXIT_OK
    params = []
    for p in args.params:
        try:
            params.append(int(p))
        except ValueError:
            raise FormatError("params", f"expected integer parameters, got {p!r}") from None
    S = zoo.make_standard(kind, *params, max_order=args.max_order)
    write_json(args.output, semigroup_to_dict(S))
    return EXIT_OK


def cmd_bicyclic(args) -> int:
    N = args.check_primitive_up_to
    if N < 1:
        raise FormatError("--check-primitive-up-to", f"must be >= 1, got {N}")
    chain = no_primitive_witness(N)
    strict = int(chain.strict.sum())
    first_up, first_lo = chain[0]
    last_up, last_lo = chain[len(chain) - 1]
    summary = {
        "N": N,
        "pairs": len(chain),
        "strict_pairs": strict,
        "all_strict": chain.all_strict,
        "first_pair": [[first_up.a, first_up.b], [first_lo.a, first_lo.b]],
        "last_pair": [[last_up.a, last_up.b], [last_lo.a, last_lo.b]],
        "primitive_idempotent_found": not chain.all_strict,
    }
    sys.stdout.write(dumps(summary))
    return EXIT_OK if chain.all_strict else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-order", type=int, default=argparse.SUPPRESS,
                        help=f"size budget for built or loaded semigroups (default {DEFAULT_MAX_ORDER})")

    parser = argparse.ArgumentParser(
        prog="paragroup", parents=[common],
        description="Finite semigroups, Rees matrix semigroups and the Rees-Suschkewitsch decomposition.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="structure report for a Cayley table")
    p.add_argument("input")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", parents=[common], help="Cayley table of a Rees specification")
    p.add_argument("input")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("decompose", parents=[common], help="Rees-Suschkewitsch decomposition")
    p.add_argument("input")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", parents=[common], help="check a decomposition against its source")
    p.add_argument("source")
    p.add_argument("decomposition")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("zoo", parents=[common],
                       help=f"write a standard semigroup ({', '.join(zoo.STANDARD_KINDS)}) "
                            "or a random Rees specification (random-rees)")
    p.add_argument("kind")
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-group", type=int, default=8)
    p.add_argument("--max-x", type=int, default=4)
    p.add_argument("--max-y", type=int, default=4)
    p.set_defaults(func=cmd_zoo)

    p = sub.add_parser("bicyclic", parents=[common], help="bicyclic monoid idempotent chain check")
    p.add_argument("--check-primitive-up-to", type=int, required=True, metavar="N")
    p.set_defaults(func=cmd_bicyclic)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "max_order"):
        args.max_order = DEFAULT_MAX_ORDER
    try:
        return args.func(args)
    except CommandError as exc:
        print(f"paragroup {args.command}: {exc}", file=sys.stderr)
        return exc.code
    except SizeBudgetExceeded as exc:
        print(f"paragroup {args.command}: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NotCompletelySimple as exc:
        print(f"paragroup {args.command}: {exc}", file=sys.stderr)
        return EXIT_NOT_COMPLETELY_SIMPLE
    except SemigroupError as exc:
        print(f"paragroup {args.command}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
