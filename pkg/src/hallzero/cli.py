"""Command line front end.

Partitions on the command line use the same grammar as the library:
comma form "3,1,1" or exponent form "(3,1^2)"; quote the parentheses in
a shell.  Every subcommand accepts --json and then emits a single JSON
document carrying the same values as the text output.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 enumeration cap exceeded or interpolation infeasible.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .algebra import H0Element, constant_term, f_map, h0_multiply
from .degeneration import build_poset, leq_deg
from .errors import CapExceededError, InfeasibleError, InterpolationError
from .interpolate import interpolate_hall_poly
from .monoid import generic_extension
from .oracle import SUPPORTED_PRIMES, hall_number
from .partitions import Partition, PartitionParseError, parse_partition
from .verification import run_all

CACHE_ENV_VAR = "HALLZERO_CACHE_DIR"

# The worked product example: factor pairs and, per pair, the targets
# whose constant terms the eliminations of each step pin down.
EXAMPLE_STEPS = (
    ("(1^3)", "(1^2)", ("(1^5)", "(2,1^3)", "(2^2,1)")),
    ("(1^3)", "(2)", ("(3,1^2)", "(2,1^3)")),
    ("(2,1)", "(1^2)", ("(2,1^3)", "(2^2,1)", "(3,1^2)", "(3,2)")),
    ("(2,1)", "(2)", ("(2^2,1)", "(3,2)", "(4,1)", "(3,1^2)")),
)


def _emit(args: argparse.Namespace, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _cmd_conj(args: argparse.Namespace) -> int:
    result = parse_partition(args.partition).conjugate()
    _emit(args, str(result), {"result": str(result)})
    return 0


def _cmd_add(args: argparse.Namespace) -> int:
    result = parse_partition(args.left) + parse_partition(args.right)
    _emit(args, str(result), {"result": str(result)})
    return 0


def _cmd_union(args: argparse.Namespace) -> int:
    result = parse_partition(args.left).union(parse_partition(args.right))
    _emit(args, str(result), {"result": str(result)})
    return 0


def _cmd_genext(args: argparse.Namespace) -> int:
    result = generic_extension(
        parse_partition(args.left), parse_partition(args.right)
    )
    _emit(args, str(result), {"result": str(result)})
    return 0


def _cmd_degle(args: argparse.Namespace) -> int:
    result = leq_deg(parse_partition(args.left), parse_partition(args.right))
    _emit(args, "true" if result else "false", {"result": result})
    return 0


def _cmd_poset(args: argparse.Namespace) -> int:
    cache_dir = args.cache_dir or os.environ.get(CACHE_ENV_VAR)
    poset = build_poset(args.n, cache_dir=cache_dir)
    edges = [(str(a), str(b)) for a, b in poset.hasse_edges()]
    if args.dot:
        with open(args.dot, "w") as handle:
            handle.write(poset.dot())
    lines = [f"weight: {poset.n}", f"partitions: {len(poset)}"]
    lines.extend(str(p) for p in poset.elements)
    lines.append(f"hasse edges: {len(edges)}")
    lines.extend(f"{a} -> {b}" for a, b in edges)
    _emit(
        args,
        "\n".join(lines),
        {
            "weight": poset.n,
            "elements": [str(p) for p in poset.elements],
            "hasse_edges": [list(e) for e in edges],
        },
    )
    return 0


def _cmd_fmap(args: argparse.Namespace) -> int:
    element = f_map(parse_partition(args.partition))
    _emit(args, str(element), {"terms": element.to_json_terms()})
    return 0


def _cmd_h0mul(args: argparse.Namespace) -> int:
    product = h0_multiply(
        H0Element.basis(parse_partition(args.left)),
        H0Element.basis(parse_partition(args.right)),
    )
    _emit(args, str(product), {"terms": product.to_json_terms()})
    return 0


def _cmd_const(args: argparse.Namespace) -> int:
    value = constant_term(
        parse_partition(args.left),
        parse_partition(args.right),
        parse_partition(args.target),
    )
    _emit(args, str(value), {"result": value})
    return 0


def _cmd_hallnum(args: argparse.Namespace) -> int:
    if args.p not in SUPPORTED_PRIMES:
        raise ValueError(f"unsupported prime {args.p}; supported: {SUPPORTED_PRIMES}")
    value = hall_number(
        parse_partition(args.outer),
        parse_partition(args.quotient),
        parse_partition(args.sub),
        args.p,
    )
    _emit(args, str(value), {"result": value})
    return 0


def _cmd_hallpoly(args: argparse.Namespace) -> int:
    try:
        poly = interpolate_hall_poly(
            parse_partition(args.quotient),
            parse_partition(args.sub),
            parse_partition(args.outer),
        )
    except InfeasibleError:
        _emit(args, "infeasible", {"feasible": False})
        return 3
    _emit(
        args,
        str(poly),
        {"feasible": True, "coefficients": list(poly.coeffs)},
    )
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    results = run_all(args.max_weight)
    ok = all(r.passed for r in results)
    if args.json:
        print(
            json.dumps(
                {
                    "ok": ok,
                    "max_weight": args.max_weight,
                    "checks": [
                        {"name": r.name, "passed": r.passed, "detail": r.detail}
                        for r in results
                    ],
                }
            )
        )
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}")
        print("all checks passed" if ok else "verification FAILED")
    return 0 if ok else 1


def _example_data() -> list[dict]:
    steps = []
    for i, (left_text, right_text, targets) in enumerate(EXAMPLE_STEPS, start=1):
        left = parse_partition(left_text)
        right = parse_partition(right_text)
        product = h0_multiply(H0Element.basis(left), H0Element.basis(right))
        steps.append(
            {
                "step": i,
                "left": left_text,
                "right": right_text,
                "generic_extension": str(left + right),
                "product": product.to_json_terms(),
                "constant_terms": [
                    {
                        "target": t,
                        "value": constant_term(left, right, parse_partition(t)),
                    }
                    for t in targets
                ],
            }
        )
    return steps


def _cmd_example(args: argparse.Namespace) -> int:
    steps = _example_data()
    if args.json:
        print(json.dumps({"steps": steps}))
        return 0
    lines = ["constant terms of Hall polynomials at the worked products", ""]
    for step in steps:
        left, right = step["left"], step["right"]
        product = H0Element(
            [(parse_partition(t["partition"]), t["coeff"]) for t in step["product"]]
        )
        lines.append(f"step {step['step']}: u{left} * u{right}")
        lines.append(f"  generic extension: {step['generic_extension']}")
        lines.append(f"  product: {product}")
        for ct in step["constant_terms"]:
            lines.append(
                f"  phi[{left},{right} -> {ct['target']}](0) = {ct['value']}"
            )
        lines.append("")
    print("\n".join(lines).rstrip("\n"))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hallzero",
        description=(
            "Partition monoids, the degeneration order, and exact constant "
            "terms of classical Hall polynomials."
        ),
        epilog=(
            "Partitions are written as \"3,1,1\" or \"(3,1^2)\"; quote the "
            "parentheses in a shell."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit a JSON document")
        p.set_defaults(handler=handler)
        return p

    p = add("conj", _cmd_conj, "conjugate (dual) partition")
    p.add_argument("partition")

    p = add("add", _cmd_add, "componentwise sum of two partitions")
    p.add_argument("left")
    p.add_argument("right")

    p = add("union", _cmd_union, "multiset union of two partitions")
    p.add_argument("left")
    p.add_argument("right")

    p = add("degle", _cmd_degle, "does the first module degenerate to the second")
    p.add_argument("left")
    p.add_argument("right")

    p = add("poset", _cmd_poset, "degeneration poset of a weight, with Hasse edges")
    p.add_argument("n", type=int)
    p.add_argument("--dot", metavar="FILE", help="write a Graphviz file")
    p.add_argument(
        "--cache-dir",
        metavar="DIR",
        help=f"poset disk cache (defaults to ${CACHE_ENV_VAR} when set)",
    )

    p = add("genext", _cmd_genext, "generic extension of two module classes")
    p.add_argument("left")
    p.add_argument("right")

    p = add("fmap", _cmd_fmap, "embedding of a module class into the algebra")
    p.add_argument("partition")

    p = add("h0mul", _cmd_h0mul, "product of two basis symbols, all structure constants")
    p.add_argument("left")
    p.add_argument("right")

    p = add("const", _cmd_const, "constant term of one Hall polynomial")
    p.add_argument("left", help="quotient type")
    p.add_argument("right", help="submodule type")
    p.add_argument("target", help="ambient module type")

    p = add("hallnum", _cmd_hallnum, "submodule count by brute-force enumeration")
    p.add_argument("outer", help="ambient module type")
    p.add_argument("quotient", help="quotient type")
    p.add_argument("sub", help="submodule type")
    p.add_argument("--p", type=int, required=True, help="prime field size")

    p = add("hallpoly", _cmd_hallpoly, "full Hall polynomial by exact interpolation")
    p.add_argument("quotient", help="quotient type")
    p.add_argument("sub", help="submodule type")
    p.add_argument("outer", help="ambient module type")

    p = add("verify", _cmd_verify, "run the cross-check suite")
    p.add_argument(
        "--max-weight",
        type=int,
        default=5,
        help="bound for all checks (default 5; above 5 can take very long)",
    )

    add("example", _cmd_example, "reproduce the worked constant-term example")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except PartitionParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InfeasibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InterpolationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
