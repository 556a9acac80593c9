"""Command-line interface.

Single-shot subcommands over the library: insertion and its inverse,
annealing to the orbit partition, special-shape projection, cycle listing
and moves, wall-crossing operators, tableau counting, and the verification
suites.  Output is canonical JSON (sorted keys, one trailing newline) or a
human-readable ASCII rendering.

Exit codes: 0 success, 1 domain or verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cycles import (
    Coloring,
    all_cycles,
    coloring_from_name,
    cycle_of,
    move_through_extended,
    move_through_set,
)
from .enumeration import DEFAULT_SEED, SUITE_NAMES, count_sdt, verify_suite
from .insertion import (
    pair_deserialize,
    pair_to_json_dict,
    rs,
    rs_inverse,
)
from .operators import (
    OperatorUndefinedError,
    equal_length_domain,
    type_d_domain,
    unequal_length_domain,
    wall_cross_equal_length,
    wall_cross_type_d,
    wall_cross_unequal_length,
)
from .partitions import format_partition, parse_partition
from .pipeline import orbital_tableau, special_projection
from .signed_perm import format_perm, parse_perm
from .tableau import deserialize, render, to_json_dict

OPERATOR_NAMES = ("equal-length", "unequal-length", "type-d")


def _read_input(raw: str) -> str:
    return sys.stdin.read() if raw == "-" else raw


def _emit(args, doc: dict, ascii_text: str) -> None:
    if args.format == "json":
        print(json.dumps(doc, sort_keys=True))
    else:
        print(ascii_text)


def _pair_ascii(pair) -> str:
    return "left:\n{}\nright:\n{}".format(render(pair.left), render(pair.right))


def _tableau_arg(raw: str, lie_type: str, side: str):
    """A tableau given directly as JSON, or the chosen tableau of rs(w)."""
    text = _read_input(raw).strip()
    if text.startswith("{"):
        return deserialize(text)
    pair = rs(parse_perm(text), lie_type)
    return pair.left if side == "left" else pair.right


def _cycle_doc(cy) -> dict:
    return {
        "labels": list(cy.labels),
        "coloring": cy.coloring.value,
        "open": cy.open,
        "boxed": cy.boxed,
        "hole": list(cy.hole) if cy.hole else None,
        "corner": list(cy.corner) if cy.corner else None,
        "down": cy.down if cy.open else None,
    }


def _cmd_rs(args) -> int:
    pair = rs(parse_perm(_read_input(args.word)), args.type)
    _emit(args, pair_to_json_dict(pair), _pair_ascii(pair))
    return 0


def _cmd_inverse(args) -> int:
    w = rs_inverse(pair_deserialize(_read_input(args.pair)))
    _emit(args, {"word": format_perm(w)}, format_perm(w))
    return 0


def _cmd_orbital(args) -> int:
    tab = _tableau_arg(args.input, args.type, "left")
    result = orbital_tableau(tab)
    doc = {
        "tableau": to_json_dict(result.tableau),
        "orbit": list(result.orbit),
        "trace": [
            {
                "labels": list(step.cycle.labels),
                "coloring": step.coloring.value,
                "shape_before": list(step.shape_before),
                "shape_after": list(step.shape_after),
            }
            for step in result.trace
        ],
    }
    text = "orbit {}\n{}".format(format_partition(result.orbit), render(result.tableau))
    _emit(args, doc, text)
    return 0


def _cmd_special(args) -> int:
    tab = _tableau_arg(args.input, args.type, "right")
    out = special_projection(tab)
    _emit(args, {"tableau": to_json_dict(out)}, render(out))
    return 0


def _cmd_cycles(args) -> int:
    tab = _tableau_arg(args.input, args.type, "left")
    colorings = (
        list(Coloring) if args.coloring == "both" else [coloring_from_name(args.coloring)]
    )
    docs = [_cycle_doc(cy) for col in colorings for cy in all_cycles(tab, col)]
    lines = [
        "{} {} {} {}".format(
            doc["labels"],
            doc["coloring"],
            "open" if doc["open"] else "closed",
            "boxed" if doc["boxed"] else "unboxed",
        )
        for doc in docs
    ]
    _emit(args, {"cycles": docs}, "\n".join(lines))
    return 0


def _cmd_move(args) -> int:
    text = _read_input(args.input).strip()
    labels = [int(part) for part in args.label.split(",")]
    coloring = coloring_from_name(args.coloring)
    doc = json.loads(text)
    if "left" in doc:
        pair = pair_deserialize(text)
        if len(labels) != 1:
            raise ValueError("extended moves take a single label")
        out = move_through_extended(pair, labels[0], coloring)
        _emit(args, pair_to_json_dict(out), _pair_ascii(out))
        return 0
    tab = deserialize(text)
    cycles = {cycle_of(tab, k, coloring) for k in labels}
    moved = move_through_set(tab, cycles)
    _emit(args, to_json_dict(moved), render(moved))
    return 0


def _cmd_op(args) -> int:
    pair = pair_deserialize(_read_input(args.pair))
    if args.name == "equal-length":
        if args.i is None or args.j is None:
            raise ValueError("equal-length needs --i and --j")
        w = rs_inverse(pair)
        report = equal_length_domain(w, args.i, args.j)
        if not report.defined:
            _emit(args, report.to_json_dict(), f"undefined: {report.reason}")
            return 1
        image = wall_cross_equal_length(w, args.i, args.j)
        out = rs(image, pair.left.lie_type)
    else:
        domain, apply = {
            "unequal-length": (unequal_length_domain, wall_cross_unequal_length),
            "type-d": (type_d_domain, wall_cross_type_d),
        }[args.name]
        report = domain(pair)
        if not report.defined:
            _emit(args, report.to_json_dict(), f"undefined: {report.reason}")
            return 1
        out = apply(pair)
    _emit(args, pair_to_json_dict(out), _pair_ascii(out))
    return 0


def _cmd_count(args) -> int:
    shape = parse_partition(_read_input(args.shape))
    value = count_sdt(shape, args.type)
    doc = {"shape": list(shape), "type": args.type, "count": value}
    _emit(args, doc, str(value))
    return 0


def _cmd_verify(args) -> int:
    report = verify_suite(
        args.suite, args.n, args.type, seed=args.seed, sample=args.sample
    )
    text = "{}: {} ({} instances, {} failures)".format(
        report.suite,
        "pass" if report.passed else "FAIL",
        report.instances,
        len(report.failures),
    )
    _emit(args, report.to_json_dict(), text)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dtab", description="domino tableau combinatorics for types B and C"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_type=True):
        p.add_argument("--format", choices=("json", "ascii"), default="json")
        if with_type:
            p.add_argument("--type", choices=("B", "C"), required=True)

    p = sub.add_parser("rs", help="two-tableau insertion of a signed permutation")
    common(p)
    p.add_argument("word", help='signed permutation, e.g. "2 -1" (or - for stdin)')
    p.set_defaults(func=_cmd_rs)

    p = sub.add_parser("inverse", help="signed permutation of a tableau pair")
    common(p, with_type=False)
    p.add_argument("pair", help="pair as JSON (or - for stdin)")
    p.set_defaults(func=_cmd_inverse)

    p = sub.add_parser("orbital", help="anneal to the orbit partition")
    common(p)
    p.add_argument("input", help="signed permutation or tableau JSON")
    p.set_defaults(func=_cmd_orbital)

    p = sub.add_parser("special", help="project onto the special shape")
    common(p)
    p.add_argument("input", help="signed permutation or tableau JSON")
    p.set_defaults(func=_cmd_special)

    p = sub.add_parser("cycles", help="list cycles with classification")
    common(p)
    p.add_argument("input", help="signed permutation or tableau JSON")
    p.add_argument(
        "--coloring", choices=("native", "typeD", "both"), default="both"
    )
    p.set_defaults(func=_cmd_cycles)

    p = sub.add_parser("move", help="move through cycles (pair input: extended)")
    common(p, with_type=False)
    p.add_argument("input", help="tableau or pair JSON (or - for stdin)")
    p.add_argument("--label", required=True, help="label, or comma-separated labels")
    p.add_argument("--coloring", choices=("native", "typeD"), default="native")
    p.set_defaults(func=_cmd_move)

    p = sub.add_parser("op", help="apply a wall-crossing operator to a pair")
    common(p, with_type=False)
    p.add_argument("name", choices=OPERATOR_NAMES)
    p.add_argument("pair", help="pair as JSON (or - for stdin)")
    p.add_argument("--i", type=int, help="first index (equal-length only)")
    p.add_argument("--j", type=int, help="second index (equal-length only)")
    p.set_defaults(func=_cmd_op)

    p = sub.add_parser("count", help="count standard domino tableaux of a shape")
    common(p)
    p.add_argument("shape", help='partition, e.g. "[2,2]"')
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    common(p)
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--sample", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1, help="accepted for compatibility")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OperatorUndefinedError as exc:
        print(json.dumps(exc.report.to_json_dict(), sort_keys=True))
        return 1
    except (ValueError, KeyError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
