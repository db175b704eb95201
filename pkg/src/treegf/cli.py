"""``treegf`` command line.

Exit status: 0 on success, 2 on bad input or flags, 3 when a verification
check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import checks, extremal
from .errors import TreeGFError
from .genfunc import (
    WeightMode,
    apply_mode,
    pair_gf,
    pair_profile,
    rooted_gf,
    rooted_profile,
    size_profile,
    subtree_count,
    total_gf,
)
from .ring import Poly2
from .treefile import count_to_json, format_tree_file, parse_tree_file, poly_to_json

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 2, 3


class UsageError(Exception):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(args, mode: WeightMode):
    return parse_tree_file(_read(args.file), mode)


def _emit(obj, fmt: str, text: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(obj) + "\n")
    else:
        sys.stdout.write(text + "\n")


def _emit_value(value, fmt: str) -> None:
    _emit(poly_to_json(value), fmt, str(value if isinstance(value, Poly2) else Poly2.const(value)))


# -- library commands ------------------------------------------------------


def cmd_count(args) -> int:
    tree = _load(args, WeightMode.UNIT)
    value = subtree_count(tree)
    _emit(count_to_json(value), args.format, str(value))
    return EXIT_OK


def cmd_gf(args) -> int:
    mode = WeightMode(args.vars)
    tree = _load(args, mode)
    _emit_value(total_gf(apply_mode(tree, mode)), args.format)
    return EXIT_OK


def cmd_rooted(args) -> int:
    mode = WeightMode(args.vars)
    tree = _load(args, mode)
    _emit_value(rooted_gf(apply_mode(tree, mode), args.vertex), args.format)
    return EXIT_OK


def cmd_pair(args) -> int:
    mode = WeightMode(args.vars)
    tree = _load(args, mode)
    _emit_value(pair_gf(apply_mode(tree, mode), args.u, args.v), args.format)
    return EXIT_OK


def cmd_profile(args) -> int:
    tree = _load(args, WeightMode.UNIT)
    if args.vertex is not None and (args.u is not None or args.v is not None):
        raise UsageError("give either --vertex or --u/--v, not both")
    if (args.u is None) != (args.v is None):
        raise UsageError("--u and --v go together")
    if args.vertex is not None:
        profile = rooted_profile(tree, args.vertex)
    elif args.u is not None:
        profile = pair_profile(tree, args.u, args.v)
    else:
        profile = size_profile(tree)
    obj = {"a": [str(c) for c in profile.a], "b": [str(c) for c in profile.b[1:]]}
    rows = ["k  a(k)  b(k+1)"] + [f"{k}  {c}  {c}" for k, c in enumerate(profile.a)]
    _emit(obj, args.format, "\n".join(rows))
    return EXIT_OK


# -- families and transformations ------------------------------------------


def cmd_family(args) -> int:
    spec = extremal.FamilySpec(
        kind=extremal.FamilyKind(args.kind),
        n=args.n,
        d=args.d,
        delta=args.delta,
        i=args.i,
        ks=args.ks or (),
        legs=args.legs or (() if args.s is None or args.t is None else (1, args.s, args.t)),
    )
    sys.stdout.write(format_tree_file(extremal.make_family(spec)))
    return EXIT_OK


def cmd_transform(args) -> int:
    if args.phi == 3:
        if args.d is None or args.ks is None:
            raise UsageError("--phi 3 needs --d, --i and --ks")
        report = extremal.phi3(args.d, args.i, args.ks)
    else:
        tree = _load(args, WeightMode.UNIT)
        if args.u is None:
            raise UsageError(f"--phi {args.phi} needs --u")
        if args.phi in (1, 2):
            if not args.branch:
                raise UsageError(f"--phi {args.phi} needs --branch")
            fn = extremal.phi1 if args.phi == 1 else extremal.phi2
            report = fn(tree, args.u, args.branch)
        else:
            if args.leg1 is None or args.leg2 is None:
                raise UsageError("--phi 4 needs --leg1 and --leg2")
            report = extremal.phi4(tree, args.u, args.leg1, args.leg2)
    sys.stdout.write(format_tree_file(report.after))
    sys.stdout.write(f"# report: {json.dumps(report.to_json())}\n")
    return EXIT_OK


# -- verification ----------------------------------------------------------

_CHECKS: dict[str, Callable] = {
    "oracle": lambda a: checks.verify_oracle(a.n),
    "confluence": lambda a: checks.verify_confluence(a.n),
    "closedforms": lambda a: checks.verify_closed_forms(a.n),
    "theorem11": lambda a: extremal.verify_theorem_1_1(a.n),
    "theorem36": lambda a: extremal.verify_theorem_3_6(a.n, a.delta),
    "theorem37": lambda a: extremal.verify_theorem_3_7(a.n, a.d),
    "cor39": lambda a: extremal.verify_cor_3_9(a.n),
}


def cmd_verify(args) -> int:
    verdict = _CHECKS[args.check](args)
    info = verdict.to_json()
    text = f"{info['check']} n={info['n']} trees_examined={info['trees_examined']} result={info['result']}"
    _emit(info, args.format, text)
    return EXIT_OK if verdict else EXIT_FAILED


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="treegf", description="Subtree generating functions of weighted trees.")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, fn, help_text, file=True, fmt=True):
        p = sub.add_parser(name, help=help_text)
        if file:
            p.add_argument("file", nargs="?", default="-", help="tree file ('-' or omitted: stdin)")
        if fmt:
            p.add_argument("--format", choices=("json", "text"), default="json")
        p.set_defaults(func=fn)
        return p

    vars_choices = [m.value for m in WeightMode]
    command("count", cmd_count, "number of subtrees")
    p = command("gf", cmd_gf, "subtree generating function")
    p.add_argument("--vars", choices=vars_choices, default="both")
    p = command("rooted", cmd_rooted, "generating function of subtrees through a vertex")
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--vars", choices=vars_choices, default="both")
    p = command("pair", cmd_pair, "generating function of subtrees through two vertices")
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--vars", choices=vars_choices, default="both")
    p = command("profile", cmd_profile, "subtree counts by size")
    p.add_argument("--vertex", type=int)
    p.add_argument("--u", type=int)
    p.add_argument("--v", type=int)

    p = command("family", cmd_family, "emit an extremal-family tree file", file=False, fmt=False)
    p.add_argument("--kind", choices=[k.value for k in extremal.FamilyKind], required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--i", type=int, default=1, help="caterpillar: index of the first leaf group")
    p.add_argument("--ks", type=_int_list, help="caterpillar: leaf counts k_i,...,k_d")
    p.add_argument("--legs", type=_int_list, help="spider: leg lengths")
    p.add_argument("--s", type=int, help="spider: with --t, legs (1, s, t)")
    p.add_argument("--t", type=int)

    p = command("transform", cmd_transform, "apply a count-monotone transformation", fmt=False)
    p.add_argument("--phi", type=int, choices=(1, 2, 3, 4), required=True)
    p.add_argument("--u", type=int)
    p.add_argument("--branch", type=_int_list, help="phi 1/2: neighbour(s) of u whose branches move")
    p.add_argument("--leg1", type=int, help="phi 4: leaf ending the first leg")
    p.add_argument("--leg2", type=int, help="phi 4: leaf ending the second leg")
    p.add_argument("--d", type=int)
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--ks", type=_int_list)

    p = command("verify", cmd_verify, "run a verification suite", file=False)
    p.add_argument("--check", choices=sorted(_CHECKS), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--delta", type=int)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (TreeGFError, UsageError, OSError) as exc:
        sys.stderr.write(f"treegf: error: {exc}\n")
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())
