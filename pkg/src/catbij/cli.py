"""Command-line interface.

Subcommands:

- ``map BIJECTION INPUT``      apply one bijection, print image and stats
- ``poly WHICH N``             print a polynomial (text or JSON)
- ``verify SUITE [N_MAX]``     run a check suite, print a PASS/FAIL table
- ``enumerate KIND N``         stream objects with their statistics

Exit codes: 0 success, 1 verification failure, 2 parse error or bad
arguments, 3 pattern precondition violation, 4 enumeration ceiling.
All regular output goes to stdout, diagnostics to stderr; identical
invocations produce byte-identical output.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys

from . import bijections, dyck, permutations, polynomials, tableaux, verification
from .errors import CeilingExceeded, PatternViolation

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_PATTERN = 3
EXIT_CEILING = 4

# name -> (input kind, function); "perm"/"path" say how to parse the input
_BIJECTIONS = {
    "phi": ("perm", lambda p: bijections.phi(p)),
    "phi-inv": ("path", lambda D: bijections.phi_inv(D)),
    "psi-perm": ("perm", lambda p: bijections.psi_perm(p)),
    "psi-path": ("path", lambda D: dyck.valley_complement(D)),
    "rho": ("perm", lambda p: permutations.reverse(p)),
    "inverse": ("perm", lambda p: permutations.inverse(p)),
    "kappa": ("perm", lambda p: bijections.kappa(p)),
    "beta": ("perm", lambda p: bijections.beta(p)),
    "trio": ("perm", lambda p: bijections.trio_132_213(p)),
    "j": ("perm", lambda p: tableaux.j_involution(p)),
}


def _perm_stats_line(p: permutations.Permutation) -> str:
    s = permutations.perm_stats(p)
    return f"des={s.des} maj={s.maj} imaj={s.imaj}"

def _path_stats_line(D: dyck.DyckPath) -> str:
    s = dyck.path_stats(D)
    return (
        f"maj={s.maj} maj0={s.maj0} maj1={s.maj1} "
        f"area={dyck.area(D)} bounce={dyck.bounce(D)}"
    )


def _cmd_map(args) -> int:
    try:
        kind, func = _BIJECTIONS[args.bijection]
    except KeyError:
        print(f"unknown bijection {args.bijection!r}; choose from: "
              + ", ".join(_BIJECTIONS), file=sys.stderr)
        return EXIT_PARSE
    if kind == "perm":
        source = permutations.parse_permutation(args.input)
    else:
        source = dyck.parse_path(args.input)
    image = func(source)
    print(image)
    if isinstance(image, dyck.DyckPath):
        print(_path_stats_line(image))
    else:
        print(_perm_stats_line(image))
    return EXIT_OK


def _cmd_poly(args) -> int:
    which = args.which
    if which == "a":
        poly = polynomials.a_poly(args.n, max_n=args.max_n)
    elif which == "cat":
        poly = polynomials.cat_qt(args.n, max_n=args.max_n)
    elif which == "macmahon":
        poly = polynomials.macmahon_q_catalan(args.n, max_n=args.max_n)
    elif which.startswith("tristat:"):
        parts = which.split(":")
        if len(parts) != 3:
            print("tristat selector is tristat:<pattern>:<orientation>", file=sys.stderr)
            return EXIT_PARSE
        poly = polynomials.tristat_gf(
            args.n, int(parts[1]), parts[2], max_n=args.max_n
        )
    else:
        print(f"unknown polynomial {which!r}; choose a, cat, macmahon, "
              "or tristat:<pattern>:<orientation>", file=sys.stderr)
        return EXIT_PARSE
    print(poly.to_json() if args.format == "json" else str(poly))
    return EXIT_OK


def _cmd_verify(args) -> int:
    checks = verification.run_suite(args.suite, n_max=args.n_max, max_n=args.max_n)
    failed = 0
    for check in checks:
        status = "PASS" if check.passed else "FAIL"
        line = f"{status}  {check.name}"
        if check.detail:
            line += f"  [{check.detail}]"
        print(line)
        failed += not check.passed
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAILED


def _cmd_enumerate(args) -> int:
    kind = args.kind
    if kind == "dyck":
        rows = (
            (str(D),) + _path_row(D)
            for D in dyck.enumerate_dyck(args.n, max_n=args.max_n)
        )
        header = ("word", "maj", "maj0", "maj1", "area", "bounce")
    elif kind.startswith("avoiders:"):
        pattern = kind.split(":", 1)[1]
        rows = (
            (str(p),) + _perm_row(p)
            for p in permutations.enumerate_avoiders(
                args.n, int(pattern), max_n=args.max_n
            )
        )
        header = ("word", "des", "maj", "imaj", "inv")
    else:
        print(f"unknown kind {kind!r}; use dyck or avoiders:<pattern>", file=sys.stderr)
        return EXIT_PARSE

    if args.format == "lines":
        for row in rows:
            stats = " ".join(f"{k}={v}" for k, v in zip(header[1:], row[1:]))
            print(f"{row[0]}  {stats}")
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    else:
        print(json.dumps([dict(zip(header, row)) for row in rows]))
    return EXIT_OK


def _perm_row(p: permutations.Permutation) -> tuple[int, ...]:
    s = permutations.perm_stats(p)
    return (s.des, s.maj, s.imaj, s.inv)


def _path_row(D: dyck.DyckPath) -> tuple[int, ...]:
    s = dyck.path_stats(D)
    return (s.maj, s.maj0, s.maj1, dyck.area(D), dyck.bounce(D))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catbij",
        description="Bijections and statistics on Catalan objects.",
    )
    parser.add_argument(
        "--max-n",
        type=int,
        default=permutations.DEFAULT_MAX_N,
        help="enumeration ceiling (default %(default)s)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_map = sub.add_parser("map", help="apply a bijection to one object")
    p_map.add_argument("bijection", help=", ".join(_BIJECTIONS))
    p_map.add_argument("input", help="permutation like [2,1,3] or path like 010011")
    p_map.set_defaults(func=_cmd_map)

    p_poly = sub.add_parser("poly", help="print a polynomial")
    p_poly.add_argument("which", help="a, cat, macmahon, or tristat:<pattern>:<orientation>")
    p_poly.add_argument("n", type=int)
    p_poly.add_argument("--format", choices=("text", "json"), default="text")
    p_poly.set_defaults(func=_cmd_poly)

    p_verify = sub.add_parser("verify", help="run a check suite")
    p_verify.add_argument("suite", help=", ".join([*verification.SUITES, "all"]))
    p_verify.add_argument("n_max", type=int, nargs="?", default=None,
                          help="size bar (default: per-suite)")
    p_verify.set_defaults(func=_cmd_verify)

    p_enum = sub.add_parser("enumerate", help="stream objects with statistics")
    p_enum.add_argument("kind", help="dyck or avoiders:<pattern>")
    p_enum.add_argument("n", type=int)
    p_enum.add_argument("--format", choices=("lines", "json", "csv"), default="lines")
    p_enum.set_defaults(func=_cmd_enumerate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except PatternViolation as exc:
        print(f"pattern violation: {exc}", file=sys.stderr)
        return EXIT_PATTERN
    except CeilingExceeded as exc:
        print(f"ceiling: {exc}; raise with --max-n", file=sys.stderr)
        return EXIT_CEILING
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
