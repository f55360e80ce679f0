"""Command-line interface.

Subcommands: classify, power-reduced, admissible-reduced, prop-mt,
growth, w0, verify-all.  Groups are preset names or JSON files
({"n": ..., "m": [[...]]}, 0 encoding an infinite label).

Exit codes: 0 all checks passed; 1 a verified property was falsified;
2 a hypothesis/precondition was violated; 3 malformed input.
"""

from __future__ import annotations

import argparse
import sys

from . import presets, suites
from .errors import CoxeterInputError, PreconditionError
from .report import VerificationReport

EXIT_PASS = 0
EXIT_FALSIFIED = 1
EXIT_PRECONDITION = 2
EXIT_INPUT = 3


def _parse_word(text: str) -> tuple:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError:
        raise CoxeterInputError(f"--cox-word must be a comma list of integers, got {text!r}") from None


def _add_common(parser: argparse.ArgumentParser, *, group_required: bool = True) -> None:
    parser.add_argument("--group", required=group_required,
                        help="preset name or path to a JSON group file")
    parser.add_argument("--json", metavar="PATH", default=None,
                        help="also write the report as a JSON document")
    parser.add_argument("--figures", metavar="DIR", default=None,
                        help="write figures and a CSV of checks into DIR")
    parser.add_argument("--serial", action="store_true",
                        help="run single-threaded (execution is always serial; "
                             "this flag just makes it explicit)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxverify",
        description="Exact verification suites for Coxeter group word combinatorics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classification, irreducibility, diameter")
    _add_common(p)

    p = sub.add_parser("power-reduced",
                       help="repeated Coxeter words stay reduced (infinite groups)")
    _add_common(p)
    p.add_argument("--cox-word", default=None, help="comma list, e.g. 1,2,3")
    p.add_argument("--k-max", type=int, default=20)
    p.add_argument("--negative-control", action="store_true",
                   help="on a finite group, report the first failing power instead")

    p = sub.add_parser("admissible-reduced",
                       help="every playable sink sequence is a reduced word")
    _add_common(p)
    p.add_argument("--cox-word", default=None)
    p.add_argument("--n-max", type=int, default=9)

    p = sub.add_parser("prop-mt",
                       help="minimal playable sequences per Demazure class are reduced")
    _add_common(p)
    p.add_argument("--cox-word", default=None)
    p.add_argument("--n-max", type=int, default=8)

    p = sub.add_parser("growth",
                       help="iterated degenerate-Hecke blocks grow strictly in length")
    _add_common(p)
    p.add_argument("--cox-word", default=None)
    p.add_argument("--k-max", type=int, default=12)
    p.add_argument("--negative-control", action="store_true",
                   help="on a finite group, check stabilization at the longest element")

    p = sub.add_parser("w0",
                       help="find a playable sequence reaching the longest element")
    _add_common(p)
    p.add_argument("--cox-word", default=None)

    p = sub.add_parser("verify-all", help="run every suite over the catalog or one group")
    _add_common(p, group_required=False)
    p.add_argument("--cox-word", default=None,
                   help="ignored by verify-all (it uses the canonical word per group)")
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("--words", type=int, default=None,
                   help="random words sampled per group in the substrate check")
    p.add_argument("--seed", type=int, default=suites.DEFAULT_SEED)
    return parser


def _run(args) -> VerificationReport:
    if args.command == "verify-all":
        if args.group is not None:
            groups = [presets.resolve_group(args.group)]
        else:
            groups = [(p.name, presets.preset_context(p.name)) for p in presets.PRESETS]
        return suites.verify_all_suite(
            groups,
            k_max=args.k_max,
            n_max=args.n_max,
            depth=args.depth,
            words=args.words,
            seed=args.seed,
        )
    group, ctx = presets.resolve_group(args.group)
    word = _parse_word(args.cox_word) if getattr(args, "cox_word", None) else \
        suites.default_coxeter_word(ctx)
    if args.command == "classify":
        return suites.classify_suite(group, ctx)
    if args.command == "power-reduced":
        return suites.power_reduced_suite(group, ctx, word, args.k_max,
                                          negative_control=args.negative_control)
    if args.command == "admissible-reduced":
        return suites.admissible_reduced_suite(group, ctx, word, args.n_max)
    if args.command == "prop-mt":
        return suites.prop_mt_suite(group, ctx, word, args.n_max)
    if args.command == "growth":
        return suites.growth_suite(group, ctx, word, args.k_max,
                                   negative_control=args.negative_control)
    if args.command == "w0":
        return suites.w0_suite(group, ctx, word)
    raise CoxeterInputError(f"unknown command {args.command!r}")  # pragma: no cover


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rep = _run(args)
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except CoxeterInputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(rep.render_table())
    if args.json:
        rep.write_json(args.json)
    if args.figures:
        from . import figures  # deferred: matplotlib import is slow

        for path in figures.render_report_figures(rep, args.figures):
            print(f"wrote {path}")
    if not rep.passed:
        print("VERIFICATION FAILURE: a checked property was falsified on exact data; "
              "see the failing checks above.", file=sys.stderr)
        return EXIT_FALSIFIED
    return EXIT_PASS


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
