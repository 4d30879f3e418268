"""
Command-line front end: ``latmed build|check|median|c1check|verify``.

Results go to stdout, diagnostics and logs to stderr. Exit status is 0 when
the checked property holds, 1 when it fails and 2 on usage, input or
construction errors.
"""
import argparse
import json
import logging
import sys
from typing import List, Optional

from latmed import constructions, harness, lat, settings
from latmed.breadth import breadth
from latmed.exceptions import CapExceeded, LatmedException
from latmed.medians import check_c1_property, median_set
from latmed.models import FAMILIES, ConstructionSpec, Lattice, Profile
from latmed.properties import (
    is_distributive,
    is_graded,
    is_lattice,
    is_lower_semimodular,
    is_modular,
    is_semimodular,
)


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2

CHECKS = {
    "graded": is_graded,
    "semimodular": is_semimodular,
    "lower-semimodular": is_lower_semimodular,
    "modular": is_modular,
    "distributive": is_distributive,
}
PROPERTIES = ("lattice",) + tuple(CHECKS) + ("breadth",)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _out(text: str):
    sys.stdout.write(text)


def _summary(lattice: Lattice, spec: ConstructionSpec) -> List[str]:
    lines = [
        "size {n}".format(n=lattice.n),
        "length {length}".format(length=lattice.length()),
        "breadth {b}".format(b=breadth(lattice)),
        "semimodular {s}".format(s=_yes(is_semimodular(lattice))),
    ]
    if spec.family in ("lnk", "gk"):
        if spec.family == "lnk":
            construction = constructions.build_lnk(spec.n, spec.k)
        else:
            construction = constructions.build_lnk(4, 3)
        lines.extend([
            "ambient-e {e}".format(e=construction.e),
            "ambient-f {f}".format(f=construction.f),
            "z {z}".format(z=construction.z),
            "xi {xi}".format(xi=construction.xi),
        ])
    return lines


def cmd_build(args) -> int:
    spec = ConstructionSpec(
        args.family,
        n=args.n,
        k=args.k,
        e=args.e,
        f=args.f,
        inputs=[lat.parse(path) for path in args.input],
    )
    lattice = constructions.build(spec)
    summary = _summary(lattice, spec)
    if args.out is None:
        _out(lat.dumps(lattice, summary))
    else:
        lat.convert(args.out, lattice)
        _out("\n".join(summary) + "\n")
    return EXIT_OK


def cmd_check(args) -> int:
    if args.property == "lattice":
        n, name, covers = lat.read(lat.read_text(args.file))
        holds = is_lattice(n, covers)
        _out("lattice {v}\n".format(v=_yes(holds)))
        return EXIT_OK if holds else EXIT_FAILED
    lattice = lat.parse(args.file)
    if args.property == "breadth":
        _out("breadth {b}\n".format(b=breadth(lattice)))
        return EXIT_OK
    holds = CHECKS[args.property](lattice)
    _out("{p} {v}\n".format(p=args.property, v=_yes(holds)))
    return EXIT_OK if holds else EXIT_FAILED


def cmd_median(args) -> int:
    lattice = lat.parse(args.file)
    xi = Profile.parse(args.profile, lattice.n)
    if args.report:
        report = harness.counterexample_report(
            lattice, xi, constructions.match_lnk(lattice)
        )
    else:
        report = median_set(lattice, xi)
    _out(report.to_text())
    return EXIT_FAILED if report.has_violation else EXIT_OK


def cmd_c1check(args) -> int:
    lattice = lat.parse(args.file)
    report = check_c1_property(lattice, args.max_k)
    if args.json:
        _out(json.dumps(report.to_dict(), sort_keys=True) + "\n")
    else:
        _out(report.to_text())
    return EXIT_FAILED if report.has_violation else EXIT_OK


def _verify_caps(args):
    if args.extended:
        max_size, max_k = settings.EXTENDED_MAX_SIZE, settings.EXTENDED_MAX_K
    else:
        max_size, max_k = settings.DEFAULT_MAX_SIZE, settings.DEFAULT_MAX_K
    size = args.max_size
    k = settings.DEFAULT_MAX_K if args.max_k is None else args.max_k
    if (size is not None and size > max_size) or k > max_k:
        raise CapExceeded(
            "max-size {s} and max-k {k} exceed the caps {cs} and {ck}; "
            "use --extended for larger runs".format(
                s=size or "default", k=k, cs=max_size, ck=max_k
            )
        )
    return size, k


def cmd_verify(args) -> int:
    size, k = _verify_caps(args)
    result = harness.verify(args.suite, size, k)
    if args.json:
        _out(json.dumps(result.to_dict(), sort_keys=True) + "\n")
    else:
        _out(result.to_text())
    return EXIT_FAILED if result.failed else EXIT_OK


def _positive(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected an integer, got {v!r}".format(v=value)
        )
    if number < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return number


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latmed",
        description="Finite lattices, medians and the c1-median property.",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0,
        help="log progress to stderr (-vv for debug output)",
    )
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    build = commands.add_parser("build", help="build a lattice family")
    build.add_argument("family", choices=FAMILIES)
    build.add_argument("--n", type=int)
    build.add_argument("--k", type=int)
    build.add_argument("--e", type=int)
    build.add_argument("--f", type=int)
    build.add_argument(
        "--input", action="append", default=[], metavar="FILE",
        help="operand lattice file (repeatable)",
    )
    build.add_argument("--o", "--out", dest="out", metavar="PATH")
    build.set_defaults(handler=cmd_build)

    check = commands.add_parser("check", help="check an order property")
    check.add_argument("file")
    check.add_argument("property", choices=PROPERTIES)
    check.set_defaults(handler=cmd_check)

    median = commands.add_parser("median", help="median set of a profile")
    median.add_argument("file")
    median.add_argument("--profile", required=True)
    median.add_argument("--report", action="store_true")
    median.set_defaults(handler=cmd_median)

    c1check = commands.add_parser(
        "c1check", help="bounded c1-median property check"
    )
    c1check.add_argument("file")
    c1check.add_argument(
        "--max-k", type=_positive, default=settings.DEFAULT_MAX_K
    )
    c1check.add_argument("--json", action="store_true")
    c1check.set_defaults(handler=cmd_c1check)

    verify = commands.add_parser("verify", help="run a property campaign")
    verify.add_argument("--max-size", type=_positive)
    verify.add_argument("--max-k", type=_positive)
    verify.add_argument(
        "--suite", choices=harness.SUITES, default="theorem-a"
    )
    verify.add_argument("--extended", action="store_true")
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(handler=cmd_verify)
    return parser


def _configure_logging(verbosity: int):
    level = settings.log_level(verbosity)
    logging.basicConfig(
        stream=sys.stderr,
        level=level,
        format="%(levelname)s %(name)s: %(message)s",
    )
    logging.getLogger("latmed").setLevel(level)


def main(argv: Optional[List[str]] = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    try:
        _configure_logging(args.verbose)
        return args.handler(args)
    except (LatmedException, OSError) as exc:
        logger.debug("command failed", exc_info=True)
        sys.stderr.write("error: {e}\n".format(e=exc))
        return EXIT_ERROR


def run():
    sys.exit(main())
