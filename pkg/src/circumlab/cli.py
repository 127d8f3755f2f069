"""circumlab command line: verify, enumerate, extremal, certify."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from contextlib import contextmanager
from typing import Iterator, TextIO

from .audit import FILTERS, audit_stream, default_jobs, enumerate_labeled
from .certificate import certificate_to_dict, check_certificate
from .errors import DeltaTooSmall, GraphError, NotTwoConnected, ResourceLimit, TooLarge
from .families import Family, format_table, sharpness_audit
from .graph import emit_graph6, parse_graph6
from .prover import certified_long_cycle

log = logging.getLogger("circumlab")

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


@contextmanager
def _open_output(path: str | None) -> Iterator[TextIO]:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="ascii") as fh:
            yield fh


def _delta_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        return range(int(text), int(text) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B or a single integer, got {text!r}") from None


def _families(text: str) -> tuple[Family, ...]:
    try:
        return tuple(Family(part.strip()) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"families are E1, E2, E3; got {text!r}") from None


def cmd_verify(args: argparse.Namespace) -> int:
    stream = sys.stdin if args.input in (None, "-") else open(args.input, encoding="ascii")
    status = EXIT_OK
    try:
        with _open_output(args.output) as out:
            for item in audit_stream(stream, jobs=args.jobs):
                if item.error is not None:
                    log.error("line %d: %s", item.line, item.error)
                    if args.strict:
                        return EXIT_INPUT
                    out.write(item.to_json() + "\n")
                    continue
                out.write(item.to_json() + "\n")
                if item.record.violations:
                    print(f"counterexample {item.record.graph6} {','.join(item.record.violations)}",
                          file=sys.stderr)
                    status = EXIT_VIOLATION
    finally:
        if stream is not sys.stdin:
            stream.close()
    return status


def cmd_enumerate(args: argparse.Namespace) -> int:
    try:
        graphs = enumerate_labeled(args.n, args.filter)
        with _open_output(args.output) as out:
            for g in graphs:
                out.write(emit_graph6(g) + "\n")
    except (TooLarge, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT
    return EXIT_OK


def cmd_extremal(args: argparse.Namespace) -> int:
    reports = []
    try:
        for delta in args.delta:
            reports += sharpness_audit(delta, args.family)
    except (DeltaTooSmall, TooLarge) as exc:
        log.error("%s: %s", type(exc).__name__, exc)
        return EXIT_INPUT
    with _open_output(args.output) as out:
        if args.table:
            out.write(format_table(reports) + "\n")
        else:
            for r in reports:
                out.write(r.to_json() + "\n")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_VIOLATION


def cmd_certify(args: argparse.Namespace) -> int:
    token = sys.stdin.readline() if args.token == "-" else args.token
    try:
        g = parse_graph6(token)
        cert = certified_long_cycle(g)
    except NotTwoConnected as exc:
        cut = "none" if exc.cut_vertex is None else exc.cut_vertex
        print(f"not 2-connected: kappa={exc.kappa} cut_vertex={cut}", file=sys.stderr)
        return EXIT_VIOLATION
    except (GraphError, ResourceLimit) as exc:
        log.error("%s: %s", type(exc).__name__, exc)
        return EXIT_INPUT
    data = certificate_to_dict(cert)
    with _open_output(args.output) as out:
        out.write(json.dumps(data, sort_keys=True) + "\n")
    if args.check:
        problems = check_certificate(json.loads(json.dumps(data)))
        for problem in problems:
            print(f"check: {problem}", file=sys.stderr)
        if problems:
            return EXIT_VIOLATION
        print("check: ok", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="circumlab", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="audit a graph6 stream, one JSON record per line")
    p.add_argument("input", nargs="?", help="graph6 file (default stdin)")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (env CIRCUMLAB_JOBS)")
    p.add_argument("--strict", action="store_true", help="stop with exit 2 on the first bad line")
    p.add_argument("--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="emit every labeled graph on n vertices")
    p.add_argument("n", type=int)
    p.add_argument("--filter", choices=FILTERS, default="all")
    p.add_argument("--output")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("extremal", help="audit the sharpness families")
    p.add_argument("--delta", type=_delta_range, default=range(2, 6), help="A..B (default 2..5)")
    p.add_argument("--family", type=_families, default=tuple(Family), help="comma list, e.g. E1,E3")
    p.add_argument("--table", action="store_true", help="aligned text instead of JSON lines")
    p.add_argument("--output")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("certify", help="print a cycle certificate for one graph6 token")
    p.add_argument("token", help="graph6 token, or - to read one line from stdin")
    p.add_argument("--check", action="store_true", help="re-validate the printed certificate")
    p.add_argument("--output")
    p.set_defaults(func=cmd_certify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    if getattr(args, "jobs", 0) is None:
        args.jobs = default_jobs()
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
