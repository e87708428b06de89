"""Command-line surface: graph generation, minor/coloring searches with JSON
certificates, the verification harness, and certificate checking.

Reports and certificates go to stdout; progress and summaries to stderr.
Exit status is 0 exactly when no violations were found.
"""

from __future__ import annotations

import argparse
import sys

from .certificates import (CertificateError, coloring_certificate, model_certificate,
                           none_found_certificate, read_certificate, write_certificate)
from .coloring import find_coloring
from .generate import GraphFilter, generate_graphs
from .graph6 import emit_graph6, parse_graph6
from .minors import find_model, find_rooted_model
from .patterns import pattern_from_name
from .verify import (EXPLORE_NAMES, default_jobs, explore_conjecture, verify_extremal,
                     verify_lemma_k4, verify_lemma_k4minus, verify_lemma_k42star,
                     verify_main, verify_maxdeg2_cases, verify_spindle_claim)

_VERIFY_OPS = {
    "extremal": (verify_extremal, True),
    "main": (verify_main, True),
    "lemma-k4": (verify_lemma_k4, True),
    "lemma-k4minus": (verify_lemma_k4minus, True),
    "lemma-k42star": (verify_lemma_k42star, True),
    "spindle": (verify_spindle_claim, False),
    "maxdeg2": (verify_maxdeg2_cases, False),
}


def _read_graphs(path: str | None):
    stream = open(path) if path else sys.stdin
    try:
        return [parse_graph6(line) for line in stream if line.strip()]
    finally:
        if path:
            stream.close()


def _cmd_gen(args) -> int:
    filt = GraphFilter(args.n, min_edges=args.min_edges,
                       max_edges=args.max_edges,
                       min_connectivity=args.min_conn,
                       predicates=tuple(args.pred))
    count = 0
    for g in generate_graphs(filt):
        print(emit_graph6(g))
        count += 1
    print(f"generated {count} graphs on {args.n} vertices", file=sys.stderr)
    return 0


def _cmd_minor(args) -> int:
    pattern = pattern_from_name(args.pattern)
    roots = [int(x) for x in args.roots.split(",")] if args.roots else None
    for g in _read_graphs(args.input):
        if roots is None:
            model = find_model(g, pattern)
        else:
            model = find_rooted_model(g, pattern, roots)
        if model is not None:
            print(write_certificate(model_certificate(model)))
        else:
            print(write_certificate(none_found_certificate(g, pattern=pattern.name)))
    return 0


def _cmd_color(args) -> int:
    for g in _read_graphs(args.input):
        coloring = find_coloring(g, args.k)
        if coloring is not None:
            print(write_certificate(coloring_certificate(g, coloring)))
        else:
            print(write_certificate(none_found_certificate(g, k=args.k)))
    return 0


def _cmd_verify(args) -> int:
    op, takes_n = _VERIFY_OPS[args.claim]
    kwargs = {"jobs": args.jobs}
    if args.input:
        kwargs["graphs"] = _read_graphs(args.input)
    if takes_n:
        if args.n is None:
            raise SystemExit(f"mf verify {args.claim} requires --n")
        report = op(args.n, **kwargs)
    else:
        report = op(**kwargs)
    sys.stdout.write(report.to_json())
    print(report.summary(), file=sys.stderr)
    return 0 if report.verified else 1


def _cmd_explore(args) -> int:
    report = explore_conjecture(args.name, args.n, jobs=args.jobs)
    sys.stdout.write(report.to_json())
    print(report.summary(), file=sys.stderr)
    return 0


def _cmd_cert(args) -> int:
    if args.action != "check":
        raise SystemExit("only 'mf cert check FILE' is supported")
    failures = 0
    with open(args.file) as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                cert = read_certificate(line)
                print(f"line {lineno}: ok ({cert.kind})")
            except CertificateError as exc:
                failures += 1
                print(f"line {lineno}: INVALID: {exc}")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mf", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="enumerate graphs, one graph6 line each")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--min-edges", type=int, default=0)
    p.add_argument("--max-edges", type=int, default=None)
    p.add_argument("--min-conn", type=int, default=0)
    p.add_argument("--pred", action="append", default=[],
                   help="named predicate, e.g. mindeg:6, maxdeg:2, connected")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("minor", help="search each input graph for a pattern minor")
    p.add_argument("--pattern", required=True)
    p.add_argument("--roots", default=None, help="comma-separated host roots")
    p.add_argument("--input", default=None, help="graph6 file (default: stdin)")
    p.set_defaults(func=_cmd_minor)

    p = sub.add_parser("color", help="search each input graph for a k-coloring")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--input", default=None, help="graph6 file (default: stdin)")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("verify", help="run one verification sweep")
    p.add_argument("claim", choices=sorted(_VERIFY_OPS))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--jobs", type=int, default=None,
                   help=f"worker count (default: MF_JOBS or 1; now {default_jobs()})")
    p.add_argument("--input", default=None,
                   help="verify over this graph6 stream instead of enumerating")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("explore", help="exploratory conjecture scan")
    p.add_argument("name", choices=sorted(EXPLORE_NAMES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(func=_cmd_explore)

    p = sub.add_parser("cert", help="certificate utilities")
    p.add_argument("action", choices=["check"])
    p.add_argument("file")
    p.set_defaults(func=_cmd_cert)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"mf: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
