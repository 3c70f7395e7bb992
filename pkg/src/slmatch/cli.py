"""Command-line front end.

Exit codes: 0 = success / no counterexample, 1 = counterexample or property
violation, 2 = input error.  Numbers are printed with 12 significant digits
so golden outputs are portable.
"""

from __future__ import annotations

import argparse
import sys
from typing import IO

from .errors import Graph6ParseError, InputError
from .graph import Graph
from .graph6 import decode_graph6, encode_graph6, read_edge_list
from .proof_harness import (
    ProofInstance,
    check_merge_singletons,
    check_root_bounds,
    check_vertex_shift,
    run_proof_suite,
)
from .spectral import closed_form_r, edge_threshold, q1, q1_threshold, r_of_n
from .verify import (
    VERDICT_COUNTEREXAMPLE,
    CorpusSummary,
    check_graph,
    run_exhaustive,
    run_random,
    run_stream,
    sharpness_graph,
    sharpness_report,
)


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _load_graph(args) -> Graph:
    if args.graph6 is not None:
        return decode_graph6(args.graph6)
    with open(args.edges, "r", encoding="utf-8") as handle:
        return read_edge_list(handle)


def _add_graph_source(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--graph6", help="graph6 line")
    source.add_argument("--edges", help="edge-list file ('n m' header, 'u v' lines)")


def _print_summary(summary: CorpusSummary, stdout: IO[str]) -> None:
    print(f"checked {summary.checked}", file=stdout)
    if summary.expected_count is not None:
        print(f"expected {summary.expected_count}", file=stdout)
    for verdict in sorted(summary.verdicts):
        print(f"verdict {verdict} {summary.verdicts[verdict]}", file=stdout)
    print(f"counterexamples {len(summary.counterexamples)}", file=stdout)
    print(f"edge-violations {len(summary.edge_violations)}", file=stdout)
    for reason in sorted(summary.skipped):
        print(f"skipped {reason} {summary.skipped[reason]}", file=stdout)
    for record in summary.counterexamples:
        print(f"COUNTEREXAMPLE {record.to_json()}", file=stdout)


def _cmd_q1(args, stdout) -> int:
    print(_fmt(q1(_load_graph(args))), file=stdout)
    return 0


def _cmd_threshold(args, stdout) -> int:
    n = args.n
    print(f"n {n}", file=stdout)
    print(f"q1_threshold {_fmt(q1_threshold(n))}", file=stdout)
    print(f"r_n {_fmt(r_of_n(n))}", file=stdout)
    print(f"edge_threshold {edge_threshold(n)}", file=stdout)
    return 0


def _cmd_rn(args, stdout) -> int:
    print(f"r_n {_fmt(r_of_n(args.n))}", file=stdout)
    if args.closed_form:
        print(f"closed_form {_fmt(closed_form_r(args.n))}", file=stdout)
    return 0


def _cmd_check(args, stdout) -> int:
    record = check_graph(_load_graph(args))
    for name in ("graph6", "n", "edges"):
        print(f"{name} {getattr(record, name)}", file=stdout)
    print(f"q1 {_fmt(record.q1)}", file=stdout)
    print(f"q1_threshold {_fmt(record.q1_threshold)}", file=stdout)
    print(f"edge_threshold {record.edge_threshold}", file=stdout)
    print(f"has_pm {str(record.has_pm).lower()}", file=stdout)
    print(f"verdict {record.verdict}", file=stdout)
    witness = "null" if record.witness is None else ",".join(map(str, record.witness))
    print(f"witness {witness}", file=stdout)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as sink:
            sink.write(record.to_json() + "\n")
    return 1 if record.verdict == VERDICT_COUNTEREXAMPLE else 0


def _cmd_verify(args, stdout) -> int:
    sink = open(args.out, "w", encoding="utf-8") if args.out else None
    try:
        if args.exhaustive is not None:
            summary = run_exhaustive(
                args.exhaustive, out=sink, jobs=args.jobs, stable=args.stable
            )
        elif args.graph6_file is not None:
            with open(args.graph6_file, "r", encoding="utf-8") as handle:
                summary = run_stream(
                    handle, out=sink, jobs=args.jobs, stable=args.stable
                )
        else:
            if args.count is None or args.p is None:
                raise InputError("--random needs --p and --count")
            summary = run_random(
                args.random,
                args.p,
                args.count,
                args.seed,
                out=sink,
                jobs=args.jobs,
                stable=args.stable,
            )
    finally:
        if sink is not None:
            sink.close()
    _print_summary(summary, stdout)
    return summary.exit_code()


_EXTREMAL_BUILDERS = {"h", "k2e4", "k3e5"}


def _cmd_extremal(args, stdout) -> int:
    n = args.n
    which = args.which
    if which is None:
        G = sharpness_graph(n)
    elif which == "h":
        from .graph import extremal_h

        G = extremal_h(n)
    elif which == "k2e4":
        if n != 6:
            raise InputError("k2e4 is the 6-vertex construction; use --n 6")
        G = sharpness_graph(6)
    else:
        if n != 8:
            raise InputError("k3e5 is the 8-vertex construction; use --n 8")
        G = sharpness_graph(8)
    report = sharpness_report([n]) if which is None else None
    print(f"n {G.n}", file=stdout)
    print(f"edges {G.edge_count}", file=stdout)
    print(f"q1 {_fmt(q1(G))}", file=stdout)
    print(f"q1_threshold {_fmt(q1_threshold(n))}", file=stdout)
    if report is not None:
        row = report.rows[0]
        print(f"has_pm {str(row.has_pm).lower()}", file=stdout)
        witness = "null" if row.witness is None else ",".join(map(str, row.witness))
        print(f"witness {witness}", file=stdout)
        print(f"sharp {str(row.passed).lower()}", file=stdout)
    if args.emit_graph6:
        print(encode_graph6(G), file=stdout)
    return 0 if report is None or report.passed else 1


def _parse_instance(text: str) -> ProofInstance:
    try:
        numbers = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError as exc:
        raise InputError(f"--instance expects integers 's,n1,n2,...', got {text!r}") from exc
    if len(numbers) < 2:
        raise InputError("--instance needs s followed by at least one part")
    return ProofInstance(numbers[0], tuple(numbers[1:]))


def _cmd_proof_check(args, stdout) -> int:
    if args.instance is not None:
        inst = _parse_instance(args.instance)
        reports = [
            check_root_bounds(inst),
            check_vertex_shift(inst),
            check_merge_singletons(inst),
        ]
        for report in reports:
            print(report, file=stdout)
        return 0 if all(r.passed or r.skipped for r in reports) else 1

    result = run_proof_suite(nmax=args.nmax)
    counts: dict[str, list[int]] = {}
    for report in result.reports:
        passed, skipped, failed = counts.setdefault(report.name, [0, 0, 0])
        if report.skipped:
            skipped += 1
        elif report.passed:
            passed += 1
        else:
            failed += 1
        counts[report.name] = [passed, skipped, failed]
    for name in sorted(counts):
        passed, skipped, failed = counts[name]
        print(f"{name} pass {passed} skip {skipped} fail {failed}", file=stdout)
    for report in result.failures:
        print(f"FAIL {report}", file=stdout)
    for record in result.transcriptions:
        print(f"transcription {record}", file=stdout)
    return 0 if result.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slmatch",
        description="Signless-Laplacian spectral thresholds for perfect matchings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("q1", help="spectral radius of one graph")
    _add_graph_source(p)
    p.set_defaults(func=_cmd_q1)

    p = sub.add_parser("threshold", help="thresholds for an even order n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_threshold)

    p = sub.add_parser("rn", help="largest root of the threshold cubic")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--closed-form", action="store_true", dest="closed_form")
    p.set_defaults(func=_cmd_rn)

    p = sub.add_parser("check", help="full verdict record for one graph")
    _add_graph_source(p)
    p.add_argument("--out", help="also write the record as JSONL")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("verify", help="sweep a corpus for counterexamples")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--exhaustive", type=int, metavar="N")
    source.add_argument("--graph6-file", dest="graph6_file", metavar="PATH")
    source.add_argument("--random", type=int, metavar="N")
    p.add_argument("--p", type=float)
    p.add_argument("--count", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write one JSONL record per graph")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--stable", action="store_true",
                   help="force input order in JSONL output when --jobs > 1")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("extremal", help="threshold-attaining graph for order n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--which", choices=sorted(_EXTREMAL_BUILDERS))
    p.add_argument("--emit-graph6", action="store_true", dest="emit_graph6")
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("proof-check", help="run the proof-step property sweep")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--all", action="store_true")
    mode.add_argument("--instance", metavar="s,n1,n2,...")
    p.add_argument("--nmax", type=int, default=12)
    p.set_defaults(func=_cmd_proof_check)

    return parser


def main(argv: list[str] | None = None, stdout: IO[str] | None = None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args, stdout)
    except (InputError, Graph6ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())
