"""Command-line front end.

Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage or
I/O error.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .aqcore import MAX_DIM, build_aq, label
from .decomposer import HamiltonianCycle, decompose_any
from .formats import (FormatError, edge_list_to_graph, graph_to_dot, graph_to_edge_list,
                      read_bundle, text_to_cert, write_bundle)
from .ladder import CertError, cycle_edges, extract_cycle, validate_cert
from .report import Report
from .verifier import verify_decomposition, verify_partition, verify_regular

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MAX_EXACT_ENV = "AUGCUBE_MAX_EXACT_N"


class UsageError(Exception):
    pass


def _max_exact_n() -> int:
    raw = os.environ.get(MAX_EXACT_ENV, "7")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{MAX_EXACT_ENV} must be an integer, got {raw!r}") from None


def _emit(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_generate(args) -> int:
    if not 1 <= args.n <= MAX_DIM:
        raise UsageError(f"--n must be in 1..{MAX_DIM}")
    g = build_aq(args.n)
    text = graph_to_dot(g, f"AQ{args.n}") if args.format == "dot" else graph_to_edge_list(g)
    _emit(text, args.out)
    return EXIT_OK


def _check_n1(n: int, n1: int) -> None:
    if n < 4:
        raise UsageError("decompositions need --n >= 4")
    if not 2 <= n1 <= 2 * n - 3:
        raise UsageError(f"--n1 must be in 2..{2 * n - 3} for n={n}")


def cmd_decompose(args) -> int:
    if args.n1 is None:
        raise UsageError("decompose needs --n1")
    _check_n1(args.n, args.n1)
    d = decompose_any(args.n, args.n1)
    rep = Report()
    rep.extend(verify_partition(build_aq(d.n), d.H, d.K))
    rep.extend(verify_regular(d.H, d.n1, "H.regular"))
    rep.extend(verify_regular(d.K, d.n2, "K.regular"))
    if not rep.overall:
        sys.stdout.write(rep.to_text())
        return EXIT_FAIL
    out = Path(args.out or f"aq{args.n}_n1_{args.n1}")
    write_bundle(d, out)
    print(f"wrote {out}: H {d.n1}-regular ({len(d.H)} edges), "
          f"K {d.n2}-regular ({len(d.K)} edges)")
    return EXIT_OK


def cmd_verify(args) -> int:
    d = read_bundle(args.bundle)
    if args.mode == "sampled":
        if args.seed is None or args.pairs is None:
            raise UsageError("sampled mode needs --seed and --pairs")
        if args.pairs < 1:
            raise UsageError("--pairs must be >= 1")
    elif d.n > _max_exact_n():
        raise UsageError(f"exact connectivity is capped at n={_max_exact_n()} "
                         f"({MAX_EXACT_ENV}); use --mode sampled")
    rep = Report()
    rep.add("meta.partition", "n1 + n2 = 2n - 1", 2 * d.n - 1, d.n1 + d.n2,
            d.n1 + d.n2 == 2 * d.n - 1)
    rep.extend(verify_decomposition(d, args.mode, args.seed, args.pairs))
    text = rep.to_json() + "\n" if args.json else rep.to_text()
    _emit(text, args.out)
    if args.out is not None:
        print(f"overall {'pass' if rep.overall else 'fail'} ({args.mode})")
    return EXIT_OK if rep.overall else EXIT_FAIL


def cmd_cycles(args) -> int:
    cert = text_to_cert(Path(args.cert).read_text())
    if isinstance(cert, HamiltonianCycle):
        raise UsageError("cycle extraction needs a ladder certificate")
    host = edge_list_to_graph(Path(args.host).read_text()) if args.host else build_aq(cert.n)
    if host.order != 1 << cert.n:
        raise UsageError("certificate and host dimensions differ")
    lengths = range(4, 2 * cert.m + 1) if args.all else [args.length]
    for length in lengths:
        if not 4 <= length <= 2 * cert.m:
            raise UsageError(f"--length must be in 4..{2 * cert.m}")
    check = validate_cert(cert, host, core_only=True)
    if not check.overall:
        sys.stdout.write(check.to_text())
        return EXIT_FAIL
    status = EXIT_OK
    for length in lengths:
        seq = extract_cycle(cert, length)
        if not cycle_edges(seq) <= host.edges:
            print(f"# length {length}: cycle edge missing from host", file=sys.stderr)
            status = EXIT_FAIL
        print(" ".join(label(x, cert.n) for x in seq))
    return status


def cmd_export(args) -> int:
    g = edge_list_to_graph(Path(args.host).read_text())
    text = graph_to_dot(g) if args.format == "dot" else graph_to_edge_list(g)
    _emit(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="augcube",
                                description="Augmented cube decompositions and checks")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write the AQ_n edge list or DOT")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--format", choices=("edges", "dot"), default="edges")
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    d = sub.add_parser("decompose", help="write a decomposition bundle")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--n1", type=int)
    d.add_argument("--out", help="bundle directory")
    d.set_defaults(func=cmd_decompose)

    v = sub.add_parser("verify", help="verify a decomposition bundle")
    v.add_argument("bundle")
    v.add_argument("--mode", choices=("exact", "sampled"), default="exact")
    v.add_argument("--seed", type=int)
    v.add_argument("--pairs", type=int)
    v.add_argument("--out", help="write the report here instead of stdout")
    v.add_argument("--json", action="store_true", help="JSON report")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("cycles", help="print certificate cycles")
    c.add_argument("--cert", required=True)
    c.add_argument("--host", help="edge list; defaults to AQ_n")
    which = c.add_mutually_exclusive_group(required=True)
    which.add_argument("--length", type=int)
    which.add_argument("--all", action="store_true")
    c.set_defaults(func=cmd_cycles)

    e = sub.add_parser("export", help="convert an edge list")
    e.add_argument("--host", required=True)
    e.add_argument("--format", choices=("edges", "dot"), default="dot")
    e.add_argument("--out")
    e.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FormatError, CertError) as exc:
        print(f"augcube: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"augcube: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
