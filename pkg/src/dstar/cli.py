"""Command line interface.

Exit codes (stable):
    0  success (check: planar, free and within the bound; certify: global_ok)
    1  negative verdict (check failed, certificate did not pass)
    2  usage error
    3  unreadable or malformed input
    4  certify precondition failed (non-planar or contains S_{2,4})
    5  construction or search failure

Machine-readable output goes to stdout, diagnostics to stderr.  The log level
comes from ``DSTAR_LOG`` (default WARNING).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time

from .construct import (
    ConstructionError,
    TreeShape,
    build_extremal,
    build_tree_shape,
    derive_block_library,
    floor_bound,
    star_shape,
    write_fixture,
)
from .formats import FormatError, read_graph, to_edge_list, to_graph6
from .graph import Graph, GraphError
from .patterns import contains_double_star
from .planarity import is_planar
from .reduce import bound_status, check_bound_pipeline
from .search import CapacityError, max_edges_exact

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_PRECONDITION = 4
EXIT_RUNTIME = 5

log = logging.getLogger("dstar")


class UsageError(Exception):
    pass


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _pattern(text: str) -> tuple[int, int]:
    try:
        k, l = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected k,l, got {text!r}") from None
    if k < 1 or l < 1:
        raise argparse.ArgumentTypeError("k and l must be positive")
    return k, l


def to_dot(g: Graph) -> str:
    lines = ["graph G {"]
    lines += [f"  {v};" for v in range(g.n) if not g.adjacency[v]]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    return "\n".join(lines + ["}"])


def _load(args) -> Graph:
    try:
        return read_graph(args.file, args.format)
    except OSError as exc:
        raise FormatError(f"cannot read {args.file}: {exc.strerror}") from exc


def cmd_check(args, out) -> int:
    g = _load(args)
    k, l = args.pattern
    planar = is_planar(g)
    witness = contains_double_star(g, k, l)
    status = bound_status(g.n, g.m)
    print(f"planar={_yn(planar)} free={_yn(witness is None)} n={g.n} e={g.m} bound={status}", file=out)
    if witness is not None:
        log.warning("S_%d,%d on edge %s with leaves %s / %s", k, l, witness.centers, witness.leaves_a, witness.leaves_b)
    if args.dot:
        print(to_dot(g), file=out)
    return EXIT_OK if planar and witness is None and status != "violated" else EXIT_FAIL


def cmd_certify(args, out) -> int:
    g = _load(args)
    verdict = check_bound_pipeline(g)
    if not verdict.is_planar:
        print("error: input is not planar", file=sys.stderr)
        return EXIT_PRECONDITION
    if not verdict.is_free:
        w = verdict.witness
        print(
            f"error: input contains S_2,4 on edge {w.centers[0]}-{w.centers[1]} "
            f"with leaves {list(w.leaves_a)} and {list(w.leaves_b)}",
            file=sys.stderr,
        )
        return EXIT_PRECONDITION
    if verdict.failure:
        print(f"error: certification failed at {verdict.failure}", file=sys.stderr)
        return EXIT_RUNTIME
    print(f"n={g.n} e={g.m} peeled={g.n - verdict.peeled_size} core={verdict.peeled_size}", file=out)
    cert = verdict.certificate
    if cert is not None:
        print(cert.table(), file=out)
        print(f"sum_weight2={cert.total_weight2} 2e_core={2 * cert.m}", file=out)
    for v in verdict.certificate_violations:
        print(f"violation: {v}", file=sys.stderr)
    print(f"global_ok={_yn(verdict.global_ok)} bound={bound_status(g.n, g.m)}", file=out)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(verdict.to_json() + "\n")
    return EXIT_OK if verdict.global_ok else EXIT_FAIL


def _shape(spec: str) -> TreeShape:
    if spec == "path":
        raise AssertionError("path is resolved from --n")
    if spec == "star":
        return star_shape()
    try:
        with open(spec) as fh:
            return TreeShape.from_dict(json.load(fh))
    except OSError as exc:
        raise FormatError(f"cannot read shape file {spec}: {exc.strerror}") from exc
    except (KeyError, ValueError, TypeError) as exc:
        raise FormatError(f"bad shape file {spec}: {exc}") from exc


def cmd_construct(args, out) -> int:
    if args.shape == "path":
        if args.n is None:
            raise UsageError("construct needs --n (or a --shape)")
        try:
            g = build_extremal(args.n)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    else:
        g = build_tree_shape(_shape(args.shape))
        if args.n is not None and args.n != g.n:
            raise UsageError(f"shape has {g.n} vertices, --n asked for {args.n}")
    text = to_graph6(g) + "\n" if args.out_format == "graph6" else to_edge_list(g)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    planar = is_planar(g)
    free = contains_double_star(g) is None
    print(
        f"n={g.n} e={g.m} floor={floor_bound(g.n)} planar={_yn(planar)} free={_yn(free)} "
        f"bound={bound_status(g.n, g.m)}",
        file=out,
    )
    if args.dot:
        print(to_dot(g), file=out)
    return EXIT_OK if planar and free and g.m == floor_bound(g.n) else EXIT_FAIL


def cmd_search(args, out) -> int:
    k, l = args.pattern
    res = max_edges_exact(args.n, k, l, jobs=args.jobs, checkpoint=args.resume, audit_every=args.audit_every)
    print("n\tmax_edges\twitnesses", file=out)
    print(res.table_row(), file=out)
    for code in res.witness_codes:
        print(code, file=out)
    if args.witnesses:
        with open(args.witnesses, "w") as fh:
            fh.write("".join(c + "\n" for c in res.witness_codes))
    log.info("%d search nodes, %d audited, %d disagreements", res.nodes_explored, res.audited, res.disagreements)
    return EXIT_OK if res.disagreements == 0 else EXIT_RUNTIME


def cmd_derive_blocks(args, out) -> int:
    lib = derive_block_library()
    for t in lib:
        print(f"{t.kind.value}\tn={t.n}\te={t.m}\tattachments={list(t.attachments)}\tweight2={t.weight2}", file=out)
    if args.out:
        write_fixture(args.out, lib)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    # --timings is accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--timings", action="store_true", default=argparse.SUPPRESS, help="print elapsed time as the last stdout line"
    )
    p = argparse.ArgumentParser(
        prog="dstar", description="Planar S_{2,4}-free graphs and the 31n/14 bound.", parents=[common]
    )
    sub = p.add_subparsers(dest="command", required=True)

    def graph_input(sp):
        sp.add_argument("file")
        sp.add_argument("--format", choices=["graph6", "edgelist"], help="override extension-based detection")

    c = sub.add_parser("check", parents=[common], help="planarity, S_{k,l}-freeness and the edge bound")
    graph_input(c)
    c.add_argument("--pattern", type=_pattern, default=(2, 4), metavar="k,l")
    c.add_argument("--dot", action="store_true")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("certify", parents=[common], help="peel, decompose and validate")
    graph_input(c)
    c.add_argument("--json", metavar="FILE")
    c.set_defaults(func=cmd_certify)

    c = sub.add_parser("construct", parents=[common], help="build an extremal graph")
    c.add_argument("--n", type=int)
    c.add_argument("--shape", default="path", help="path (default), star, or a JSON tree-shape file")
    c.add_argument("--out", metavar="FILE")
    c.add_argument("--format", dest="out_format", choices=["graph6", "edgelist"], default="graph6")
    c.add_argument("--dot", action="store_true")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("search", parents=[common], help="exact maximum edge count for small n")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--pattern", type=_pattern, default=(2, 4), metavar="k,l")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--resume", metavar="CKPT", help="checkpoint file, created if missing")
    c.add_argument("--audit-every", type=int, default=0, metavar="J")
    c.add_argument("--witnesses", metavar="FILE")
    c.set_defaults(func=cmd_search)

    c = sub.add_parser("derive-blocks", parents=[common], help="rerun the block derivation")
    c.add_argument("--out", metavar="FILE", help="write a fixture file")
    c.set_defaults(func=cmd_derive_blocks)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    level = getattr(logging, os.environ.get("DSTAR_LOG", "WARNING").upper(), None)
    logging.basicConfig(level=level if isinstance(level, int) else logging.WARNING, stream=sys.stderr)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        code = args.func(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConstructionError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    if getattr(args, "timings", False):
        print(f"time={time.perf_counter() - start:.3f}s", file=out)
    return code


if __name__ == "__main__":
    sys.exit(main())
