"""Command-line entry point: construct, verify, decompose, embed, export-graph, oracle.

Exit codes: 0 ok, 1 check failed or I/O error, 2 unsupported parameters,
3 malformed input, 4 search exhausted.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import arrayfile
from .constructions import construct
from .decomposition import (check_orthogonal, check_partition, col_decomposition,
                            multipartite_edges, row_decomposition)
from .embedding import NotCyclic, embed, predicted_spectrum_check
from .modcore import ModulusContext, UnsupportedParameters
from .oracle import NH22_T, enumerate_nh22
from .verifier import NotFound, check_axioms, find_compatible_orderings

EXIT_OK, EXIT_FAILED, EXIT_UNSUPPORTED, EXIT_MALFORMED, EXIT_EXHAUSTED = 0, 1, 2, 3, 4


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as e:
        raise _Exit(EXIT_FAILED, f"cannot write {out}: {e}") from e


def _construct(n: int, t: int):
    try:
        return construct(n, t)
    except (UnsupportedParameters, ValueError) as e:
        raise _Exit(EXIT_UNSUPPORTED, str(e)) from e


def threads(args) -> int:
    env = os.environ.get("HEFFTER_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise _Exit(EXIT_MALFORMED, f"HEFFTER_THREADS={env!r} is not an integer")
    return max(1, args.threads)


def cmd_construct(args) -> int:
    A = _construct(args.n, args.t)
    text = arrayfile.dumps_json(A) if args.format == "json" else arrayfile.dumps_csv(A)
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        text = Path(args.input).read_text(encoding="utf-8")
    except OSError as e:
        raise _Exit(EXIT_FAILED, f"cannot read {args.input}: {e}") from e
    try:
        A = arrayfile.loads(text)
    except arrayfile.MalformedArrayFile as e:
        raise _Exit(EXIT_MALFORMED, f"malformed array file: {e}") from e
    report = check_axioms(A)
    _emit(_dump_json(report.to_dict()), args.report)
    return EXIT_OK if report.overall else EXIT_FAILED


def cmd_decompose(args) -> int:
    A = _construct(args.n, args.t)
    ctx = ModulusContext(args.n, args.t)
    D = row_decomposition(A) if args.axis == "rows" else col_decomposition(A)
    partition = check_partition(D, ctx)
    ok = partition.ok
    if args.format == "edgelist":
        lines = [f"{x} {y}" for x, y in sorted(D.edges())]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        doc = {
            "n": args.n, "t": args.t, "v": D.v, "axis": args.axis,
            "base_blocks": [list(b.vertices) for b in D.base_blocks],
            "partition_ok": partition.ok,
        }
        if args.full:
            doc["blocks"] = [list(b.vertices) for b in D.blocks]
        if args.check_orthogonal:
            other = col_decomposition(A) if args.axis == "rows" else row_decomposition(A)
            orth = check_orthogonal(D, other)
            doc["orthogonal"] = orth.ok
            ok = ok and orth.ok
        _emit(_dump_json(doc), args.out)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_embed(args) -> int:
    A = _construct(args.n, args.t)
    try:
        dirs = find_compatible_orderings(A, seed=args.seed, max_tries=args.max_tries,
                                         workers=threads(args))
    except NotFound as e:
        raise _Exit(EXIT_EXHAUSTED, str(e)) from e
    try:
        report = embed(A, dirs)
    except NotCyclic as e:
        raise _Exit(EXIT_FAILED, str(e)) from e
    doc = report.to_dict(boundaries=args.faces is not None)
    doc.update({"n": args.n, "t": args.t,
                "row_dirs": list(dirs.row_dirs), "col_dirs": list(dirs.col_dirs)})
    try:
        doc["spectrum_predicates_ok"] = predicted_spectrum_check(report, args.n, args.t).ok
    except UnsupportedParameters:
        doc["spectrum_predicates_ok"] = None
    if args.faces is not None:
        _emit(_dump_json(doc), args.faces)
        doc.pop("faces")
    summary = {k: doc[k] for k in ("V", "E", "F", "genus", "spectrum")}
    sys.stdout.write(_dump_json(summary))
    return EXIT_OK


def cmd_export_graph(args) -> int:
    try:
        ctx = ModulusContext(args.n, args.t)
    except ValueError as e:
        raise _Exit(EXIT_UNSUPPORTED, str(e)) from e
    edges = sorted(multipartite_edges(ctx))
    if args.format == "edgelist":
        text = "".join(f"{x} {y}\n" for x, y in edges)
    else:
        lines = [f"graph K_{ctx.step}x{ctx.t} {{"]
        for x in range(ctx.v):
            lines.append(f"  {x} [part={x % ctx.step}];")
        lines.extend(f"  {x} -- {y};" for x, y in edges)
        lines.append("}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    ts = [args.t] if args.t is not None else list(NH22_T)
    doc = {}
    for t in ts:
        if t not in NH22_T:
            raise _Exit(EXIT_UNSUPPORTED, f"no construction for (2,{t})")
        arrays = enumerate_nh22(t, reduce_symmetry=args.reduce)
        doc[str(t)] = {"count": len(arrays),
                       "arrays": [A.signed_rows() for A in arrays] if args.list else None}
    _emit(_dump_json(doc), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="heffter", description=__doc__.splitlines()[0])
    p.add_argument("--threads", type=int, default=1,
                   help="worker threads for searches (HEFFTER_THREADS overrides)")
    sub = p.add_subparsers(dest="command", required=True)

    def nt(sp):
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--t", type=int, required=True)

    sp = sub.add_parser("construct", help="build NH_t(n;n)")
    nt(sp)
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="check an array file")
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--report")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("decompose", help="cyclic path decomposition from rows or columns")
    nt(sp)
    sp.add_argument("--axis", choices=("rows", "cols"), default="rows")
    sp.add_argument("--check-orthogonal", action="store_true")
    sp.add_argument("--full", action="store_true", help="include every translate")
    sp.add_argument("--format", choices=("json", "edgelist"), default="json")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("embed", help="face-2-colorable embedding and its spectrum")
    nt(sp)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-tries", type=int, default=200_000)
    sp.add_argument("--faces", help="write full report with face boundaries here")
    sp.set_defaults(func=cmd_embed)

    sp = sub.add_parser("export-graph", help="write K_{v/t x t} as DOT or an edge list")
    nt(sp)
    sp.add_argument("--format", choices=("dot", "edgelist"), default="edgelist")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_export_graph)

    sp = sub.add_parser("oracle", help="enumerate globally simple NH_t(2;2)")
    sp.add_argument("--t", type=int)
    sp.add_argument("--reduce", action="store_true", help="fix the (0,0) entry")
    sp.add_argument("--list", action="store_true", help="include the arrays")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_oracle)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as e:
        print(f"heffter: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())
