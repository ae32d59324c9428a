"""Command line front end: ``treedim {dims,normalize,bound,verify,family}``.

Every command prints one JSON report (keys in a fixed order) to stdout or
to ``--out``.  Exit status is 0 when every check in the invocation passed,
1 when a verification check failed, 2 on bad input and 3 when a fast path
disagreed with the brute-force oracle.
"""
from __future__ import annotations

import argparse
import sys

from .dimension import OracleMismatch, dimension_report, mary_bound
from .formats import (
    FormatError,
    digest,
    dump_report,
    leaf_strings,
    parse_family,
    parse_labeling,
    parse_leafset,
    render_leafset,
)
from .learning import chi_labeling, chi_tuple, littlestone_dim, vc_dim
from .normalization import normalize_binary, normalize_mary
from .oracle import EmbeddingKind, embed_exists
from .suites import SUITES, default_jobs, run_suite
from .tree_core import LeafSet, branch_closure, node_str, set_norm

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_ORACLE = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from None


def _load_leafset(path: str) -> tuple[LeafSet, str]:
    text = _read(path)
    try:
        return parse_leafset(text), text
    except (FormatError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _pick_ell(B: LeafSet, ell: int | None) -> int:
    ell = B.m if ell is None else ell
    if not 2 <= ell <= B.m:
        raise InputError(f"--ell must lie in 2..{B.m}")
    return ell


def _witnesses(B: LeafSet, ell: int, rep) -> dict:
    trie = branch_closure(B)
    out = {}
    for key, kind, d in (("td", EmbeddingKind.PLAIN, rep.td), ("mtd", EmbeddingKind.MEETED, rep.mtd), ("ltd", EmbeddingKind.LEVELED, rep.ltd)):
        w = embed_exists(d, ell, kind, trie) if d >= 0 else None
        out[key] = None if w is None else {"d": w.d, "ell": w.ell, "map": w.pairs()}
    return out


def cmd_dims(args) -> tuple[dict, int]:
    B, _ = _load_leafset(args.file)
    ell = _pick_ell(B, args.ell)
    rep = dimension_report(B, ell, verify=args.oracle)
    doc = {
        "command": "dims",
        "input_digest": digest(render_leafset(B)),
        "m": B.m,
        "n": B.n,
        "ell": ell,
        "size": rep.size,
        "td": rep.td,
        "mtd": rep.mtd,
        "ltd": rep.ltd,
        "bound": rep.bound,
        "boundTight": rep.bound_tight,
        "oracle": bool(args.oracle),
    }
    if args.witness:
        doc["witnesses"] = _witnesses(B, ell, rep)
    return doc, EXIT_OK


def cmd_normalize(args) -> tuple[dict, int]:
    B, _ = _load_leafset(args.file)
    ell = _pick_ell(B, args.ell)
    if B.m == 2:
        final, trace = normalize_binary(B)
    else:
        final, trace = normalize_mary(B, ell)
    value = set_norm(final.leaves, ell)
    rep = dimension_report(B, ell)
    doc = {
        "command": "normalize",
        "input_digest": digest(render_leafset(B)),
        "m": B.m,
        "n": B.n,
        "ell": ell,
        "size": len(B),
        "normalized": leaf_strings(final),
        "norm": value,
        "mtd": rep.mtd,
        "normEqualsMtd": value == rep.mtd,
    }
    if args.trace:
        doc["trace"] = [{"node": node_str(a), "k": k} for a, k in trace.swaps]
    return doc, EXIT_OK if value == rep.mtd else EXIT_FAIL


def cmd_bound(args) -> tuple[dict, int]:
    m = 2 if args.m is None else args.m
    ell = m if args.ell is None else args.ell
    if args.n < 0 or args.d < -1:
        raise InputError("need n >= 0 and d >= -1")
    try:
        value = mary_bound(args.n, args.d, m, ell)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return {"command": "bound", "n": args.n, "d": args.d, "m": m, "ell": ell, "bound": value}, EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    if args.suite not in SUITES:
        raise InputError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    res = run_suite(args.suite, args.max_n, args.samples, args.seed, args.jobs)
    for line in res.summary_lines():
        print(line, file=sys.stderr)
    doc = {
        "command": "verify",
        "suite": res.name,
        "seed": res.params["seed"],
        "max_n": res.params["max_n"],
        "samples": res.params["samples"],
        "passed": res.ok,
        "checks": res.tally.as_dict(),
    }
    if res.tally.extras:
        doc["extras"] = res.tally.extras
    return doc, EXIT_OK if res.ok else EXIT_FAIL


def cmd_family(args) -> tuple[dict, int]:
    text = _read(args.file)
    try:
        F = parse_family(text)
    except (FormatError, ValueError) as exc:
        raise InputError(f"{args.file}: {exc}") from None
    doc = {
        "command": "family",
        "input_digest": digest(text),
        "universe": [str(x) for x in F.universe],
        "size": len(F),
        "vc": vc_dim(F),
        "ld": littlestone_dim(F),
    }
    image = None
    if args.tuple is not None:
        unknown = [x for x in args.tuple if x not in F.universe]
        if unknown:
            raise InputError(f"unknown universe elements in --tuple: {', '.join(unknown)}")
        image = chi_tuple(F, args.tuple)
        doc["chi"] = {"kind": "tuple", "points": list(args.tuple)}
    elif args.labeling is not None:
        try:
            alpha = parse_labeling(_read(args.labeling), F)
        except FormatError as exc:
            raise InputError(f"{args.labeling}: {exc}") from None
        image = chi_labeling(F, alpha)
        doc["chi"] = {"kind": "labeling", "labels": [[node_str(a), str(x)] for a, x in alpha.labels]}
    if image is not None:
        rep = dimension_report(image, 2)
        doc["chi"].update(
            {
                "n": image.n,
                "leaves": leaf_strings(image),
                "leafset_file": render_leafset(image),
                "ltd": rep.ltd,
                "td": rep.td,
            }
        )
    return doc, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="treedim", description="Tree dimensions of leaf sets and verification suites.")
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dims", help="compute TD, MTD and LTD of a leaf set file")
    d.add_argument("file")
    d.add_argument("--ell", type=int, help="branching of the pattern tree (default: the arity m)")
    d.add_argument("--witness", action="store_true", help="include an embedding witness for each dimension")
    d.add_argument("--oracle", action="store_true", help="cross-check every value with the brute-force search")
    d.set_defaults(func=cmd_dims)

    nz = sub.add_parser("normalize", help="normalize a leaf set by swap automorphisms")
    nz.add_argument("file")
    nz.add_argument("--ell", type=int)
    nz.add_argument("--trace", action="store_true", help="list the swaps applied")
    nz.set_defaults(func=cmd_normalize)

    b = sub.add_parser("bound", help="print the size bound for given n, d, m, ell")
    b.add_argument("n", type=int)
    b.add_argument("d", type=int)
    b.add_argument("m", type=int, nargs="?")
    b.add_argument("ell", type=int, nargs="?")
    b.set_defaults(func=cmd_bound)

    v = sub.add_parser("verify", help="run a named verification suite")
    v.add_argument("suite", help=", ".join(SUITES))
    v.add_argument("--max-n", type=int)
    v.add_argument("--samples", type=int, help="random instances per sampled stratum (search budget for counterexample-n6)")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=None, help="worker processes (default: $TREEDIM_JOBS or 1)")
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("family", help="VC and Littlestone dimension of a set family file")
    f.add_argument("file")
    g = f.add_mutually_exclusive_group()
    g.add_argument("--tuple", nargs="+", metavar="X", help="points a_1..a_n for the tuple characteristic map")
    g.add_argument("--labeling", metavar="FILE", help="labeling file for the tree characteristic map")
    f.set_defaults(func=cmd_family)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "jobs", None) is None and args.command == "verify":
        args.jobs = default_jobs()
    try:
        doc, code = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OracleMismatch as exc:
        doc = {
            "command": args.command,
            "error": "oracle-mismatch",
            "what": exc.what,
            "fast": exc.fast,
            "brute": exc.brute,
            "leafset": render_leafset(exc.leafset),
        }
        code = EXIT_ORACLE
    text = dump_report(doc)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
