"""Command-line front end.

Exit codes: 0 success / formula matched, 1 verification mismatch,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .formulas import FAMILIES
from .graph import GraphError, format_edge_list, is_connected, read_edge_list
from .invariants import classify, restricted_edge_connectivity_flow
from .products import PRODUCT_KINDS, product
from .verify import (
    CORPUS_FAMILIES,
    DEFAULT_MAX_PRODUCT_ORDER,
    DEFAULT_N_RANGES,
    DEFAULT_ORACLE_MAX,
    DEFAULT_SEED,
    check_theorem,
    generate_corpus,
    sweep,
    write_csv,
    write_jsonl,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _document(argv: list[str], **payload) -> dict:
    return {"tool_version": __version__, "command": argv, **payload}


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc}") from None


def _load(path: str):
    try:
        return read_edge_list(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def parse_n_range(text: str) -> tuple[int, ...]:
    """``"2..4"`` -> (2, 3, 4); ``"3,5"`` -> (3, 5); ``"4"`` -> (4,)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            values = tuple(range(int(lo), int(hi) + 1))
        else:
            values = tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad n range {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError(f"empty n range {text!r}")
    return values


def _csv_list(choices):
    def parse(text: str) -> tuple[str, ...]:
        items = tuple(t.strip() for t in text.split(",") if t.strip())
        bad = [t for t in items if t not in choices]
        if bad or not items:
            raise argparse.ArgumentTypeError(f"choose from {', '.join(choices)}")
        return items

    return parse


def cmd_analyze(args, argv) -> int:
    g = _load(args.graph)
    if not is_connected(g):
        raise UsageError("input graph is disconnected")
    res = restricted_edge_connectivity_flow(g)
    report = classify(g, lambda_prime=res.value)
    doc = _document(argv, **report.to_dict(), witness=None if res.witness is None else res.witness.to_dict())
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_product(args, argv) -> int:
    if args.kind == "k2odot":
        if args.second is not None:
            raise UsageError("k2odot takes a single graph")
        g_path, h_path = None, args.first
        g = None
    else:
        if args.second is None:
            raise UsageError(f"{args.kind} product needs two graphs")
        g_path, h_path = args.first, args.second
        g = _load(g_path)
    h = _load(h_path)
    p = product(args.kind, g, h)
    note = f"product {args.kind} g={g_path if g_path else 'K2'} h={h_path} indexing=row-major"
    _emit(format_edge_list(p, [note]), args.out)
    return EXIT_OK


def cmd_check(args, argv) -> int:
    g = _load(args.graph)
    rec = check_theorem(g, args.family, args.n, method=args.method, max_order=args.max_product_order)
    if rec.skipped:
        raise UsageError(rec.skip_reason or "product too large")
    doc = _document(argv, **rec.to_dict(), corollary_violation=rec.corollary_violation)
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK if rec.match and not rec.corollary_violation else EXIT_MISMATCH


def _infer_format(out: str | None) -> str:
    if out and out.endswith(".csv"):
        return "csv"
    if out and out.endswith(".json"):
        return "json"
    return "jsonl"


def cmd_sweep(args, argv) -> int:
    if args.out is not None:
        parent = Path(args.out).resolve().parent
        if not parent.is_dir():
            raise UsageError(f"cannot write {args.out}: no such directory")
    corpus = generate_corpus(args.corpus, args.max_order, args.random_count, args.seed)
    n_ranges = {f: args.n for f in args.families} if args.n else DEFAULT_N_RANGES
    result = sweep(corpus, args.families, n_ranges, args.method, args.max_product_order, args.oracle_max)

    fmt = args.format or _infer_format(args.out)
    if args.format is None and args.out is None:
        text = ""
    elif fmt == "json":
        doc = _document(
            argv,
            seed=args.seed,
            corpus_size=len(corpus),
            summary=result.summary.to_dict(),
            records=[r.to_dict() for r in result.records],
        )
        text = json.dumps(doc, indent=2) + "\n"
    else:
        import io

        buf = io.StringIO()
        (write_csv if fmt == "csv" else write_jsonl)(result.records, buf)
        text = buf.getvalue()
    if text or args.out is not None:
        _emit(text, args.out)
    if args.format is None:
        s = result.summary
        print(
            f"corpus {len(corpus)} graphs (seed {args.seed}): {len(result.records)} records, "
            f"{s.checked} checked, {s.matched} matched, {s.mismatched} mismatched, "
            f"{s.skipped} skipped, {s.corollary_violations} corollary violations"
        )
        for r in result.records:
            if not r.skipped and (not r.match or r.corollary_violation):
                print(f"  MISMATCH {r.factor_id} {r.family} n={r.n}: formula {r.formula_value}, exact {r.exact_value}")
    return EXIT_OK if result.summary.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strongcut",
        description="Restricted edge-connectivity of strong product graphs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="invariants and maximal/super flags of a graph")
    p.add_argument("graph")
    p.add_argument("--out")
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("product", help="write a product graph as a canonical .el file")
    p.add_argument("kind", choices=PRODUCT_KINDS)
    p.add_argument("first", help="G (or H for k2odot)")
    p.add_argument("second", nargs="?", help="H")
    p.add_argument("--out")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("check", help="check the closed form for one G and n")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("graph")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=["flow", "oracle", "both"], default="both")
    p.add_argument("--max-product-order", type=int, default=DEFAULT_MAX_PRODUCT_ORDER)
    p.add_argument("--out")
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sweep", help="check closed forms over a generated corpus")
    p.add_argument("--corpus", type=_csv_list(CORPUS_FAMILIES), default=("path", "cycle", "complete"),
                   help="comma-separated corpus families")
    p.add_argument("--families", type=_csv_list(FAMILIES), default=FAMILIES,
                   help="comma-separated product families")
    p.add_argument("--n", type=parse_n_range, help="n values, e.g. 2..4 or 3,5")
    p.add_argument("--max-order", type=int, default=5, help="largest factor order in the corpus")
    p.add_argument("--max-product-order", type=int, default=DEFAULT_MAX_PRODUCT_ORDER)
    p.add_argument("--oracle-max", type=int, default=DEFAULT_ORACLE_MAX)
    p.add_argument("--random-count", type=int, default=0)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--method", choices=["flow", "oracle", "both"], default="both")
    p.add_argument("--format", choices=["json", "jsonl", "csv"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, argv)
    except (UsageError, GraphError) as exc:
        print(f"strongcut: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
