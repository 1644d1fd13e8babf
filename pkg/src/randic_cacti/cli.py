"""Command-line front end.

Exit codes: 0 success / all checks passed, 1 a verification found violations (the
report is still written), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .cacti import enumerate_cacti, export_catalog, extremal_set
from .graph import Digraph, GraphFormatError, format_edge_list, parse_digraph, parse_graph, validate
from .index import Exponent, index_digraph, index_graph
from .report import emit_report, write_report
from .search import max_orientation_bnb, max_orientation_exhaustive
from .verify import CLAIMS, run_claim

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _bool(text: str) -> bool:
    t = text.strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {text!r}")


def _a_list(text: str, mode: str) -> list[Exponent]:
    try:
        return [Exponent.of(part.strip(), mode) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise UsageError(f"--a: {exc}") from None


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"--graph: cannot read {path}: {exc.strerror}") from None


def _load(path: str, as_digraph: bool):
    text = _read(path)
    as_digraph = as_digraph or any(line.strip().lower() == "# digraph" for line in text.splitlines())
    try:
        x = parse_digraph(text) if as_digraph else parse_graph(text)
    except (GraphFormatError, ValueError) as exc:
        raise UsageError(f"--graph {path}: {exc}") from None
    g = x.underlying() if isinstance(x, Digraph) else x
    verdict = validate(g)
    if not verdict.ok:
        raise UsageError(f"--graph {path}: {'; '.join(verdict.problems)}")
    return x


def _emit(text: str, out: str | None) -> None:
    if out:
        write_report(text, out)
    else:
        sys.stdout.write(text)


def cmd_index(args) -> int:
    x = _load(args.graph, args.digraph)
    exps = _a_list(args.a, args.mode)
    for a in exps:
        val = index_digraph(x, a) if isinstance(x, Digraph) else index_graph(x, a)
        shown = val if isinstance(x, Digraph) else _graph_value(val)
        prefix = f"a={a}: " if len(exps) > 1 else ""
        print(f"{prefix}R = {shown}")
    return EXIT_OK


def _graph_value(val) -> str:
    # IndexValue stores doubled values; R(G) itself is the integer vertex sum
    if val.exact:
        return str(val.doubled // 2)
    return f"{val.doubled / 2:.12g}"


def cmd_orient_max(args) -> int:
    g = _load(args.graph, False)
    if isinstance(g, Digraph):
        g = g.underlying()
    lines = []
    for a in _a_list(args.a, args.mode):
        if args.method == "bnb":
            res = max_orientation_bnb(g, a)
        else:
            res = max_orientation_exhaustive(g, a, halve_by_reversal=args.halve_reversal)
        prefix = f"a={a}: " if "," in args.a else ""
        lines.append(f"{prefix}max = {res.max_value}, witnesses = {res.witness_count}")
        lines.append(f"  orientations searched = {res.searched}, pruned = {res.pruned}, labeled maximizers = {res.raw_witnesses}")
        for d in res.witnesses.values():
            lines.append("  witness " + " ".join(f"{u}>{v}" for u, v in d.arcs))
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_gen_cacti(args) -> int:
    if args.n_max > 10:
        raise UsageError("--n-max: cactus generation is capped at 10")
    lines = ["n,r,count"]
    for n in range(1, args.n_max + 1):
        for r in range(0, min(args.r_max, (n - 1) // 2) + 1):
            graphs = enumerate_cacti(n, r)
            lines.append(f"{n},{r},{len(graphs)}")
            if args.out:
                export_catalog(graphs, n, r, args.out)
    print("\n".join(lines))
    return EXIT_OK


def cmd_construct(args) -> int:
    try:
        exps = _a_list(args.a, args.mode)
        fams = [extremal_set(args.n, args.r, a) for a in exps]
    except ValueError as exc:
        raise UsageError(f"--n/--r: {exc}") from None
    blocks = []
    for fam in fams:
        for k, d in enumerate(fam.digraphs, start=1):
            val = index_digraph(d, fam.a)
            comment = f"digraph\nG({k})(n={fam.n}, r={fam.r}) a={fam.a} R={val}"
            text = format_edge_list(d, comment)
            blocks.append(text)
            if args.out:
                out = Path(args.out)
                out.mkdir(parents=True, exist_ok=True)
                (out / f"extremal_n{fam.n}_r{fam.r}_a{fam.a}_{k}.txt").write_text(text)
    sys.stdout.write("\n".join(blocks))
    return EXIT_OK


def cmd_verify(args) -> int:
    a_list = _a_list(args.a, args.mode) if args.a else None
    if args.mode == "float" and a_list is None:
        a_list = _a_list("1.5,2.5", "float")
    claims = list(CLAIMS) if args.claim == "all" else [args.claim]
    reports = []
    for claim in claims:
        try:
            reports.append(run_claim(claim, n_max=args.n_max, r_max=args.r_max, a_list=a_list, workers=args.workers))
        except ValueError as exc:
            raise UsageError(f"verify {claim}: {exc}") from None
    payload = reports if args.claim == "all" else reports[0]
    text = emit_report(payload, args.format, timing=not args.no_timing)
    try:
        _emit(text, args.out)
    except OSError as exc:
        raise UsageError(f"--out: {exc}") from None
    failed = [r.claim for r in reports if not r.passed]
    if args.out:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            print(f"[{status}] {r.claim}: {r.instances} instances, {len(r.violations)} violations", file=sys.stderr)
    return EXIT_VIOLATIONS if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="randic-cacti", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, need_a=True):
        sp.add_argument("--a", required=need_a, default=None, help="comma-separated exponents, each >= 1")
        sp.add_argument("--mode", choices=("exact", "float"), default=None)
        sp.add_argument("--out", default=None, help="output path")

    sp = sub.add_parser("index", help="index of a graph or digraph file")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--digraph", action="store_true", help="read the file as arcs u -> v")
    common(sp)
    sp.set_defaults(func=cmd_index)

    sp = sub.add_parser("orient-max", help="maximum over all orientations of a graph")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--method", choices=("exhaustive", "bnb"), default="exhaustive")
    sp.add_argument("--halve-reversal", type=_bool, default=False)
    common(sp)
    sp.set_defaults(func=cmd_orient_max)

    sp = sub.add_parser("gen-cacti", help="count (and export) non-isomorphic cacti")
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--r-max", type=int, default=10)
    sp.add_argument("--out", default=None, help="directory for cactus_n{n}_r{r}_{i}.txt files")
    sp.set_defaults(func=cmd_gen_cacti)

    sp = sub.add_parser("construct-extremal", help="print the extremal orientations for (n, r)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="run a verification claim")
    sp.add_argument("claim", choices=CLAIMS + ("all",))
    sp.add_argument("--n-max", type=int, default=None)
    sp.add_argument("--r-max", type=int, default=None)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--format", choices=("json", "csv", "text"), default="json")
    sp.add_argument("--no-timing", action="store_true", help="write wall_ms as 0 for byte-stable reports")
    common(sp, need_a=False)
    sp.set_defaults(func=cmd_verify)
    return p


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
