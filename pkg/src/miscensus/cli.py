"""``miscensus`` command line: count, construct, census and verify.

Exit status: 0 when every check passes, 1 when a check finds a
counterexample, 2 for usage, parse and cap errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from contextlib import contextmanager, nullcontext
from typing import Iterator, Sequence

from . import enumeration, mis, setfamilies
from .constructions import (
    baton,
    bipartite_minus_matching,
    clique_subset_graph,
    clique_subset_graph_with_empty,
    extremal_tree_mod5,
    extremal_trees_n8,
    furedi_griggs_graph,
    lower_triangular_matrices,
    spider,
)
from .graph import DEFAULT_CAP, Graph, Graph6Error, bits, numbered_graph6_lines, read_graph6_lines, to_graph6
from .setfamilies import matrix_conditions, matrix_to_bipartite
from .verify import SUITES, SuiteReport, suite_thm1, suite_thm2

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
UNCAPPED = 10**9


class UsageError(Exception):
    pass


def _threads(value: int | None) -> int:
    if value is None:
        env = os.environ.get("MIS_THREADS")
        if env:
            try:
                value = int(env)
            except ValueError:
                raise UsageError(f"MIS_THREADS must be an integer, got {env!r}")
        else:
            value = len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else os.cpu_count() or 1
    if value < 1:
        raise UsageError("thread count must be at least 1")
    return value


@contextmanager
def _uncapped(enabled: bool) -> Iterator[int]:
    """Lift the exhaustive-search caps for the duration of one command."""
    if not enabled:
        yield DEFAULT_CAP
        return
    saved = (enumeration.TREE_CAP, enumeration.SMALL_GRAPH_CAP, enumeration.FOREST_CAP,
             setfamilies.MATRIX_CAP, mis.BRUTE_FORCE_CAP)
    enumeration.TREE_CAP = enumeration.SMALL_GRAPH_CAP = enumeration.FOREST_CAP = UNCAPPED
    setfamilies.MATRIX_CAP = mis.BRUTE_FORCE_CAP = UNCAPPED
    try:
        yield UNCAPPED
    finally:
        (enumeration.TREE_CAP, enumeration.SMALL_GRAPH_CAP, enumeration.FOREST_CAP,
         setfamilies.MATRIX_CAP, mis.BRUTE_FORCE_CAP) = saved


def _open_lines(path: str | None):
    if path is None or path == "-":
        return nullcontext(sys.stdin)
    try:
        if path.endswith(".gz"):
            import gzip

            return gzip.open(path, "rt", encoding="ascii")
        return open(path, encoding="ascii")
    except OSError as exc:
        raise UsageError(f"cannot open {path}: {exc.strerror}")


def _emit_json(obj: dict, out) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


def _emit_csv(header: Sequence[str], rows: Sequence[Sequence], out) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    out.write(buf.getvalue())


# -- mis ------------------------------------------------------------------------

def cmd_mis(args, out) -> int:
    limit = args.witness_limit if args.enumerate else 0
    rows = []
    with _open_lines(args.input) as fh:
        for lineno, g in numbered_graph6_lines(fh, cap=args.cap):
            row: dict = {"line": lineno, "graph6": to_graph6(g), "n": g.n}
            try:
                rep = mis.count_mis(g, witness_limit=limit, budget=args.budget)
            except mis.BudgetExceeded:
                row.update(count=None, budget_exceeded=True)
            else:
                row.update(count=str(rep.count), budget_exceeded=False)
                if args.enumerate:
                    row["witnesses"] = [list(bits(s)) for s in rep.witnesses]
                    row["truncated"] = rep.truncated
            rows.append(row)
    if args.report == "json":
        _emit_json({"suite": "mis", "rows": rows, "status": "pass"}, out)
    else:
        for row in rows:
            count = "budget-exceeded" if row["budget_exceeded"] else row["count"]
            out.write(f"{count}\n")
            for w in row.get("witnesses", []):
                out.write("  " + " ".join(map(str, w)) + "\n")
    return EXIT_OK


# -- construct ------------------------------------------------------------------

def _need(value, flag: str, family: str):
    if value is None:
        raise UsageError(f"family {family} needs {flag}")
    return value


def cmd_construct(args, out) -> int:
    fam = args.family
    graphs: list[tuple[Graph, int | None]] = []
    if fam == "clique-subsets":
        k = _need(args.k, "--k", fam)
        graphs = [(clique_subset_graph(k), k)]
    elif fam == "clique-subsets-empty":
        k = _need(args.k, "--k", fam)
        graphs = [(clique_subset_graph_with_empty(k), k)]
    elif fam == "bip-minus-matching":
        n = _need(args.n, "--n", fam)
        graphs = [(bipartite_minus_matching(n), mis.bipartite_min(n))]
    elif fam == "spider":
        n = _need(args.n, "--n", fam)
        graphs = [(spider(n), mis.wilf_max_tree(n))]
    elif fam == "baton":
        n = _need(args.n, "--n", fam)
        graphs = [(baton(n, args.length, args.left), mis.wilf_max_tree(n))]
    elif fam == "furedi-griggs":
        n = _need(args.n, "--n", fam)
        graphs = [(furedi_griggs_graph(n), mis.connected_max(n))]
    elif fam == "tree-mod5":
        n = _need(args.n, "--n", fam)
        graphs = [(extremal_tree_mod5(n), mis.f_min_tree(n))]
    elif fam == "trees-n8":
        graphs = [(t, 8) for t in extremal_trees_n8()]
    elif fam == "lt-matrices":
        k = _need(args.k, "--k", fam)
        mats = lower_triangular_matrices(k)
        out.write("\n".join(m.to_text() for m in mats))
        if args.selfcheck:
            for m in mats:
                if not matrix_conditions(m) or mis.imax(matrix_to_bipartite(m)) != k + 1:
                    sys.stderr.write("selfcheck failed:\n" + m.to_text())
                    return EXIT_FAIL
            sys.stderr.write(f"selfcheck ok: {len(mats)} matrices, imax {k + 1}\n")
        return EXIT_OK
    status = EXIT_OK
    for g, expected in graphs:
        out.write(to_graph6(g) + "\n")
        if args.selfcheck:
            got = mis.imax(g)
            if got != expected:
                sys.stderr.write(f"selfcheck failed: {to_graph6(g)} imax {got}, expected {expected}\n")
                status = EXIT_FAIL
            else:
                sys.stderr.write(f"selfcheck ok: imax = {got}\n")
    return status


# -- census ---------------------------------------------------------------------

def _orders(args) -> list[int]:
    if args.n is not None:
        return [args.n]
    if args.max_n is None:
        raise UsageError("give --n or --max-n")
    lo = args.min_n if args.min_n is not None else 4
    return list(range(lo, args.max_n + 1))


def _map(fn, items, threads: int):
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=min(threads, len(items))) as pool:
        return list(pool.map(fn, items))


def _tree_job(job):
    n, keep = job
    return enumeration.census_trees(n, keep)


def _graph_job(job):
    n, keep = job
    return enumeration.builtin_census_graphs(n, keep)


def cmd_census(args, out) -> int:
    keep = args.witnesses
    rep = SuiteReport(f"census-{args.target}")
    if args.target == "trees":
        if args.input:
            raise UsageError("tree censuses are generated internally; --input applies to graphs")
        rows = _map(_tree_job, [(n, keep) for n in _orders(args)], args.threads)
        for row in rows:
            rep.rows.append(row.as_dict())
            if row.min_imax != mis.f_min_tree(row.n):
                rep.fail({"graph6": None, "expected": f"min {mis.f_min_tree(row.n)}",
                          "actual": f"min {row.min_imax}", "n": str(row.n)})
        table = [(r.n, r.extremal_count, r.min_imax) for r in rows]
        header = ["n", "extremal_trees", "min_imax"]
    else:
        if args.input:
            if args.n is None:
                raise UsageError("--input needs --n (the order of every graph in the stream)")
            with _open_lines(args.input) as fh:
                results = [enumeration.census_graph6_stream(fh, args.n, args.threads, keep)]
        else:
            results = _map(_graph_job, [(n, keep) for n in _orders(args)], args.threads)
        table = []
        for c in results:
            n = c.n
            for row in c.rows():
                rep.rows.append(row.as_dict())
            if c.bipartite.min_imax is not None and c.bipartite.min_imax != mis.bipartite_min(n):
                rep.fail({"graph6": None, "expected": f"bipartite min {mis.bipartite_min(n)}",
                          "actual": f"bipartite min {c.bipartite.min_imax}", "n": str(n)})
            if c.general.min_imax is not None and 2 ** c.general.min_imax <= n:
                rep.fail({"graph6": None, "expected": "imax > log2(n)",
                          "actual": str(c.general.min_imax), "n": str(n)})
            if not args.input and c.general.min_imax != mis.min_imax_connected_graph(n):
                rep.fail({"graph6": None, "expected": f"min {mis.min_imax_connected_graph(n)}",
                          "actual": f"min {c.general.min_imax}", "n": str(n)})
            table.append((n, c.bipartite.min_imax, c.bipartite.extremal_count, c.triangle_free.extremal_count,
                          c.general.min_imax, c.general.extremal_count))
        header = ["n", "min_imax", "extremal_bipartite", "extremal_trianglefree",
                  "min_imax_general", "extremal_general"]
    if args.report == "csv":
        _emit_csv(header, table, out)
    else:
        _emit_json(rep.as_dict(), out)
    if not rep.passed:
        sys.stderr.write(f"counterexample: {json.dumps(rep.counterexample)}\n")
    return EXIT_OK if rep.passed else EXIT_FAIL


# -- verify ---------------------------------------------------------------------

def cmd_verify(args, out) -> int:
    suite = args.suite
    if suite == "thm1":
        if args.input:
            n = _need(args.n, "--n", "thm1 with --input")
            with _open_lines(args.input) as fh:
                rep = suite_thm1(max_n=n, source=read_graph6_lines(fh, cap=args.cap))
        else:
            rep = suite_thm1(max_n=args.max_n or args.n or 8, min_n=args.min_n or args.n or 2)
    elif suite == "thm2":
        if args.input:
            n = _need(args.n, "--n", "thm2 with --input")
            with _open_lines(args.input) as fh:
                c = enumeration.census_graph6_stream(fh, n, args.threads)
            rep = suite_thm2(max_n=n, min_n=n, census={n: c})
        else:
            rep = suite_thm2(max_n=args.max_n or args.n or 8, min_n=args.min_n or args.n or 4)
    elif suite == "thm3":
        rep = SUITES[suite](max_n=args.max_n or args.n or 16, min_n=args.min_n or args.n or 4)
    elif suite == "lemma-wilf":
        rep = SUITES[suite](samples=args.samples, min_n=args.min_n or 4, max_n=args.max_n or 18, seed=args.seed)
    elif suite == "inequalities":
        rep = SUITES[suite](max_value=args.max or 200)
    elif suite == "milner":
        rep = SUITES[suite](ns=[args.n] if args.n else (3, 4))
    elif suite == "matrices":
        rep = SUITES[suite](max_k=args.max_k or 6, min_k=args.min_k or 2)
    else:
        rep = SUITES[suite](max_n=args.max_n or args.n or 14, min_n=args.min_n or args.n or 2)
    if args.report == "text":
        status = "PASS" if rep.passed else "FAIL"
        out.write(f"{suite}: {status} ({len(rep.rows)} rows)\n")
        if rep.counterexample:
            out.write(f"counterexample: {json.dumps(rep.counterexample)}\n")
    else:
        _emit_json(rep.as_dict(), out)
    return EXIT_OK if rep.passed else EXIT_FAIL


# -- argument parsing -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    # global options are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="worker processes (default: MIS_THREADS or available CPUs)")
    common.add_argument("--unsafe-uncapped", action="store_true", default=argparse.SUPPRESS,
                        help="lift exhaustive-search caps; running time grows exponentially")
    p = argparse.ArgumentParser(prog="miscensus", description=__doc__.splitlines()[0], parents=[common])
    p.set_defaults(threads=None, unsafe_uncapped=False)
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("mis", parents=[common], help="count maximal independent sets of graph6 input")
    m.add_argument("--input", "-i", default="-", help="graph6 file (default: standard input)")
    mode = m.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="print counts only (default)")
    mode.add_argument("--enumerate", action="store_true", help="also list maximal independent sets")
    m.add_argument("--witness-limit", type=int, default=1000)
    m.add_argument("--budget", type=int, default=0, help="recursion-node budget per graph (0 = none)")
    m.add_argument("--report", choices=("text", "json"), default="text")

    c = sub.add_parser("construct", parents=[common], help="emit a member of an extremal family")
    c.add_argument("family", choices=("clique-subsets", "clique-subsets-empty", "bip-minus-matching", "spider",
                                      "baton", "furedi-griggs", "tree-mod5", "trees-n8", "lt-matrices"))
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--length", type=int, default=1, help="baton path length (1 or 3)")
    c.add_argument("--left", type=int, default=None, help="baton legs on the first centre")
    c.add_argument("--selfcheck", action="store_true", help="recount imax and compare with the claim")

    s = sub.add_parser("census", parents=[common], help="minimum imax over twin-free trees or connected graphs")
    s.add_argument("target", choices=("trees", "graphs"))
    s.add_argument("--n", type=int)
    s.add_argument("--min-n", type=int)
    s.add_argument("--max-n", type=int)
    s.add_argument("--input", "-i", help="graph6 stream of one order (use - for standard input)")
    s.add_argument("--report", choices=("json", "csv"), default="json")
    wit = s.add_mutually_exclusive_group()
    wit.add_argument("--witnesses", dest="witnesses", action="store_true", default=None,
                     help="keep extremal graphs (default for n <= 14)")
    wit.add_argument("--no-witnesses", dest="witnesses", action="store_false")

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=tuple(SUITES))
    v.add_argument("--n", type=int)
    v.add_argument("--min-n", type=int)
    v.add_argument("--max-n", type=int)
    v.add_argument("--max", type=int, help="upper end for the inequalities suite")
    v.add_argument("--min-k", type=int)
    v.add_argument("--max-k", type=int)
    v.add_argument("--samples", type=int, default=1000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--input", "-i", help="graph6 stream for thm1/thm2 at a single --n")
    v.add_argument("--report", choices=("json", "text"), default="json")
    return p


COMMANDS = {"mis": cmd_mis, "construct": cmd_construct, "census": cmd_census, "verify": cmd_verify}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        args.threads = _threads(args.threads)
        with _uncapped(args.unsafe_uncapped) as cap:
            args.cap = cap
            return COMMANDS[args.command](args, out)
    except Graph6Error as exc:
        sys.stderr.write(f"miscensus: parse error: {exc}\n")
    except (UsageError, ValueError) as exc:
        # ValueError covers infeasible constructions and cap violations
        sys.stderr.write(f"miscensus: {exc}\n")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
